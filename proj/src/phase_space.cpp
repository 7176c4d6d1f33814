#include "schwinger/phase_space.hpp"

#include <cmath>
#include <numbers>

namespace schwinger {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kEagerLimit = 31;

void require_odd(int n, const char* who) {
    if (n < 3 || n % 2 == 0)
        throw OddDimensionError(std::string(who) + ": phase-space requires odd dimension >= 3");
}

int mod(int k, int n) { return ((k % n) + n) % n; }

cplx omega_pow(int n, int e) { return std::polar(1.0, 2.0 * kPi * mod(e, n) / n); }

std::size_t cell_index(int n, int a, int b) {
    const int l = (n - 1) / 2;
    return static_cast<std::size_t>(a + l) * n + static_cast<std::size_t>(b + l);
}

} // namespace

int ModularHalf::half_product(int eta, int xi) const {
    const long long p = static_cast<long long>(mod(eta, n)) * mod(xi, n) % n;
    return static_cast<int>(static_cast<long long>(inv2) * p % n);
}

ModularHalf modular_half(int n) {
    require_odd(n, "modular_half");
    ModularHalf m;
    m.n = n;
    m.inv2 = (n + 1) / 2;
    return m;
}

int reduce_symmetric(int n, int k) {
    const int l = (n - 1) / 2;
    int r = mod(k, n);
    if (r > l) r -= n;
    return r;
}

bool label_in_range(int n, int k) {
    const int l = (n - 1) / 2;
    return k >= -l && k <= l;
}

CMatrix displacement(int n, int eta, int xi) {
    require_odd(n, "displacement");
    const ModularHalf mh = modular_half(n);
    eta = reduce_symmetric(n, eta);
    xi = reduce_symmetric(n, xi);
    const cplx phase = omega_pow(n, -mh.half_product(eta, xi));
    CMatrix d(n, n);
    for (int g = 0; g < n; ++g)
        d(g, mod(g - xi, n)) = phase * omega_pow(n, g * eta);
    return d;
}

CMatrix phase_point(int n, int mu, int nu) {
    require_odd(n, "phase_point");
    mu = reduce_symmetric(n, mu);
    nu = reduce_symmetric(n, nu);
    const int l = (n - 1) / 2;
    CMatrix s(n, n);
    for (int eta = -l; eta <= l; ++eta)
        for (int xi = -l; xi <= l; ++xi) {
            const cplx c = omega_pow(n, -(eta * nu - xi * mu));
            const CMatrix d = displacement(n, eta, xi);
            for (std::size_t i = 0; i < s.data().size(); ++i)
                s.data()[i] += c * d.data()[i];
        }
    s *= cplx(1.0 / n);
    return s;
}

DisplacementGrid::DisplacementGrid(int n) : n_(n) {
    require_odd(n, "DisplacementGrid");
    cells_.resize(static_cast<std::size_t>(n) * n);
    if (n <= kEagerLimit) {
        const int l = ell();
        for (int eta = -l; eta <= l; ++eta)
            for (int xi = -l; xi <= l; ++xi)
                cells_[cell_index(n_, eta, xi)] =
                    std::make_unique<CMatrix>(displacement(n_, eta, xi));
    }
}

const CMatrix& DisplacementGrid::at(int eta, int xi) const {
    eta = reduce_symmetric(n_, eta);
    xi = reduce_symmetric(n_, xi);
    auto& cell = cells_[cell_index(n_, eta, xi)];
    if (!cell) cell = std::make_unique<CMatrix>(displacement(n_, eta, xi));
    return *cell;
}

PhasePointGrid::PhasePointGrid(int n) : n_(n) {
    require_odd(n, "PhasePointGrid");
    cells_.resize(static_cast<std::size_t>(n) * n);
    if (n <= kEagerLimit) {
        const int l = ell();
        for (int mu = -l; mu <= l; ++mu)
            for (int nu = -l; nu <= l; ++nu)
                cells_[cell_index(n_, mu, nu)] =
                    std::make_unique<CMatrix>(phase_point(n_, mu, nu));
    }
}

const CMatrix& PhasePointGrid::at(int mu, int nu) const {
    mu = reduce_symmetric(n_, mu);
    nu = reduce_symmetric(n_, nu);
    auto& cell = cells_[cell_index(n_, mu, nu)];
    if (!cell) cell = std::make_unique<CMatrix>(phase_point(n_, mu, nu));
    return *cell;
}

cplx WeylFunction::at(int eta, int xi) const {
    eta = reduce_symmetric(n, eta);
    xi = reduce_symmetric(n, xi);
    return values[cell_index(n, eta, xi)];
}

WeylFunction weyl_function(const DensityMatrix& rho) {
    const int n = rho.dim();
    require_odd(n, "weyl_function");
    const ModularHalf mh = modular_half(n);
    const int l = (n - 1) / 2;
    WeylFunction w;
    w.n = n;
    w.values.resize(static_cast<std::size_t>(n) * n);
    const CMatrix& r = rho.matrix();
    // Tr[D(eta,xi) rho] = w^{-{2^-1 eta xi}} sum_g w^{g eta} rho(g-xi, g)
    for (int eta = -l; eta <= l; ++eta)
        for (int xi = -l; xi <= l; ++xi) {
            cplx s{};
            for (int g = 0; g < n; ++g)
                s += omega_pow(n, g * eta) * r(mod(g - xi, n), g);
            w.values[cell_index(n, eta, xi)] =
                omega_pow(n, -mh.half_product(eta, xi)) * s;
        }
    return w;
}

WignerFunction wigner_function(const DensityMatrix& rho) {
    const int n = rho.dim();
    require_odd(n, "wigner_function");
    const WeylFunction w = weyl_function(rho);
    const int l = (n - 1) / 2;
    WignerFunction out;
    out.n = n;
    out.values.resize(w.values.size());
    const PhasePointGrid grid(n);
    for (int mu = -l; mu <= l; ++mu)
        for (int nu = -l; nu <= l; ++nu) {
            cplx s{};
            for (int eta = -l; eta <= l; ++eta)
                for (int xi = -l; xi <= l; ++xi)
                    s += omega_pow(n, -(eta * nu - xi * mu)) * w.at(eta, xi);
            s /= static_cast<double>(n);
            out.values[cell_index(n, mu, nu)] = s;
            out.max_imag = std::max(out.max_imag, std::abs(s.imag()));
            const cplx direct = trace_product(grid.at(mu, nu), rho.matrix());
            out.fourier_residual = std::max(out.fourier_residual, std::abs(s - direct));
        }
    if (out.fourier_residual > 1e-10)
        throw ConsistencyError("wigner_function: Fourier path disagrees with direct traces");
    return out;
}

cplx WignerFunction::at(int mu, int nu) const {
    mu = reduce_symmetric(n, mu);
    nu = reduce_symmetric(n, nu);
    return values[cell_index(n, mu, nu)];
}

cplx reconstruct_uv_moment(const WeylFunction& w, int alpha, int beta) {
    const ModularHalf mh = modular_half(w.n);
    const int e = -mod(alpha * beta, w.n) + mh.half_product(alpha, beta);
    return omega_pow(w.n, e) * w.at(alpha, -beta);
}

TrigProducts reconstruct_trig_products(const WeylFunction& w) {
    const int n = w.n;
    const ModularHalf mh = modular_half(n);
    // w^{1 - {2^-1}} and w^{-1 + {2^-1}}
    const cplx om1 = omega_pow(n, 1 - mh.inv2);
    const cplx om2 = omega_pow(n, mh.inv2 - 1);
    const cplx s_pp = w.at(1, 1), s_mm = w.at(-1, -1), s_pm = w.at(1, -1), s_mp = w.at(-1, 1);
    TrigProducts t;
    t.cc = 0.25 * ((s_mm + s_pp) * om1 + (s_pm + s_mp) * om2);
    t.cs = cplx(0.0, -0.25) * ((s_pm - s_mp) * om2 + (s_mm - s_pp) * om1);
    t.sc = cplx(0.0, -0.25) * ((s_pm - s_mp) * om2 - (s_mm - s_pp) * om1);
    t.ss = -0.25 * ((s_pm + s_mp) * om2 - (s_mm + s_pp) * om1);
    return t;
}

TrigProductBounds trig_product_bounds(const WeylFunction& w) {
    const int n = w.n;
    require_odd(n, "trig_product_bounds");
    // labels +-2 wrap into the symmetric interval at N = 3
    const double sum_diag = std::abs(w.at(-1, -1) + w.at(1, 1));
    const double sum_anti = std::abs(w.at(1, -1) + w.at(-1, 1));
    const double dif_diag = std::abs(w.at(-1, -1) - w.at(1, 1));
    const double dif_anti = std::abs(w.at(1, -1) - w.at(-1, 1));
    TrigProductBounds b;
    b.cc_upper = 0.25 * (sum_diag + sum_anti);
    b.cc_lower = 0.25 * (sum_diag - sum_anti);
    b.cs_upper = 0.25 * (dif_diag + dif_anti);
    b.cs_lower = 0.25 * (dif_diag - dif_anti);
    b.cu_sq = 0.5 + 0.25 * (w.at(2, 0) + w.at(-2, 0)).real();
    b.cv_sq = 0.5 + 0.25 * (w.at(0, 2) + w.at(0, -2)).real();
    b.cauchy_upper = b.cu_sq * b.cv_sq;
    return b;
}

} // namespace schwinger
