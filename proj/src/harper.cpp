#include "schwinger/harper.hpp"

#include <cmath>
#include <numbers>

#include "schwinger/eigen.hpp"

namespace schwinger {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<cplx> column(const CMatrix& m, std::size_t k) {
    std::vector<cplx> v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, k);
    return v;
}

// rotate the largest amplitude real positive
void fix_phase(std::vector<cplx>& psi) {
    std::size_t k = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        const double a = std::abs(psi[i]);
        if (a > best) {
            best = a;
            k = i;
        }
    }
    if (best == 0.0) return;
    const cplx ph = std::conj(psi[k]) / best;
    for (auto& z : psi) z *= ph;
}

} // namespace

HarperHamiltonian build_harper(int n, double theta) {
    if (n < 2) throw DimensionError("build_harper: N must be >= 2");
    if (theta < 0.0 || theta > kPi / 2.0 + 1e-15)
        throw std::invalid_argument("build_harper: theta outside [0, pi/2]");
    HarperHamiltonian out;
    out.n = n;
    out.theta = theta;
    out.h = CMatrix(n, n);
    const double st = std::sin(theta), ct = std::cos(theta);
    for (int a = 0; a < n; ++a) {
        out.h(a, a) = -st * std::cos(2.0 * kPi * a / n);
        out.h(a, (a + 1) % n) += -0.5 * ct;
        out.h((a + 1) % n, a) += -0.5 * ct;
    }
    return out;
}

FourierOperator build_fourier(int n) {
    if (n < 2) throw DimensionError("build_fourier: N must be >= 2");
    FourierOperator out;
    out.n = n;
    out.f = CMatrix(n, n);
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out.f(a, b) = s * std::polar(1.0, 2.0 * kPi * ((a * b) % n) / n);
    return out;
}

GroundStateResult ground_state(int n) {
    const HarperHamiltonian harper = build_harper(n, kPi / 4.0);
    const HermitianEigen eig = hermitian_eigen(harper.h);
    GroundStateResult out;
    out.n = n;
    out.theta_star = kPi / 4.0;
    out.h0 = eig.eigenvalues[0];
    out.gap = (n > 1) ? eig.eigenvalues[1] - eig.eigenvalues[0] : 0.0;
    if (out.gap <= 1e-8)
        throw DegenerateGroundError("ground_state: degenerate ground level");
    out.psi0 = column(eig.eigenvectors, 0);
    fix_phase(out.psi0);
    if (out.psi0[0].real() <= 0.0)
        throw DegenerateGroundError("ground_state: phase convention breakdown (psi0[0] <= 0)");

    const SchwingerPair pair = build_pair(n);
    const DensityMatrix rho = DensityMatrix::pure(out.psi0);
    out.v0_u = variance_unitary(rho, pair.u_op);
    out.v0_v = variance_unitary(rho, pair.v_op);
    out.v0_du = delta_variance(out.v0_u);
    out.v0_dv = delta_variance(out.v0_v);
    out.s0 = out.v0_du / pair.epsilon;
    out.r1 = out.s0 * out.s0;
    return out;
}

ThetaScanResult theta_scan(int n, int grid_points) {
    if (grid_points < 3) throw std::invalid_argument("theta_scan: need at least 3 grid points");
    const SchwingerPair pair = build_pair(n);
    auto scan_value = [&](double theta) {
        const HermitianEigen eig = hermitian_eigen(build_harper(n, theta).h);
        const std::vector<cplx> psi = column(eig.eigenvectors, 0);
        const cplx mu = dot(psi, mat_vec(pair.u_op, psi));
        const cplx mv = dot(psi, mat_vec(pair.v_op, psi));
        return std::cos(theta) * std::abs(mu) + std::sin(theta) * std::abs(mv);
    };

    ThetaScanResult out;
    out.curve.reserve(grid_points);
    int best = 0;
    for (int i = 0; i < grid_points; ++i) {
        const double theta = (kPi / 2.0) * i / (grid_points - 1);
        out.curve.emplace_back(theta, scan_value(theta));
        if (out.curve[i].second > out.curve[best].second) best = i;
    }
    double lo = out.curve[std::max(0, best - 1)].first;
    double hi = out.curve[std::min(grid_points - 1, best + 1)].first;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c1 = hi - gr * (hi - lo), c2 = lo + gr * (hi - lo);
    double f1 = scan_value(c1), f2 = scan_value(c2);
    while (hi - lo > 1e-7) {
        if (f1 < f2) {
            lo = c1;
            c1 = c2;
            f1 = f2;
            c2 = lo + gr * (hi - lo);
            f2 = scan_value(c2);
        } else {
            hi = c2;
            c2 = c1;
            f2 = f1;
            c1 = hi - gr * (hi - lo);
            f1 = scan_value(c1);
        }
    }
    out.theta_star = 0.5 * (lo + hi);
    return out;
}

ClosedFormGroundState closed_form(int n) {
    if (n < 2 || n > 6)
        throw std::invalid_argument("closed_form: available for N in [2,6] only");
    ClosedFormGroundState out;
    out.n = n;
    switch (n) {
        case 2:
            out.coefficients = {0.923879532511286756128183189397,
                                0.38268343236508977172845998403};
            out.provenance = {"sqrt(2+sqrt(2))/2", "sqrt(2-sqrt(2))/2"};
            out.expected_h0 = -1.0;
            out.expected_v_delta = 1.0;
            out.expected_s0 = 1.0;
            break;
        case 3:
            out.coefficients = {0.888073833977115262160764596418,
                                0.325057583671868143161124167775,
                                0.325057583671868143161124167775};
            out.provenance = {"sqrt((3+sqrt(3))/6)", "sqrt((3-sqrt(3))/12)",
                              "sqrt((3-sqrt(3))/12)"};
            out.expected_h0 = -0.965925826289068286749743199729; // -(sqrt(6)+sqrt(2))/4
            out.expected_v_delta = 1.14359353944898165178042926795; // 15-8 sqrt(3)
            out.expected_s0 = 1.80384757729336811941766097548;      // 7-3 sqrt(3)
            break;
        case 4:
            out.coefficients = {0.853553390593273762200422181052,
                                0.353553390593273762200422181052,
                                0.146446609406726237799577818948,
                                0.353553390593273762200422181052};
            out.provenance = {"(2+sqrt(2))/4", "sqrt(2)/4", "(2-sqrt(2))/4", "sqrt(2)/4"};
            out.expected_h0 = -1.0;
            out.expected_v_delta = 1.0;
            out.expected_s0 = 2.0;
            break;
        case 5:
            out.coefficients = {0.815584092044146710935528300616,
                                0.394109802866694175196764753896,
                                0.109948886700311197521324187258,
                                0.109948886700311197521324187258,
                                0.394109802866694175196764753896};
            out.provenance = {
                "1/sqrt(1+2(a1^2+a2^2))",
                "a1/sqrt(1+2(a1^2+a2^2)); a1 = (sqrt(5)+sqrt(2(35+sqrt(5)))-7)/8",
                "a2/sqrt(1+2(a1^2+a2^2)); a2 = (3 sqrt(5)-sqrt(2(35+sqrt(5)))+3)/8",
                "a2/sqrt(1+2(a1^2+a2^2))",
                "a1/sqrt(1+2(a1^2+a2^2))"};
            out.expected_h0 = -1.04879774458023809948810037954;
            // (45-sqrt(5)-sqrt(110+38 sqrt(5))) / (19+sqrt(5)+sqrt(110+38 sqrt(5)))
            out.expected_v_delta = 0.81822031645714000189570109107;
            out.expected_s0 = 1.94440396699094971695184316828;
            break;
        case 6:
            out.coefficients = {0.779142141466678811500521746277,
                                0.426803766697925098657616235342,
                                0.115256549373408829336707469135,
                                0.0452379100834029766693432683344,
                                0.115256549373408829336707469135,
                                0.426803766697925098657616235342};
            out.provenance = {
                "1/sqrt(1+2(b1^2+b2^2)+b3^2)",
                "b1/...; b1 = (-4+sqrt(6)+sqrt(14))/4",
                "b2/...; b2 = (10-3 sqrt(6)-3 sqrt(14)+2 sqrt(21))/4",
                "b3/...; b3 = -4+2 sqrt(6)+sqrt(14)-sqrt(21)",
                "b2/...", "b1/..."};
            out.expected_h0 = -1.09445052965836697100726552379; // -sqrt(10+2 sqrt(21))/4
            out.expected_v_delta = 0.669697220176639973647811225088; // 19-4 sqrt(21)
            out.expected_s0 = 1.82964683121022146464990267003; // 19(1+sqrt(3))-4 sqrt(42(2+sqrt(3)))
            break;
    }
    out.expected_r1 = out.expected_s0 * out.expected_s0;
    return out;
}

FourierCommutationResult fourier_commutation_check(int n) {
    const HarperHamiltonian harper = build_harper(n, kPi / 4.0);
    const FourierOperator four = build_fourier(n);
    FourierCommutationResult out;
    out.comm_norm = hs_norm(mat_mul(harper.h, four.f) - mat_mul(four.f, harper.h));
    const GroundStateResult gs = ground_state(n);
    out.f0 = dot(gs.psi0, mat_vec(four.f, gs.psi0));
    const HermitianEigen eig = hermitian_eigen(harper.h);
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        std::vector<cplx> psi = column(eig.eigenvectors, k);
        fix_phase(psi);
        for (const auto& z : psi)
            out.max_eigvec_imag = std::max(out.max_eigvec_imag, std::abs(z.imag()));
    }
    return out;
}

double harper_recurrence_check(int n, double theta) {
    const HarperHamiltonian harper = build_harper(n, theta);
    const HermitianEigen eig = hermitian_eigen(harper.h);
    const double st = std::sin(theta), ct = std::cos(theta);
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        const double h_k = eig.eigenvalues[k];
        for (int a = 0; a < n; ++a) {
            const cplx c0 = eig.eigenvectors(a, k);
            const cplx cm = eig.eigenvectors((a - 1 + n) % n, k);
            const cplx cp = eig.eigenvectors((a + 1) % n, k);
            const cplx res =
                st * std::cos(2.0 * kPi * a / n) * c0 + 0.5 * ct * (cm + cp) + h_k * c0;
            worst = std::max(worst, std::abs(res));
        }
    }
    return worst;
}

} // namespace schwinger
