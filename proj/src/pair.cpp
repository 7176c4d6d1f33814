#include "schwinger/pair.hpp"

#include <cmath>
#include <numbers>

namespace schwinger {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t fnv1a(const CMatrix& m) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](double d) {
        std::uint64_t bits;
        static_assert(sizeof(bits) == sizeof(d));
        __builtin_memcpy(&bits, &d, sizeof(bits));
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    for (const auto& z : m.data()) {
        mix(z.real());
        mix(z.imag());
    }
    return h;
}

} // namespace

SchwingerPair build_pair(int n) {
    if (n < 2) throw DimensionError("build_pair: N must be >= 2");
    SchwingerPair p;
    p.n = n;
    p.phi = 2.0 * kPi / n;
    p.omega = std::polar(1.0, p.phi);
    p.a_tan = std::tan(kPi / n); // formally infinite at N = 2
    p.epsilon = (n == 2) ? 1.0 : p.a_tan / (1.0 + p.a_tan);
    p.u_op = CMatrix(n, n);
    p.v_op = CMatrix(n, n);
    for (int a = 0; a < n; ++a) {
        p.u_op(a, a) = std::polar(1.0, p.phi * a);
        p.v_op((a - 1 + n) % n, a) = 1.0;
    }
    return p;
}

SchwingerPair phase_rotate(const SchwingerPair& pair, double phi_u, double theta_v) {
    SchwingerPair p = pair;
    p.u_op *= std::polar(1.0, phi_u);
    p.v_op *= std::polar(1.0, theta_v);
    return p;
}

DensityMatrix::DensityMatrix(CMatrix rho) {
    if (!rho.square() || rho.rows() == 0)
        throw InvalidStateError("DensityMatrix: non-square matrix");
    if (!all_finite(rho))
        throw NonFiniteError("DensityMatrix: non-finite entry");
    if (!is_hermitian(rho, 1e-12))
        throw InvalidStateError("DensityMatrix: not Hermitian to 1e-12");
    const cplx t = trace(rho);
    if (std::abs(t - cplx{1.0}) > 1e-12)
        throw InvalidStateError("DensityMatrix: trace differs from 1 beyond 1e-12");
    n_ = static_cast<int>(rho.rows());
    rho_ = std::move(rho);
    tag_ = fnv1a(rho_);
}

DensityMatrix DensityMatrix::validated(CMatrix rho, double psd_tol) {
    DensityMatrix dm(std::move(rho));
    const HermitianEigen eig = hermitian_eigen(dm.rho_);
    if (eig.eigenvalues.front() < -psd_tol)
        throw InvalidStateError("DensityMatrix: negative eigenvalue beyond tolerance");
    return dm;
}

DensityMatrix DensityMatrix::pure(const std::vector<cplx>& psi) {
    const double nrm = vec_norm(psi);
    if (nrm == 0.0) throw InvalidStateError("DensityMatrix::pure: zero vector");
    const std::size_t n = psi.size();
    CMatrix rho(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rho(i, j) = psi[i] * std::conj(psi[j]) / (nrm * nrm);
    // clean rounding noise on the diagonal so the trace check is exact
    cplx t{};
    for (std::size_t i = 0; i < n; ++i) {
        rho(i, i) = cplx(rho(i, i).real(), 0.0);
        t += rho(i, i);
    }
    for (std::size_t i = 0; i < n; ++i) rho(i, i) /= t.real();
    return DensityMatrix(std::move(rho));
}

cplx expectation(const DensityMatrix& rho, const CMatrix& o) {
    if (o.rows() != rho.matrix().rows() || o.cols() != rho.matrix().cols())
        throw DimensionError("expectation: operator/state dimension mismatch");
    return trace_product(o, rho.matrix());
}

double variance_unitary(const DensityMatrix& rho, const CMatrix& o) {
    if (!is_unitary(o, 1e-12))
        throw NotUnitaryError("variance_unitary: operator not unitary to 1e-12");
    const double v = 1.0 - std::norm(expectation(rho, o));
    if (v < -1e-12 || v > 1.0 + 1e-12)
        throw ConsistencyError("variance_unitary: value escaped [0,1] beyond tolerance");
    return std::clamp(v, 0.0, 1.0);
}

double delta_variance(double v) {
    if (v < 0.0 || v >= 1.0)
        throw VanishingMeanError("delta_variance: defined for V in [0,1) only");
    return v / (1.0 - v);
}

double delta_variance_inverse(double w) {
    if (w < 0.0) throw VanishingMeanError("delta_variance_inverse: negative input");
    return w / (1.0 + w);
}

double covariance(const DensityMatrix& rho, const CMatrix& a, const CMatrix& b) {
    if (!is_hermitian(a, 1e-12) || !is_hermitian(b, 1e-12))
        throw NotHermitianError("covariance: inputs must be Hermitian");
    // <{A,B}/2> = Re Tr[AB rho] for Hermitian A, B
    const cplx m = trace_product(mat_mul(a, b), rho.matrix());
    return m.real() - expectation(rho, a).real() * expectation(rho, b).real();
}

double rs_bound(const DensityMatrix& rho, const CMatrix& a, const CMatrix& b) {
    if (!is_hermitian(a, 1e-12) || !is_hermitian(b, 1e-12))
        throw NotHermitianError("rs_bound: inputs must be Hermitian");
    const cplx m = trace_product(mat_mul(a, b), rho.matrix());
    const double c = m.real() - expectation(rho, a).real() * expectation(rho, b).real();
    // |<[A,B]>|^2 / 4 = Im^2 <AB>
    return c * c + m.imag() * m.imag();
}

TrigQuartet trig_quartet(const SchwingerPair& pair) {
    const CMatrix ud = adjoint(pair.u_op);
    const CMatrix vd = adjoint(pair.v_op);
    TrigQuartet q;
    q.c_u = 0.5 * (pair.u_op + ud);
    q.s_u = cplx(0.0, -0.5) * (pair.u_op - ud);
    q.c_v = 0.5 * (pair.v_op + vd);
    q.s_v = cplx(0.0, -0.5) * (pair.v_op - vd);
    return q;
}

DressedQuartet dressed_quartet(const SchwingerPair& pair, const DensityMatrix& rho) {
    const cplx mu = expectation(rho, pair.u_op);
    const cplx mv = expectation(rho, pair.v_op);
    if (std::abs(mu) <= kMeanCutoff || std::abs(mv) <= kMeanCutoff)
        throw VanishingMeanError("dressed_quartet: vanishing <U> or <V>");
    const int n = pair.n;
    const CMatrix eye = CMatrix::identity(n);
    const CMatrix du = (cplx{1.0} / mu) * pair.u_op - eye;
    const CMatrix dv = (cplx{1.0} / mv) * pair.v_op - eye;
    const CMatrix dud = adjoint(du);
    const CMatrix dvd = adjoint(dv);
    DressedQuartet q;
    q.c_du = 0.5 * (du + dud);
    q.s_du = cplx(0.0, -0.5) * (du - dud);
    q.c_dv = 0.5 * (dv + dvd);
    q.s_dv = cplx(0.0, -0.5) * (dv - dvd);
    q.mean_u = mu;
    q.mean_v = mv;
    q.state_tag = rho.fingerprint();
    return q;
}

void expect_same_state(const DressedQuartet& q, const DensityMatrix& rho) {
    if (q.state_tag != rho.fingerprint())
        throw InvalidStateError("dressed quartet evaluated against a different state");
}

PairMoments pair_moments(const SchwingerPair& pair, const DensityMatrix& rho) {
    PairMoments m;
    m.u = expectation(rho, pair.u_op);
    m.v = expectation(rho, pair.v_op);
    m.uv = trace_product(mat_mul(pair.u_op, pair.v_op), rho.matrix());
    m.uvd = trace_product(mat_mul(pair.u_op, adjoint(pair.v_op)), rho.matrix());
    return m;
}

PairMoments pair_moments(const SchwingerPair& pair, const std::vector<cplx>& psi) {
    if (static_cast<int>(psi.size()) != pair.n)
        throw DimensionError("pair_moments: vector dimension mismatch");
    const std::vector<cplx> up = mat_vec(pair.u_op, psi);
    const std::vector<cplx> vp = mat_vec(pair.v_op, psi);
    // (V^dag psi)_i = sum_j conj(V_ji) psi_j
    std::vector<cplx> vdp(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        cplx s{};
        for (std::size_t j = 0; j < psi.size(); ++j) s += std::conj(pair.v_op(j, i)) * psi[j];
        vdp[i] = s;
    }
    PairMoments m;
    m.u = dot(psi, up);
    m.v = dot(psi, vp);
    m.uv = dot(psi, mat_vec(pair.u_op, vp));
    m.uvd = dot(psi, mat_vec(pair.u_op, vdp));
    return m;
}

} // namespace schwinger
