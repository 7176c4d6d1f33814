#include "schwinger/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace schwinger {

namespace {

double off_diagonal_norm(const CMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

// One complex Givens rotation zeroing m(p,q); accumulates into vecs.
void rotate(CMatrix& m, CMatrix& vecs, std::size_t p, std::size_t q) {
    const cplx g = m(p, q);
    const double r = std::abs(g);
    if (r == 0.0) return;
    const cplx phase = g / r; // e^{i phi}
    const double alpha = m(p, p).real();
    const double beta = m(q, q).real();
    const double tau = (beta - alpha) / (2.0 * r);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = m.rows();
    // M <- G^dag M G with G(p,p)=c, G(p,q)=s*phase, G(q,p)=-s*conj(phase), G(q,q)=c
    for (std::size_t k = 0; k < n; ++k) {
        const cplx mkp = m(k, p), mkq = m(k, q);
        m(k, p) = c * mkp - s * std::conj(phase) * mkq;
        m(k, q) = s * phase * mkp + c * mkq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const cplx mpk = m(p, k), mqk = m(q, k);
        m(p, k) = c * mpk - s * phase * mqk;
        m(q, k) = s * std::conj(phase) * mpk + c * mqk;
    }
    m(p, q) = 0.0;
    m(q, p) = 0.0;
    m(p, p) = cplx(m(p, p).real(), 0.0);
    m(q, q) = cplx(m(q, q).real(), 0.0);

    for (std::size_t k = 0; k < n; ++k) {
        const cplx vkp = vecs(k, p), vkq = vecs(k, q);
        vecs(k, p) = c * vkp - s * std::conj(phase) * vkq;
        vecs(k, q) = s * phase * vkp + c * vkq;
    }
}

} // namespace

HermitianEigen hermitian_eigen(const CMatrix& m_in, double tol) {
    if (!m_in.square()) throw DimensionError("hermitian_eigen: non-square input");
    if (!all_finite(m_in)) throw NonFiniteError("hermitian_eigen: non-finite entry");
    if (!is_hermitian(m_in, 1e-12))
        throw NotHermitianError("hermitian_eigen: input not Hermitian to 1e-12");

    const std::size_t n = m_in.rows();
    CMatrix m = m_in;
    // symmetrize rounding noise so the iteration sees an exactly Hermitian matrix
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = cplx(m(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = avg;
            m(j, i) = std::conj(avg);
        }
    }
    CMatrix vecs = CMatrix::identity(n);

    const double full_norm = hs_norm(m);
    const double target = tol * std::max(full_norm, 1e-300);
    constexpr int kMaxSweeps = 100;

    bool converged = (n < 2) || off_diagonal_norm(m) <= target;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                rotate(m, vecs, p, q);
        converged = off_diagonal_norm(m) <= target;
    }
    if (!converged)
        throw ConvergenceError("hermitian_eigen: no convergence in 100 sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return m(a, a).real() < m(b, b).real();
    });

    HermitianEigen out;
    out.eigenvalues.resize(n);
    out.eigenvectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = m(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i)
            out.eigenvectors(i, k) = vecs(i, order[k]);
    }

    // re-fix degenerate clusters by Gram-Schmidt in column order
    const double cluster_tol = 1e-10 * std::max(1.0, full_norm);
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && out.eigenvalues[end] - out.eigenvalues[end - 1] <= cluster_tol) ++end;
        if (end - start > 1) {
            for (std::size_t k = start; k < end; ++k) {
                for (std::size_t j = start; j < k; ++j) {
                    cplx proj{};
                    for (std::size_t i = 0; i < n; ++i)
                        proj += std::conj(out.eigenvectors(i, j)) * out.eigenvectors(i, k);
                    for (std::size_t i = 0; i < n; ++i)
                        out.eigenvectors(i, k) -= proj * out.eigenvectors(i, j);
                }
                double nrm = 0.0;
                for (std::size_t i = 0; i < n; ++i) nrm += std::norm(out.eigenvectors(i, k));
                nrm = std::sqrt(nrm);
                for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) /= nrm;
            }
        }
        start = end;
    }
    return out;
}

} // namespace schwinger
