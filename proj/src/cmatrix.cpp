#include "schwinger/cmatrix.hpp"

#include <cmath>

namespace schwinger {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix addition: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix subtraction: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
    for (auto& z : data_) z *= s;
    return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { a += b; return a; }
CMatrix operator-(CMatrix a, const CMatrix& b) { a -= b; return a; }
CMatrix operator*(cplx s, CMatrix a) { a *= s; return a; }
CMatrix operator*(const CMatrix& a, const CMatrix& b) { return mat_mul(a, b); }

bool all_finite(const CMatrix& a) {
    for (const auto& z : a.data())
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

CMatrix mat_mul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("mat_mul: inner dimensions disagree");
    if (!all_finite(a) || !all_finite(b))
        throw NonFiniteError("mat_mul: non-finite entry");
    CMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

CMatrix adjoint(const CMatrix& a) {
    CMatrix c(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(j, i) = std::conj(a(i, j));
    return c;
}

cplx trace(const CMatrix& a) {
    if (!a.square()) throw DimensionError("trace: non-square input");
    if (!all_finite(a)) throw NonFiniteError("trace: non-finite entry");
    cplx t{};
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

cplx trace_product(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows() || b.cols() != a.rows())
        throw DimensionError("trace_product: shape mismatch");
    cplx t{};
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            t += a(i, k) * b(k, i);
    return t;
}

double hs_norm(const CMatrix& a) {
    if (!all_finite(a)) throw NonFiniteError("hs_norm: non-finite entry");
    double s = 0.0;
    for (const auto& z : a.data()) s += std::norm(z);
    return std::sqrt(s);
}

double max_abs(const CMatrix& a) {
    double m = 0.0;
    for (const auto& z : a.data()) m = std::max(m, std::abs(z));
    return m;
}

bool is_hermitian(const CMatrix& a, double tol) {
    if (!a.square()) return false;
    const double scale = std::max(1.0, max_abs(a));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol * scale) return false;
    return true;
}

bool is_unitary(const CMatrix& a, double tol) {
    if (!a.square()) return false;
    const CMatrix p = mat_mul(adjoint(a), a);
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const cplx want = (i == j) ? cplx{1.0} : cplx{};
            if (std::abs(p(i, j) - want) > tol * static_cast<double>(n)) return false;
        }
    return true;
}

std::vector<cplx> mat_vec(const CMatrix& a, const std::vector<cplx>& x) {
    if (a.cols() != x.size()) throw DimensionError("mat_vec: shape mismatch");
    std::vector<cplx> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx s{};
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

cplx dot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    cplx s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double vec_norm(const std::vector<cplx>& a) {
    double s = 0.0;
    for (const auto& z : a) s += std::norm(z);
    return std::sqrt(s);
}

CMatrix mat_pow(const CMatrix& a, unsigned k) {
    if (!a.square()) throw DimensionError("mat_pow: non-square input");
    CMatrix r = CMatrix::identity(a.rows());
    for (unsigned i = 0; i < k; ++i) r = mat_mul(r, a);
    return r;
}

} // namespace schwinger
