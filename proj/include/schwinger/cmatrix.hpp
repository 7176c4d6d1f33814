#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "schwinger/errors.hpp"

namespace schwinger {

using cplx = std::complex<double>;

/// Dense row-major complex matrix for small dimensions (N <~ 512).
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n);
    static CMatrix zero(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<cplx>& data() const { return data_; }
    std::vector<cplx>& data() { return data_; }

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(cplx s);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);

/// Standard matrix product. Throws DimensionError on shape mismatch and
/// NonFiniteError if either operand carries NaN/Inf entries.
CMatrix mat_mul(const CMatrix& a, const CMatrix& b);

/// Conjugate transpose.
CMatrix adjoint(const CMatrix& a);

/// Sum of diagonal entries; input must be square.
cplx trace(const CMatrix& a);

/// Tr[a*b] without forming the product (a.cols == b.rows, b.cols == a.rows).
cplx trace_product(const CMatrix& a, const CMatrix& b);

/// Hilbert-Schmidt norm sqrt(Tr[a^dag a]).
double hs_norm(const CMatrix& a);

double max_abs(const CMatrix& a);
bool all_finite(const CMatrix& a);

/// Max-norm Hermitian deviation check, scaled by max(1, |a|_max).
bool is_hermitian(const CMatrix& a, double tol = 1e-12);
bool is_unitary(const CMatrix& a, double tol = 1e-12);

std::vector<cplx> mat_vec(const CMatrix& a, const std::vector<cplx>& x);
cplx dot(const std::vector<cplx>& a, const std::vector<cplx>& b); // conj(a).b
double vec_norm(const std::vector<cplx>& a);

CMatrix mat_pow(const CMatrix& a, unsigned k);

} // namespace schwinger
