#pragma once

#include <vector>

#include "schwinger/cmatrix.hpp"

namespace schwinger {

/// Full spectrum of a Hermitian matrix. Eigenvalues ascending; column k of
/// `eigenvectors` is the unit eigenvector for eigenvalues[k].
struct HermitianEigen {
    std::vector<double> eigenvalues;
    CMatrix eigenvectors;
};

/// Cyclic Jacobi diagonalization for complex Hermitian matrices.
///
/// One 2x2 unitary similarity per off-diagonal element per sweep; converged
/// when the off-diagonal Hilbert-Schmidt norm drops below tol * |M|_HS.
/// Deterministic for identical input. Degenerate clusters get their basis
/// re-fixed by Gram-Schmidt in column order.
///
/// Throws NotHermitianError for non-Hermitian input (max-norm deviation above
/// 1e-12, scaled) and ConvergenceError after 100 sweeps.
HermitianEigen hermitian_eigen(const CMatrix& m, double tol = 1e-12);

} // namespace schwinger
