#pragma once

#include <memory>
#include <vector>

#include "schwinger/pair.hpp"

namespace schwinger {

/// Symmetric phase convention for odd N: inv2 = (N+1)/2 is the inverse of 2
/// mod N, and {2^-1 m} below denotes (inv2 * m) mod N.
struct ModularHalf {
    int n = 0;
    int inv2 = 0;
    /// {2^-1 eta xi} reduced into [0, N).
    int half_product(int eta, int xi) const;
};

/// Throws OddDimensionError for even N (the symmetric-interval construction
/// needs 2 invertible mod N).
ModularHalf modular_half(int n);

/// Reduce an integer label into the symmetric interval [-l, l], l = (N-1)/2.
int reduce_symmetric(int n, int k);
bool label_in_range(int n, int k);

/// D(eta,xi) = w^{-{2^-1 eta xi}} sum_g w^{g eta} |u_g><u_{g-xi}|, odd N.
/// Out-of-range labels are reduced mod N into [-l, l] (D is N-periodic in
/// both labels).
CMatrix displacement(int n, int eta, int xi);

/// Delta(mu,nu) = (1/N) sum_{eta,xi} w^{-(eta nu - xi mu)} D(eta,xi).
CMatrix phase_point(int n, int mu, int nu);

/// Cached D(eta,xi) grid; eager for N <= 31, lazy above (memory is O(N^4)).
class DisplacementGrid {
public:
    explicit DisplacementGrid(int n);
    int dim() const { return n_; }
    int ell() const { return (n_ - 1) / 2; }
    const CMatrix& at(int eta, int xi) const;

private:
    int n_ = 0;
    mutable std::vector<std::unique_ptr<CMatrix>> cells_;
};

class PhasePointGrid {
public:
    explicit PhasePointGrid(int n);
    int dim() const { return n_; }
    int ell() const { return (n_ - 1) / 2; }
    const CMatrix& at(int mu, int nu) const;

private:
    int n_ = 0;
    mutable std::vector<std::unique_ptr<CMatrix>> cells_;
};

/// W~_rho(eta,xi) = Tr[D(eta,xi) rho] over the symmetric grid, stored
/// row-major from -l to l in both labels.
struct WeylFunction {
    int n = 0;
    std::vector<cplx> values;
    cplx at(int eta, int xi) const;
};

WeylFunction weyl_function(const DensityMatrix& rho);

/// W_rho(mu,nu) = Tr[Delta(mu,nu) rho], computed as the symplectic discrete
/// Fourier transform of the Weyl grid and verified against the direct
/// phase-point traces to 1e-10 (ConsistencyError on mismatch).
struct WignerFunction {
    int n = 0;
    std::vector<cplx> values;
    double max_imag = 0.0;         // quasiprobability is real
    double fourier_residual = 0.0; // DFT path vs direct traces
    cplx at(int mu, int nu) const;
};

WignerFunction wigner_function(const DensityMatrix& rho);

/// <U^alpha V^beta> = w^{-alpha beta + {2^-1 alpha beta}} W~(alpha, -beta).
cplx reconstruct_uv_moment(const WeylFunction& w, int alpha, int beta);

struct TrigProducts {
    cplx cc, cs, sc, ss; // <C_U C_V>, <C_U S_V>, <S_U C_V>, <S_U S_V>
};

/// The four trig-product means from the Weyl values at (+-1, +-1) with the
/// phases w^{+-(1 - {2^-1})}.
TrigProducts reconstruct_trig_products(const WeylFunction& w);

struct TrigProductBounds {
    double cc_upper = 0.0, cc_lower = 0.0; // also bound |<S_U S_V>|
    double cs_upper = 0.0, cs_lower = 0.0; // also bound |<S_U C_V>|
    double cu_sq = 0.0, cv_sq = 0.0;       // <C_U^2>, <C_V^2> from Weyl values
    double cauchy_upper = 0.0;             // <C_U^2><C_V^2> bounds |<C_U C_V>|^2
};

TrigProductBounds trig_product_bounds(const WeylFunction& w);

} // namespace schwinger
