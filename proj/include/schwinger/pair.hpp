#pragma once

#include <cstdint>
#include <vector>

#include "schwinger/cmatrix.hpp"
#include "schwinger/eigen.hpp"

namespace schwinger {

/// Mean-value modulus below which delta-dressed operators are undefined.
inline constexpr double kMeanCutoff = 1e-10;

/// Clock/shift pair in the u-basis: U = diag(1, w, ..., w^{N-1}) and
/// V|u_a> = |u_{a-1 mod N}>, so V^xi U^eta = w^{eta xi} U^eta V^xi.
struct SchwingerPair {
    int n = 0;
    CMatrix u_op;       // clock
    CMatrix v_op;       // shift
    cplx omega;         // exp(2 pi i / N)
    double phi = 0.0;   // 2 pi / N
    double a_tan = 0.0; // tan(pi / N); +inf formally at N = 2
    double epsilon = 0.0; // A / (1 + A); exactly 1 at N = 2 (limit)
};

SchwingerPair build_pair(int n);

/// U -> e^{i phi_u} U, V -> e^{i theta_v} V. Variances and the commutation
/// relations are invariant under this map.
SchwingerPair phase_rotate(const SchwingerPair& pair, double phi_u, double theta_v);

/// Hermitian, unit-trace state. The constructor enforces Hermiticity and
/// trace; positive semidefiniteness is checked by validated() (used for
/// externally supplied matrices) and by the test suites.
class DensityMatrix {
public:
    explicit DensityMatrix(CMatrix rho);
    static DensityMatrix validated(CMatrix rho, double psd_tol = 1e-10);
    static DensityMatrix pure(const std::vector<cplx>& psi);

    int dim() const { return n_; }
    const CMatrix& matrix() const { return rho_; }
    /// Identity tag used to detect cross-state misuse of dressed operators.
    std::uint64_t fingerprint() const { return tag_; }

private:
    int n_ = 0;
    CMatrix rho_;
    std::uint64_t tag_ = 0;
};

/// Tr[O rho].
cplx expectation(const DensityMatrix& rho, const CMatrix& o);

/// 1 - |<O>|^2 for unitary O, clamped into [0, 1] after a -1e-12 check.
double variance_unitary(const DensityMatrix& rho, const CMatrix& o);

/// V -> V / (1 - V). Throws VanishingMeanError at V = 1 (mean value zero).
double delta_variance(double v);
/// Inverse map W -> W / (1 + W).
double delta_variance_inverse(double w);

/// C(A,B) = <{A,B}/2> - <A><B> for Hermitian A, B.
double covariance(const DensityMatrix& rho, const CMatrix& a, const CMatrix& b);

/// C^2(A,B) + |<[A,B]>|^2 / 4; compare against V_A V_B.
double rs_bound(const DensityMatrix& rho, const CMatrix& a, const CMatrix& b);

/// Cosine/sine operators C_U = Re[U], S_U = Im[U], likewise for V.
struct TrigQuartet {
    CMatrix c_u, s_u, c_v, s_v;
};

TrigQuartet trig_quartet(const SchwingerPair& pair);

/// Real/imaginary parts of dU = (U - <U>)/<U> and dV, dressed on one state.
struct DressedQuartet {
    CMatrix c_du, s_du, c_dv, s_dv;
    cplx mean_u, mean_v;
    std::uint64_t state_tag = 0; // fingerprint of the dressing state
};

/// Throws VanishingMeanError when |<U>| or |<V>| <= 1e-10 on rho.
DressedQuartet dressed_quartet(const SchwingerPair& pair, const DensityMatrix& rho);

/// Throws InvalidStateError when the quartet was dressed on a different state.
void expect_same_state(const DressedQuartet& q, const DensityMatrix& rho);

/// The four moments every bound in the hierarchy reduces to.
struct PairMoments {
    cplx u, v;     // <U>, <V>
    cplx uv, uvd;  // <UV>, <UV^dag>
};

PairMoments pair_moments(const SchwingerPair& pair, const DensityMatrix& rho);
PairMoments pair_moments(const SchwingerPair& pair, const std::vector<cplx>& psi);

} // namespace schwinger
