#pragma once

#include <string>
#include <utility>
#include <vector>

#include "schwinger/pair.hpp"

namespace schwinger {

/// H = -sin(theta) C_U - cos(theta) C_V in the u-basis: diagonal
/// -sin(theta) cos(2 pi a / N), cyclic off-diagonals -cos(theta)/2.
struct HarperHamiltonian {
    int n = 0;
    double theta = 0.0;
    CMatrix h;
};

HarperHamiltonian build_harper(int n, double theta);

/// Discrete Fourier operator <u_a|F|u_b> = w^{ab} / sqrt(N); F^4 = 1.
struct FourierOperator {
    int n = 0;
    CMatrix f;
};

FourierOperator build_fourier(int n);

struct GroundStateResult {
    int n = 0;
    double theta_star = 0.0; // pi/4 for the main path
    double h0 = 0.0;         // smallest eigenvalue
    double gap = 0.0;        // h1 - h0
    std::vector<cplx> psi0;  // phase-fixed ground state
    double v0_u = 0.0, v0_v = 0.0;
    double v0_du = 0.0, v0_dv = 0.0;
    double s0 = 0.0; // eps^-1 V0_dU
    double r1 = 0.0; // S0^2, the tightest bound
};

/// Ground state of build_harper(N, pi/4). Phase convention: the largest
/// amplitude is rotated real positive, then the alpha = 0 amplitude is
/// required positive. Throws DegenerateGroundError if the gap h1 - h0 is
/// below 1e-8.
GroundStateResult ground_state(int n);

struct ThetaScanResult {
    double theta_star = 0.0;
    std::vector<std::pair<double, double>> curve; // (theta, cos(theta)|<U>| + sin(theta)|<V>|)
};

/// Scans cos(theta)|<U>| + sin(theta)|<V>| over the ground state of H(theta)
/// on a uniform grid in [0, pi/2], then refines the maximizer by
/// golden-section search to 1e-6.
ThetaScanResult theta_scan(int n, int grid_points);

/// Appendix-style closed-form ground state for N in [2, 6]: amplitudes
/// evaluated to double precision from the exact radicals (30 significant
/// digits retained in the literals), radicals kept as provenance strings.
struct ClosedFormGroundState {
    int n = 0;
    std::vector<double> coefficients;
    std::vector<std::string> provenance;
    double expected_h0 = 0.0;
    double expected_v_delta = 0.0;
    double expected_s0 = 0.0;
    double expected_r1 = 0.0;
};

ClosedFormGroundState closed_form(int n);

struct FourierCommutationResult {
    double comm_norm = 0.0; // |H F - F H|_HS at theta = pi/4
    cplx f0;                // psi0^dag F psi0, expected +1
    double max_eigvec_imag = 0.0; // over all Harper functions after phase fixing
};

FourierCommutationResult fourier_commutation_check(int n);

/// Max three-term recurrence residual over all eigenpairs and sites.
double harper_recurrence_check(int n, double theta);

} // namespace schwinger
