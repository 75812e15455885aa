#pragma once

#include <vector>

#include "jtc/matrix.hpp"

namespace jtc {

/// Single qubit / single resonator parameters. The detuning is always
/// derived, never stored.
struct JCParams {
    double qubit_freq = 0.0;      // w'
    double resonator_freq = 0.0;  // w
    double coupling = 0.0;        // g

    double detuning() const { return qubit_freq - resonator_freq; }
};

/// Closed-form dressed pair of strip n >= 1: energies
/// E_n(+-) = n w +- sqrt(g^2 n + Delta^2/4), states
/// |E+> = alpha+ |n,0> + beta+ |n-1,1> and |E-> likewise.
struct DressedStateJC {
    int n = 1;
    double e_plus = 0.0;
    double e_minus = 0.0;
    double alpha_plus = 0.0;
    double beta_plus = 0.0;
    double alpha_minus = 0.0;
    double beta_minus = 0.0;
    double theta = 0.0;  // mixing angle, tan(2 theta) = -2 g sqrt(n) / Delta
};

/// Second-order shift of one level from the counter-rotating perturbation.
/// branch: +1 / -1 for the strip pair, 0 for the ground level (n is then 0).
struct RwaCorrection {
    int n = 0;
    int branch = 0;
    double e_rwa = 0.0;
    double delta2 = 0.0;
    double e_corrected = 0.0;
    bool pole = false;  // a vanishing denominator was hit; values are NaN
};

/// One-excitation Tavis-Cummings solution for K qubits resonant with one
/// mode: dark eigenvalue Omega_K = (3-K)/2 * w with multiplicity K-1 and
/// bright pair Omega_K +- sqrt(K) * g_mean.
struct TCSolution {
    int k = 0;
    double omega = 0.0;
    std::vector<double> couplings;
    double big_omega = 0.0;
    double mean_coupling = 0.0;  // sqrt(sum g^2 / K)
    double e_plus = 0.0;
    double e_minus = 0.0;
    bool degenerate = false;  // all couplings zero: (K+1)-fold degeneracy

    // Vectors over the sector basis {|1,0..0>, |0,1,0..>, ..., |0,..,1>}.
    std::vector<double> bright_plus;
    std::vector<double> bright_minus;
    std::vector<std::vector<double>> dark_basis;  // K-1 orthonormal vectors, photon entry 0
};

/// Ground energy of the JC model, -Delta/2 (zero-point energy included).
double jc_ground(const JCParams& p);

/// Dressed states of strip n >= 1. Coefficients come from the angle form
/// theta = atan2(2 g sqrt(n), -Delta) / 2, which matches the normalized
/// closed form wherever the latter is well-conditioned and stays stable in
/// the g -> 0 limit where its normalization factor vanishes.
DressedStateJC jc_strip(const JCParams& p, int n);

/// Second-order energy corrections from the counter-rotating terms for the
/// ground level and the strip pairs n = 1..n_max. First-order shifts vanish
/// (the perturbation changes the excitation number by +-2); the four printed
/// second-order expressions (ground, n=1, n=2, n>=3) are used verbatim.
/// An accidental degeneracy between coupled strips is reported as a pole on
/// the affected entry instead of an exception.
std::vector<RwaCorrection> rwa_second_order(const JCParams& p, int n_max);

/// Tavis-Cummings one-excitation solution. The dark basis spans the null
/// space of the coupling vector (photon amplitude exactly zero), built by
/// Gram-Schmidt over projected unit vectors and sign-fixed, so the output is
/// deterministic. K = 1 degenerates to the resonant JC strip.
TCSolution tc_one_excitation(double omega, const std::vector<double>& couplings);

}  // namespace jtc
