#pragma once

#include <complex>

#include "guph/units.hpp"

// Closed-form s-wave bound states of the momentum-space Coulomb problem
// with beta' = 2 beta. Everything is in atomic units; k = sqrt(-2 m E).

namespace guph::spectrum {

struct XiEta {
    double xi;   // alpha m sqrt(3 beta) / (hbar (1 - 3 beta k^2))
    double eta;  // alpha m / (hbar k (1 - 3 beta k^2))
};

XiEta xi_eta(double k, double beta);

// A quantized s-wave solution. Plain aggregate; make_bound_state enforces
// the invariants, tests may build off-shell variants directly.
struct BoundState {
    int n;
    double beta;
    double k;
    double energy;
    double xi;
    double eta;
    double norm_A = 0.0;  // 0 until normalized; psi then uses A = 1
};

// alpha m / (hbar k (1 + k sqrt(3 beta))), which single-valuedness pins to
// the integer n. Equals eta - xi through
// (1 - 3 beta k^2) = (1 - sqrt(3 beta) k)(1 + sqrt(3 beta) k).
double quantization_lhs(double k, double beta);

// Positive root of sqrt(3 beta) k^2 + k - 1/n = 0, evaluated in the
// conjugate form 2/(n (1 + sqrt(1 + 4 sqrt(3 beta)/n))) which is exact at
// beta = 0 and loses no digits as beta -> 0.
double solve_k_closed_form(int n, double beta);

// E_n = -(1/24 m beta) (1 - sqrt(1 + 4 (m alpha/hbar n) sqrt(3 beta)))^2,
// evaluated in the equivalent cancellation-free form -k_n^2/2.
double energy_exact(int n, double beta);

// -(m alpha^2/2 hbar^2 n^2 - (m^2 alpha^3/hbar^3 n^3) sqrt(3 beta)
//   + (15/2)(m^3 alpha^4/hbar^4 n^4) beta)
double energy_series(int n, double beta);

double energy_undeformed(int n);  // -1/(2 n^2)

// E_n^+ = -(1/24 m beta)(1 + sqrt(1 + 4 (m alpha/hbar n) sqrt(3 beta)))^2.
// Diverges as beta -> 0 and is kept only as the non-physical branch.
double rejected_branch_energy(int n, double beta);

struct RelativeShift {
    double series;  // -3/4 + (m alpha/4 hbar) sqrt(3 beta) - (21/16)(m alpha/hbar)^2 beta
    double exact;   // (E_2 - E_1)/E_1 from energy_exact
};
RelativeShift relative_shift_1s2s(double beta);

BoundState make_bound_state(int n, double beta);

// Wavefunction parameters for an arbitrary, not necessarily quantized k.
// The closed form solves the radial equation for any k > 0; quantization
// enters only through single-valuedness.
BoundState state_from_k(double k, double beta);

// psi(p) = A (1+3 beta p^2)^{1/3} / (p (p^2+k^2))
//          * exp[ 2 i xi arctan(p sqrt(3 beta)) - 2 i eta arctan(p/k) ]
std::complex<double> psi(const BoundState& state, double p);

// |(eta - xi) - round(eta - xi)|: the phase of psi changes by
// 2 pi (xi - eta) when both arctans shift by pi, so an integer eta - xi
// makes psi single-valued.
double single_valuedness_defect(const BoundState& state);

enum class Measure {
    undeformed,  // p^2 dp
    deformed,    // p^2 dp / (1 + 3 beta p^2)
};

// Fixes norm_A so that the squared modulus integrates to 1 under the chosen
// measure. Quadrature failures propagate as oracles::NumericalError.
BoundState normalize(const BoundState& state, Measure measure = Measure::undeformed,
                     double tol = 1e-10);

struct WavefunctionSample {
    double p;
    std::complex<double> value;
    double modulus_sq_weighted;  // |psi|^2 p^2
};

WavefunctionSample sample_wavefunction(const BoundState& state, double p);

}  // namespace guph::spectrum
