#pragma once

#include "guph/units.hpp"

// Upper bounds on the minimal length from hydrogen spectroscopy: the 1S-2S
// relative accuracy and the gap between measured and computed 1S Lamb
// shifts. This is the one module where fm and MHz appear.

namespace guph::bounds {

enum class SpectroscopyKind { one_s_two_s_accuracy, lamb_shift };

struct SpectroscopyInput {
    SpectroscopyKind kind;
    double epsilon = 0.0;       // relative 1S-2S accuracy
    double lamb_exp_mhz = 0.0;  // measured 1S Lamb shift
    double lamb_th_mhz = 0.0;   // computed 1S Lamb shift
    int n_level = 1;
};

// 1S-2S splitting accuracy, 1.8e-14 (Niering et al. measurement).
SpectroscopyInput default_1s2s_input();

// 1S Lamb shift: 8172.837(22) MHz measured vs 8172.731(40) MHz computed.
SpectroscopyInput default_lamb_input();

enum class BoundFormula { shift_1s2s, lamb };

struct MinimalLengthBound {
    double delta_x_min_fm;  // hbar sqrt(3 beta), the convention of the
                            // leading spectrum correction
    double sqrt_3beta_au;
    SpectroscopyInput source;
    BoundFormula formula_tag;

    double beta_au() const { return sqrt_3beta_au * sqrt_3beta_au / 3.0; }
    // Same beta expressed through the full beta' = 2 beta minimal length
    // hbar sqrt(5 beta) = sqrt(5/3) hbar sqrt(3 beta).
    double delta_x_min_factorized_fm() const;
};

// Attributes the whole 1S-2S error budget to the leading correction:
// epsilon = (m alpha/4 hbar) sqrt(3 beta), so sqrt(3 beta) = 4 epsilon and
// (Delta X)_min = 4 epsilon a0.
MinimalLengthBound bound_from_1s2s(double epsilon);

// Attributes the Lamb-shift gap to the leading correction:
// (m^2 alpha^3/hbar^3 n^3) sqrt(3 beta) = h (L_exp - L_th).
MinimalLengthBound bound_from_lamb(const SpectroscopyInput& input);

enum class LengthConvention { sqrt_3beta, sqrt_5beta };

// Inverts the minimal length back to beta under the chosen convention.
double beta_from_minimal_length(double delta_x_fm,
                                LengthConvention convention = LengthConvention::sqrt_3beta);

// Published order-of-magnitude estimates the default inputs reproduce.
inline constexpr double reported_bound_1s2s_fm = 5e-9;
inline constexpr double reported_bound_lamb_fm = 1e-6;

}  // namespace guph::bounds
