#include "guph/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace guph::bounds {

SpectroscopyInput default_1s2s_input() {
    SpectroscopyInput in;
    in.kind = SpectroscopyKind::one_s_two_s_accuracy;
    in.epsilon = 1.8e-14;
    return in;
}

SpectroscopyInput default_lamb_input() {
    SpectroscopyInput in;
    in.kind = SpectroscopyKind::lamb_shift;
    in.lamb_exp_mhz = 8172.837;
    in.lamb_th_mhz = 8172.731;
    in.n_level = 1;
    return in;
}

double MinimalLengthBound::delta_x_min_factorized_fm() const {
    return std::sqrt(5.0 / 3.0) * delta_x_min_fm;
}

MinimalLengthBound bound_from_1s2s(double epsilon) {
    if (!(epsilon >= 0.0)) {
        throw std::invalid_argument("bound_from_1s2s: accuracy must be non-negative");
    }
    MinimalLengthBound bound;
    bound.sqrt_3beta_au = 4.0 * epsilon;
    bound.delta_x_min_fm = units::length_au_to_fm(bound.sqrt_3beta_au);
    bound.source = SpectroscopyInput{SpectroscopyKind::one_s_two_s_accuracy, epsilon, 0.0, 0.0, 1};
    bound.formula_tag = BoundFormula::shift_1s2s;
    return bound;
}

MinimalLengthBound bound_from_lamb(const SpectroscopyInput& input) {
    if (input.kind != SpectroscopyKind::lamb_shift) {
        throw std::invalid_argument("bound_from_lamb: input kind must be lamb_shift");
    }
    if (input.n_level < 1) {
        throw std::invalid_argument("bound_from_lamb: n_level must be >= 1");
    }
    const double gap_mhz = input.lamb_exp_mhz - input.lamb_th_mhz;
    if (!(gap_mhz > 0.0)) {
        throw std::domain_error(
            "bound_from_lamb: no bound derivable from a non-positive exp - th gap");
    }
    const double n = input.n_level;
    const double gap_au = units::mhz_to_energy_au(gap_mhz);  // h (L_exp - L_th) in Hartree
    MinimalLengthBound bound;
    bound.sqrt_3beta_au = gap_au * n * n * n;
    bound.delta_x_min_fm = units::length_au_to_fm(bound.sqrt_3beta_au);
    bound.source = input;
    bound.formula_tag = BoundFormula::lamb;
    return bound;
}

double beta_from_minimal_length(double delta_x_fm, LengthConvention convention) {
    if (!(delta_x_fm > 0.0)) {
        throw std::invalid_argument("beta_from_minimal_length: length must be positive");
    }
    const double dx_au = units::fm_to_length_au(delta_x_fm);
    const double divisor = convention == LengthConvention::sqrt_3beta ? 3.0 : 5.0;
    return dx_au * dx_au / divisor;
}

}  // namespace guph::bounds
