#include "guph/units.hpp"

namespace guph::units {

namespace {

void check_nonneg(double beta, double beta_prime) {
    if (!(beta >= 0.0) || !(beta_prime >= 0.0)) {
        throw std::invalid_argument("deformation parameters must be non-negative");
    }
}

}  // namespace

DeformationParams DeformationParams::factorized(double beta) {
    check_nonneg(beta, beta);
    return DeformationParams{beta, 2.0 * beta};
}

DeformationParams DeformationParams::general(double beta, double beta_prime) {
    check_nonneg(beta, beta_prime);
    return DeformationParams{beta, beta_prime};
}

double factorized_beta(const DeformationParams& params) {
    if (!params.factorizable()) {
        throw std::invalid_argument(
            "closed-form solver requires beta' = 2 beta exactly");
    }
    return params.beta;
}

MinimalLength minimal_length(const DeformationParams& params) {
    const double au = constants.hbar_au * std::sqrt(3.0 * params.beta + params.beta_prime);
    return MinimalLength{au, length_au_to_fm(au)};
}

RepresentationSpec representation(Representation name, const DeformationParams& params) {
    RepresentationSpec spec{};
    spec.name = name;
    spec.gamma = 0.0;
    switch (name) {
        case Representation::brau:
            // X_i = x_i, P_i = p_i (1 + beta p^2); valid for beta' = 2 beta
            spec.momentum_c0 = 1.0;
            spec.momentum_c2 = params.beta;
            break;
        case Representation::akhoury_yao:
            // X_i = (1 + beta p^2) x_i + beta' p_i p_j x_j + gamma p_i, P_i = p_i
            spec.left_x_p2 = params.beta;
            spec.proj_pp_x = params.beta_prime;
            spec.momentum_c0 = 1.0;
            spec.momentum_c2 = 0.0;
            break;
        case Representation::stetsko_tkachuk:
            // X_i = x_i + (2 beta - beta')/4 (p^2 x_i + x_i p^2),
            // P_i = p_i (1 + beta'/2 p^2); reduces to brau at beta' = 2 beta
            spec.sym_x_p2 = (2.0 * params.beta - params.beta_prime) / 4.0;
            spec.momentum_c0 = 1.0;
            spec.momentum_c2 = params.beta_prime / 2.0;
            break;
    }
    return spec;
}

double momentum_rep_coefficient(const RepresentationSpec& spec, double p) {
    return p * (spec.momentum_c0 + spec.momentum_c2 * p * p);
}

}  // namespace guph::units
