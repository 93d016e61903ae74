#pragma once

#include <string>
#include <vector>

namespace guph::cli {

struct CheckResult {
    std::string name;
    double measured;
    double tolerance;
    bool pass;
};

struct VerifyOptions {
    double beta = 1e-6;               // extra deformation added to the state matrix
    bool negate_ode_coulomb = false;  // flips the Coulomb term sign; negative control
};

// The full cross-validation suite: factorization scaling and coefficient
// identity, ODE residuals of the closed-form states, RK4 agreement and
// convergence order, root-finder agreement, series convergence,
// single-valuedness on and off shell, normalization and quadrature
// reference values, series-vs-exact level shift.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace guph::cli
