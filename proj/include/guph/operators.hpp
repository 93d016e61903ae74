#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "guph/units.hpp"

// Radial momentum-space differential operators for the s-wave problem.
// Coefficients are kept as callables of p with analytic derivatives where
// composition needs them; complex prefactors carry the i hbar factors
// separately so the stored coefficient functions stay real.

namespace guph::operators {

using Coefficient = std::function<double(double)>;

// A smooth probe function with caller-supplied analytic derivatives.
struct TestFunction {
    Coefficient f;
    Coefficient df;
    Coefficient ddf;

    // Worst relative mismatch between df and a central difference of f over
    // the given points; a self-consistency check, not a derivative source.
    double max_derivative_mismatch(const std::vector<double>& points) const;
};

// prefactor * (c2 f'' + c1 f' + c0 f); a null coefficient counts as zero.
struct RadialOperator {
    std::complex<double> prefactor{1.0, 0.0};
    Coefficient c2;
    Coefficient c1;
    Coefficient c0;

    std::complex<double> apply(const TestFunction& fn, double p) const;
};

// prefactor * (a f' + b f), with analytic da, db for exact composition.
struct FirstOrderOperator {
    std::complex<double> prefactor{1.0, 0.0};
    Coefficient a;
    Coefficient da;
    Coefficient b;
    Coefficient db;

    std::complex<double> apply(const TestFunction& fn, double p) const;
};

// Distance squared operator for general (beta, beta'):
// (i hbar)^2 { [1+(b+b')p^2]^2 d^2/dp^2 + (2/p)[1+(b+b')p^2][1+(2b+b')p^2] d/dp }
RadialOperator r2_exact(const units::DeformationParams& params);

// First order in beta with beta' = 2 beta:
// (i hbar)^2 { (1+6 b p^2) d^2/dp^2 + (2/p)(1+7 b p^2) d/dp }
RadialOperator r2_linearized(double beta);

// i hbar [ (1+3 b p^2) d/dp + (1+b p^2)/p ], the square root of r2_linearized
// up to O(beta^2).
FirstOrderOperator r_hat(double beta);

// Exact symbolic composition outer(inner(.)): for coefficient pairs
// (a_o, b_o) and (a_i, b_i) the result is
//   a_o a_i f'' + (a_o a_i' + a_o b_i + b_o a_i) f' + (a_o b_i' + b_o b_i) f
// with prefactors multiplied. Throws if inner lacks analytic derivatives.
RadialOperator compose(const FirstOrderOperator& outer, const FirstOrderOperator& inner);

// max over the grid of |(r_hat(b) o r_hat(b) - r2_linearized(b)) fn|; the
// difference is exactly quadratic in beta.
double factorization_residual(double beta, const TestFunction& fn,
                              const std::vector<double>& grid);

std::vector<double> log_grid(double lo, double hi, int count);

// 200 logarithmically spaced points in [1e-2, 1e2] a.u., spanning both the
// p << 1/sqrt(beta) and p ~ 1/sqrt(beta) regimes for small beta.
std::vector<double> default_residual_grid();

// exp(-p^2) with analytic first and second derivatives.
TestFunction gaussian_test_function();

}  // namespace guph::operators
