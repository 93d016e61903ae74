#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "guph/spectrum.hpp"

// Independent numerical machinery that validates the closed forms: bracketed
// root finding for the quantization condition, complex RK4 integration of the
// radial equation, pointwise ODE residuals, and adaptive quadrature.

namespace guph::oracles {

class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double best_estimate, double achieved_tolerance)
        : std::runtime_error(what), best_estimate_(best_estimate),
          achieved_tolerance_(achieved_tolerance) {}

    double best_estimate() const { return best_estimate_; }
    double achieved_tolerance() const { return achieved_tolerance_; }

private:
    double best_estimate_;
    double achieved_tolerance_;
};

struct RootBracket {
    double lo;
    double hi;
    double f_lo;
    double f_hi;
};

// Finds a sign change of f in [lo, hi], subdividing geometrically if the
// endpoints do not already bracket. Throws NumericalError if none is found.
RootBracket bracket_root(const std::function<double(double)>& f, double lo, double hi);

// Root of quantization_lhs(k, beta) - n by bisection plus a Newton polish to
// |f| < 1e-13; brackets in [1e-6, 10 n].
double solve_k_numeric(int n, double beta);

// Relative residual |LHS| / (|term1| + |term2|) of the radial equation
//   (1+3 b p^2)(p^2+k^2) psi'
//   + { (1/p)(1+b p^2)(p^2+k^2) + 2p(1+3 b p^2) + 2 i alpha m/hbar } psi = 0
// with psi' taken from the analytic logarithmic derivative of the closed
// form. coulomb_sign scales the imaginary 2 i alpha m/hbar term and exists
// only as a fault-injection knob for negative controls; physical value +1.
double ode_residual(const spectrum::BoundState& state, double p, double coulomb_sign = 1.0);

struct IntegrationReport {
    std::vector<double> p_samples;
    std::vector<std::complex<double>> numeric_values;
    std::vector<std::complex<double>> analytic_values;
    double max_relative_error;
    int steps;
};

// Fixed-step RK4 on psi' = -Q(p) psi from the analytic initial value at p0,
// compared against the closed form on the step grid. Fixed steps keep the
// grids reproducible; requires steps >= 16.
IntegrationReport integrate_ode(const spectrum::BoundState& state, double p0, double p1,
                                int steps);

struct QuadratureResult {
    double value;
    double error_estimate;  // accumulated accepted panel estimates
};

// Adaptive Simpson refinement until the local error estimate is below tol.
// An infinite hi is mapped through p = lo + t/(1-t); the integrand must then
// decay faster than p^-2. Exceeding the refinement depth throws
// NumericalError carrying the best estimate.
QuadratureResult quadrature(const std::function<double(double)>& f, double lo, double hi,
                            double tol);

// Least-squares slope of log y against log x; inputs must be positive.
double fitted_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace guph::oracles
