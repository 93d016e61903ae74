#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "guph/operators.hpp"
#include "guph/oracles.hpp"
#include "guph/spectrum.hpp"

using namespace guph::oracles;
using guph::spectrum::make_bound_state;

TEST_CASE("bracket_root finds sign changes and reports hopeless intervals") {
    const auto f = [](double x) { return x * x - 2.0; };
    const auto br = bracket_root(f, 0.1, 10.0);
    CHECK(br.lo < std::sqrt(2.0));
    CHECK(br.hi > std::sqrt(2.0));
    CHECK(br.f_lo * br.f_hi < 0.0);

    const auto positive = [](double x) { return x * x + 1.0; };
    CHECK_THROWS_AS(bracket_root(positive, 0.1, 10.0), NumericalError);
}

TEST_CASE("numeric quantization root agrees with the closed form") {
    CHECK(std::abs(solve_k_numeric(1, 0.0) - 1.0) <= 1e-13);

    for (int n = 1; n <= 10; ++n) {
        for (double b : {0.0, 1e-8, 1e-6, 1e-4}) {
            const double numeric = solve_k_numeric(n, b);
            const double closed = guph::spectrum::solve_k_closed_form(n, b);
            CHECK(std::abs(numeric - closed) / closed <= 1e-11);
        }
    }

    const double k5 = solve_k_numeric(5, 1e-4);
    CHECK(std::abs(guph::spectrum::quantization_lhs(k5, 1e-4) - 5.0) <= 1e-12);
}

TEST_CASE("closed-form wavefunction satisfies the radial equation pointwise") {
    const auto grid = guph::operators::log_grid(5e-2, 20.0, 200);

    const auto deformed = make_bound_state(1, 1e-6);
    for (double p : grid) CHECK(ode_residual(deformed, p) <= 1e-10);

    const auto ground = make_bound_state(1, 0.0);
    CHECK(ode_residual(ground, 1.0) <= 1e-12);

    // the closed form solves the equation for any k; quantization enters
    // through single-valuedness, not through the equation itself
    const auto off_shell = guph::spectrum::state_from_k(1.1, 0.0);
    for (double p : grid) CHECK(ode_residual(off_shell, p) <= 1e-10);
    CHECK(guph::spectrum::single_valuedness_defect(off_shell) > 1e-2);

    // negative control: a flipped Coulomb term must be detected
    double worst = 0.0;
    for (double p : grid) worst = std::max(worst, ode_residual(deformed, p, -1.0));
    CHECK(worst > 1e-3);
}

TEST_CASE("ode residual across the full state matrix") {
    const auto grid = guph::operators::log_grid(1e-2, 1e2, 500);
    for (int n = 1; n <= 3; ++n) {
        for (double b : {0.0, 1e-8, 1e-6, 1e-4}) {
            const auto state = make_bound_state(n, b);
            double worst = 0.0;
            for (double p : grid) worst = std::max(worst, ode_residual(state, p));
            CHECK(worst <= 1e-10);
        }
    }
}

TEST_CASE("RK4 integration matches the closed form") {
    const auto ground = make_bound_state(1, 0.0);
    const auto report = integrate_ode(ground, 0.1, 2.0, 10000);
    CHECK(report.max_relative_error <= 1e-8);
    CHECK(report.p_samples.size() == 10001);
    CHECK(report.numeric_values.size() == report.analytic_values.size());
    CHECK(report.steps == 10000);

    const auto excited = make_bound_state(2, 1e-6);
    CHECK(integrate_ode(excited, 0.05, 5.0, 20000).max_relative_error <= 1e-7);
}

TEST_CASE("RK4 error decreases with the classical fourth-order rate") {
    const auto ground = make_bound_state(1, 0.0);
    std::vector<double> steps, errors;
    for (int s : {250, 500, 1000}) {
        steps.push_back(s);
        errors.push_back(integrate_ode(ground, 0.1, 2.0, s).max_relative_error);
    }
    // halving h cuts the error by ~16
    CHECK(errors[0] / errors[1] == doctest::Approx(16.0).epsilon(0.3));
    const double order = -fitted_loglog_slope(steps, errors);
    CHECK(order > 3.8);
    CHECK(order < 4.2);
}

TEST_CASE("RK4 input validation") {
    const auto ground = make_bound_state(1, 0.0);
    CHECK_THROWS_AS(integrate_ode(ground, 0.1, 2.0, 15), std::invalid_argument);
    CHECK_THROWS_AS(integrate_ode(ground, 0.0, 2.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(integrate_ode(ground, 2.0, 0.1, 100), std::invalid_argument);
}

TEST_CASE("adaptive quadrature reference integrals") {
    const auto lorentz_sq = [](double p) { return 1.0 / ((p * p + 1.0) * (p * p + 1.0)); };
    const auto q = quadrature(lorentz_sq, 0.0, std::numeric_limits<double>::infinity(), 1e-12);
    CHECK(std::abs(q.value - std::numbers::pi / 4.0) <= 1e-10);
    CHECK(q.error_estimate >= 0.0);

    const auto cubic_exact = quadrature([](double p) { return p * p; }, 0.0, 1.0, 1e-12);
    CHECK(cubic_exact.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    // normalized ground-state density integrates to one
    const double amp = 2.0 / std::sqrt(std::numbers::pi);
    const auto density = [amp](double p) {
        const double kk = p * p + 1.0;
        return amp * amp / (kk * kk);
    };
    const auto total = quadrature(density, 0.0, std::numeric_limits<double>::infinity(), 1e-10);
    CHECK(total.value == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("quadrature failure carries its best estimate") {
    // a spike of width 1e-15 cannot be resolved within the depth limit
    const auto spike = [](double x) { return 1.0 / (x * x + 1e-30); };
    try {
        quadrature(spike, -1.0, 1.0, 1e-10);
        FAIL("expected NumericalError");
    } catch (const NumericalError& e) {
        CHECK(e.best_estimate() > 0.0);
        CHECK(e.achieved_tolerance() > 1e-10);
    }
    CHECK_THROWS_AS(quadrature([](double) { return 1.0; }, 0.0, 1.0, -1e-9),
                    std::invalid_argument);
    CHECK_THROWS_AS(quadrature([](double) { return 1.0; }, 1.0, 0.0, 1e-9),
                    std::invalid_argument);
}

TEST_CASE("log-log slope fit recovers exact power laws") {
    std::vector<double> x{1e-4, 1e-3, 1e-2};
    std::vector<double> y;
    for (double v : x) y.push_back(3.7 * std::pow(v, 2.5));
    CHECK(fitted_loglog_slope(x, y) == doctest::Approx(2.5).epsilon(1e-12));

    CHECK_THROWS_AS(fitted_loglog_slope({1.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(fitted_loglog_slope({1.0, -1.0}, {1.0, 1.0}), std::invalid_argument);
}
