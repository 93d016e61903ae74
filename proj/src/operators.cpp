#include "guph/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace guph::operators {

namespace {

constexpr std::complex<double> i_hbar{0.0, 1.0};           // i hbar, a.u.
constexpr std::complex<double> i_hbar_sq{-1.0, 0.0};       // (i hbar)^2

void check_beta(double beta) {
    if (!(beta >= 0.0)) throw std::invalid_argument("beta must be non-negative");
}

}  // namespace

double TestFunction::max_derivative_mismatch(const std::vector<double>& points) const {
    double worst = 0.0;
    for (double p : points) {
        const double h = 1e-5 * std::max(1.0, std::abs(p));
        const double fd = (f(p + h) - f(p - h)) / (2.0 * h);
        const double scale = std::max(std::abs(df(p)), 1e-300);
        worst = std::max(worst, std::abs(fd - df(p)) / scale);
    }
    return worst;
}

std::complex<double> RadialOperator::apply(const TestFunction& fn, double p) const {
    double acc = 0.0;
    if (c2) acc += c2(p) * fn.ddf(p);
    if (c1) acc += c1(p) * fn.df(p);
    if (c0) acc += c0(p) * fn.f(p);
    return prefactor * acc;
}

std::complex<double> FirstOrderOperator::apply(const TestFunction& fn, double p) const {
    return prefactor * (a(p) * fn.df(p) + b(p) * fn.f(p));
}

RadialOperator r2_exact(const units::DeformationParams& params) {
    const double bs = params.beta + params.beta_prime;        // b + b'
    const double bd = 2.0 * params.beta + params.beta_prime;  // 2b + b'
    RadialOperator op;
    op.prefactor = i_hbar_sq;
    op.c2 = [bs](double p) {
        const double u = 1.0 + bs * p * p;
        return u * u;
    };
    op.c1 = [bs, bd](double p) {
        return (2.0 / p) * (1.0 + bs * p * p) * (1.0 + bd * p * p);
    };
    op.c0 = [](double) { return 0.0; };
    return op;
}

RadialOperator r2_linearized(double beta) {
    check_beta(beta);
    RadialOperator op;
    op.prefactor = i_hbar_sq;
    op.c2 = [beta](double p) { return 1.0 + 6.0 * beta * p * p; };
    op.c1 = [beta](double p) { return (2.0 / p) * (1.0 + 7.0 * beta * p * p); };
    op.c0 = [](double) { return 0.0; };
    return op;
}

FirstOrderOperator r_hat(double beta) {
    check_beta(beta);
    FirstOrderOperator op;
    op.prefactor = i_hbar;
    op.a = [beta](double p) { return 1.0 + 3.0 * beta * p * p; };
    op.da = [beta](double p) { return 6.0 * beta * p; };
    // (1 + beta p^2)/p written as 1/p + beta p so that b^2 and b' share the
    // same rounded 1/p^2 and the O(beta^0) part of b' + b^2 cancels exactly
    op.b = [beta](double p) { return 1.0 / p + beta * p; };
    op.db = [beta](double p) {
        const double ip = 1.0 / p;
        return beta - ip * ip;
    };
    return op;
}

RadialOperator compose(const FirstOrderOperator& outer, const FirstOrderOperator& inner) {
    if (!inner.da || !inner.db) {
        throw std::invalid_argument(
            "compose: inner operator must carry analytic coefficient derivatives");
    }
    const Coefficient ao = outer.a, bo = outer.b;
    const Coefficient ai = inner.a, bi = inner.b, dai = inner.da, dbi = inner.db;
    RadialOperator op;
    op.prefactor = outer.prefactor * inner.prefactor;
    op.c2 = [ao, ai](double p) { return ao(p) * ai(p); };
    op.c1 = [ao, dai, bi, bo, ai](double p) {
        return ao(p) * dai(p) + ao(p) * bi(p) + bo(p) * ai(p);
    };
    op.c0 = [ao, dbi, bo, bi](double p) { return ao(p) * dbi(p) + bo(p) * bi(p); };
    return op;
}

double factorization_residual(double beta, const TestFunction& fn,
                              const std::vector<double>& grid) {
    check_beta(beta);
    for (double p : grid) {
        if (!(p > 0.0)) throw std::invalid_argument("residual grid points must be positive");
    }
    const RadialOperator composed = compose(r_hat(beta), r_hat(beta));
    const RadialOperator linear = r2_linearized(beta);
    double worst = 0.0;
    for (double p : grid) {
        worst = std::max(worst, std::abs(composed.apply(fn, p) - linear.apply(fn, p)));
    }
    return worst;
}

std::vector<double> log_grid(double lo, double hi, int count) {
    if (!(0.0 < lo && lo < hi) || count < 2) {
        throw std::invalid_argument("log_grid: need 0 < lo < hi and count >= 2");
    }
    std::vector<double> grid(count);
    const double step = std::log(hi / lo) / (count - 1);
    for (int i = 0; i < count; ++i) grid[i] = lo * std::exp(i * step);
    grid.back() = hi;
    return grid;
}

std::vector<double> default_residual_grid() { return log_grid(1e-2, 1e2, 200); }

TestFunction gaussian_test_function() {
    TestFunction fn;
    fn.f = [](double p) { return std::exp(-p * p); };
    fn.df = [](double p) { return -2.0 * p * std::exp(-p * p); };
    fn.ddf = [](double p) { return (4.0 * p * p - 2.0) * std::exp(-p * p); };
    return fn;
}

}  // namespace guph::operators
