#include "guph/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace guph::oracles {

RootBracket bracket_root(const std::function<double(double)>& f, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("bracket_root: need lo < hi");
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_lo == 0.0) return RootBracket{lo, lo, 0.0, 0.0};
    if (f_hi == 0.0) return RootBracket{hi, hi, 0.0, 0.0};
    if (f_lo * f_hi < 0.0) return RootBracket{lo, hi, f_lo, f_hi};

    // geometric scan for a sign change
    constexpr int kSegments = 128;
    const double ratio = std::pow(hi / lo, 1.0 / kSegments);
    double a = lo, fa = f_lo;
    for (int i = 1; i <= kSegments; ++i) {
        const double b = (i == kSegments) ? hi : lo * std::pow(ratio, i);
        const double fb = f(b);
        if (fa * fb <= 0.0) return RootBracket{a, b, fa, fb};
        a = b;
        fa = fb;
    }
    throw NumericalError("bracket_root: no sign change in the search interval", 0.5 * (lo + hi),
                         std::min(std::abs(f_lo), std::abs(f_hi)));
}

double solve_k_numeric(int n, double beta) {
    if (n < 1) throw std::invalid_argument("solve_k_numeric: n must be >= 1");
    if (!(beta >= 0.0)) throw std::invalid_argument("solve_k_numeric: beta must be >= 0");

    const auto fn = [n, beta](double k) {
        return spectrum::quantization_lhs(k, beta) - static_cast<double>(n);
    };
    RootBracket br = bracket_root(fn, 1e-6, 10.0 * n);
    if (br.lo == br.hi) return br.lo;

    double lo = br.lo, hi = br.hi, f_lo = br.f_lo;
    for (int i = 0; i < 48; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = fn(mid);
        if (f_mid == 0.0) return mid;
        if (f_lo * f_mid < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }

    // Newton polish on f(k) = 1/(k(1+ks)) - n, f'(k) = -(1+2ks)/(k^2(1+ks)^2)
    const double s = std::sqrt(3.0 * beta);
    double k = 0.5 * (lo + hi);
    double best_k = k;
    double best_f = std::abs(fn(k));
    for (int i = 0; i < 16 && best_f >= 1e-13; ++i) {
        const double fk = fn(k);
        const double w = 1.0 + k * s;
        const double dfk = -(1.0 + 2.0 * k * s) / (k * k * w * w);
        k -= fk / dfk;
        const double fabs_k = std::abs(fn(k));
        if (fabs_k < best_f) {
            best_f = fabs_k;
            best_k = k;
        }
    }
    if (!(best_f < 1e-13)) {
        throw NumericalError("solve_k_numeric: Newton polish stalled above |f| = 1e-13", best_k,
                             best_f);
    }
    return best_k;
}

double ode_residual(const spectrum::BoundState& state, double p, double coulomb_sign) {
    if (!(p > 0.0)) throw std::domain_error("ode_residual: p must be positive");
    const double b = state.beta;
    const double k = state.k;
    const double one3b = 1.0 + 3.0 * b * p * p;
    const double pk = p * p + k * k;

    const std::complex<double> value = spectrum::psi(state, p);
    // analytic logarithmic derivative of the closed-form solution
    const std::complex<double> dlog{
        2.0 * b * p / one3b - 1.0 / p - 2.0 * p / pk,
        2.0 * state.xi * std::sqrt(3.0 * b) / one3b - 2.0 * state.eta * k / pk};
    const std::complex<double> dpsi = dlog * value;

    const std::complex<double> term1 = one3b * pk * dpsi;
    const std::complex<double> coeff{(1.0 + b * p * p) * pk / p + 2.0 * p * one3b,
                                     coulomb_sign * 2.0};
    const std::complex<double> term2 = coeff * value;

    const double scale = std::abs(term1) + std::abs(term2);
    return scale == 0.0 ? 0.0 : std::abs(term1 + term2) / scale;
}

IntegrationReport integrate_ode(const spectrum::BoundState& state, double p0, double p1,
                                int steps) {
    if (!(0.0 < p0 && p0 < p1)) {
        throw std::invalid_argument("integrate_ode: need 0 < p0 < p1");
    }
    if (steps < 16) throw std::invalid_argument("integrate_ode: need at least 16 steps");

    const double b = state.beta;
    const double k = state.k;
    const auto rhs = [b, k](double p, std::complex<double> y) {
        const double one3b = 1.0 + 3.0 * b * p * p;
        const double pk = p * p + k * k;
        const std::complex<double> q{(1.0 + b * p * p) / (p * one3b) + 2.0 * p / pk,
                                     2.0 / (one3b * pk)};
        return -q * y;
    };

    IntegrationReport report;
    report.steps = steps;
    report.p_samples.reserve(steps + 1);
    report.numeric_values.reserve(steps + 1);
    report.analytic_values.reserve(steps + 1);

    const double h = (p1 - p0) / steps;
    std::complex<double> y = spectrum::psi(state, p0);
    report.p_samples.push_back(p0);
    report.numeric_values.push_back(y);
    report.analytic_values.push_back(y);
    report.max_relative_error = 0.0;

    for (int i = 0; i < steps; ++i) {
        const double p = p0 + i * h;
        const std::complex<double> k1 = rhs(p, y);
        const std::complex<double> k2 = rhs(p + 0.5 * h, y + 0.5 * h * k1);
        const std::complex<double> k3 = rhs(p + 0.5 * h, y + 0.5 * h * k2);
        const std::complex<double> k4 = rhs(p + h, y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        const double p_next = (i + 1 == steps) ? p1 : p0 + (i + 1) * h;
        const std::complex<double> exact = spectrum::psi(state, p_next);
        report.p_samples.push_back(p_next);
        report.numeric_values.push_back(y);
        report.analytic_values.push_back(exact);
        report.max_relative_error =
            std::max(report.max_relative_error, std::abs(y - exact) / std::abs(exact));
    }
    return report;
}

namespace {

struct SimpsonPanel {
    double value = 0.0;
    double error = 0.0;
    bool depth_exceeded = false;
};

constexpr int kMaxDepth = 48;

void adapt(const std::function<double(double)>& f, double a, double fa, double b, double fb,
           double m, double fm, double whole, double tol, int depth, SimpsonPanel& out) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;

    if (std::abs(delta) <= 15.0 * tol || depth >= kMaxDepth) {
        out.value += left + right + delta / 15.0;
        out.error += std::abs(delta) / 15.0;
        if (std::abs(delta) > 15.0 * tol) out.depth_exceeded = true;
        return;
    }
    adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1, out);
    adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1, out);
}

}  // namespace

QuadratureResult quadrature(const std::function<double(double)>& f, double lo, double hi,
                            double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("quadrature: tol must be positive");
    if (std::isinf(hi)) {
        // p = lo + t/(1-t) maps t in [0,1) onto [lo, inf); needs decay
        // faster than p^-2 so the transformed integrand vanishes at t = 1
        auto g = [&f, lo](double t) {
            if (t >= 1.0) return 0.0;
            const double u = 1.0 - t;
            return f(lo + t / u) / (u * u);
        };
        return quadrature(g, 0.0, 1.0, tol);
    }
    if (!(lo < hi)) throw std::invalid_argument("quadrature: need lo < hi");

    const double fa = f(lo);
    const double fb = f(hi);
    const double m = 0.5 * (lo + hi);
    const double fm = f(m);
    const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);

    SimpsonPanel panel;
    adapt(f, lo, fa, hi, fb, m, fm, whole, tol, 0, panel);
    if (panel.depth_exceeded) {
        throw NumericalError("quadrature: refinement depth exceeded", panel.value, panel.error);
    }
    return QuadratureResult{panel.value, panel.error};
}

double fitted_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("fitted_loglog_slope: need matching arrays of size >= 2");
    }
    double sx = 0.0, sy = 0.0;
    const int n = static_cast<int>(x.size());
    std::vector<double> lx(n), ly(n);
    for (int i = 0; i < n; ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
            throw std::invalid_argument("fitted_loglog_slope: inputs must be positive");
        }
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / n;
    const double my = sy / n;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    return num / den;
}

}  // namespace guph::oracles
