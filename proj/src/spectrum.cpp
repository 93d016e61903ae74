#include "guph/spectrum.hpp"

#include <cmath>
#include <limits>

#include "guph/oracles.hpp"

namespace guph::spectrum {

namespace {

void check_n(int n) {
    if (n < 1) throw std::invalid_argument("principal quantum number must be >= 1");
}

void check_beta(double beta) {
    if (!(beta >= 0.0)) throw std::invalid_argument("beta must be non-negative");
}

}  // namespace

XiEta xi_eta(double k, double beta) {
    if (!(k > 0.0)) throw std::domain_error("xi_eta: k must be positive");
    check_beta(beta);
    const double denom = 1.0 - 3.0 * beta * k * k;
    if (denom <= 0.0) {
        throw std::domain_error(
            "xi_eta: k at or beyond the 1 - 3 beta k^2 pole, unphysically large");
    }
    return XiEta{std::sqrt(3.0 * beta) / denom, 1.0 / (k * denom)};
}

double quantization_lhs(double k, double beta) {
    if (!(k > 0.0)) throw std::domain_error("quantization_lhs: k must be positive");
    check_beta(beta);
    return 1.0 / (k * (1.0 + k * std::sqrt(3.0 * beta)));
}

double solve_k_closed_form(int n, double beta) {
    check_n(n);
    check_beta(beta);
    // conjugate form of the positive root of sqrt(3b) k^2 + k - 1/n = 0;
    // exact at beta = 0
    const double s = std::sqrt(3.0 * beta);
    return 2.0 / (n * (1.0 + std::sqrt(1.0 + 4.0 * s / n)));
}

double energy_exact(int n, double beta) {
    check_n(n);
    check_beta(beta);
    // -(1 - sqrt(1+4s/n))^2/(24 b) with (sqrt(1+4s/n) - 1) expanded through
    // its conjugate; removes the beta -> 0 cancellation
    const double s = std::sqrt(3.0 * beta);
    const double root = 1.0 + std::sqrt(1.0 + 4.0 * s / n);
    return -2.0 / (static_cast<double>(n) * n * root * root);
}

double energy_series(int n, double beta) {
    check_n(n);
    check_beta(beta);
    const double nn = n;
    return -(0.5 / (nn * nn) - std::sqrt(3.0 * beta) / (nn * nn * nn) +
             7.5 * beta / (nn * nn * nn * nn));
}

double energy_undeformed(int n) {
    check_n(n);
    return -0.5 / (static_cast<double>(n) * n);
}

double rejected_branch_energy(int n, double beta) {
    check_n(n);
    if (!(beta > 0.0)) {
        throw std::domain_error("rejected branch diverges as beta -> 0; beta must be positive");
    }
    const double root = 1.0 + std::sqrt(1.0 + 4.0 * std::sqrt(3.0 * beta) / n);
    return -root * root / (24.0 * beta);
}

RelativeShift relative_shift_1s2s(double beta) {
    check_beta(beta);
    const double series = -0.75 + 0.25 * std::sqrt(3.0 * beta) - (21.0 / 16.0) * beta;
    const double e1 = energy_exact(1, beta);
    const double e2 = energy_exact(2, beta);
    return RelativeShift{series, (e2 - e1) / e1};
}

BoundState make_bound_state(int n, double beta) {
    const double k = solve_k_closed_form(n, beta);
    if (!(1.0 - 3.0 * beta * k * k > 0.0)) {
        throw std::domain_error("make_bound_state: state beyond the 1 - 3 beta k^2 pole");
    }
    const XiEta xe = xi_eta(k, beta);
    return BoundState{n, beta, k, energy_exact(n, beta), xe.xi, xe.eta, 0.0};
}

BoundState state_from_k(double k, double beta) {
    const XiEta xe = xi_eta(k, beta);
    const int n = static_cast<int>(std::lround(xe.eta - xe.xi));
    return BoundState{n, beta, k, -0.5 * k * k, xe.xi, xe.eta, 0.0};
}

std::complex<double> psi(const BoundState& state, double p) {
    if (!(p > 0.0)) throw std::domain_error("psi: p must be positive, 1/p singularity at 0");
    const double amp = state.norm_A > 0.0 ? state.norm_A : 1.0;
    const double one3b = 1.0 + 3.0 * state.beta * p * p;
    const double modulus = amp * std::cbrt(one3b) / (p * (p * p + state.k * state.k));
    const double phase = 2.0 * state.xi * std::atan(p * std::sqrt(3.0 * state.beta)) -
                         2.0 * state.eta * std::atan(p / state.k);
    return std::polar(modulus, phase);
}

double single_valuedness_defect(const BoundState& state) {
    const XiEta xe = xi_eta(state.k, state.beta);
    const double diff = xe.eta - xe.xi;
    return std::abs(diff - std::round(diff));
}

BoundState normalize(const BoundState& state, Measure measure, double tol) {
    const double b = state.beta;
    const double k = state.k;
    // |psi|^2 p^2 = A^2 (1+3b p^2)^{2/3} / (p^2+k^2)^2; decays as p^{-8/3}
    auto integrand = [b, k, measure](double p) {
        const double one3b = 1.0 + 3.0 * b * p * p;
        const double kk = p * p + k * k;
        const double base = std::pow(one3b, 2.0 / 3.0) / (kk * kk);
        return measure == Measure::deformed ? base / one3b : base;
    };
    const oracles::QuadratureResult q =
        oracles::quadrature(integrand, 0.0, std::numeric_limits<double>::infinity(), tol);
    BoundState out = state;
    out.norm_A = 1.0 / std::sqrt(q.value);
    return out;
}

WavefunctionSample sample_wavefunction(const BoundState& state, double p) {
    const std::complex<double> value = psi(state, p);
    return WavefunctionSample{p, value, std::norm(value) * p * p};
}

}  // namespace guph::spectrum
