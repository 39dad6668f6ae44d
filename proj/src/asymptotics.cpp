#include "casimir/asymptotics.hpp"

#include <cmath>
#include <limits>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/roots.hpp"
#include "casimir/series.hpp"

namespace casimir {

namespace {

constexpr double pi2 = pi * pi;
constexpr double pi4 = pi2 * pi2;

void require_dielectric_dominated(const Mirror& m) {
    if (m.electric.strength_freq <= 0.0) {
        throw precondition_error(
            "short-distance TM asymptote needs a nonzero electric response on "
            "mirror " + m.label);
    }
}

// Inner sum of the short-distance double series:
//   G_k = sum_n Gamma(n+k) Gamma(2n-1/2) / (Gamma(n) Gamma(2n+k) n^3) y^n
// evaluated by term recurrence.  Terms decay like y^n n^{-7/2}, so the
// tail is certified with both a geometric and a power-law bound.
double series_g(int k, double y, const SeriesSpec& spec) {
    if (y == 0.0) return 0.0;
    const double sqrt_pi = std::sqrt(pi);
    double term = 0.5 * sqrt_pi * y / (k + 1.0); // n = 1
    double sum = 0.0;
    for (long n = 1; n <= spec.max_terms_n; ++n) {
        sum += term;
        const double dn = static_cast<double>(n);
        const double ratio = y * ((dn + k) / dn) *
                             ((2.0 * dn - 0.5) * (2.0 * dn + 0.5)) /
                             ((2.0 * dn + k) * (2.0 * dn + k + 1.0)) *
                             std::pow(dn / (dn + 1.0), 3);
        term *= ratio;
        const double geo = ratio < 1.0
                               ? std::abs(term) * ratio / (1.0 - ratio)
                               : std::numeric_limits<double>::infinity();
        const double power = std::abs(term) * dn;
        if (std::min(geo, power) <= spec.tail_tol * std::max(std::abs(sum), 1e-300)) {
            return sum + term;
        }
    }
    throw non_convergence("short_distance_force_series: n-sum budget exhausted");
}

} // namespace

ShortDistanceParams ShortDistanceParams::from_mirror(const Mirror& m) {
    const double we2 = m.electric.strength_freq * m.electric.strength_freq;
    const double w02 = m.electric.resonance_freq * m.electric.resonance_freq;
    if (we2 <= 0.0) {
        throw precondition_error(
            "ShortDistanceParams: mirror has no electric response");
    }
    return {std::sqrt(0.5 * we2), std::sqrt(0.5 * we2 + w02)};
}

double hamaker_constant(const Mirror& mirror_a, const Mirror& mirror_b,
                        const SeriesSpec& spec) {
    require_dielectric_dominated(mirror_a);
    require_dielectric_dominated(mirror_b);
    const ShortDistanceParams pa = ShortDistanceParams::from_mirror(mirror_a);
    const ShortDistanceParams pb = ShortDistanceParams::from_mirror(mirror_b);

    const double scale = std::max(pa.omega2, pb.omega2);
    const double a1 = pa.omega1 / scale, a2 = pa.omega2 / scale;
    const double b1 = pb.omega1 / scale, b2 = pb.omega2 / scale;

    // -r_A * -r_B on the imaginary axis, in scaled frequency x.
    auto rr = [&](double x) {
        const double x2 = x * x;
        return (a1 * a1 / (x2 + a2 * a2)) * (b1 * b1 / (x2 + b2 * b2));
    };
    QuadratureOptions opt;
    opt.rel_tol = std::max(spec.tail_tol, 1e-13);
    opt.abs_tol = 1e-300;
    const IntegrationResult integral = integrate_adaptive(
        [&](double x) { return polylog3(rr(x)); }, 0.0,
        std::numeric_limits<double>::infinity(), opt);

    return 3.0 * hbar / (8.0 * pi2) * scale * integral.value;
}

double short_distance_force_series(const Mirror& mirror_a,
                                   const Mirror& mirror_b, double L,
                                   const SeriesSpec& spec) {
    if (!(L > 0.0)) {
        throw precondition_error("short_distance_force_series: L must be > 0");
    }
    require_dielectric_dominated(mirror_a);
    require_dielectric_dominated(mirror_b);
    const ShortDistanceParams pa = ShortDistanceParams::from_mirror(mirror_a);
    const ShortDistanceParams pb = ShortDistanceParams::from_mirror(mirror_b);

    const double x = 1.0 - (pb.omega2 * pb.omega2) / (pa.omega2 * pa.omega2);
    if (!(x >= 0.0 && x < 1.0)) {
        throw series_divergence(
            "short_distance_force_series: expansion parameter outside [0,1); "
            "label the mirrors so that Omega2_B <= Omega2_A");
    }
    const double y_root = (pa.omega1 / pa.omega2) * (pb.omega1 / pb.omega2);
    const double y = y_root * y_root;

    double coeff = std::sqrt(pi); // Gamma(k + 1/2) / k!
    double xk = 1.0;              // x^k
    double sum = 0.0;
    int small_streak = 0;
    for (int k = 0; k <= spec.max_terms_k; ++k) {
        const double term = coeff * series_g(k, y, spec) * xk;
        sum += term;
        if (std::abs(term) < spec.tail_tol * std::abs(sum)) {
            if (++small_streak >= 2) break;
        } else {
            small_streak = 0;
        }
        if (x == 0.0) break;
        coeff *= (k + 0.5) / (k + 1.0);
        xk *= x;
        if (k == spec.max_terms_k) {
            throw non_convergence(
                "short_distance_force_series: k-sum budget exhausted");
        }
    }
    return -hbar * pb.omega2 / (16.0 * pi2 * L * L * L) * sum;
}

double boyer_short_tm_force(double omega_mA, double omega_eB, double L) {
    if (!(omega_mA >= 0.0 && omega_eB >= 0.0 && L > 0.0)) {
        throw precondition_error("boyer_short_tm_force: bad arguments");
    }
    const double c2 = speed_of_light * speed_of_light;
    const double a2 = omega_mA * omega_mA * L * L / (8.0 * c2);
    QuadratureOptions opt;
    opt.rel_tol = 1e-12;
    const IntegrationResult integral = integrate_adaptive(
        [&](double k) {
            const double e = std::exp(-2.0 * k);
            return k * e / std::sqrt(k * k + a2 * e);
        },
        0.0, std::numeric_limits<double>::infinity(), opt);
    return std::sqrt(2.0) * hbar * omega_mA * omega_mA * omega_eB /
           (32.0 * pi * c2 * L) * integral.value;
}

double boyer_short_distance_force(double omega_mA, double omega_eB, double L) {
    if (!(omega_mA >= 0.0 && omega_eB >= 0.0 && L > 0.0)) {
        throw precondition_error("boyer_short_distance_force: bad arguments");
    }
    const double c2 = speed_of_light * speed_of_light;
    return std::sqrt(2.0) / 64.0 * hbar / (pi * c2) *
           (omega_eB * omega_eB * omega_mA + omega_mA * omega_mA * omega_eB) / L;
}

double long_distance_eta_magnetodielectric(double alpha) {
    if (!(alpha > 0.0)) {
        throw precondition_error(
            "long_distance_eta_magnetodielectric: alpha must be > 0");
    }
    QuadratureOptions opt;
    opt.rel_tol = 1e-11;
    opt.abs_tol = 1e-13;
    const IntegrationResult i1 = integrate_adaptive(
        [](double om) { return polylog4((om - 1.0) / (om + 1.0)); }, 0.0,
        1.0 / alpha, opt);
    const IntegrationResult i2 = integrate_adaptive(
        [](double om) { return polylog4((1.0 - om) / (1.0 + om)); }, 0.0,
        alpha, opt);
    return 180.0 / pi4 * (3.0 / 8.0) * (alpha * i1.value + i2.value / alpha);
}

double repulsion_threshold() {
    const double lo = 1.0, hi = 1.1;
    const double eta_lo = long_distance_eta_magnetodielectric(lo);
    const double eta_hi = long_distance_eta_magnetodielectric(hi);
    if (!(eta_lo > 0.0 && eta_hi < 0.0)) {
        throw error("repulsion_threshold: bracketing failure on [1, 1.1]");
    }
    const RootResult root = find_root_bisect(
        [](double a) { return long_distance_eta_magnetodielectric(a); }, lo, hi,
        1e-6);
    // One verification evaluation at the returned point.
    const double check = long_distance_eta_magnetodielectric(root.root);
    if (std::abs(check) > 1e-4) {
        throw error("repulsion_threshold: verification residual too large");
    }
    return root.root;
}

double long_distance_eta_dielectric(double lambda_eA, double lambda_eB,
                                    double L) {
    if (!(lambda_eA >= 0.0 && lambda_eB >= 0.0 && L > 0.0)) {
        throw precondition_error("long_distance_eta_dielectric: bad arguments");
    }
    if (L <= 5.0 * std::max(lambda_eA, lambda_eB)) {
        throw out_of_regime(
            "long_distance_eta_dielectric: requires L > 5 max(lambda)");
    }
    return 1.0 - 4.0 / (3.0 * pi) * (lambda_eA + lambda_eB) / L;
}

double boyer_long_distance_eta(double lambda_eA, double lambda_mB, double L) {
    if (!(lambda_eA >= 0.0 && lambda_mB >= 0.0 && L > 0.0)) {
        throw precondition_error("boyer_long_distance_eta: bad arguments");
    }
    if (L <= 5.0 * std::max(lambda_eA, lambda_mB)) {
        throw out_of_regime(
            "boyer_long_distance_eta: requires L > 5 max(lambda)");
    }
    return -7.0 / 8.0 + 7.0 / (6.0 * pi) * (lambda_eA + lambda_mB) / L;
}

} // namespace casimir
