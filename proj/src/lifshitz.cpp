#include "casimir/lifshitz.hpp"

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"
#include "dimensionless.hpp"

namespace casimir {

namespace {

constexpr double pi4 = pi * pi * pi * pi;

// After the variable change (kappa, omega) -> (omega, k) with
// kappa dkappa = k dk, the force reduction factor becomes
//   eta_F = (120/pi^4) sum_pol II K kappa~ r_A r_B t / (1 - r_A r_B t)
// and the energy reduction factor
//   eta_E = -(180/pi^4) sum_pol II K log(1 - r_A r_B t)
// with t = exp(-2 kappa~), kappa~ = sqrt(W^2 + K^2), integrated over the
// quarter plane W, K > 0 in units of c/L and 1/L.
struct EtaIntegral {
    double value;
    double abs_error;
};

template <bool Force>
EtaIntegral eta_integral(const detail::DimMirror& ma,
                         const detail::DimMirror& mb, Polarization pol,
                         const QuadratureSpec& spec) {
    // Budget in eta units for this polarization.
    const double scale = Force ? 120.0 / pi4 : 180.0 / pi4;
    const double abs_target = 0.5 * spec.abs_tol / scale;

    QuadratureOptions outer;
    outer.rel_tol = spec.rel_tol;
    outer.abs_tol = abs_target;
    outer.max_subdivisions = spec.max_subdivisions;

    QuadratureOptions inner;
    inner.rel_tol = 0.05 * spec.rel_tol;
    inner.abs_tol = 0.05 * abs_target;
    inner.max_subdivisions = spec.max_subdivisions;

    auto outer_integrand = [&](double w) {
        const double W = std::max(w, detail::w_floor);
        const detail::MirrorResponse ra = detail::mirror_at(ma, W);
        const detail::MirrorResponse rb = detail::mirror_at(mb, W);
        const bool tm = pol == Polarization::TM;
        auto inner_integrand = [&](double K) {
            const double kap = std::hypot(W, K);
            const double rr = tm
                ? detail::reflection_tm(ra, kap) * detail::reflection_tm(rb, kap)
                : detail::reflection_te(ra, kap) * detail::reflection_te(rb, kap);
            const double t = std::exp(-2.0 * kap);
            const double rrt = rr * t;
            if (rrt == 0.0) return 0.0;
            if constexpr (Force) {
                return K * kap * rrt / (1.0 - rrt);
            } else {
                return K * std::log1p(-rrt);
            }
        };
        return integrate_adaptive(inner_integrand, 0.0,
                                  std::numeric_limits<double>::infinity(), inner)
            .value;
    };

    const IntegrationResult res = integrate_adaptive(
        outer_integrand, 0.0, std::numeric_limits<double>::infinity(), outer);
    // Inner passes run at 5% of the outer budget; fold that into the
    // reported estimate.
    const double err =
        res.abs_error + 0.05 * std::max(abs_target, spec.rel_tol * std::abs(res.value));
    return {res.value, err};
}

} // namespace

double ideal_casimir_force(double L) {
    if (!(L > 0.0)) throw precondition_error("ideal_casimir_force: L must be > 0");
    const double L2 = L * L;
    return -hbar * speed_of_light * pi * pi / (240.0 * L2 * L2);
}

double ideal_casimir_energy(double L) {
    if (!(L > 0.0)) throw precondition_error("ideal_casimir_energy: L must be > 0");
    return -hbar * speed_of_light * pi * pi / (720.0 * L * L * L);
}

ForceReport casimir_force(const Cavity& cavity, const QuadratureSpec& spec) {
    const double scale = cavity.separation / speed_of_light;
    const detail::DimMirror ma = detail::make_dim_mirror(cavity.mirror_a, scale);
    const detail::DimMirror mb = detail::make_dim_mirror(cavity.mirror_b, scale);

    const double fc = ideal_casimir_force(cavity.separation);
    const double ec = ideal_casimir_energy(cavity.separation);

    ForceReport rep;
    double eta_err = 0.0;
    for (Polarization pol : {Polarization::TM, Polarization::TE}) {
        const EtaIntegral part = eta_integral<true>(ma, mb, pol, spec);
        const double eta_part = 120.0 / pi4 * part.value;
        eta_err += 120.0 / pi4 * part.abs_error;
        (pol == Polarization::TM ? rep.force_tm : rep.force_te) = eta_part * fc;
        rep.eta_force += eta_part;
    }
    rep.force_per_area = rep.eta_force * fc;
    rep.abs_error_estimate = eta_err * std::abs(fc);

    for (Polarization pol : {Polarization::TM, Polarization::TE}) {
        const EtaIntegral part = eta_integral<false>(ma, mb, pol, spec);
        rep.eta_energy += -180.0 / pi4 * part.value;
    }
    rep.energy_per_area = rep.eta_energy * ec;
    return rep;
}

double casimir_energy(const Cavity& cavity, const QuadratureSpec& spec) {
    const double scale = cavity.separation / speed_of_light;
    const detail::DimMirror ma = detail::make_dim_mirror(cavity.mirror_a, scale);
    const detail::DimMirror mb = detail::make_dim_mirror(cavity.mirror_b, scale);

    double eta = 0.0;
    for (Polarization pol : {Polarization::TM, Polarization::TE}) {
        const EtaIntegral part = eta_integral<false>(ma, mb, pol, spec);
        eta += -180.0 / pi4 * part.value;
    }
    return eta * ideal_casimir_energy(cavity.separation);
}

} // namespace casimir
