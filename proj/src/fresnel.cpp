#include "casimir/fresnel.hpp"

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

double reflection(const Mirror& mirror, Polarization pol,
                  const WaveKinematics& kin) {
    if (!(kin.omega >= 0.0)) {
        throw precondition_error("reflection: omega must be >= 0");
    }
    const double wc = kin.omega / speed_of_light;
    if (kin.kappa < wc * (1.0 - 1e-12)) {
        throw invalid_kinematics("reflection: kappa < omega/c");
    }
    const double eps = permittivity_iw(mirror.electric, kin.omega);
    const double mu = permeability_iw(mirror.magnetic, kin.omega);
    const double ki =
        std::sqrt(wc * wc * (eps * mu - 1.0) + kin.kappa * kin.kappa);
    if (pol == Polarization::TM) {
        return (ki - eps * kin.kappa) / (ki + eps * kin.kappa);
    }
    return -(ki - mu * kin.kappa) / (ki + mu * kin.kappa);
}

double reflection_short_distance(const Mirror& mirror, Polarization pol,
                                 double omega) {
    if (!(omega >= 0.0)) {
        throw precondition_error("reflection_short_distance: omega must be >= 0");
    }
    const OscillatorModel& osc =
        pol == Polarization::TM ? mirror.electric : mirror.magnetic;
    if (osc.strength_freq == 0.0) return 0.0;
    const double s2 = osc.strength_freq * osc.strength_freq;
    const double denom = 2.0 * (omega * omega +
                                osc.resonance_freq * osc.resonance_freq +
                                osc.damping * omega) +
                         s2;
    const double r = s2 / denom;
    return pol == Polarization::TM ? -r : r;
}

double reflection_subleading(const Mirror& mirror, Polarization pol,
                             double omega, double k) {
    if (!(omega >= 0.0) || !(k > 0.0)) {
        throw precondition_error(
            "reflection_subleading: requires omega >= 0 and k > 0");
    }
    const bool tm = pol == Polarization::TM;
    if (tm && !mirror.purely_magnetic()) {
        throw precondition_error(
            "reflection_subleading: TM term applies only to a purely magnetic "
            "mirror (eps == 1)");
    }
    if (!tm && !mirror.purely_dielectric()) {
        throw precondition_error(
            "reflection_subleading: TE term applies only to a purely dielectric "
            "mirror (mu == 1)");
    }
    const OscillatorModel& osc = tm ? mirror.magnetic : mirror.electric;
    if (osc.strength_freq == 0.0) return 0.0;
    const double denom = omega * omega +
                         osc.resonance_freq * osc.resonance_freq +
                         osc.damping * omega;
    // omega^2 / (omega^2 + w0^2 + G*omega): 1 in the plasma limit at
    // omega = 0, 0 otherwise.
    double ratio;
    if (denom == 0.0) {
        ratio = 1.0;
    } else {
        ratio = omega * omega / denom;
    }
    const double c2 = speed_of_light * speed_of_light;
    const double r =
        osc.strength_freq * osc.strength_freq / (4.0 * c2 * k * k) * ratio;
    return tm ? r : -r;
}

} // namespace casimir
