#include "casimir/oscillator.hpp"

#include <cmath>

#include "casimir/errors.hpp"

namespace casimir {

OscillatorModel::OscillatorModel(double strength, double resonance, double damp)
    : strength_freq(strength), resonance_freq(resonance), damping(damp) {
    if (!(std::isfinite(strength) && strength >= 0.0) ||
        !(std::isfinite(resonance) && resonance >= 0.0) ||
        !(std::isfinite(damp) && damp >= 0.0)) {
        throw precondition_error(
            "OscillatorModel: all frequencies must be finite and >= 0");
    }
}

double oscillator_response_iw(const OscillatorModel& model, double omega) {
    if (!(omega >= 0.0)) {
        throw precondition_error("oscillator_response_iw: omega must be >= 0");
    }
    if (model.strength_freq == 0.0) return 1.0;
    const double denom = omega * omega +
                         model.resonance_freq * model.resonance_freq +
                         model.damping * omega;
    if (denom == 0.0) {
        throw pole_error(
            "oscillator_response_iw: plasma model diverges at omega = 0");
    }
    return 1.0 + model.strength_freq * model.strength_freq / denom;
}

double permittivity_iw(const OscillatorModel& model, double omega) {
    return oscillator_response_iw(model, omega);
}

double permeability_iw(const OscillatorModel& model, double omega) {
    return oscillator_response_iw(model, omega);
}

Cavity::Cavity(Mirror a, Mirror b, double L)
    : mirror_a(std::move(a)), mirror_b(std::move(b)), separation(L) {
    if (!(std::isfinite(L) && L > 0.0)) {
        throw precondition_error("Cavity: separation must be positive");
    }
}

} // namespace casimir
