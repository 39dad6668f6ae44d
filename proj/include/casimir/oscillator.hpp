#pragma once

#include <string>

#include "casimir/constants.hpp"

namespace casimir {

// One Lorentz-oscillator response evaluated on the imaginary frequency
// axis:  f(i*omega) = 1 + strength^2 / (omega^2 + resonance^2 + damping*omega).
// strength = resonance = damping = 0 is vacuum; resonance = damping = 0 is
// the plasma model; resonance = 0 with damping > 0 is the Drude model.
struct OscillatorModel {
    double strength_freq = 0.0;  // rad/s
    double resonance_freq = 0.0; // rad/s
    double damping = 0.0;        // rad/s

    OscillatorModel() = default;
    OscillatorModel(double strength, double resonance, double damp);

    bool is_vacuum() const { return strength_freq == 0.0; }
    bool is_plasma() const {
        return strength_freq > 0.0 && resonance_freq == 0.0 && damping == 0.0;
    }
    // Plasma wavelength 2*pi*c/strength; only meaningful for strength > 0.
    double plasma_wavelength() const {
        return 2.0 * pi * speed_of_light / strength_freq;
    }
};

// Response on the imaginary axis.  Real and >= 1 for every omega >= 0.
// Throws pole_error for the plasma model at omega = 0, where the response
// diverges; integrands passing through omega = 0 must use their analytic
// limit instead (see the Lifshitz integrand).
double oscillator_response_iw(const OscillatorModel& model, double omega);

double permittivity_iw(const OscillatorModel& model, double omega);
double permeability_iw(const OscillatorModel& model, double omega);

// One plate: electric and magnetic oscillator responses.
struct Mirror {
    OscillatorModel electric;
    OscillatorModel magnetic;
    std::string label = "A";

    bool purely_dielectric() const { return magnetic.is_vacuum(); }
    bool purely_magnetic() const { return electric.is_vacuum(); }
    // True when both responses are of plasma form (or vacuum).
    bool plasma_model() const {
        return electric.resonance_freq == 0.0 && electric.damping == 0.0 &&
               magnetic.resonance_freq == 0.0 && magnetic.damping == 0.0;
    }
};

// Two mirrors facing each other across a vacuum gap.
struct Cavity {
    Mirror mirror_a;
    Mirror mirror_b;
    double separation; // meters, > 0

    Cavity(Mirror a, Mirror b, double L);

    // Dimensionless separation Lambda = omega_eA * L / c.
    double lambda_dimensionless() const {
        return mirror_a.electric.strength_freq * separation / speed_of_light;
    }
    // Omega_x = omega_x * L / c for any frequency of either mirror.
    double dimensionless(double omega) const {
        return omega * separation / speed_of_light;
    }
};

} // namespace casimir
