#pragma once

#include "casimir/fresnel.hpp"
#include "casimir/oscillator.hpp"

namespace casimir {

// Tolerances for the double quadrature.  abs_tol is expressed relative to
// the ideal Casimir magnitude of the requested quantity, so the effective
// absolute tolerance on the force is abs_tol * |F_C(L)| and likewise for
// the energy.  max_subdivisions applies to each adaptive pass.
struct QuadratureSpec {
    double rel_tol = 1e-6;
    double abs_tol = 1e-12;
    int max_subdivisions = 4000;
};

struct ForceReport {
    double force_per_area = 0.0;  // N/m^2, negative = attraction
    double energy_per_area = 0.0; // J/m^2
    double eta_force = 0.0;       // F / F_C(L)
    double eta_energy = 0.0;      // E / E_C(L)
    double abs_error_estimate = 0.0; // N/m^2, on the force
    double force_tm = 0.0;
    double force_te = 0.0;

    double force_for(Polarization pol) const {
        return pol == Polarization::TM ? force_tm : force_te;
    }
};

// Ideal (perfect-mirror) values: F_C = -hbar c pi^2 / (240 L^4),
// E_C = -hbar c pi^2 / (720 L^3).
double ideal_casimir_force(double L);
double ideal_casimir_energy(double L);

// Exact Casimir force and energy per unit area between the two mirrors,
// by nested adaptive quadrature of the imaginary-frequency integral.
// Throws non_convergence when the subdivision budget runs out.
ForceReport casimir_force(const Cavity& cavity, const QuadratureSpec& spec = {});

// Energy per unit area alone (the log-form antiderivative whose
// L-derivative reproduces the force integral exactly).
double casimir_energy(const Cavity& cavity, const QuadratureSpec& spec = {});

} // namespace casimir
