#pragma once

#include "casimir/oscillator.hpp"

namespace casimir {

enum class Polarization { TE, TM };

// Imaginary-axis kinematics: omega is the imaginary frequency (rad/s) and
// kappa the vacuum longitudinal wavevector (1/m).  The transverse
// wavevector is k^2 = kappa^2 - omega^2/c^2 >= 0, so kappa >= omega/c.
struct WaveKinematics {
    double omega;
    double kappa;
};

// Reflection coefficient of one mirror at imaginary frequency:
//   r_TM = (kappa_i - eps*kappa) / (kappa_i + eps*kappa)
//   r_TE = -(kappa_i - mu*kappa) / (kappa_i + mu*kappa)
// with kappa_i = sqrt(omega^2/c^2 (eps*mu - 1) + kappa^2).  Always real
// with magnitude <= 1 on the imaginary axis.  Throws invalid_kinematics
// when kappa < omega/c, and pole_error at omega = 0 for plasma-type
// responses (use the analytic limit in integrands instead).
double reflection(const Mirror& mirror, Polarization pol,
                  const WaveKinematics& kin);

// Leading short-distance (large kappa) limit of the reflection
// coefficients; independent of the wavevector:
//   r_TM = -we^2 / (2(w^2 + w0^2 + Ge*w) + we^2)
//   r_TE = +wm^2 / (2(w^2 + w0^2 + Gm*w) + wm^2)
double reflection_short_distance(const Mirror& mirror, Polarization pol,
                                 double omega);

// Subleading short-distance term, applicable only when the leading term
// vanishes: TM for a purely magnetic mirror (eps == 1), TE for a purely
// dielectric mirror (mu == 1).  k is the transverse wavevector.  The
// truncated expansion is an integration kernel for closed-form limits;
// its magnitude may exceed 1 at small k.
double reflection_subleading(const Mirror& mirror, Polarization pol,
                             double omega, double k);

} // namespace casimir
