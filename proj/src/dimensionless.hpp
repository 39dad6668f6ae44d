#pragma once

// Dimensionless imaginary-axis response and reflection kernels shared by
// the Lifshitz integrands and the Fresnel surface.  All frequencies and
// wavevectors are expressed in units of c/L and 1/L (W = omega L / c,
// K = k L, kappa~ = kappa L), which removes hbar and c from inner loops.

#include <cmath>

#include "casimir/oscillator.hpp"

namespace casimir::detail {

struct DimOsc {
    double S2 = 0.0; // (strength * L / c)^2
    double R2 = 0.0; // (resonance * L / c)^2
    double G = 0.0;  // damping * L / c
};

struct DimMirror {
    DimOsc e, m;
};

inline DimOsc make_dim_osc(const OscillatorModel& o, double scale) {
    const double s = o.strength_freq * scale;
    const double r = o.resonance_freq * scale;
    return {s * s, r * r, o.damping * scale};
}

inline DimMirror make_dim_mirror(const Mirror& m, double scale) {
    return {make_dim_osc(m.electric, scale), make_dim_osc(m.magnetic, scale)};
}

// response(iW) - 1; diverges as W -> 0 for plasma and Drude forms.
inline double resp_m1(const DimOsc& o, double W) {
    return o.S2 / (W * W + o.R2 + o.G * W);
}

// W^2 * (response(iW) - 1); finite at W -> 0 (equals S2 for the plasma
// model, 0 for Drude and Lorentz).
inline double w2_resp_m1(const DimOsc& o, double W) {
    return o.S2 * W * W / (W * W + o.R2 + o.G * W);
}

struct MirrorResponse {
    double eps;    // eps(iW)
    double mu;     // mu(iW)
    double w2_em1; // W^2 (eps*mu - 1)
};

// Integrands clamp W here instead of evaluating at W = 0, where the
// plasma response has a pole; at the clamp every reflection coefficient
// agrees with its analytic zero-frequency limit to ~1e-120 relative.
inline constexpr double w_floor = 1e-120;

inline MirrorResponse mirror_at(const DimMirror& m, double W) {
    const double ae = resp_m1(m.e, W);
    const double am = resp_m1(m.m, W);
    const double w2am = w2_resp_m1(m.m, W);
    const double w2ae = w2_resp_m1(m.e, W);
    return {1.0 + ae, 1.0 + am, w2ae + w2am + ae * w2am};
}

inline double reflection_tm(const MirrorResponse& mr, double kappa) {
    const double ki = std::sqrt(mr.w2_em1 + kappa * kappa);
    const double ek = mr.eps * kappa;
    return (ki - ek) / (ki + ek);
}

inline double reflection_te(const MirrorResponse& mr, double kappa) {
    const double ki = std::sqrt(mr.w2_em1 + kappa * kappa);
    const double mk = mr.mu * kappa;
    return -(ki - mk) / (ki + mk);
}

} // namespace casimir::detail
