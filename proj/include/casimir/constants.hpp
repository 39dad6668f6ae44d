#pragma once

// Physical constants (SI, CODATA 2018).

namespace casimir {

inline constexpr double pi = 3.14159265358979323846;

// Planck constant, J s (exact since the 2019 SI redefinition).
inline constexpr double planck_constant = 6.62607015e-34;

// Reduced Planck constant, J s.
inline constexpr double hbar = planck_constant / (2.0 * pi);

// Speed of light in vacuum, m/s (exact).
inline constexpr double speed_of_light = 299792458.0;

} // namespace casimir
