#pragma once

#include "casimir/oscillator.hpp"

namespace casimir {

// Short-distance oscillator combinations: Omega1^2 = we^2/2,
// Omega2^2 = we^2/2 + w0^2 (absorption plays no role at short distance
// and is ignored here).
struct ShortDistanceParams {
    double omega1; // rad/s
    double omega2; // rad/s

    static ShortDistanceParams from_mirror(const Mirror& m);
};

struct SeriesSpec {
    int max_terms_k = 400;
    long max_terms_n = 400000;
    double tail_tol = 1e-12;
};

// Non-retarded Hamaker constant H_AB (J) from the TM short-distance
// reflection coefficients; the short-distance force between two
// dielectric-dominated mirrors is F = -H_AB / (3 L^3).  Requires a
// nonzero electric response on both mirrors.
double hamaker_constant(const Mirror& mirror_a, const Mirror& mirror_b,
                        const SeriesSpec& spec = {});

// Short-distance force (N/m^2) from the double series with Gamma-function
// coefficients.  Mirrors must be labelled so that Omega2_B <= Omega2_A;
// otherwise the expansion parameter leaves [0, 1) and series_divergence
// is thrown.
double short_distance_force_series(const Mirror& mirror_a,
                                   const Mirror& mirror_b, double L,
                                   const SeriesSpec& spec = {});

// TM contribution to the short-distance force between a purely magnetic
// mirror A and a purely dielectric mirror B, keeping the full wavevector
// integral.
double boyer_short_tm_force(double omega_mA, double omega_eB, double L);

// Total short-distance force in the same configuration,
//   F = (sqrt(2)/64) (hbar / (pi c^2)) (weB^2 wmA + wmA^2 weB) / L,
// positive (repulsive), with the unusual 1/L law.
double boyer_short_distance_force(double omega_mA, double omega_eB, double L);

// Long-distance force reduction factor for a magneto-dielectric plasma
// mirror (alpha = wmA/weA) facing a purely dielectric one; independent of
// the second mirror's plasma frequency.
double long_distance_eta_magnetodielectric(double alpha);

// Ratio alpha0 at which the long-distance force changes sign, found by
// bracketed bisection on [1, 1.1].
double repulsion_threshold();

// eta ~ 1 - (4/3pi)(lambda_eA + lambda_eB)/L for two dielectric plasma
// mirrors at L much larger than both plasma wavelengths (enforced as
// L > 5 max(lambda)).
double long_distance_eta_dielectric(double lambda_eA, double lambda_eB,
                                    double L);

// eta ~ -7/8 + (7/6pi)(lambda_eA + lambda_mB)/L for a dielectric mirror
// facing a magnetic one (maximal repulsion).
double boyer_long_distance_eta(double lambda_eA, double lambda_mB, double L);

} // namespace casimir
