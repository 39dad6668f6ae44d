#include <cmath>
#include <random>

#include <doctest.h>

#include "casimir/asymptotics.hpp"
#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"

using namespace casimir;

namespace {

Mirror plasma_mirror(double we, double wm = 0.0) {
    return Mirror{OscillatorModel(we, 0.0, 0.0), OscillatorModel(wm, 0.0, 0.0),
                  "A"};
}

Cavity cavity_at_lambda(const Mirror& a, const Mirror& b, double lambda,
                        double we_ref) {
    return Cavity(a, b, lambda * speed_of_light / we_ref);
}

constexpr double we = 1e16;

} // namespace

TEST_CASE("ideal Casimir force and energy") {
    // oracle: -hbar c pi^2 / (240 L^4) with CODATA constants
    const double L = 1e-6;
    const double oracle = -hbar * speed_of_light * pi * pi / 240.0 / (L * L * L * L);
    CHECK(oracle == doctest::Approx(-1.30013e-3).epsilon(1e-4));
    CHECK(ideal_casimir_force(L) == oracle);

    // L -> 2L divides the force by 16
    CHECK(ideal_casimir_force(2e-6) ==
          doctest::Approx(ideal_casimir_force(1e-6) / 16.0).epsilon(1e-14));

    // E/F = L/3 at any separation
    for (double l : {1e-8, 1e-6, 1e-4}) {
        CHECK(ideal_casimir_energy(l) / ideal_casimir_force(l) ==
              doctest::Approx(l / 3.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(ideal_casimir_force(0.0), precondition_error);
}

TEST_CASE("casimir_energy: vacuum mirrors give zero") {
    const Mirror vac{OscillatorModel(), OscillatorModel(), "A"};
    const Cavity c(vac, vac, 1e-7);
    CHECK(casimir_energy(c) == 0.0);
}

TEST_CASE("near-perfect mirrors recover the ideal limit") {
    const Mirror m = plasma_mirror(we);
    const Cavity c = cavity_at_lambda(m, m, 1000.0, we);
    const ForceReport rep = casimir_force(c);
    CHECK(rep.eta_force == doctest::Approx(1.0).epsilon(0.01));
    CHECK(rep.eta_energy == doctest::Approx(1.0).epsilon(0.01));
    CHECK(rep.energy_per_area ==
          doctest::Approx(ideal_casimir_energy(c.separation)).epsilon(0.01));
}

TEST_CASE("equal plasma mirrors at L = 50 lambda_p match the long-distance law") {
    const Mirror m = plasma_mirror(we);
    const double lambda_p = 2.0 * pi * speed_of_light / we;
    const double L = 50.0 * lambda_p;
    const Cavity c(m, m, L);
    const double eta = casimir_force(c).eta_force;
    const double asym = long_distance_eta_dielectric(lambda_p, lambda_p, L);
    CHECK(eta == doctest::Approx(asym).epsilon(0.005));
}

TEST_CASE("magneto-dielectric mirror drives eta_F negative at long distance") {
    const Mirror a = plasma_mirror(we, 1.2 * we);
    const Mirror b = plasma_mirror(we);
    const Cavity c = cavity_at_lambda(a, b, 100.0, we);
    CHECK(casimir_force(c).eta_force < 0.0);
}

TEST_CASE("force equals -dE/dL by central difference") {
    QuadratureSpec tight;
    tight.rel_tol = 3e-10;
    tight.abs_tol = 1e-14;
    tight.max_subdivisions = 20000;
    const Mirror lorentz{OscillatorModel(we, 0.3 * we, 0.05 * we),
                         OscillatorModel(), "A"};
    const Mirror drude{OscillatorModel(0.7 * we, 0.0, 0.1 * we),
                       OscillatorModel(), "B"};
    for (double lambda : {0.05, 1.0, 30.0}) {
        const double L = lambda * speed_of_light / we;
        const double h = 1e-3 * L;
        const Cavity cm(lorentz, drude, L - h);
        const Cavity cp(lorentz, drude, L + h);
        const Cavity cc(lorentz, drude, L);
        const double dEdL =
            (casimir_energy(cm, tight) - casimir_energy(cp, tight)) / (2.0 * h);
        const double force = casimir_force(cc, tight).force_per_area;
        CHECK(dEdL == doctest::Approx(force).epsilon(1e-4));
    }
}

TEST_CASE("swap symmetry is exact") {
    const Mirror a = plasma_mirror(we, 0.5 * we);
    const Mirror b{OscillatorModel(0.6 * we, 0.2 * we, 0.0), OscillatorModel(),
                   "B"};
    const double L = 2.0 * speed_of_light / we;
    const ForceReport ab = casimir_force(Cavity(a, b, L));
    const ForceReport ba = casimir_force(Cavity(b, a, L));
    CHECK(ab.force_per_area == ba.force_per_area);
    CHECK(ab.eta_energy == ba.eta_energy);
    CHECK(ab.force_tm == ba.force_tm);
}

TEST_CASE("raising the plasma frequency strengthens the attraction") {
    const Mirror fixed = plasma_mirror(we);
    const double L = 1.0 * speed_of_light / we;
    double prev = 0.0;
    for (double f : {0.3, 0.6, 1.0, 2.0}) {
        const Cavity c(plasma_mirror(f * we), fixed, L);
        const double force = casimir_force(c).force_per_area;
        CHECK(force < prev);
        prev = force;
    }
}

TEST_CASE("two nonmagnetic mirrors always attract") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 12; ++trial) {
        const Mirror a{OscillatorModel((0.2 + 2.0 * uni(rng)) * we,
                                       uni(rng) * we, 0.3 * uni(rng) * we),
                       OscillatorModel(), "A"};
        const Mirror b{OscillatorModel((0.2 + 2.0 * uni(rng)) * we,
                                       uni(rng) * we, 0.3 * uni(rng) * we),
                       OscillatorModel(), "B"};
        const double lambda = std::pow(10.0, -1.5 + 3.0 * uni(rng));
        const Cavity c = cavity_at_lambda(a, b, lambda, we);
        CHECK(casimir_force(c).eta_force > 0.0);
    }
}

TEST_CASE("per-polarization breakdown adds up") {
    const Mirror a = plasma_mirror(we, 0.7 * we);
    const Mirror b = plasma_mirror(0.8 * we);
    const Cavity c = cavity_at_lambda(a, b, 1.0, we);
    const ForceReport rep = casimir_force(c);
    CHECK(rep.force_tm + rep.force_te ==
          doctest::Approx(rep.force_per_area).epsilon(1e-12));
    CHECK(rep.force_for(Polarization::TM) == rep.force_tm);
    CHECK(rep.abs_error_estimate >= 0.0);
    CHECK(std::abs(rep.force_per_area - rep.eta_force *
                                            ideal_casimir_force(c.separation)) <=
          1e-18);
}

TEST_CASE("non-convergence is signalled when the budget is too small") {
    QuadratureSpec tiny;
    tiny.rel_tol = 1e-13;
    tiny.abs_tol = 1e-18;
    tiny.max_subdivisions = 2;
    const Mirror m = plasma_mirror(we);
    const Cavity c = cavity_at_lambda(m, m, 1.0, we);
    CHECK_THROWS_AS(casimir_force(c, tiny), non_convergence);
}
