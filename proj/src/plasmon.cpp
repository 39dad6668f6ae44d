#include "casimir/plasmon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/roots.hpp"

namespace casimir {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

void require_plasma(const Mirror& m) {
    if (!m.plasma_model()) {
        throw precondition_error(
            "plasmon spectrum: mirror " + m.label +
            " must follow the plasma model (no resonance, no damping)");
    }
}

void require_plasma(const Cavity& cavity) {
    require_plasma(cavity.mirror_a);
    require_plasma(cavity.mirror_b);
}

double active_strength(const Mirror& m, Polarization pol) {
    return pol == Polarization::TM ? m.electric.strength_freq
                                   : m.magnetic.strength_freq;
}

// ---------------------------------------------------------------------
// Dimensionless dispersion machinery.  Frequencies are real here (the
// modes live below the light line): W = omega L/c, K = k L,
// Q^2 = K^2 - W^2 >= 0 and, per mirror,
//   eps = 1 - Se^2/W^2,  mu = 1 - Sm^2/W^2,
//   kappa_i^2 = K^2 - eps*mu*W^2.
// The TM (TE) dispersion equation is
//   prod_i (kappa_i + a_i Q)/(kappa_i - a_i Q) = exp(-2Q)
// with a = eps (mu).  We work with the scaled residual
//   h = g_A g_B exp(+2Q) - 1,
// evaluated through logs so large Q cannot overflow.

struct PolMirror {
    double sa2; // active strength^2 (Se^2 for TM, Sm^2 for TE)
    double se2; // electric strength^2
    double sm2; // magnetic strength^2
};

struct PolPair {
    PolMirror a, b;
};

PolPair make_pol_pair(const Cavity& cavity, Polarization pol, double scale) {
    auto mk = [&](const Mirror& m) {
        const double se = m.electric.strength_freq * scale;
        const double sm = m.magnetic.strength_freq * scale;
        const double sa = pol == Polarization::TM ? se : sm;
        return PolMirror{sa * sa, se * se, sm * sm};
    };
    return {mk(cavity.mirror_a), mk(cavity.mirror_b)};
}

// eps*mu*W^2 = (W^2 - Se^2)(W^2 - Sm^2)/W^2, stable at small W.
double epsmu_w2(const PolMirror& m, double w2) {
    return (w2 - m.se2) * (w2 - m.sm2) / w2;
}

// ln|g_i| and sign of g_i; requires kappa_i^2 >= 0 (admissible window).
struct LogG {
    double log_abs;
    int sign; // 0 when g == 0
};

LogG log_g(const PolMirror& m, double K, double W, double Q) {
    const double w2 = W * W;
    const double kap2 = K * K - epsmu_w2(m, w2);
    const double kap = std::sqrt(std::max(kap2, 0.0));
    const double aq = (1.0 - m.sa2 / w2) * Q;
    const double num = kap + aq;
    const double den = kap - aq;
    if (num == 0.0) return {-inf, 0};
    const double g = num / den;
    return {std::log(std::abs(g)), g > 0.0 ? 1 : -1};
}

// Scaled dispersion residual h(W) = g_A g_B e^{2Q} - 1.
double dispersion_h(const PolPair& p, double K, double W) {
    const double Q = std::sqrt(std::max((K - W) * (K + W), 0.0));
    const LogG ga = log_g(p.a, K, W, Q);
    const LogG gb = log_g(p.b, K, W, Q);
    const int sign = ga.sign * gb.sign;
    if (sign == 0) return -1.0;
    const double mag = std::exp(ga.log_abs + gb.log_abs + 2.0 * Q);
    return sign > 0 ? mag - 1.0 : -mag - 1.0;
}

// Single-surface frequency squared, dimensionless.  Solves
//   K^2 (1 - a^2) = a (b - a) W^2,   a = active, b = other response,
// in the numerically stable Citardauq form; D = So^2 - Sa^2.
double single_surface_w2(double sa2, double so2, double K2) {
    if (sa2 == 0.0) return 0.0;
    const double D = so2 - sa2;
    if (K2 == 0.0) return D > 0.0 ? sa2 : 0.0;
    return 2.0 * K2 * sa2 / ((2.0 * K2 - D) + std::sqrt(D * D + 4.0 * K2 * K2));
}

double single_surface_w(const PolMirror& m, double K) {
    const double so2 = m.sa2 == m.se2 ? m.sm2 : m.se2;
    return std::sqrt(single_surface_w2(m.sa2, so2, K * K));
}

// Lower edge of the admissible window for one mirror: the larger W root
// of kappa_i^2 = 0 below both strengths; zero for dielectric-type
// mirrors (Se or Sm zero).
double window_floor_w(const PolMirror& m, double K) {
    if (m.se2 == 0.0 || m.sm2 == 0.0) return 0.0;
    const double S = m.se2 + m.sm2 + K * K;
    const double w2 =
        2.0 * m.se2 * m.sm2 / (S + std::sqrt(S * S - 4.0 * m.se2 * m.sm2));
    return std::sqrt(w2);
}

struct BranchRoots {
    std::optional<double> minus; // lower root (antisymmetric)
    std::optional<double> plus;  // upper root (symmetric)
};

// Bisect h on [lo, hi] to near machine precision; assumes opposite signs.
double bisect_h(const PolPair& p, double K, double lo, double hi, double hlo) {
    const bool lo_neg = std::signbit(hlo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double hm = dispersion_h(p, K, mid);
        if (std::signbit(hm) == lo_neg) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Locate the evanescent-sector roots at fixed K.  The window (floor, K)
// is split at the clipped single-surface frequencies; g_A g_B has a zero
// at each of those, so each segment holds at most one root and the sign
// pattern identifies the branch.  A short scan per segment keeps the
// bracketing robust when the window degenerates.
BranchRoots find_branch_roots(const PolPair& p, double K) {
    BranchRoots out;
    if (K <= 0.0) return out;
    const double rel = 1e-13;
    const double wlo = std::max(window_floor_w(p.a, K), window_floor_w(p.b, K));
    const double whi = K * (1.0 - rel);
    if (wlo >= whi) return out;
    const double lo_edge = wlo > 0.0 ? wlo * (1.0 + rel) : K * 1e-14;

    const double spa = single_surface_w(p.a, K);
    const double spb = single_surface_w(p.b, K);

    std::vector<double> cuts;
    cuts.push_back(lo_edge);
    for (double s : {std::min(spa, spb), std::max(spa, spb)}) {
        if (s > lo_edge * (1.0 + rel) && s < whi * (1.0 - rel)) {
            cuts.push_back(s);
        }
    }
    cuts.push_back(whi);

    std::vector<double> roots;
    for (std::size_t seg = 0; seg + 1 < cuts.size(); ++seg) {
        double a = cuts[seg];
        double b = cuts[seg + 1];
        // Stay clear of the zeros of g at the segment ends.
        if (seg > 0) a *= 1.0 + rel;
        if (seg + 2 < cuts.size()) b *= 1.0 - rel;
        if (!(b > a)) continue;
        const int n_scan = 24;
        double x0 = a;
        double h0 = dispersion_h(p, K, x0);
        for (int i = 1; i <= n_scan; ++i) {
            const double x1 = a + (b - a) * i / n_scan;
            const double h1 = dispersion_h(p, K, x1);
            if (std::isfinite(h0) && std::isfinite(h1) &&
                std::signbit(h0) != std::signbit(h1)) {
                const double r = bisect_h(p, K, x0, x1, h0);
                // Reject sign flips across a pole.  The residual of a
                // genuine root is limited by the conditioning of
                // g e^{2Q} near g ~ e^{-2Q}, hence the Q-dependent slack.
                const double q = std::sqrt(std::max((K - r) * (K + r), 0.0));
                const double slack =
                    1e-10 * std::exp(std::min(2.0 * q, 600.0));
                if (std::abs(dispersion_h(p, K, r)) < slack) {
                    roots.push_back(r);
                }
            }
            x0 = x1;
            h0 = h1;
        }
    }
    std::sort(roots.begin(), roots.end());
    const double sp_lo = std::min(spa, spb);
    const double sp_hi = std::max(spa, spb);
    const bool sps_inside = sp_lo > lo_edge && sp_hi < whi;
    if (sps_inside) {
        // The antisymmetric root lies below both single-surface
        // frequencies, the symmetric one above; classify accordingly.
        for (double r : roots) {
            if (r <= sp_lo * (1.0 + 2.0 * rel)) {
                if (!out.minus) out.minus = r;
            } else if (r >= sp_hi * (1.0 - 2.0 * rel)) {
                if (!out.plus) out.plus = r;
            }
        }
    } else {
        if (!roots.empty()) out.minus = roots.front();
        if (roots.size() >= 2) out.plus = roots.back();
    }

    // At large Q a branch sits within e^{-2Q} of the single-surface zero
    // of g, closer than the bracketing insets can resolve.  When the
    // crossing hides inside an inset, the single-surface frequency IS the
    // branch frequency at double precision.
    if (!out.minus && sp_lo > lo_edge && sp_lo < whi) {
        const double probe = sp_lo * (1.0 - 8.0 * rel);
        if (probe > lo_edge && dispersion_h(p, K, probe) > 0.0) {
            out.minus = sp_lo;
        }
    }
    if (!out.plus && sp_hi > lo_edge && sp_hi < whi) {
        const double probe = sp_hi * (1.0 + 8.0 * rel);
        if (probe < whi && dispersion_h(p, K, probe) > 0.0 &&
            (!out.minus || sp_hi > *out.minus)) {
            out.plus = sp_hi;
        }
    }
    return out;
}

// Light-line marginality function sigma(K); the symmetric branch exists
// where sigma > 0 and its threshold K_(+) is the zero of sigma.
double light_line_sigma(const PolPair& p, double K) {
    double s = 1.0;
    const double w2 = K * K;
    for (const PolMirror* m : {&p.a, &p.b}) {
        const double kap2 = K * K - epsmu_w2(*m, w2);
        if (kap2 <= 0.0) return -inf;
        s += (1.0 - m->sa2 / w2) / std::sqrt(kap2);
    }
    return s;
}

// Numeric propagative threshold for one polarization (dimensionless).
double threshold_k_plus(const PolPair& p) {
    double klo = 0.0;
    for (const PolMirror* m : {&p.a, &p.b}) {
        if (m->se2 > 0.0 && m->sm2 > 0.0) {
            klo = std::max(klo,
                           std::sqrt(m->se2 * m->sm2 / (m->se2 + m->sm2)));
        }
    }
    const double smax = std::sqrt(std::max({p.a.sa2, p.b.sa2, 1e-300}));
    double lo = std::max(klo * (1.0 + 1e-12), smax * 1e-8);
    double hi = 4.0 * smax + lo;
    if (light_line_sigma(p, lo) >= 0.0) return lo;
    while (light_line_sigma(p, hi) < 0.0) {
        hi *= 2.0;
        if (hi > 1e12 * smax) {
            throw root_not_found("plasmon threshold: no light-line crossing");
        }
    }
    const RootResult r = find_root_bisect(
        [&](double k) { return light_line_sigma(p, k); }, lo, hi, 0.0);
    return r.root;
}

bool supports(const PolMirror& m) { return m.sa2 > 0.0; }

// Renormalized branch integral  I = int K (W_branch - W_single) dK
// in dimensionless units; the physical energy is hbar c/(4 pi L^3) I.
double branch_integral(const PolPair& p, Branch branch, double k_start,
                       const QuadratureSpec& spec) {
    auto integrand = [&](double K) {
        const double spa = single_surface_w(p.a, K);
        const double spb = single_surface_w(p.b, K);
        const double sp = branch == Branch::antisymmetric ? std::min(spa, spb)
                                                          : std::max(spa, spb);
        // |W_branch - W_single| < ~W e^{-2Q}: past Q = 12 the subtracted
        // integrand is negligible against the quadrature tolerances and
        // its floating-point resolution degrades, so the tail is dropped.
        if (K > sp) {
            const double q_sp = std::sqrt((K - sp) * (K + sp));
            if (q_sp > 12.0) return 0.0;
        }
        const BranchRoots roots = find_branch_roots(p, K);
        const std::optional<double>& root =
            branch == Branch::antisymmetric ? roots.minus : roots.plus;
        if (!root) return 0.0;
        return K * (*root - sp);
    };
    QuadratureOptions opt;
    opt.rel_tol = spec.rel_tol;
    // Absolute budget in eta-like units (|E_C| corresponds to pi^3/180).
    opt.abs_tol = spec.abs_tol * pi * pi * pi / 180.0;
    opt.max_subdivisions = spec.max_subdivisions;
    return integrate_adaptive(integrand, k_start, inf, opt).value;
}

std::vector<BranchEnergy> branch_energies(const Cavity& cavity,
                                          const QuadratureSpec& spec) {
    require_plasma(cavity);
    const double L = cavity.separation;
    const double scale = L / speed_of_light;
    const double prefactor = hbar * speed_of_light / (4.0 * pi * L * L * L);

    std::vector<BranchEnergy> out;
    for (Polarization pol : {Polarization::TM, Polarization::TE}) {
        const PolPair p = make_pol_pair(cavity, pol, scale);
        // A mode living on a single mirror stays uncoupled and does not
        // move with L; only polarizations carried by both mirrors
        // contribute.
        if (!supports(p.a) || !supports(p.b)) {
            out.push_back({pol, Branch::antisymmetric, 0.0});
            out.push_back({pol, Branch::symmetric, 0.0});
            continue;
        }
        const double i_minus =
            branch_integral(p, Branch::antisymmetric, 0.0, spec);
        const double kp = threshold_k_plus(p);
        const double i_plus = branch_integral(p, Branch::symmetric, kp, spec);
        out.push_back({pol, Branch::antisymmetric, prefactor * i_minus});
        out.push_back({pol, Branch::symmetric, prefactor * i_plus});
    }
    return out;
}

} // namespace

double single_surface_plasmon(const Mirror& mirror, Polarization pol,
                              double k) {
    require_plasma(mirror);
    if (!(k >= 0.0)) {
        throw precondition_error("single_surface_plasmon: k must be >= 0");
    }
    const double ws = active_strength(mirror, pol);
    if (ws == 0.0) {
        throw no_mode(std::string("single_surface_plasmon: no ") +
                      (pol == Polarization::TM ? "TM" : "TE") +
                      " plasmon on mirror " + mirror.label);
    }
    const double wo = pol == Polarization::TM ? mirror.magnetic.strength_freq
                                              : mirror.electric.strength_freq;
    const double kc2 = k * k * speed_of_light * speed_of_light;
    return std::sqrt(single_surface_w2(ws * ws, wo * wo, kc2));
}

double coupled_plasmon_branch(const Cavity& cavity, Polarization pol,
                              Branch branch, double k) {
    require_plasma(cavity);
    if (!(k > 0.0)) {
        throw precondition_error("coupled_plasmon_branch: k must be > 0");
    }
    const double scale = cavity.separation / speed_of_light;
    const PolPair p = make_pol_pair(cavity, pol, scale);
    const bool a_ok = supports(p.a);
    const bool b_ok = supports(p.b);
    if (!a_ok && !b_ok) {
        throw no_mode("coupled_plasmon_branch: neither mirror supports this "
                      "polarization");
    }
    if (!a_ok || !b_ok) {
        // Uncoupled single-surface mode of the supporting mirror.
        if (branch == Branch::symmetric) {
            throw root_not_found(
                "coupled_plasmon_branch: symmetric branch absent when only one "
                "mirror supports the polarization");
        }
        const Mirror& m = a_ok ? cavity.mirror_a : cavity.mirror_b;
        return single_surface_plasmon(m, pol, k);
    }
    const double K = k * cavity.separation;
    const BranchRoots roots = find_branch_roots(p, K);
    const std::optional<double>& root =
        branch == Branch::symmetric ? roots.plus : roots.minus;
    if (!root) {
        throw root_not_found(branch == Branch::symmetric
                                 ? "coupled_plasmon_branch: k below the "
                                   "symmetric-branch threshold"
                                 : "coupled_plasmon_branch: no antisymmetric "
                                   "root at this k");
    }
    return *root / scale; // omega = W c / L
}

CoupledPlasmons coupled_plasmons(const Cavity& cavity, Polarization pol,
                                 double k) {
    return {coupled_plasmon_branch(cavity, pol, Branch::symmetric, k),
            coupled_plasmon_branch(cavity, pol, Branch::antisymmetric, k)};
}

double propagative_threshold(const Cavity& cavity) {
    require_plasma(cavity);
    if (!cavity.mirror_a.purely_dielectric() ||
        !cavity.mirror_b.purely_dielectric()) {
        throw precondition_error(
            "propagative_threshold: both mirrors must be purely dielectric");
    }
    const double wea = cavity.mirror_a.electric.strength_freq;
    const double web = cavity.mirror_b.electric.strength_freq;
    if (!(wea > 0.0)) {
        throw precondition_error("propagative_threshold: mirror A needs a "
                                 "nonzero plasma frequency");
    }
    const double beta = web / wea;
    if (beta > 1.0) {
        throw precondition_error(
            "propagative_threshold: label the mirrors so that weB <= weA");
    }
    const double lam = cavity.lambda_dimensionless();
    return wea / speed_of_light *
           std::sqrt(beta * (beta + 1.0) / (1.0 + beta * (lam + 1.0)));
}

PlasmonBranch sample_branch(const Cavity& cavity, Polarization pol,
                            Branch branch, std::span<const double> ks) {
    require_plasma(cavity);
    PlasmonBranch out{pol, branch, 0.0, {}};
    const double scale = cavity.separation / speed_of_light;
    const PolPair p = make_pol_pair(cavity, pol, scale);
    if (!supports(p.a) || !supports(p.b)) {
        if (!supports(p.a) && !supports(p.b)) {
            throw no_mode("sample_branch: polarization carried by neither mirror");
        }
        if (branch == Branch::antisymmetric) {
            for (double k : ks) {
                if (k <= 0.0) continue;
                const Mirror& m =
                    supports(p.a) ? cavity.mirror_a : cavity.mirror_b;
                out.samples.emplace_back(k, single_surface_plasmon(m, pol, k));
            }
        }
        return out;
    }
    if (branch == Branch::symmetric) {
        out.threshold_k = threshold_k_plus(p) / cavity.separation;
    }
    for (double k : ks) {
        if (k <= 0.0) continue;
        const BranchRoots roots = find_branch_roots(p, k * cavity.separation);
        const std::optional<double>& root =
            branch == Branch::symmetric ? roots.plus : roots.minus;
        if (root) {
            out.samples.emplace_back(k, *root * speed_of_light /
                                            cavity.separation);
        }
    }
    return out;
}

double plasmon_energy(const Cavity& cavity, const QuadratureSpec& spec) {
    double total = 0.0;
    for (const BranchEnergy& be : branch_energies(cavity, spec)) {
        total += be.energy;
    }
    return total;
}

EnergyDecomposition energy_decomposition(const Cavity& cavity,
                                         const QuadratureSpec& spec) {
    EnergyDecomposition dec;
    dec.per_branch = branch_energies(cavity, spec);
    dec.plasmon = 0.0;
    for (const BranchEnergy& be : dec.per_branch) dec.plasmon += be.energy;
    dec.total = casimir_energy(cavity, spec);
    dec.photon = dec.total - dec.plasmon;
    const double ec = ideal_casimir_energy(cavity.separation);
    dec.eta_plasmon = dec.plasmon / ec;
    dec.eta_photon = dec.photon / ec;
    return dec;
}

double psi_long_distance(double beta) {
    if (!(beta > 0.0 && beta <= 1.0)) {
        throw precondition_error("psi_long_distance: beta must lie in (0, 1]");
    }
    const double sqrt_beta = std::sqrt(beta);
    // The integrand is envelope*(sqrt(f+) + sqrt(f-)) - (1 + sqrt(beta))
    // with envelope = sqrt((1+t)/(2(1-t))); written below as two
    // difference quotients so the exponentially small remainder at large
    // Q survives in floating point.
    auto integrand = [&](double q) {
        const double t = std::exp(-2.0 * q);
        const double one_m_t = -std::expm1(-2.0 * q);
        const double one_p_t = 1.0 + t;
        const double g = 16.0 * beta * t / (one_p_t * one_p_t);
        const double om = 1.0 - beta;
        const double delta =
            g > 0.0 ? g / (std::sqrt(om * om + g) + om) : 0.0; // f+ - 2
        const double f_plus = 2.0 + delta;
        // P = envelope * sqrt(f+) - 1
        const double ep = std::sqrt(0.5 * one_p_t * f_plus / one_m_t);
        const double p = (2.0 * t + 0.5 * delta * one_p_t) /
                         (one_m_t * (ep + 1.0));
        // M = envelope * sqrt(f-) - sqrt(beta)
        const double em = std::sqrt(2.0 * one_m_t / (one_p_t * f_plus));
        const double m = sqrt_beta * (-4.0 * t - delta * one_p_t) /
                         (one_p_t * f_plus * (em + 1.0));
        return q * std::sqrt(q) * (p + m);
    };
    QuadratureOptions opt;
    opt.rel_tol = 1e-10;
    opt.abs_tol = 1e-12;
    const IntegrationResult integral = integrate_adaptive(integrand, 0.0, inf, opt);
    return integral.value - 0.1 * std::pow(1.0 + beta, 2.5);
}

double chi_short_distance(double z) {
    if (!(z >= 0.0)) {
        throw precondition_error("chi_short_distance: z must be >= 0");
    }
    if (z == 0.0) return 0.0;
    const double zp2 = 0.5 * (1.0 + z * z);
    const double zm2 = 0.5 * (1.0 - z * z);
    const double zm4 = zm2 * zm2;
    auto integrand = [&](double k) {
        // the bracket decays like e^{-k}; past k = 60 it is below the
        // subtraction noise floor and certifiably negligible
        if (k > 60.0) return 0.0;
        const double s = std::sqrt(zm4 + z * z * std::exp(-k));
        const double upper = std::sqrt(zp2 + s) - 1.0;
        // zp2 - s = z^2 (1 - e^{-k}) / (zp2 + s), kept in that form to
        // avoid cancellation at small k.
        const double one_m_e = -std::expm1(-k);
        const double lower = z * (std::sqrt(one_m_e / (zp2 + s)) - 1.0);
        return k * (upper + lower);
    };
    QuadratureOptions opt;
    opt.rel_tol = 1e-10;
    opt.abs_tol = 1e-14;
    return integrate_adaptive(integrand, 0.0, inf, opt).value;
}

double plasmon_energy_short(const Cavity& cavity) {
    require_plasma(cavity);
    const double L = cavity.separation;
    const double wea = cavity.mirror_a.electric.strength_freq;
    const double web = cavity.mirror_b.electric.strength_freq;
    const double wma = cavity.mirror_a.magnetic.strength_freq;
    const double wmb = cavity.mirror_b.magnetic.strength_freq;
    double sum = 0.0;
    if (wea > 0.0) sum += wea / std::sqrt(2.0) * chi_short_distance(web / wea);
    if (wma > 0.0) sum += wma / std::sqrt(2.0) * chi_short_distance(wmb / wma);
    return hbar / (16.0 * pi * L * L) * sum;
}

} // namespace casimir
