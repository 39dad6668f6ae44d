#pragma once

#include <span>
#include <utility>
#include <vector>

#include "casimir/fresnel.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/oscillator.hpp"

namespace casimir {

// Coupled surface-plasmon branches.  "symmetric" is the upper branch: it
// crosses the light line at the propagative threshold and tends to the
// larger single-surface frequency at large separation.  "antisymmetric"
// is the lower, purely evanescent branch.
enum class Branch { symmetric, antisymmetric };

struct CoupledPlasmons {
    double omega_plus;  // symmetric branch, rad/s
    double omega_minus; // antisymmetric branch, rad/s
};

struct PlasmonBranch {
    Polarization polarization;
    Branch branch;
    double threshold_k; // 1/m; samples exist only for k >= threshold_k
    std::vector<std::pair<double, double>> samples; // (k, omega)
};

struct BranchEnergy {
    Polarization polarization;
    Branch branch;
    double energy; // J/m^2
};

struct EnergyDecomposition {
    double total;   // J/m^2, full Casimir energy
    double plasmon; // J/m^2
    double photon;  // total - plasmon, exactly
    double eta_plasmon;
    double eta_photon;
    std::vector<BranchEnergy> per_branch;
};

// Single-surface plasmon frequency of one mirror (plasma model).
// TM modes need a nonzero electric response, TE modes a nonzero magnetic
// one; otherwise no_mode is thrown.
double single_surface_plasmon(const Mirror& mirror, Polarization pol, double k);

// Frequency of one coupled branch at transverse wavevector k.  When only
// one mirror supports the polarization the surviving mode is uncoupled:
// the antisymmetric branch returns that mirror's single-surface frequency
// (independent of L) and the symmetric branch does not exist.
double coupled_plasmon_branch(const Cavity& cavity, Polarization pol,
                              Branch branch, double k);

// Both branches at once; throws root_not_found below the symmetric
// branch's threshold and no_mode when neither mirror supports the
// polarization.
CoupledPlasmons coupled_plasmons(const Cavity& cavity, Polarization pol,
                                 double k);

// Closed-form propagative threshold k_(+) for two purely dielectric
// plasma mirrors labelled so that beta = weB/weA <= 1.  The antisymmetric
// branch always starts at k = 0.
double propagative_threshold(const Cavity& cavity);

// Samples one branch over a k grid, skipping wavevectors where the branch
// does not exist.
PlasmonBranch sample_branch(const Cavity& cavity, Polarization pol,
                            Branch branch, std::span<const double> ks);

// Renormalized vacuum energy of the interacting surface plasmons: each
// branch integrated against the single-surface frequency it tends to at
// infinite separation, the symmetric branch only over its evanescent
// sector k >= k_(+).  Polarizations supported by only one mirror stay
// uncoupled and contribute zero.
double plasmon_energy(const Cavity& cavity, const QuadratureSpec& spec = {});

// Full energy split into plasmon and photon parts.
EnergyDecomposition energy_decomposition(const Cavity& cavity,
                                         const QuadratureSpec& spec = {});

// Long-distance plasmon energy coefficient psi(beta), 0 < beta <= 1:
// E_sp ~ hbar sqrt(c weA) / (4 pi L^(5/2)) * psi(beta).
double psi_long_distance(double beta);

// Short-distance plasmon energy kernel chi(z), z >= 0; chi(0) = 0 and
// chi <= 0 throughout.
double chi_short_distance(double z);

// Short-distance plasmon energy
//   E = hbar/(16 pi L^2) [ (weA/sqrt2) chi(beta_e) + (wmA/sqrt2) chi(beta_m) ]
// for plasma-model mirrors; always <= 0.
double plasmon_energy_short(const Cavity& cavity);

} // namespace casimir
