#pragma once

#include <map>
#include <string>
#include <vector>

#include "casimir/lifshitz.hpp"
#include "casimir/oscillator.hpp"

namespace casimir {

enum class OutputFormat { csv, json };

enum class AsymptoteRegime { short_range, long_range, boyer_short, boyer_long };

// Distance grid: either an explicit list of separations in meters or a
// log grid in the dimensionless separation Lambda = weA L / c.
struct DistanceGrid {
    std::vector<double> explicit_meters;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    int count = 0;
};

struct PlasmonDumpSpec {
    bool enabled = false;
    double lambda = 1.0; // Lambda at which the dispersion curves are dumped
    double k_min = 0.02; // in units of weA/c
    double k_max = 3.0;
    int k_count = 60;
};

// Parsed run configuration.  `raw` keeps the key/value pairs exactly as
// read, so a JSON run report can embed them and be replayed bit for bit.
struct RunConfig {
    Mirror mirror_a;
    Mirror mirror_b;
    DistanceGrid distances;
    QuadratureSpec tolerances;
    OutputFormat format = OutputFormat::csv;
    std::string out_path; // empty = stdout
    PlasmonDumpSpec plasmon_dump;
    int jobs = 1;
    std::map<std::string, std::string> raw;

    std::vector<double> separations() const; // meters
    std::vector<double> lambdas() const;     // weA L / c per separation
};

// Flat "key = value" text (with # comments) or a JSON document carrying
// the same keys under "config".  Throws config_error with line/field
// diagnostics.
RunConfig parse_config_text(const std::string& text, const std::string& source);
RunConfig parse_config_file(const std::string& path);

// Applies a command-line override and records it in `raw` so replays see
// the effective configuration.
void override_config(RunConfig& cfg, const std::string& key,
                     const std::string& value);

// ---- row computation ------------------------------------------------

struct ForceRow {
    double lambda = 0.0, separation = 0.0;
    double force = 0.0, energy = 0.0, eta_force = 0.0, eta_energy = 0.0;
    double force_te = 0.0, force_tm = 0.0, abs_error = 0.0;
    bool converged = true;
};

struct PlasmonRow {
    double lambda = 0.0, separation = 0.0;
    double total = 0.0, plasmon = 0.0, photon = 0.0;
    double eta_plasmon = 0.0, eta_photon = 0.0;
    double tm_plus = 0.0, tm_minus = 0.0, te_plus = 0.0, te_minus = 0.0;
    bool converged = true;
};

struct DispersionRow {
    double k = 0.0;           // 1/m
    double omega_plus = 0.0;  // NaN below the threshold
    double omega_minus = 0.0;
    double omega_sp_a = 0.0;
    double omega_sp_b = 0.0;
};

struct AsymptoteRow {
    double lambda = 0.0, separation = 0.0;
    double force_asymptote = 0.0, force_full = 0.0, rel_deviation = 0.0;
    bool converged = true;
};

struct ThresholdReport {
    double alpha0 = 0.0;
    double bracket_lo = 0.0, bracket_hi = 0.0;
    double eta_at_1 = 0.0;
    double eta_below = 0.0, eta_above = 0.0; // at alpha0 -/+ 0.01
};

std::vector<ForceRow> compute_force_rows(const RunConfig& cfg);
std::vector<PlasmonRow> compute_plasmon_rows(const RunConfig& cfg);
std::vector<DispersionRow> compute_dispersion_rows(const RunConfig& cfg);
std::vector<AsymptoteRow> compute_asymptote_rows(const RunConfig& cfg,
                                                 AsymptoteRegime regime);
ThresholdReport compute_threshold_report();

// ---- serialization ---------------------------------------------------

// Locale-independent scientific notation with 12 significant digits.
std::string format_sci(double v);

std::string force_rows_csv(const std::vector<ForceRow>& rows);
std::string plasmon_rows_csv(const std::vector<PlasmonRow>& rows);
std::string dispersion_rows_csv(const std::vector<DispersionRow>& rows);
std::string asymptote_rows_csv(const std::vector<AsymptoteRow>& rows);
std::string threshold_text(const ThresholdReport& rep);

std::string force_rows_json(const RunConfig& cfg,
                            const std::vector<ForceRow>& rows);
std::string plasmon_rows_json(const RunConfig& cfg,
                              const std::vector<PlasmonRow>& rows,
                              const std::vector<DispersionRow>& dump);
std::string asymptote_rows_json(const RunConfig& cfg,
                                const std::vector<AsymptoteRow>& rows);
std::string threshold_json(const ThresholdReport& rep);

} // namespace casimir
