// Command-line front end: force curves, plasmon/photon decomposition,
// the repulsion threshold, and asymptote-vs-full comparisons, emitted as
// CSV or JSON tables.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical
// non-convergence (failed rows are flagged and the run continues).

#include <charconv>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "casimir/errors.hpp"
#include "casimir/runconfig.hpp"

namespace {

using namespace casimir;

struct CommonFlags {
    std::string config_path;
    std::string format;
    std::string out_path;
    int jobs = 0;
    double rel_tol = 0.0;
    double abs_tol = 0.0;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool config_required) {
    auto* opt = cmd->add_option("--config", flags.config_path,
                                "configuration file (flat key=value or JSON)");
    if (config_required) opt->required();
    cmd->add_option("--format", flags.format, "output format: csv or json");
    cmd->add_option("--out", flags.out_path, "output path (default stdout)");
    cmd->add_option("--jobs", flags.jobs, "worker threads for grid rows");
    cmd->add_option("--rel-tol", flags.rel_tol, "quadrature relative tolerance");
    cmd->add_option("--abs-tol", flags.abs_tol,
                    "quadrature absolute tolerance (relative to the ideal "
                    "Casimir scale)");
}

std::string shortest_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

RunConfig load_config(const CommonFlags& flags) {
    RunConfig cfg = parse_config_file(flags.config_path);
    if (!flags.format.empty()) override_config(cfg, "output.format", flags.format);
    if (!flags.out_path.empty()) override_config(cfg, "output.path", flags.out_path);
    if (flags.jobs > 0) override_config(cfg, "jobs", std::to_string(flags.jobs));
    if (flags.rel_tol > 0.0) {
        override_config(cfg, "tolerances.rel_tol", shortest_double(flags.rel_tol));
    }
    if (flags.abs_tol > 0.0) {
        override_config(cfg, "tolerances.abs_tol", shortest_double(flags.abs_tol));
    }
    return cfg;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out_path);
    if (!out) throw config_error("cannot open output path '" + cfg.out_path + "'");
    out << text;
}

template <class Row>
bool all_converged(const std::vector<Row>& rows) {
    for (const Row& r : rows) {
        if (!r.converged) return false;
    }
    return true;
}

int run_force(const CommonFlags& flags) {
    const RunConfig cfg = load_config(flags);
    const std::vector<ForceRow> rows = compute_force_rows(cfg);
    emit(cfg, cfg.format == OutputFormat::json ? force_rows_json(cfg, rows)
                                               : force_rows_csv(rows));
    return all_converged(rows) ? 0 : 3;
}

int run_plasmon(const CommonFlags& flags) {
    const RunConfig cfg = load_config(flags);
    const std::vector<PlasmonRow> rows = compute_plasmon_rows(cfg);
    std::vector<DispersionRow> dump;
    if (cfg.plasmon_dump.enabled) dump = compute_dispersion_rows(cfg);
    if (cfg.format == OutputFormat::json) {
        emit(cfg, plasmon_rows_json(cfg, rows, dump));
    } else {
        std::string text = plasmon_rows_csv(rows);
        if (!dump.empty()) {
            text += "\n";
            text += dispersion_rows_csv(dump);
        }
        emit(cfg, text);
    }
    return all_converged(rows) ? 0 : 3;
}

int run_threshold(const std::string& format, const std::string& out_path) {
    const ThresholdReport rep = compute_threshold_report();
    const std::string text =
        format == "json" ? threshold_json(rep) : threshold_text(rep);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw config_error("cannot open output path '" + out_path + "'");
        out << text;
    }
    return 0;
}

int run_asymptote(const CommonFlags& flags, const std::string& regime) {
    const RunConfig cfg = load_config(flags);
    AsymptoteRegime r;
    if (regime == "short") {
        r = AsymptoteRegime::short_range;
    } else if (regime == "long") {
        r = AsymptoteRegime::long_range;
    } else if (regime == "boyer-short") {
        r = AsymptoteRegime::boyer_short;
    } else if (regime == "boyer-long") {
        r = AsymptoteRegime::boyer_long;
    } else {
        throw config_error("unknown regime '" + regime +
                           "' (short | long | boyer-short | boyer-long)");
    }
    const std::vector<AsymptoteRow> rows = compute_asymptote_rows(cfg, r);
    emit(cfg, cfg.format == OutputFormat::json ? asymptote_rows_json(cfg, rows)
                                               : asymptote_rows_csv(rows));
    return all_converged(rows) ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casimir force between dissimilar magneto-dielectric mirrors"};
    app.require_subcommand(1);

    CommonFlags force_flags, plasmon_flags, asym_flags;
    std::string threshold_format = "text", threshold_out;
    std::string regime;

    CLI::App* force_cmd =
        app.add_subcommand("force", "force and energy over a distance grid");
    add_common(force_cmd, force_flags, true);

    CLI::App* plasmon_cmd = app.add_subcommand(
        "plasmon", "plasmon/photon energy decomposition (plasma mirrors)");
    add_common(plasmon_cmd, plasmon_flags, true);

    CLI::App* threshold_cmd = app.add_subcommand(
        "threshold", "repulsion threshold alpha0 of the long-distance law");
    threshold_cmd->add_option("--format", threshold_format, "text or json");
    threshold_cmd->add_option("--out", threshold_out, "output path");

    CLI::App* asym_cmd = app.add_subcommand(
        "asymptote", "closed-form asymptote against the full integral");
    add_common(asym_cmd, asym_flags, true);
    asym_cmd->add_option("--regime", regime,
                         "short | long | boyer-short | boyer-long")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (force_cmd->parsed()) return run_force(force_flags);
        if (plasmon_cmd->parsed()) return run_plasmon(plasmon_flags);
        if (threshold_cmd->parsed()) {
            return run_threshold(threshold_format, threshold_out);
        }
        if (asym_cmd->parsed()) return run_asymptote(asym_flags, regime);
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const non_convergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
