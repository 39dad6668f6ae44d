#include "casimir/runconfig.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "casimir/asymptotics.hpp"
#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/plasmon.hpp"

namespace casimir {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& value, const std::string& where) {
    const std::string v = trim(value);
    double out = 0.0;
    const char* first = v.data();
    const char* last = v.data() + v.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last) {
        throw config_error("config: cannot parse number '" + v + "' for " +
                           where);
    }
    return out;
}

long parse_integer(const std::string& value, const std::string& where) {
    const std::string v = trim(value);
    long out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw config_error("config: cannot parse integer '" + v + "' for " +
                           where);
    }
    return out;
}

bool parse_bool(const std::string& value, const std::string& where) {
    const std::string v = trim(value);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw config_error("config: cannot parse boolean '" + v + "' for " + where);
}

const std::set<std::string> known_keys = {
    "mirror_a.epsilon.strength", "mirror_a.epsilon.resonance",
    "mirror_a.epsilon.damping",  "mirror_a.mu.strength",
    "mirror_a.mu.resonance",     "mirror_a.mu.damping",
    "mirror_b.epsilon.strength", "mirror_b.epsilon.resonance",
    "mirror_b.epsilon.damping",  "mirror_b.mu.strength",
    "mirror_b.mu.resonance",     "mirror_b.mu.damping",
    "distances.lambda_min",      "distances.lambda_max",
    "distances.count",           "distances.list",
    "tolerances.rel_tol",        "tolerances.abs_tol",
    "tolerances.max_subdivisions",
    "output.format",             "output.path",
    "plasmon.dispersion_dump",   "plasmon.dispersion_lambda",
    "plasmon.k_min",             "plasmon.k_max",
    "plasmon.k_count",           "jobs",
};

RunConfig build_config(std::map<std::string, std::string> kv,
                       const std::string& source) {
    for (const auto& entry : kv) {
        if (!known_keys.count(entry.first)) {
            throw config_error("config " + source + ": unknown key '" +
                               entry.first + "'");
        }
    }

    RunConfig cfg;
    cfg.raw = std::move(kv);
    auto get = [&](const std::string& key, double fallback) {
        auto it = cfg.raw.find(key);
        return it == cfg.raw.end() ? fallback : parse_number(it->second, key);
    };
    auto osc = [&](const std::string& prefix) {
        const double s = get(prefix + ".strength", 0.0);
        const double r = get(prefix + ".resonance", 0.0);
        const double g = get(prefix + ".damping", 0.0);
        if (s < 0.0 || r < 0.0 || g < 0.0) {
            throw config_error("config " + source + ": " + prefix +
                               " frequencies must be >= 0");
        }
        return OscillatorModel(s, r, g);
    };
    cfg.mirror_a = Mirror{osc("mirror_a.epsilon"), osc("mirror_a.mu"), "A"};
    cfg.mirror_b = Mirror{osc("mirror_b.epsilon"), osc("mirror_b.mu"), "B"};

    if (cfg.raw.count("distances.list")) {
        std::stringstream ss(cfg.raw.at("distances.list"));
        std::string item;
        while (std::getline(ss, item, ',')) {
            const double L = parse_number(item, "distances.list");
            if (!(L > 0.0)) {
                throw config_error("config " + source +
                                   ": separations must be positive");
            }
            cfg.distances.explicit_meters.push_back(L);
        }
        if (cfg.distances.explicit_meters.empty()) {
            throw config_error("config " + source + ": distances.list is empty");
        }
    } else if (cfg.raw.count("distances.lambda_min")) {
        cfg.distances.lambda_min = get("distances.lambda_min", 0.0);
        cfg.distances.lambda_max = get("distances.lambda_max", 0.0);
        cfg.distances.count =
            static_cast<int>(parse_integer(cfg.raw.count("distances.count")
                                               ? cfg.raw.at("distances.count")
                                               : "0",
                                           "distances.count"));
        if (!(cfg.distances.count >= 1)) {
            throw config_error("config " + source +
                               ": distances.count must be >= 1");
        }
        if (!(cfg.distances.lambda_min > 0.0) ||
            (cfg.distances.count > 1 &&
             !(cfg.distances.lambda_min < cfg.distances.lambda_max))) {
            throw config_error("config " + source +
                               ": need 0 < lambda_min < lambda_max");
        }
        if (cfg.mirror_a.electric.strength_freq <= 0.0) {
            throw config_error("config " + source +
                               ": a Lambda grid needs mirror_a.epsilon.strength "
                               "> 0 to fix the length scale");
        }
    } else {
        throw config_error("config " + source +
                           ": no distance grid (distances.list or "
                           "distances.lambda_min/max/count)");
    }

    if (cfg.raw.count("tolerances.rel_tol")) {
        cfg.tolerances.rel_tol = get("tolerances.rel_tol", 1e-6);
    }
    if (cfg.raw.count("tolerances.abs_tol")) {
        cfg.tolerances.abs_tol = get("tolerances.abs_tol", 1e-12);
    }
    if (!(cfg.tolerances.rel_tol > 0.0) || !(cfg.tolerances.abs_tol > 0.0)) {
        throw config_error("config " + source + ": tolerances must be > 0");
    }
    if (cfg.raw.count("tolerances.max_subdivisions")) {
        cfg.tolerances.max_subdivisions = static_cast<int>(parse_integer(
            cfg.raw.at("tolerances.max_subdivisions"), "max_subdivisions"));
    }

    if (cfg.raw.count("output.format")) {
        const std::string f = trim(cfg.raw.at("output.format"));
        if (f == "csv") {
            cfg.format = OutputFormat::csv;
        } else if (f == "json") {
            cfg.format = OutputFormat::json;
        } else {
            throw config_error("config " + source + ": output.format must be "
                               "csv or json");
        }
    }
    if (cfg.raw.count("output.path")) cfg.out_path = trim(cfg.raw.at("output.path"));

    if (cfg.raw.count("plasmon.dispersion_dump")) {
        cfg.plasmon_dump.enabled =
            parse_bool(cfg.raw.at("plasmon.dispersion_dump"), "dispersion_dump");
    }
    cfg.plasmon_dump.lambda = get("plasmon.dispersion_lambda", 1.0);
    cfg.plasmon_dump.k_min = get("plasmon.k_min", 0.02);
    cfg.plasmon_dump.k_max = get("plasmon.k_max", 3.0);
    if (cfg.raw.count("plasmon.k_count")) {
        cfg.plasmon_dump.k_count = static_cast<int>(
            parse_integer(cfg.raw.at("plasmon.k_count"), "plasmon.k_count"));
    }

    if (cfg.raw.count("jobs")) {
        cfg.jobs = static_cast<int>(parse_integer(cfg.raw.at("jobs"), "jobs"));
        if (cfg.jobs < 1) throw config_error("config: jobs must be >= 1");
    }
    return cfg;
}

} // namespace

std::vector<double> RunConfig::separations() const {
    if (!distances.explicit_meters.empty()) return distances.explicit_meters;
    std::vector<double> out;
    const double wea = mirror_a.electric.strength_freq;
    const double scale = speed_of_light / wea;
    if (distances.count == 1) {
        out.push_back(distances.lambda_min * scale);
        return out;
    }
    const double ln_min = std::log(distances.lambda_min);
    const double ln_max = std::log(distances.lambda_max);
    for (int i = 0; i < distances.count; ++i) {
        const double t = static_cast<double>(i) / (distances.count - 1);
        out.push_back(std::exp(ln_min + t * (ln_max - ln_min)) * scale);
    }
    return out;
}

std::vector<double> RunConfig::lambdas() const {
    std::vector<double> out;
    for (double L : separations()) {
        out.push_back(mirror_a.electric.strength_freq * L / speed_of_light);
    }
    return out;
}

RunConfig parse_config_text(const std::string& text,
                            const std::string& source) {
    const std::string body = trim(text);
    std::map<std::string, std::string> kv;
    if (!body.empty() && body.front() == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(body);
        } catch (const nlohmann::json::parse_error& e) {
            throw config_error("config " + source + ": " + e.what());
        }
        const nlohmann::json& obj = doc.contains("config") ? doc["config"] : doc;
        if (!obj.is_object()) {
            throw config_error("config " + source +
                               ": JSON config must be an object");
        }
        for (const auto& [key, value] : obj.items()) {
            kv[key] = value.is_string() ? value.get<std::string>() : value.dump();
        }
        return build_config(std::move(kv), source);
    }

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string entry = trim(line);
        if (entry.empty()) continue;
        const auto eq = entry.find('=');
        if (eq == std::string::npos) {
            throw config_error("config " + source + ":" + std::to_string(lineno) +
                               ": expected 'key = value'");
        }
        const std::string key = trim(entry.substr(0, eq));
        const std::string value = trim(entry.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw config_error("config " + source + ":" + std::to_string(lineno) +
                               ": empty key or value");
        }
        if (kv.count(key)) {
            throw config_error("config " + source + ":" + std::to_string(lineno) +
                               ": duplicate key '" + key + "'");
        }
        kv[key] = value;
    }
    return build_config(std::move(kv), source);
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("config: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

void override_config(RunConfig& cfg, const std::string& key,
                     const std::string& value) {
    auto kv = cfg.raw;
    kv[key] = value;
    cfg = build_config(std::move(kv), "override");
}

// ---- row computation ------------------------------------------------

namespace {

// Runs fn(i) for i in [0, n) on `jobs` workers; results land in input
// order, so the output is identical for any worker count.
template <class Row, class Fn>
std::vector<Row> parallel_rows(int n, int jobs, Fn&& fn) {
    std::vector<Row> rows(static_cast<std::size_t>(n));
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) rows[i] = fn(i);
        return rows;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (int i; (i = next.fetch_add(1)) < n;) {
            try {
                rows[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const int n_threads = std::min(jobs, n);
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

double branch_energy_of(const EnergyDecomposition& dec, Polarization pol,
                        Branch br) {
    for (const BranchEnergy& be : dec.per_branch) {
        if (be.polarization == pol && be.branch == br) return be.energy;
    }
    return 0.0;
}

} // namespace

std::vector<ForceRow> compute_force_rows(const RunConfig& cfg) {
    const std::vector<double> ls = cfg.separations();
    return parallel_rows<ForceRow>(
        static_cast<int>(ls.size()), cfg.jobs, [&](int i) {
            ForceRow row;
            row.separation = ls[static_cast<std::size_t>(i)];
            row.lambda = cfg.mirror_a.electric.strength_freq * row.separation /
                         speed_of_light;
            try {
                const Cavity cavity(cfg.mirror_a, cfg.mirror_b, row.separation);
                const ForceReport rep = casimir_force(cavity, cfg.tolerances);
                row.force = rep.force_per_area;
                row.energy = rep.energy_per_area;
                row.eta_force = rep.eta_force;
                row.eta_energy = rep.eta_energy;
                row.force_te = rep.force_te;
                row.force_tm = rep.force_tm;
                row.abs_error = rep.abs_error_estimate;
            } catch (const non_convergence&) {
                row.converged = false;
                row.force = row.energy = std::nan("");
            }
            return row;
        });
}

std::vector<PlasmonRow> compute_plasmon_rows(const RunConfig& cfg) {
    if (!cfg.mirror_a.plasma_model() || !cfg.mirror_b.plasma_model()) {
        throw config_error(
            "plasmon runs are restricted to plasma-model mirrors: set all "
            "resonance and damping frequencies to zero");
    }
    const std::vector<double> ls = cfg.separations();
    return parallel_rows<PlasmonRow>(
        static_cast<int>(ls.size()), cfg.jobs, [&](int i) {
            PlasmonRow row;
            row.separation = ls[static_cast<std::size_t>(i)];
            row.lambda = cfg.mirror_a.electric.strength_freq * row.separation /
                         speed_of_light;
            try {
                const Cavity cavity(cfg.mirror_a, cfg.mirror_b, row.separation);
                const EnergyDecomposition dec =
                    energy_decomposition(cavity, cfg.tolerances);
                row.total = dec.total;
                row.plasmon = dec.plasmon;
                row.photon = dec.photon;
                row.eta_plasmon = dec.eta_plasmon;
                row.eta_photon = dec.eta_photon;
                row.tm_plus =
                    branch_energy_of(dec, Polarization::TM, Branch::symmetric);
                row.tm_minus = branch_energy_of(dec, Polarization::TM,
                                                Branch::antisymmetric);
                row.te_plus =
                    branch_energy_of(dec, Polarization::TE, Branch::symmetric);
                row.te_minus = branch_energy_of(dec, Polarization::TE,
                                                Branch::antisymmetric);
            } catch (const non_convergence&) {
                row.converged = false;
                row.total = row.plasmon = row.photon = std::nan("");
            }
            return row;
        });
}

std::vector<DispersionRow> compute_dispersion_rows(const RunConfig& cfg) {
    if (!cfg.mirror_a.plasma_model() || !cfg.mirror_b.plasma_model()) {
        throw config_error("dispersion dumps need plasma-model mirrors");
    }
    const double wea = cfg.mirror_a.electric.strength_freq;
    if (!(wea > 0.0) || !(cfg.mirror_b.electric.strength_freq > 0.0)) {
        throw config_error(
            "dispersion dumps need a nonzero epsilon strength on both mirrors");
    }
    const double L = cfg.plasmon_dump.lambda * speed_of_light / wea;
    const Cavity cavity(cfg.mirror_a, cfg.mirror_b, L);
    const PlasmonDumpSpec& d = cfg.plasmon_dump;
    if (!(d.k_count >= 2) || !(0.0 < d.k_min && d.k_min < d.k_max)) {
        throw config_error("dispersion dump needs 0 < k_min < k_max, k_count >= 2");
    }
    std::vector<DispersionRow> rows;
    for (int i = 0; i < d.k_count; ++i) {
        const double t = static_cast<double>(i) / (d.k_count - 1);
        DispersionRow row;
        row.k = (d.k_min + t * (d.k_max - d.k_min)) * wea / speed_of_light;
        auto branch = [&](Branch br) {
            try {
                return coupled_plasmon_branch(cavity, Polarization::TM, br,
                                              row.k);
            } catch (const root_not_found&) {
                return std::nan("");
            }
        };
        row.omega_plus = branch(Branch::symmetric);
        row.omega_minus = branch(Branch::antisymmetric);
        row.omega_sp_a =
            single_surface_plasmon(cavity.mirror_a, Polarization::TM, row.k);
        row.omega_sp_b =
            single_surface_plasmon(cavity.mirror_b, Polarization::TM, row.k);
        rows.push_back(row);
    }
    return rows;
}

std::vector<AsymptoteRow> compute_asymptote_rows(const RunConfig& cfg,
                                                 AsymptoteRegime regime) {
    const Mirror& a = cfg.mirror_a;
    const Mirror& b = cfg.mirror_b;

    // Identify the shapes once so a regime mismatch is reported before any
    // integration starts.
    auto mismatch = [&](const std::string& what) {
        return config_error("asymptote regime mismatch: " + what);
    };
    const Mirror* dielectric = nullptr;
    const Mirror* magnetic = nullptr;
    if (regime == AsymptoteRegime::boyer_short ||
        regime == AsymptoteRegime::boyer_long) {
        for (const Mirror* m : {&a, &b}) {
            if (m->purely_dielectric() && m->electric.strength_freq > 0.0) {
                dielectric = m;
            }
            if (m->purely_magnetic() && m->magnetic.strength_freq > 0.0) {
                magnetic = m;
            }
        }
        if (!dielectric || !magnetic) {
            throw mismatch("the Boyer regimes need one purely dielectric and "
                           "one purely magnetic mirror");
        }
    }
    if (regime == AsymptoteRegime::short_range &&
        (a.electric.strength_freq <= 0.0 || b.electric.strength_freq <= 0.0)) {
        throw mismatch(
            "the short-distance series needs a nonzero electric response on "
            "both mirrors");
    }
    if (regime == AsymptoteRegime::long_range) {
        if (!b.purely_dielectric() || b.electric.strength_freq <= 0.0) {
            throw mismatch("the long-distance law needs a purely dielectric "
                           "mirror B");
        }
        if (a.electric.strength_freq <= 0.0) {
            throw mismatch("the long-distance law needs a dielectric response "
                           "on mirror A");
        }
    }

    const std::vector<double> ls = cfg.separations();
    return parallel_rows<AsymptoteRow>(
        static_cast<int>(ls.size()), cfg.jobs, [&](int i) {
            AsymptoteRow row;
            const double L = ls[static_cast<std::size_t>(i)];
            row.separation = L;
            row.lambda =
                cfg.mirror_a.electric.strength_freq * L / speed_of_light;
            try {
                switch (regime) {
                case AsymptoteRegime::short_range:
                    row.force_asymptote =
                        ShortDistanceParams::from_mirror(b).omega2 <=
                                ShortDistanceParams::from_mirror(a).omega2
                            ? short_distance_force_series(a, b, L)
                            : short_distance_force_series(b, a, L);
                    break;
                case AsymptoteRegime::long_range:
                    if (a.purely_dielectric()) {
                        row.force_asymptote =
                            long_distance_eta_dielectric(
                                a.electric.plasma_wavelength(),
                                b.electric.plasma_wavelength(), L) *
                            ideal_casimir_force(L);
                    } else {
                        row.force_asymptote =
                            long_distance_eta_magnetodielectric(
                                a.magnetic.strength_freq /
                                a.electric.strength_freq) *
                            ideal_casimir_force(L);
                    }
                    break;
                case AsymptoteRegime::boyer_short:
                    row.force_asymptote = boyer_short_distance_force(
                        magnetic->magnetic.strength_freq,
                        dielectric->electric.strength_freq, L);
                    break;
                case AsymptoteRegime::boyer_long:
                    row.force_asymptote =
                        boyer_long_distance_eta(
                            dielectric->electric.plasma_wavelength(),
                            magnetic->magnetic.plasma_wavelength(), L) *
                        ideal_casimir_force(L);
                    break;
                }
                const Cavity cavity(a, b, L);
                row.force_full =
                    casimir_force(cavity, cfg.tolerances).force_per_area;
                row.rel_deviation =
                    row.force_asymptote / row.force_full - 1.0;
            } catch (const out_of_regime& e) {
                throw config_error(std::string("asymptote regime mismatch: ") +
                                   e.what());
            } catch (const non_convergence&) {
                row.converged = false;
                row.force_full = row.rel_deviation = std::nan("");
            }
            return row;
        });
}

ThresholdReport compute_threshold_report() {
    ThresholdReport rep;
    rep.alpha0 = repulsion_threshold();
    rep.bracket_lo = 1.0;
    rep.bracket_hi = 1.1;
    rep.eta_at_1 = long_distance_eta_magnetodielectric(1.0);
    rep.eta_below = long_distance_eta_magnetodielectric(rep.alpha0 - 0.01);
    rep.eta_above = long_distance_eta_magnetodielectric(rep.alpha0 + 0.01);
    return rep;
}

// ---- serialization ---------------------------------------------------

std::string format_sci(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 11);
    (void)ec;
    return std::string(buf, ptr);
}

namespace {

void append_row(std::string& out, std::initializer_list<double> vals,
                const char* status) {
    bool first = true;
    for (double v : vals) {
        if (!first) out += ',';
        out += format_sci(v);
        first = false;
    }
    if (status) {
        out += ',';
        out += status;
    }
    out += '\n';
}

const char* status_of(bool converged) {
    return converged ? "ok" : "non-convergence";
}

} // namespace

std::string force_rows_csv(const std::vector<ForceRow>& rows) {
    std::string out =
        "lambda,L_m,F_N_per_m2,E_J_per_m2,eta_F,eta_E,F_TE,F_TM,abs_error,"
        "status\n";
    for (const ForceRow& r : rows) {
        append_row(out,
                   {r.lambda, r.separation, r.force, r.energy, r.eta_force,
                    r.eta_energy, r.force_te, r.force_tm, r.abs_error},
                   status_of(r.converged));
    }
    return out;
}

std::string plasmon_rows_csv(const std::vector<PlasmonRow>& rows) {
    std::string out =
        "lambda,L_m,E_total,E_plasmon,E_photon,eta_plasmon,eta_photon,"
        "E_TM_plus,E_TM_minus,E_TE_plus,E_TE_minus,status\n";
    for (const PlasmonRow& r : rows) {
        append_row(out,
                   {r.lambda, r.separation, r.total, r.plasmon, r.photon,
                    r.eta_plasmon, r.eta_photon, r.tm_plus, r.tm_minus,
                    r.te_plus, r.te_minus},
                   status_of(r.converged));
    }
    return out;
}

std::string dispersion_rows_csv(const std::vector<DispersionRow>& rows) {
    std::string out = "k_per_m,omega_plus,omega_minus,omega_sp_A,omega_sp_B\n";
    for (const DispersionRow& r : rows) {
        append_row(out,
                   {r.k, r.omega_plus, r.omega_minus, r.omega_sp_a,
                    r.omega_sp_b},
                   nullptr);
    }
    return out;
}

std::string asymptote_rows_csv(const std::vector<AsymptoteRow>& rows) {
    std::string out = "lambda,L_m,F_asymptote,F_full,rel_deviation,status\n";
    for (const AsymptoteRow& r : rows) {
        append_row(out,
                   {r.lambda, r.separation, r.force_asymptote, r.force_full,
                    r.rel_deviation},
                   status_of(r.converged));
    }
    return out;
}

std::string threshold_text(const ThresholdReport& rep) {
    std::string out;
    out += "alpha0 = " + format_sci(rep.alpha0) + "  (bracket [" +
           format_sci(rep.bracket_lo) + ", " + format_sci(rep.bracket_hi) +
           "])\n";
    out += "eta(1) = " + format_sci(rep.eta_at_1) + "\n";
    out += "eta(alpha0 - 0.01) = " + format_sci(rep.eta_below) + "\n";
    out += "eta(alpha0 + 0.01) = " + format_sci(rep.eta_above) + "\n";
    return out;
}

namespace {

nlohmann::json config_json(const RunConfig& cfg) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [key, value] : cfg.raw) obj[key] = value;
    return obj;
}

} // namespace

std::string force_rows_json(const RunConfig& cfg,
                            const std::vector<ForceRow>& rows) {
    nlohmann::json doc;
    doc["config"] = config_json(cfg);
    doc["columns"] = {"lambda", "L_m",   "F_N_per_m2", "E_J_per_m2",
                      "eta_F",  "eta_E", "F_TE",       "F_TM",
                      "abs_error", "status"};
    nlohmann::json out_rows = nlohmann::json::array();
    for (const ForceRow& r : rows) {
        out_rows.push_back({r.lambda, r.separation, r.force, r.energy,
                            r.eta_force, r.eta_energy, r.force_te, r.force_tm,
                            r.abs_error, status_of(r.converged)});
    }
    doc["rows"] = std::move(out_rows);
    return doc.dump(2) + "\n";
}

std::string plasmon_rows_json(const RunConfig& cfg,
                              const std::vector<PlasmonRow>& rows,
                              const std::vector<DispersionRow>& dump) {
    nlohmann::json doc;
    doc["config"] = config_json(cfg);
    doc["columns"] = {"lambda",      "L_m",        "E_total",   "E_plasmon",
                      "E_photon",    "eta_plasmon", "eta_photon", "E_TM_plus",
                      "E_TM_minus",  "E_TE_plus",  "E_TE_minus", "status"};
    nlohmann::json out_rows = nlohmann::json::array();
    for (const PlasmonRow& r : rows) {
        out_rows.push_back({r.lambda, r.separation, r.total, r.plasmon,
                            r.photon, r.eta_plasmon, r.eta_photon, r.tm_plus,
                            r.tm_minus, r.te_plus, r.te_minus,
                            status_of(r.converged)});
    }
    doc["rows"] = std::move(out_rows);
    if (!dump.empty()) {
        nlohmann::json d = nlohmann::json::array();
        for (const DispersionRow& r : dump) {
            d.push_back({r.k, r.omega_plus, r.omega_minus, r.omega_sp_a,
                         r.omega_sp_b});
        }
        doc["dispersion_columns"] = {"k_per_m", "omega_plus", "omega_minus",
                                     "omega_sp_A", "omega_sp_B"};
        doc["dispersion_rows"] = std::move(d);
    }
    return doc.dump(2) + "\n";
}

std::string asymptote_rows_json(const RunConfig& cfg,
                                const std::vector<AsymptoteRow>& rows) {
    nlohmann::json doc;
    doc["config"] = config_json(cfg);
    doc["columns"] = {"lambda", "L_m", "F_asymptote", "F_full",
                      "rel_deviation", "status"};
    nlohmann::json out_rows = nlohmann::json::array();
    for (const AsymptoteRow& r : rows) {
        out_rows.push_back({r.lambda, r.separation, r.force_asymptote,
                            r.force_full, r.rel_deviation,
                            status_of(r.converged)});
    }
    doc["rows"] = std::move(out_rows);
    return doc.dump(2) + "\n";
}

std::string threshold_json(const ThresholdReport& rep) {
    nlohmann::json doc;
    doc["alpha0"] = rep.alpha0;
    doc["bracket"] = {rep.bracket_lo, rep.bracket_hi};
    doc["eta_at_1"] = rep.eta_at_1;
    doc["eta_below"] = rep.eta_below;
    doc["eta_above"] = rep.eta_above;
    return doc.dump(2) + "\n";
}

} // namespace casimir
