#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tunnelwell/exact.hpp"
#include "tunnelwell/semiclassical.hpp"
#include "tunnelwell/twolevel.hpp"

using json = nlohmann::json;
using namespace tunnelwell;

namespace {

constexpr int kExitGeometry = 2;
constexpr int kExitConfig = 3;
constexpr int kExitResonance = 4;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Config {
    json doc;
    std::string raw;
    std::string prefix = "tunnelwell";
    bool emit_plot = false;
};

Config load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    Config cfg;
    cfg.raw = ss.str();
    try {
        cfg.doc = json::parse(cfg.raw);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (cfg.doc.contains("output")) {
        const auto& out = cfg.doc.at("output");
        if (out.contains("prefix")) cfg.prefix = out.at("prefix").get<std::string>();
        if (out.contains("emit_plot_script")) cfg.emit_plot = out.at("emit_plot_script").get<bool>();
    }
    return cfg;
}

double require_num(const json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw ConfigError("missing or non-numeric key '" + key + "'");
    }
    return j.at(key).get<double>();
}

const json& require_block(const json& doc, const std::string& key) {
    if (!doc.contains(key) || !doc.at(key).is_object()) {
        throw ConfigError("missing config block '" + key + "'");
    }
    return doc.at(key);
}

struct PotentialSpec {
    std::string kind; // "quartic" | "parabolic" | "custom"
    double v0 = 0, eta = 0;
    std::string expr_text;
    std::map<std::string, double> bindings;
    std::pair<double, double> window{0, 0};
};

PotentialSpec read_potential_spec(const json& doc) {
    const json& p = require_block(doc, "potential");
    PotentialSpec spec;
    if (p.contains("expr")) {
        spec.kind = "custom";
        spec.expr_text = p.at("expr").get<std::string>();
        if (p.contains("params")) {
            for (const auto& [k, v] : p.at("params").items()) {
                if (!v.is_number()) throw ConfigError("non-numeric value for param '" + k + "'");
                spec.bindings[k] = v.get<double>();
            }
        }
        if (!p.contains("window") || !p.at("window").is_array() || p.at("window").size() != 2) {
            throw ConfigError("custom potential requires 'window': [x_min, x_max]");
        }
        spec.window = {p.at("window")[0].get<double>(), p.at("window")[1].get<double>()};
        return spec;
    }
    if (!p.contains("kind")) throw ConfigError("potential needs 'kind' or 'expr'");
    spec.kind = p.at("kind").get<std::string>();
    if (spec.kind != "quartic" && spec.kind != "parabolic") {
        throw ConfigError("unknown potential kind '" + spec.kind + "'");
    }
    spec.v0 = require_num(p, "V0");
    spec.eta = p.contains("eta") ? require_num(p, "eta") : 0.0;
    return spec;
}

Potential make_potential(const PotentialSpec& spec) {
    if (spec.kind == "quartic") return Potential::quartic(spec.v0, spec.eta);
    if (spec.kind == "parabolic") return Potential::parabolic(spec.v0, spec.eta);
    return Potential::custom(parse(spec.expr_text), spec.bindings, spec.window);
}

Potential make_family(const PotentialSpec& spec, double v0, double eta) {
    if (spec.kind == "quartic") return Potential::quartic(v0, eta);
    if (spec.kind == "parabolic") return Potential::parabolic(v0, eta);
    throw ConfigError("this command sweeps a built-in family; set potential.kind");
}

class CsvFile {
public:
    CsvFile(const std::string& path, const std::string& command, const Config& cfg,
            const std::string& header)
        : path_(path), out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("cannot write " + path);
        out_ << "# tunnelwell " << command << "\n";
        out_ << "# config-hash: " << fnv1a_hex(cfg.raw) << "\n";
        out_ << "# units: hbar = m = 1, omega_ref = 1\n";
        out_ << header << "\n";
    }
    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ",";
            out_ << cells[i];
        }
        out_ << "\n";
    }
    void comment(const std::string& line) { out_ << "# " << line << "\n"; }
    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ofstream out_;
};

void emit_gnuplot(const std::string& csv_path, const std::string& title,
                  const std::vector<std::pair<int, std::string>>& columns) {
    const std::string gp = csv_path.substr(0, csv_path.rfind('.')) + ".gp";
    std::ofstream out(gp, std::ios::binary);
    out << "set datafile separator ','\n";
    out << "set key outside\n";
    out << "set title '" << title << "'\n";
    out << "plot ";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out << ", ";
        out << "'" << csv_path << "' using 1:" << columns[i].first
            << " with lines title '" << columns[i].second << "'";
    }
    out << "\n";
}

std::string join_warnings(const std::vector<std::string>& ws) {
    std::string s;
    for (const auto& w : ws) {
        if (!s.empty()) s += ';';
        s += w;
    }
    return s.empty() ? "-" : s;
}

int cmd_characterize(const Config& cfg) {
    const Potential p = make_potential(read_potential_spec(cfg.doc));
    const WellGeometry g = characterize(p);
    CsvFile csv(cfg.prefix + "_characterize.csv", "characterize", cfg,
                "a_L,a_C,a_R,omega_L,omega_R,eps_L,eps_R,V_top,warnings");
    csv.row({fmt(g.a_L), fmt(g.a_C), fmt(g.a_R), fmt(g.omega_L), fmt(g.omega_R),
             fmt(g.eps_L), fmt(g.eps_R), fmt(g.v_top), join_warnings(g.warnings)});
    std::cout << csv.path() << "\n";
    return 0;
}

int cmd_amplitude(const Config& cfg) {
    const PotentialSpec spec = read_potential_spec(cfg.doc);
    const Potential p = make_potential(spec);
    const TunnelingResult r = tunneling_amplitude(p);
    CsvFile csv(cfg.prefix + "_amplitude.csv", "amplitude", cfg,
                "eta,nu_L,nu_R,A,nu,delta_eps,Omega,S_L,S_R,C_L,C_R");
    for (const auto& d : r.diagnostics) csv.comment("diagnostic: " + d);
    csv.row({fmt(spec.eta), fmt(r.nu_L), fmt(r.nu_R), fmt(r.A), fmt(r.nu),
             fmt(r.delta_eps), fmt(r.omega_rabi), fmt(r.S_L), fmt(r.S_R),
             fmt(r.C_L), fmt(r.C_R)});
    std::cout << csv.path() << "\n";
    return 0;
}

int cmd_sweep(const Config& cfg) {
    const PotentialSpec spec = read_potential_spec(cfg.doc);
    const json& blk = require_block(cfg.doc, "sweep");
    const double eta_min = require_num(blk, "eta_min");
    const double eta_max = require_num(blk, "eta_max");
    const double eta_step = require_num(blk, "eta_step");
    if (!(eta_step > 0.0) || !(eta_min < eta_max)) {
        throw ConfigError("sweep: requires eta_min < eta_max and eta_step > 0");
    }
    std::vector<double> v0s;
    if (blk.contains("v0_values")) {
        for (const auto& v : blk.at("v0_values")) v0s.push_back(v.get<double>());
    } else {
        v0s.push_back(spec.v0);
    }
    if (v0s.empty()) throw ConfigError("sweep: v0_values must be nonempty");

    for (double v0 : v0s) {
        const double nu0 = tunneling_amplitude(make_family(spec, v0, spec.kind == "quartic" ? 0.0 : 0.0)).nu;
        CsvFile csv(cfg.prefix + "_sweep_V0_" + fmt(v0) + ".csv", "sweep", cfg,
                    "eta,nu_ratio,nu,delta_eps,Omega,resonance_flag");
        csv.comment("V0/(hbar*omega) = " + fmt(v0));
        const int steps = static_cast<int>(std::floor((eta_max - eta_min) / eta_step + 1e-9));
        for (int i = 0; i <= steps; ++i) {
            const double eta = eta_min + i * eta_step;
            try {
                const TunnelingResult r = tunneling_amplitude(make_family(spec, v0, eta));
                csv.row({fmt(eta), fmt(r.nu / nu0), fmt(r.nu), fmt(r.delta_eps),
                         fmt(r.omega_rabi), "0"});
            } catch (const ResonanceRegime&) {
                csv.row({fmt(eta), "nan", "nan", "nan", "nan", "1"});
                break; // curve truncated at the two-level validity boundary
            } catch (const AsymmetryTooLarge&) {
                csv.row({fmt(eta), "nan", "nan", "nan", "nan", "1"});
                break;
            }
        }
        if (cfg.emit_plot) {
            emit_gnuplot(csv.path(), "nu(eta)/nu(0), V0 = " + fmt(v0), {{2, "nu/nu0"}});
        }
        std::cout << csv.path() << "\n";
    }
    return 0;
}

int cmd_exact_compare(const Config& cfg) {
    const PotentialSpec spec = read_potential_spec(cfg.doc);
    const json& blk = require_block(cfg.doc, "grid");
    const double v0_min = require_num(blk, "v0_min");
    const double v0_max = require_num(blk, "v0_max");
    const double v0_step = require_num(blk, "v0_step");
    if (!(v0_step > 0.0) || !(v0_min <= v0_max)) {
        throw ConfigError("grid: requires v0_min <= v0_max and v0_step > 0");
    }
    const int n = blk.contains("N") ? static_cast<int>(require_num(blk, "N")) : 200;
    const double m = blk.contains("M") ? require_num(blk, "M") : 8.0;

    CsvFile csv(cfg.prefix + "_exact_compare.csv", "exact-compare", cfg,
                "V0,splitting_exact,gap_semiclassical,rel_diff,converged");
    csv.comment("eta = " + fmt(spec.eta));
    const int steps = static_cast<int>(std::floor((v0_max - v0_min) / v0_step + 1e-9));
    for (int i = 0; i <= steps; ++i) {
        const double v0 = v0_min + i * v0_step;
        const Potential p = make_family(spec, v0, spec.eta);
        const TunnelingResult r = tunneling_amplitude(p);
        const SpectrumResult s = splitting_exact(p, n, m);
        const double rel = std::abs(r.omega_rabi - s.splitting) / s.splitting;
        csv.row({fmt(v0), fmt(s.splitting), fmt(r.omega_rabi), fmt(rel),
                 s.converged ? "1" : "0"});
    }
    if (cfg.emit_plot) {
        emit_gnuplot(csv.path(), "exact vs semiclassical splitting",
                     {{2, "E1-E0"}, {3, "hbar*Omega"}});
    }
    std::cout << csv.path() << "\n";
    return 0;
}

int cmd_zeno(const Config& cfg) {
    const json& blk = require_block(cfg.doc, "zeno");
    const double nu0 = blk.contains("nu0") ? require_num(blk, "nu0") : 1.0;
    const double nu1_ratio = blk.contains("nu1_ratio") ? require_num(blk, "nu1_ratio") : 0.005;
    const double t1_over_t0 = blk.contains("t1_over_t0") ? require_num(blk, "t1_over_t0") : 0.125;
    const double t0_over_T = blk.contains("t0_over_T") ? require_num(blk, "t0_over_T") : 1.0 / 16.0;
    const double horizon_over_T =
        blk.contains("horizon_over_T") ? require_num(blk, "horizon_over_T") : 1.0;
    const int samples = blk.contains("samples") ? static_cast<int>(require_num(blk, "samples")) : 1000;
    if (samples < 2) throw ConfigError("zeno: samples must be >= 2");

    const double big_t = M_PI / (2.0 * nu0); // half Rabi period of the constant drive
    ZenoSchedule sch;
    sch.nu0 = nu0;
    sch.nu1 = nu1_ratio * nu0;
    sch.t0 = t0_over_T * big_t;
    sch.t1 = t1_over_t0 * sch.t0;
    sch.horizon = horizon_over_T * big_t;
    try {
        phase_integral(sch, 0.0); // validates the schedule
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    CsvFile csv(cfg.prefix + "_zeno.csv", "zeno", cfg,
                "t,P_L_schedule,P_L_const,nu_ratio");
    if (cfg.doc.contains("potential")) {
        const WellGeometry g = characterize(make_potential(read_potential_spec(cfg.doc)));
        if (auto w = zeno_adiabaticity_warning(sch, std::min(g.omega_L, g.omega_R))) {
            csv.comment("warning: " + *w);
        }
    }
    for (int i = 0; i <= samples; ++i) {
        const double t = sch.horizon * i / samples;
        const double pl = zeno_probability(sch, t);
        const double c = std::cos(nu0 * t);
        csv.row({fmt(t), fmt(pl), fmt(c * c), fmt(schedule_nu(sch, t) / nu0)});
    }
    if (cfg.emit_plot) {
        emit_gnuplot(csv.path(), "quantum Zeno suppression",
                     {{2, "P_L schedule"}, {3, "P_L const"}, {4, "nu(t)/nu0"}});
    }
    std::cout << csv.path() << "\n";
    return 0;
}

int dispatch(const std::string& command, const Config& cfg) {
    if (command == "characterize") return cmd_characterize(cfg);
    if (command == "amplitude") return cmd_amplitude(cfg);
    if (command == "sweep") return cmd_sweep(cfg);
    if (command == "exact-compare") return cmd_exact_compare(cfg);
    if (command == "zeno") return cmd_zeno(cfg);
    throw ConfigError("unknown command '" + command + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tunneling amplitudes for 1-D asymmetric double-well potentials"};
    app.require_subcommand(1);
    std::string config_path;
    std::string out_prefix;
    bool plot = false;
    for (const char* name :
         {"characterize", "amplitude", "sweep", "exact-compare", "zeno"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON config file")->required();
        sub->add_option("--out", out_prefix, "output path prefix");
        sub->add_flag("--plot", plot, "emit a gnuplot script next to each CSV");
    }
    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        Config cfg = load_config(config_path);
        if (!out_prefix.empty()) cfg.prefix = out_prefix;
        if (plot) cfg.emit_plot = true;
        return dispatch(command, cfg);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const SyntaxError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const MissingBinding& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ResonanceRegime& e) {
        std::cerr << "resonance regime: " << e.what() << "\n";
        return kExitResonance;
    } catch (const NotDoubleWell& e) {
        std::cerr << "geometry error: " << e.what() << "\n";
        return kExitGeometry;
    } catch (const AsymmetryTooLarge& e) {
        std::cerr << "geometry error: " << e.what() << "\n";
        return kExitGeometry;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
