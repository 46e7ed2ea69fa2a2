// crlh — command-line front end for the CRLH-TL thermal response library.
//
// Subcommands: eval, sweep, bands, threshold, calibrate, figure.
// Machine-readable payloads (JSON or CSV) go to standard output or the -o
// file; human-oriented summaries and diagnostics go to standard error.
//
// Option resolution: flag values override config-file values, which override
// preset values, which override library defaults. Exit codes: 0 success,
// 2 usage or validation error, 3 numeric failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crlh/crlh.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct CommonFlags {
    std::string config_path;
    std::string preset;
    std::optional<double> c_l, l_l, c_r, l_r, z0;
    std::optional<int> n;
    std::optional<double> temperature;
    std::optional<double> fluctuation;
    std::optional<double> omega_ghz;
    std::optional<double> omega_rad_s;
    std::string convention;
    std::optional<double> hbar;
    std::optional<double> k_b;
};

struct Resolved {
    crlh::UnitCellParams params{};
    crlh::ThermalFockState state{0, 300.0, 1.0};
    std::optional<double> omega;
    crlh::CothConvention convention = crlh::CothConvention::PaperEq14;
    crlh::PhysicalConstants constants{};
    std::optional<crlh::FigurePreset> preset;
    json config;  // raw config file, empty object when absent
};

crlh::CothConvention parse_convention(const std::string& name) {
    if (name == "paper" || name == "paper_eq14") return crlh::CothConvention::PaperEq14;
    if (name == "tfd" || name == "standard_tfd") return crlh::CothConvention::StandardTFD;
    throw std::invalid_argument("unknown convention '" + name +
                                "' (expected paper_eq14 or standard_tfd)");
}

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config file '" + path + "': " + e.what());
    }
    if (!j.is_object()) {
        throw std::invalid_argument("config file must contain a JSON object");
    }
    return j;
}

// Fetch config["section"]["key"] as double when present.
std::optional<double> config_number(const json& cfg, const char* section, const char* key) {
    if (!cfg.contains(section)) return std::nullopt;
    const json& s = cfg.at(section);
    if (!s.is_object() || !s.contains(key)) return std::nullopt;
    return s.at(key).get<double>();
}

Resolved resolve_common(const CommonFlags& f) {
    Resolved r;
    r.config = json::object();
    if (!f.config_path.empty()) {
        r.config = load_config(f.config_path);
    }

    // preset: flag wins over config
    std::string preset_name = f.preset;
    if (preset_name.empty() && r.config.contains("preset")) {
        preset_name = r.config.at("preset").get<std::string>();
    }
    if (!preset_name.empty()) {
        r.preset = crlh::parse_preset(preset_name);
    }

    // convention
    if (!f.convention.empty()) {
        r.convention = parse_convention(f.convention);
    } else if (r.config.contains("convention")) {
        r.convention = parse_convention(r.config.at("convention").get<std::string>());
    }

    // physical constants
    if (auto v = config_number(r.config, "constants", "hbar")) r.constants.hbar = *v;
    if (auto v = config_number(r.config, "constants", "k_b")) r.constants.k_b = *v;
    if (f.hbar) r.constants.hbar = *f.hbar;
    if (f.k_b) r.constants.k_b = *f.k_b;

    // unit-cell parameters: preset, then config, then flags
    bool have_params = false;
    std::optional<double> explicit_z0;
    if (r.preset) {
        r.params = crlh::preset_params(*r.preset);
        r.state = crlh::preset_anchor_state(*r.preset);
        const auto anchor = crlh::preset_anchor(*r.preset);
        if (*r.preset != crlh::FigurePreset::Fig2) {
            r.omega = anchor.omega;  // fig3/fig4 operate at a fixed frequency
        }
        have_params = true;
    }
    std::optional<double> cfg_cl = config_number(r.config, "params", "c_l");
    std::optional<double> cfg_ll = config_number(r.config, "params", "l_l");
    std::optional<double> cfg_cr = config_number(r.config, "params", "c_r");
    std::optional<double> cfg_lr = config_number(r.config, "params", "l_r");
    if (auto v = config_number(r.config, "params", "z0")) explicit_z0 = *v;
    if (cfg_cl) r.params.c_l = *cfg_cl;
    if (cfg_ll) r.params.l_l = *cfg_ll;
    if (cfg_cr) r.params.c_r = *cfg_cr;
    if (cfg_lr) r.params.l_r = *cfg_lr;
    if (f.c_l) r.params.c_l = *f.c_l;
    if (f.l_l) r.params.l_l = *f.l_l;
    if (f.c_r) r.params.c_r = *f.c_r;
    if (f.l_r) r.params.l_r = *f.l_r;
    if (f.z0) explicit_z0 = *f.z0;
    if (!have_params) {
        const bool all = (cfg_cl || f.c_l) && (cfg_ll || f.l_l) && (cfg_cr || f.c_r) &&
                         (cfg_lr || f.l_r);
        if (!all) {
            throw std::invalid_argument(
                "unit-cell parameters required: give --preset or all of --cl --ll --cr --lr");
        }
    }

    // thermal state
    if (auto v = config_number(r.config, "state", "n")) r.state.n = static_cast<int>(*v);
    if (auto v = config_number(r.config, "state", "temperature")) r.state.temperature = *v;
    if (auto v = config_number(r.config, "state", "current_fluctuation")) {
        r.state.current_fluctuation = *v;
    }
    if (f.n) {
        r.state.n = *f.n;
    }
    if (f.temperature) r.state.temperature = *f.temperature;
    if (f.fluctuation) r.state.current_fluctuation = *f.fluctuation;

    // evaluation frequency
    if (r.config.contains("omega")) r.omega = r.config.at("omega").get<double>();
    if (f.omega_ghz) r.omega = *f.omega_ghz * 1e9;  // paper axis convention
    if (f.omega_rad_s) r.omega = *f.omega_rad_s;

    // cell length: explicit value wins; presets calibrate; else library default
    if (explicit_z0) {
        r.params.z0 = *explicit_z0;
    } else if (r.preset) {
        r.params.z0 = crlh::calibrate_z0(r.params, crlh::preset_anchor_state(*r.preset),
                                         crlh::preset_anchor(*r.preset), r.convention,
                                         r.constants);
    }
    return r;
}

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_path, "JSON config file (see docs/config.schema.json)");
    cmd->add_option("--preset", f.preset, "built-in unit cell: fig2, fig3, or fig4");
    cmd->add_option("--cl", f.c_l, "series capacitance C_l [F]");
    cmd->add_option("--ll", f.l_l, "shunt inductance L_l [H]");
    cmd->add_option("--cr", f.c_r, "shunt capacitance C_r [F]");
    cmd->add_option("--lr", f.l_r, "series inductance L_r [H]");
    cmd->add_option("--z0", f.z0, "cell length [m]; presets calibrate it when omitted");
    cmd->add_option("--n", f.n, "field photon number (nonnegative integer)");
    cmd->add_option("--temp", f.temperature, "temperature [K]");
    cmd->add_option("--fluct", f.fluctuation, "current fluctuation <(di)^2> [A^2]");
    auto* ghz = cmd->add_option("--omega-ghz", f.omega_ghz,
                                "angular frequency as X -> X*1e9 rad/s");
    auto* rads = cmd->add_option("--omega-rad-s", f.omega_rad_s, "angular frequency [rad/s]");
    ghz->excludes(rads);
    cmd->add_option("--convention", f.convention,
                    "coth argument convention: paper_eq14 (default) or standard_tfd");
    cmd->add_option("--hbar", f.hbar, "override reduced Planck constant [J s]");
    cmd->add_option("--kb", f.k_b, "override Boltzmann constant [J/K]");
}

double require_omega(const Resolved& r) {
    if (!r.omega) {
        throw std::invalid_argument("an evaluation frequency is required: --omega-ghz or --omega-rad-s");
    }
    return *r.omega;
}

ordered_json crossing_to_json(const crlh::CrossingResult& c) {
    return {{"location", c.location},
            {"bracket_lo", c.bracket_lo},
            {"bracket_hi", c.bracket_hi},
            {"achieved_tolerance", c.achieved_tolerance},
            {"side", c.side == crlh::CrossingSide::NegativeToPositive ? "negative_to_positive"
                                                                      : "positive_to_negative"}};
}

enum class OutputFormat { Csv, Json, Gnuplot };

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "gnuplot") return OutputFormat::Gnuplot;
    throw std::invalid_argument("unknown format '" + name + "' (expected csv, json, gnuplot)");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file '" + path + "'");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("failed writing output file '" + path + "'");
    }
}

std::string csv_sibling_path(const std::string& script_path) {
    const std::size_t dot = script_path.rfind('.');
    const std::size_t slash = script_path.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return script_path + ".csv";
    }
    return script_path.substr(0, dot) + ".csv";
}

// Emit a sweep result in the requested format. Gnuplot output writes the
// referenced CSV next to the script, so it needs a file path.
void emit_sweep(const crlh::SweepResult& result, OutputFormat format, const std::string& path) {
    if (format == OutputFormat::Gnuplot && path.empty()) {
        throw std::invalid_argument("gnuplot output requires -o/--output");
    }
    std::string payload;
    switch (format) {
        case OutputFormat::Csv: payload = crlh::to_csv(result); break;
        case OutputFormat::Json: payload = crlh::to_json_string(result); break;
        case OutputFormat::Gnuplot: {
            const std::string csv_path = csv_sibling_path(path);
            write_file(csv_path, crlh::to_csv(result));
            const std::size_t slash = csv_path.find_last_of("/\\");
            payload = crlh::to_gnuplot(
                result, slash == std::string::npos ? csv_path : csv_path.substr(slash + 1));
            break;
        }
    }
    if (path.empty()) {
        std::cout << payload;
    } else {
        write_file(path, payload);
    }
}

// Sign summary plus per-series crossings on the sweep axis, for the figure
// command.
void print_sign_summary(const crlh::SweepResult& result) {
    std::size_t mu_negative = 0;
    std::size_t eps_negative = 0;
    for (const auto& rec : result.records) {
        mu_negative += rec.mu_eff < 0.0;
        eps_negative += rec.epsilon_eff < 0.0;
    }
    std::fprintf(stderr, "mu_eff < 0 at %zu/%zu records; epsilon_eff < 0 at %zu/%zu records\n",
                 mu_negative, result.records.size(), eps_negative, result.records.size());
}

void print_series_crossings(const crlh::SweepResult& result) {
    const crlh::SweepSpec& spec = result.spec;
    for (std::size_t i = 0; i < spec.series.size(); ++i) {
        crlh::ThermalFockState state = spec.base_state;
        switch (spec.series[i].kind) {
            case crlh::SeriesOverride::Kind::Temperature:
                state.temperature = spec.series[i].value;
                break;
            case crlh::SeriesOverride::Kind::PhotonNumber:
                state.n = static_cast<int>(spec.series[i].value);
                break;
            case crlh::SeriesOverride::Kind::Fluctuation:
                state.current_fluctuation = spec.series[i].value;
                break;
        }
        const double tol = crlh::default_crossing_tol(spec.grid.lo, spec.grid.hi);
        std::vector<crlh::CrossingResult> crossings;
        if (spec.axis == crlh::SweepAxis::Omega) {
            crossings = crlh::find_epsilon_zero_in_omega(spec.params, state, spec.grid.lo,
                                                         spec.grid.hi, spec.convention, tol,
                                                         crlh::kDefaultScanPoints,
                                                         spec.constants);
        } else {
            crossings = crlh::find_epsilon_zero_in_temperature(
                spec.params, state, *spec.omega, spec.grid.lo, spec.grid.hi, spec.convention,
                tol, crlh::kDefaultScanPoints, spec.constants);
        }
        std::fprintf(stderr, "series %s: ", result.series_labels[i].c_str());
        if (crossings.empty()) {
            std::fprintf(stderr, "no epsilon zero in range\n");
        } else {
            for (std::size_t k = 0; k < crossings.size(); ++k) {
                std::fprintf(stderr, "%sepsilon zero at %.9g %s", k ? ", " : "",
                             crossings[k].location,
                             spec.axis == crlh::SweepAxis::Omega ? "rad/s" : "K");
            }
            std::fprintf(stderr, "\n");
        }
    }
}

int run(int argc, char** argv) {
    CLI::App app{"thermal-quantum effective response of a mesoscopic CRLH-TL unit cell"};
    app.require_subcommand(1);

    // ----- eval -----
    CommonFlags eval_flags;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate epsilon, mu, handedness at one point");
    add_common_flags(eval_cmd, eval_flags);

    // ----- sweep -----
    CommonFlags sweep_flags;
    std::string sweep_axis, sweep_spacing, sweep_format = "csv", sweep_output;
    std::optional<double> sweep_lo, sweep_hi;
    std::optional<int> sweep_count;
    std::vector<double> sweep_series_temp, sweep_series_n, sweep_series_fluct;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep the response over a grid");
    add_common_flags(sweep_cmd, sweep_flags);
    sweep_cmd->add_option("--axis", sweep_axis, "sweep axis: omega or temperature");
    sweep_cmd->add_option("--lo", sweep_lo, "grid lower bound");
    sweep_cmd->add_option("--hi", sweep_hi, "grid upper bound");
    sweep_cmd->add_option("--count", sweep_count, "grid point count (default 256)");
    sweep_cmd->add_option("--spacing", sweep_spacing, "grid spacing: linear or log");
    sweep_cmd->add_option("--series-temp", sweep_series_temp, "temperatures, one curve each")
        ->delimiter(',');
    sweep_cmd->add_option("--series-n", sweep_series_n, "photon numbers, one curve each")
        ->delimiter(',');
    sweep_cmd->add_option("--series-fluct", sweep_series_fluct, "fluctuations, one curve each")
        ->delimiter(',');
    sweep_cmd->add_option("--format", sweep_format, "output format: csv, json, gnuplot");
    sweep_cmd->add_option("-o,--output", sweep_output, "output file (default: stdout)");

    // ----- bands -----
    CommonFlags bands_flags;
    double bands_lo = 0.5e9, bands_hi = 5e9;
    std::optional<double> bands_tol;
    CLI::App* bands_cmd =
        app.add_subcommand("bands", "locate epsilon zero crossings along frequency");
    add_common_flags(bands_cmd, bands_flags);
    bands_cmd->add_option("--omega-lo", bands_lo, "search interval lower bound [rad/s]");
    bands_cmd->add_option("--omega-hi", bands_hi, "search interval upper bound [rad/s]");
    bands_cmd->add_option("--tol", bands_tol, "bisection tolerance [rad/s]");

    // ----- threshold -----
    CommonFlags thr_flags;
    double thr_lo = 5.0, thr_hi = 300.0;
    std::optional<double> thr_tol;
    CLI::App* thr_cmd =
        app.add_subcommand("threshold", "locate the epsilon zero crossing along temperature");
    add_common_flags(thr_cmd, thr_flags);
    thr_cmd->add_option("--t-lo", thr_lo, "search interval lower bound [K]");
    thr_cmd->add_option("--t-hi", thr_hi, "search interval upper bound [K]");
    thr_cmd->add_option("--tol", thr_tol, "bisection tolerance [K]");

    // ----- calibrate -----
    CommonFlags cal_flags;
    CLI::App* cal_cmd = app.add_subcommand(
        "calibrate", "back-solve the cell length z0 from an epsilon = 0 anchor");
    add_common_flags(cal_cmd, cal_flags);

    // ----- figure -----
    std::string fig_name, fig_format = "csv", fig_output, fig_convention;
    std::optional<double> fig_hbar, fig_kb;
    CLI::App* fig_cmd =
        app.add_subcommand("figure", "reproduce a built-in parameter study as a dataset");
    fig_cmd->add_option("name", fig_name, "fig2, fig3, or fig4")->required();
    fig_cmd->add_option("--convention", fig_convention,
                        "coth argument convention: paper_eq14 (default) or standard_tfd");
    fig_cmd->add_option("--hbar", fig_hbar, "override reduced Planck constant [J s]");
    fig_cmd->add_option("--kb", fig_kb, "override Boltzmann constant [J/K]");
    fig_cmd->add_option("--format", fig_format, "output format: csv, json, gnuplot");
    fig_cmd->add_option("-o,--output", fig_output, "output file (default: <name>.<format>)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed()) {
            const Resolved r = resolve_common(eval_flags);
            const crlh::MaterialResponse resp =
                crlh::evaluate(r.params, r.state, {require_omega(r)}, r.convention, {},
                               r.constants);
            const ordered_json out = {{"epsilon_eff", resp.epsilon_eff},
                                      {"mu_eff", resp.mu_eff},
                                      {"handedness", crlh::to_string(resp.handedness)}};
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (sweep_cmd->parsed()) {
            const Resolved r = resolve_common(sweep_flags);
            crlh::SweepSpec spec;
            spec.params = r.params;
            spec.base_state = r.state;
            spec.omega = r.omega;
            spec.convention = r.convention;
            spec.constants = r.constants;

            // axis and grid: flags > config > preset defaults
            if (r.preset) {
                const crlh::SweepSpec preset_spec = crlh::builtin_preset(*r.preset, r.convention,
                                                                         r.constants);
                spec.axis = preset_spec.axis;
                spec.grid = preset_spec.grid;
                spec.series = preset_spec.series;
                spec.params.z0 = r.params.z0;  // explicit z0 still wins
            }
            if (r.config.contains("axis")) {
                const std::string a = r.config.at("axis").get<std::string>();
                spec.axis = a == "omega" ? crlh::SweepAxis::Omega : crlh::SweepAxis::Temperature;
            }
            if (!sweep_axis.empty()) {
                if (sweep_axis != "omega" && sweep_axis != "temperature") {
                    throw std::invalid_argument("unknown axis '" + sweep_axis + "'");
                }
                spec.axis = sweep_axis == "omega" ? crlh::SweepAxis::Omega
                                                  : crlh::SweepAxis::Temperature;
            }
            if (!r.preset) {
                spec.grid = spec.axis == crlh::SweepAxis::Omega
                                ? crlh::SweepGrid{0.5e9, 5e9, 256, crlh::GridSpacing::Log}
                                : crlh::SweepGrid{5.0, 300.0, 256, crlh::GridSpacing::Linear};
            }
            if (auto v = config_number(r.config, "grid", "lo")) spec.grid.lo = *v;
            if (auto v = config_number(r.config, "grid", "hi")) spec.grid.hi = *v;
            if (auto v = config_number(r.config, "grid", "count")) {
                spec.grid.count = static_cast<int>(*v);
            }
            if (r.config.contains("grid") && r.config.at("grid").contains("spacing")) {
                spec.grid.spacing =
                    r.config.at("grid").at("spacing").get<std::string>() == "log"
                        ? crlh::GridSpacing::Log
                        : crlh::GridSpacing::Linear;
            }
            if (sweep_lo) spec.grid.lo = *sweep_lo;
            if (sweep_hi) spec.grid.hi = *sweep_hi;
            if (sweep_count) spec.grid.count = *sweep_count;
            if (!sweep_spacing.empty()) {
                if (sweep_spacing != "linear" && sweep_spacing != "log") {
                    throw std::invalid_argument("unknown spacing '" + sweep_spacing + "'");
                }
                spec.grid.spacing = sweep_spacing == "log" ? crlh::GridSpacing::Log
                                                           : crlh::GridSpacing::Linear;
            }

            // series: flags > config > preset; fall back to one curve at the
            // resolved state
            using Kind = crlh::SeriesOverride::Kind;
            if (r.config.contains("series")) {
                spec.series.clear();
                for (const auto& item : r.config.at("series")) {
                    if (item.contains("temperature")) {
                        spec.series.push_back({Kind::Temperature,
                                               item.at("temperature").get<double>()});
                    } else if (item.contains("n")) {
                        spec.series.push_back({Kind::PhotonNumber, item.at("n").get<double>()});
                    } else if (item.contains("current_fluctuation")) {
                        spec.series.push_back(
                            {Kind::Fluctuation, item.at("current_fluctuation").get<double>()});
                    } else {
                        throw std::invalid_argument(
                            "config series entries need temperature, n, or current_fluctuation");
                    }
                }
            }
            if (!sweep_series_temp.empty() || !sweep_series_n.empty() ||
                !sweep_series_fluct.empty()) {
                spec.series.clear();
                for (double v : sweep_series_temp) spec.series.push_back({Kind::Temperature, v});
                for (double v : sweep_series_n) spec.series.push_back({Kind::PhotonNumber, v});
                for (double v : sweep_series_fluct) spec.series.push_back({Kind::Fluctuation, v});
            }
            if (spec.series.empty()) {
                spec.series.push_back(
                    spec.axis == crlh::SweepAxis::Omega
                        ? crlh::SeriesOverride{Kind::Temperature, r.state.temperature}
                        : crlh::SeriesOverride{Kind::PhotonNumber,
                                               static_cast<double>(r.state.n)});
            }

            // config output block, overridden by flags
            if (r.config.contains("output")) {
                const json& out = r.config.at("output");
                if (sweep_output.empty() && out.contains("path")) {
                    sweep_output = out.at("path").get<std::string>();
                }
                if (sweep_format == "csv" && out.contains("format")) {
                    sweep_format = out.at("format").get<std::string>();
                }
            }

            const crlh::SweepResult result = crlh::run_sweep(spec);
            std::fprintf(stderr, "resolved: z0 = %.17g m, convention = %s, %zu series x %d points\n",
                         spec.params.z0, std::string(crlh::to_string(spec.convention)).c_str(),
                         spec.series.size(), spec.grid.count);
            emit_sweep(result, parse_format(sweep_format), sweep_output);
            return 0;
        }

        if (bands_cmd->parsed()) {
            const Resolved r = resolve_common(bands_flags);
            if (!(bands_lo > 0.0) || !(bands_hi > bands_lo)) {
                throw std::invalid_argument("require 0 < --omega-lo < --omega-hi");
            }
            const double tol = bands_tol ? *bands_tol
                                         : crlh::default_crossing_tol(bands_lo, bands_hi);
            const auto crossings = crlh::find_epsilon_zero_in_omega(
                r.params, r.state, bands_lo, bands_hi, r.convention, tol,
                crlh::kDefaultScanPoints, r.constants);
            ordered_json out;
            out["z0"] = r.params.z0;
            out["interval"] = {{"omega_lo", bands_lo}, {"omega_hi", bands_hi}};
            out["tol"] = tol;
            out["crossings"] = ordered_json::array();
            for (const auto& c : crossings) out["crossings"].push_back(crossing_to_json(c));
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (thr_cmd->parsed()) {
            const Resolved r = resolve_common(thr_flags);
            if (!(thr_lo > 0.0) || !(thr_hi > thr_lo)) {
                throw std::invalid_argument("require 0 < --t-lo < --t-hi");
            }
            const double tol = thr_tol ? *thr_tol : crlh::default_crossing_tol(thr_lo, thr_hi);
            const auto crossings = crlh::find_epsilon_zero_in_temperature(
                r.params, r.state, require_omega(r), thr_lo, thr_hi, r.convention, tol,
                crlh::kDefaultScanPoints, r.constants);
            ordered_json out;
            out["z0"] = r.params.z0;
            out["omega"] = *r.omega;
            out["interval"] = {{"t_lo", thr_lo}, {"t_hi", thr_hi}};
            out["tol"] = tol;
            out["crossings"] = ordered_json::array();
            for (const auto& c : crossings) out["crossings"].push_back(crossing_to_json(c));
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (cal_cmd->parsed()) {
            const Resolved r = resolve_common(cal_flags);
            const crlh::CalibrationAnchor anchor{require_omega(r), r.state.temperature};
            const double z0 =
                crlh::calibrate_z0(r.params, r.state, anchor, r.convention, r.constants);
            const ordered_json out = {
                {"z0", z0},
                {"anchor",
                 {{"omega", anchor.omega},
                  {"temperature", anchor.temperature},
                  {"n", r.state.n},
                  {"current_fluctuation", r.state.current_fluctuation}}}};
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (fig_cmd->parsed()) {
            const crlh::FigurePreset preset = crlh::parse_preset(fig_name);
            const crlh::CothConvention convention = fig_convention.empty()
                                                        ? crlh::CothConvention::PaperEq14
                                                        : parse_convention(fig_convention);
            crlh::PhysicalConstants pc;
            if (fig_hbar) pc.hbar = *fig_hbar;
            if (fig_kb) pc.k_b = *fig_kb;
            const crlh::SweepSpec spec = crlh::builtin_preset(preset, convention, pc);
            const crlh::SweepResult result = crlh::run_sweep(spec);

            const OutputFormat format = parse_format(fig_format);
            std::string path = fig_output;
            if (path.empty()) {
                const char* ext = format == OutputFormat::Csv
                                      ? ".csv"
                                      : (format == OutputFormat::Json ? ".json" : ".gp");
                path = fig_name + ext;
            }
            emit_sweep(result, format, path);
            std::fprintf(stderr, "calibrated z0 = %.17g m\n", spec.params.z0);
            print_sign_summary(result);
            print_series_crossings(result);
            std::fprintf(stderr, "wrote %s\n", path.c_str());
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::overflow_error& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
