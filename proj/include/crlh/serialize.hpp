#pragma once

// Sweep-result serialization.
//
//   CSV      header `series,abscissa,epsilon_eff,mu_eff,handedness`, one
//            record per line, 17 significant digits (doubles round-trip
//            exactly), LF endings, UTF-8.
//   JSON     one object {spec, records, metadata}.
//   gnuplot  best-effort plain-text plot commands against an adjacent CSV,
//            one curve per series; not a stability-guaranteed format.

#include <cstdio>
#include <string>
#include <string_view>

#include <json.hpp>

#include "crlh/sweep.hpp"

namespace crlh {

namespace detail {

inline std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

inline std::string to_csv(const SweepResult& result) {
    std::string out = "series,abscissa,epsilon_eff,mu_eff,handedness\n";
    for (const auto& r : result.records) {
        out += result.series_labels[static_cast<std::size_t>(r.series_index)];
        out += ',';
        out += detail::format_full(r.abscissa);
        out += ',';
        out += detail::format_full(r.epsilon_eff);
        out += ',';
        out += detail::format_full(r.mu_eff);
        out += ',';
        out += to_string(r.handedness);
        out += '\n';
    }
    return out;
}

inline std::string_view to_string(CothConvention c) {
    return c == CothConvention::PaperEq14 ? "paper_eq14" : "standard_tfd";
}

inline std::string_view to_string(SweepAxis a) {
    return a == SweepAxis::Omega ? "omega" : "temperature";
}

inline std::string_view to_string(GridSpacing s) {
    return s == GridSpacing::Log ? "log" : "linear";
}

inline std::string_view to_string(SeriesOverride::Kind k) {
    switch (k) {
        case SeriesOverride::Kind::Temperature: return "temperature";
        case SeriesOverride::Kind::PhotonNumber: return "n";
        case SeriesOverride::Kind::Fluctuation: return "current_fluctuation";
    }
    return "temperature";
}

inline nlohmann::ordered_json to_json(const SweepSpec& spec) {
    nlohmann::ordered_json j;
    j["params"] = {{"c_l", spec.params.c_l},
                   {"l_l", spec.params.l_l},
                   {"c_r", spec.params.c_r},
                   {"l_r", spec.params.l_r},
                   {"z0", spec.params.z0}};
    j["state"] = {{"n", spec.base_state.n},
                  {"temperature", spec.base_state.temperature},
                  {"current_fluctuation", spec.base_state.current_fluctuation}};
    if (spec.omega.has_value()) j["omega"] = *spec.omega;
    j["axis"] = to_string(spec.axis);
    j["grid"] = {{"lo", spec.grid.lo},
                 {"hi", spec.grid.hi},
                 {"count", spec.grid.count},
                 {"spacing", to_string(spec.grid.spacing)}};
    nlohmann::ordered_json series = nlohmann::ordered_json::array();
    for (const auto& s : spec.series) {
        series.push_back({{std::string(to_string(s.kind)), s.value}});
    }
    j["series"] = series;
    j["convention"] = to_string(spec.convention);
    return j;
}

inline nlohmann::ordered_json to_json(const SweepResult& result) {
    nlohmann::ordered_json j;
    j["spec"] = to_json(result.spec);
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& r : result.records) {
        records.push_back(
            {{"series", result.series_labels[static_cast<std::size_t>(r.series_index)]},
             {"abscissa", r.abscissa},
             {"epsilon_eff", r.epsilon_eff},
             {"mu_eff", r.mu_eff},
             {"handedness", to_string(r.handedness)}});
    }
    j["records"] = records;
    j["metadata"] = {{"constants",
                      {{"hbar", result.metadata.constants.hbar},
                       {"k_b", result.metadata.constants.k_b}}},
                     {"convention", to_string(result.metadata.convention)},
                     {"tool_version", result.metadata.tool_version}};
    return j;
}

inline std::string to_json_string(const SweepResult& result) {
    return to_json(result).dump(2) + "\n";
}

/// Gnuplot commands plotting each series' epsilon (solid) and mu (dashed)
/// from the named CSV, which the caller writes next to the script.
inline std::string to_gnuplot(const SweepResult& result, std::string_view csv_filename) {
    const bool omega_axis = result.spec.axis == SweepAxis::Omega;
    std::string out;
    out += "# generated by crlh ";
    out += result.metadata.tool_version;
    out += "\nset datafile separator \",\"\n";
    out += "set key outside\n";
    out += omega_axis ? "set xlabel \"omega [rad/s]\"\n" : "set xlabel \"temperature [K]\"\n";
    out += "set ylabel \"epsilon_eff [F] / mu_eff [H]\"\n";
    if (result.spec.grid.spacing == GridSpacing::Log) {
        out += "set logscale x\n";
    }
    out += "plot \\\n";
    for (std::size_t i = 0; i < result.series_labels.size(); ++i) {
        const std::string& label = result.series_labels[i];
        out += "  \"" + std::string(csv_filename) + "\" using 2:(strcol(1) eq \"" + label +
               "\" ? column(3) : 1/0) with lines title \"eps " + label + "\", \\\n";
        out += "  \"" + std::string(csv_filename) + "\" using 2:(strcol(1) eq \"" + label +
               "\" ? column(4) : 1/0) with lines dashtype 2 title \"mu " + label + "\"";
        out += i + 1 < result.series_labels.size() ? ", \\\n" : "\n";
    }
    return out;
}

}  // namespace crlh
