#pragma once

// Parameter-sweep engine: evaluate the thermal-Fock response over a frequency
// or temperature grid for a family of curves (series), each series fixing one
// of temperature, photon number, or current fluctuation.
//
// Evaluation may run on several threads; every record is computed into its
// pre-assigned slot, so the result is identical to a serial run, record for
// record, bit for bit.

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "crlh/response.hpp"
#include "crlh/rootfind.hpp"
#include "crlh/version.hpp"

namespace crlh {

enum class SweepAxis { Omega, Temperature };
enum class GridSpacing { Linear, Log };

struct SweepGrid {
    double lo;
    double hi;
    int count = 256;
    GridSpacing spacing = GridSpacing::Linear;
};

/// One curve of a sweep: pins a single state knob for that series.
struct SeriesOverride {
    enum class Kind { Temperature, PhotonNumber, Fluctuation };
    Kind kind;
    double value;
};

struct SweepSpec {
    UnitCellParams params;
    ThermalFockState base_state;        // defaults for knobs no series overrides
    std::optional<double> omega;        // fixed omega, required for Temperature axis
    SweepAxis axis = SweepAxis::Omega;
    SweepGrid grid;
    std::vector<SeriesOverride> series;
    CothConvention convention = CothConvention::PaperEq14;
    ResponseTolerances tolerances;
    PhysicalConstants constants;

    void validate() const {
        params.validate();
        base_state.validate();
        if (!(grid.lo < grid.hi) || !std::isfinite(grid.lo) || !std::isfinite(grid.hi)) {
            throw std::invalid_argument("sweep grid requires lo < hi, finite");
        }
        if (axis == SweepAxis::Omega && !(grid.lo > 0.0)) {
            throw std::invalid_argument("omega grid requires lo > 0");
        }
        if (axis == SweepAxis::Temperature && !(grid.lo > 0.0)) {
            throw std::invalid_argument("temperature grid requires lo > 0");
        }
        if (grid.count < 2) {
            throw std::invalid_argument("sweep grid count must be >= 2");
        }
        if (series.empty()) {
            throw std::invalid_argument("sweep requires at least one series");
        }
        for (const auto& s : series) {
            if (axis == SweepAxis::Temperature && s.kind == SeriesOverride::Kind::Temperature) {
                throw std::invalid_argument(
                    "temperature series override is invalid on a temperature axis");
            }
            if (s.kind == SeriesOverride::Kind::PhotonNumber) {
                if (!(s.value >= 0.0) || s.value != std::floor(s.value) ||
                    !std::isfinite(s.value)) {
                    throw std::invalid_argument("photon number override must be a nonnegative integer");
                }
            } else {
                detail::require_positive_finite(s.value, "series override value");
            }
        }
        if (axis == SweepAxis::Temperature && !omega.has_value()) {
            throw std::invalid_argument("temperature sweeps need a fixed omega");
        }
        if (omega.has_value()) {
            detail::require_positive_finite(*omega, "omega");
        }
    }
};

struct SweepRecord {
    int series_index;
    double abscissa;     // omega [rad/s] or temperature [K], per axis
    double epsilon_eff;  // [F]
    double mu_eff;       // [H]
    Handedness handedness;
};

struct SweepMetadata {
    PhysicalConstants constants;
    CothConvention convention;
    std::string tool_version = kVersion;
};

struct SweepResult {
    SweepSpec spec;                         // resolved spec, calibrated z0 included
    std::vector<std::string> series_labels; // one per series, stable
    std::vector<SweepRecord> records;       // sorted by (series, abscissa)
    SweepMetadata metadata;
};

namespace detail {

inline std::string format_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

inline std::string series_label(const SeriesOverride& s) {
    switch (s.kind) {
        case SeriesOverride::Kind::Temperature: return "T=" + format_short(s.value);
        case SeriesOverride::Kind::PhotonNumber: return "n=" + format_short(s.value);
        case SeriesOverride::Kind::Fluctuation: return "fluct=" + format_short(s.value);
    }
    return {};
}

inline SweepRecord evaluate_record(const SweepSpec& spec, int series_index, double abscissa) {
    const SeriesOverride& ov = spec.series[static_cast<std::size_t>(series_index)];
    ThermalFockState state = spec.base_state;
    switch (ov.kind) {
        case SeriesOverride::Kind::Temperature: state.temperature = ov.value; break;
        case SeriesOverride::Kind::PhotonNumber: state.n = static_cast<int>(ov.value); break;
        case SeriesOverride::Kind::Fluctuation: state.current_fluctuation = ov.value; break;
    }
    double omega;
    if (spec.axis == SweepAxis::Omega) {
        omega = abscissa;
    } else {
        omega = *spec.omega;
        state.temperature = abscissa;
    }
    const MaterialResponse r = evaluate(spec.params, state, {omega}, spec.convention,
                                        spec.tolerances, spec.constants);
    return {series_index, abscissa, r.epsilon_eff, r.mu_eff, r.handedness};
}

}  // namespace detail

/// Run the sweep. `threads` = 0 picks a hardware-sized pool; any thread count
/// produces the identical result.
inline SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 0) {
    spec.validate();

    const std::vector<double> abscissae =
        spec.grid.spacing == GridSpacing::Log
            ? log_spaced_grid(spec.grid.lo, spec.grid.hi, spec.grid.count)
            : linear_grid(spec.grid.lo, spec.grid.hi, spec.grid.count);

    SweepResult result;
    result.spec = spec;
    result.metadata = {spec.constants, spec.convention, kVersion};
    for (const auto& s : spec.series) {
        result.series_labels.push_back(detail::series_label(s));
    }

    const std::size_t n_series = spec.series.size();
    const std::size_t n_grid = abscissae.size();
    const std::size_t total = n_series * n_grid;
    result.records.resize(total);

    std::vector<std::string> errors;  // first evaluation error wins
    const auto run_range = [&](std::size_t begin, std::size_t end, std::string* error) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const int si = static_cast<int>(idx / n_grid);
            const double x = abscissae[idx % n_grid];
            try {
                result.records[idx] = detail::evaluate_record(spec, si, x);
            } catch (const std::exception& e) {
                *error = "series '" + result.series_labels[static_cast<std::size_t>(si)] +
                         "', abscissa " + detail::format_short(x) + ": " + e.what();
                return;
            }
        }
    };

    unsigned pool = threads == 0 ? std::thread::hardware_concurrency() : threads;
    if (pool == 0) pool = 1;
    if (total < 512) pool = 1;  // not worth spawning for small sweeps

    if (pool == 1) {
        std::string error;
        run_range(0, total, &error);
        if (!error.empty()) errors.push_back(error);
    } else {
        std::vector<std::thread> workers;
        std::vector<std::string> worker_errors(pool);
        const std::size_t chunk = (total + pool - 1) / pool;
        for (unsigned t = 0; t < pool; ++t) {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(total, begin + chunk);
            if (begin >= end) break;
            workers.emplace_back(run_range, begin, end, &worker_errors[t]);
        }
        for (auto& w : workers) w.join();
        for (const auto& e : worker_errors) {
            if (!e.empty()) errors.push_back(e);
        }
    }
    if (!errors.empty()) {
        throw std::runtime_error("sweep evaluation failed at " + errors.front());
    }
    return result;
}

}  // namespace crlh
