#pragma once

// Sign-change detection on a scan grid plus bisection refinement. The target
// functions here (effective responses along omega or temperature) are smooth
// and monotone over the ranges of interest, so a bracketed bisection is the
// whole story; no derivative-based polishing is needed.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace crlh {

enum class CrossingSide { NegativeToPositive, PositiveToNegative };

struct CrossingResult {
    double location;            // abscissa of the sign change
    double bracket_lo;          // final bracket, opposite signs at endpoints
    double bracket_hi;
    double achieved_tolerance;  // bracket_hi - bracket_lo at termination
    CrossingSide side;
};

/// Log-spaced scan grid with exact endpoints.
inline std::vector<double> log_spaced_grid(double lo, double hi, int count) {
    if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi) || count < 2) {
        throw std::invalid_argument("grid requires 0 < lo < hi (finite) and count >= 2");
    }
    std::vector<double> grid(static_cast<std::size_t>(count));
    const double log_lo = std::log(lo);
    const double step = (std::log(hi) - log_lo) / (count - 1);
    for (int i = 0; i < count; ++i) {
        grid[static_cast<std::size_t>(i)] = std::exp(log_lo + step * i);
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

/// Linearly spaced scan grid with exact endpoints.
inline std::vector<double> linear_grid(double lo, double hi, int count) {
    if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi) || count < 2) {
        throw std::invalid_argument("grid requires lo < hi (finite) and count >= 2");
    }
    std::vector<double> grid(static_cast<std::size_t>(count));
    const double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) {
        grid[static_cast<std::size_t>(i)] = lo + step * i;
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

/// Refine a sign-change bracket [lo, hi] (f(lo), f(hi) of opposite sign) down
/// to width tol. Halving tol never moves the answer by more than tol.
inline CrossingResult bisect(const std::function<double(double)>& f, double lo, double hi,
                             double f_lo, double f_hi, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("bisection tol must be positive");
    }
    if (!(f_lo < 0.0 && f_hi > 0.0) && !(f_lo > 0.0 && f_hi < 0.0)) {
        throw std::invalid_argument("bisection requires opposite signs at bracket endpoints");
    }
    const CrossingSide side =
        f_lo < 0.0 ? CrossingSide::NegativeToPositive : CrossingSide::PositiveToNegative;

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;  // bracket collapsed to adjacent doubles
        }
        const double f_mid = f(mid);
        if (f_mid == 0.0) {
            // Exact zero: shrink symmetrically around it and stop.
            lo = std::nextafter(mid, lo);
            hi = std::nextafter(mid, hi);
            break;
        }
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    return {0.5 * (lo + hi), lo, hi, hi - lo, side};
}

/// Scan `grid` for sign changes of f and refine each bracket by bisection.
/// Returns crossings in ascending abscissa order; empty when f has constant
/// sign. An exact zero at a grid point counts as a crossing only when the
/// nearest nonzero values on either side have opposite signs.
inline std::vector<CrossingResult> find_sign_changes(const std::function<double(double)>& f,
                                                     const std::vector<double>& grid,
                                                     double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw std::invalid_argument("crossing tol must be positive and finite");
    }
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        values[i] = f(grid[i]);
    }

    std::vector<CrossingResult> crossings;
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::size_t last_idx = 0;       // last grid index with a nonzero value
    double last_val = values[0];
    std::size_t first_zero = kNone;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double v = values[i];
        if (v == 0.0) {
            if (first_zero == kNone) first_zero = i;
            continue;
        }
        if (last_val == 0.0) {
            // leading exact zeros: no sign on the left, nothing to report
            last_idx = i;
            last_val = v;
            first_zero = kNone;
            continue;
        }
        if ((v < 0.0) != (last_val < 0.0)) {
            if (i == last_idx + 1) {
                crossings.push_back(bisect(f, grid[last_idx], grid[i], last_val, v, tol));
            } else {
                // sign change through exact zeros at intervening grid points
                const CrossingSide side = last_val < 0.0 ? CrossingSide::NegativeToPositive
                                                         : CrossingSide::PositiveToNegative;
                crossings.push_back(
                    {grid[first_zero], grid[last_idx], grid[i], grid[i] - grid[last_idx], side});
            }
        }
        last_idx = i;
        last_val = v;
        first_zero = kNone;
    }
    return crossings;
}

}  // namespace crlh
