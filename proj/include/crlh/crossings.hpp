#pragma once

// Zero-crossing finders for the effective permittivity along frequency or
// temperature, and the closed-form calibration of the cell length z0 from a
// stated anchor (a point where epsilon_eff is required to vanish).
//
// epsilon_eff is strictly increasing in omega and strictly decreasing in
// temperature, so each finder encounters at most one crossing in practice;
// the scan still reports every sign change it sees.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "crlh/response.hpp"
#include "crlh/rootfind.hpp"

namespace crlh {

/// Default bisection tolerance: relative 1e-10 of the search width.
inline double default_crossing_tol(double lo, double hi) { return (hi - lo) * 1e-10; }

inline constexpr int kDefaultScanPoints = 512;

/// Locate zeros of epsilon_eff(omega) on [omega_lo, omega_hi] by a log-spaced
/// scan plus bisection. Empty result means no sign change on the interval.
inline std::vector<CrossingResult> find_epsilon_zero_in_omega(
    const UnitCellParams& p, const ThermalFockState& state, double omega_lo, double omega_hi,
    CothConvention convention, double tol, int scan_points = kDefaultScanPoints,
    const PhysicalConstants& pc = codata_constants()) {
    p.validate();
    state.validate();
    if (!(omega_lo > 0.0) || !(omega_hi > omega_lo) || !std::isfinite(omega_hi)) {
        throw std::invalid_argument("require 0 < omega_lo < omega_hi, finite");
    }
    const auto f = [&](double omega) {
        return epsilon_eff(p, state, {omega}, convention, pc);
    };
    return find_sign_changes(f, log_spaced_grid(omega_lo, omega_hi, scan_points), tol);
}

/// Locate the zero of epsilon_eff(T) on [t_lo, t_hi] at fixed omega. The
/// photon number and current fluctuation come from state_template; its
/// temperature field is ignored.
inline std::vector<CrossingResult> find_epsilon_zero_in_temperature(
    const UnitCellParams& p, const ThermalFockState& state_template, double omega, double t_lo,
    double t_hi, CothConvention convention, double tol, int scan_points = kDefaultScanPoints,
    const PhysicalConstants& pc = codata_constants()) {
    p.validate();
    detail::require_positive_finite(omega, "omega");
    if (!(t_lo > 0.0) || !(t_hi > t_lo) || !std::isfinite(t_hi)) {
        throw std::invalid_argument("require 0 < t_lo < t_hi, finite");
    }
    const auto f = [&](double temperature) {
        ThermalFockState s = state_template;
        s.temperature = temperature;
        return epsilon_eff(p, s, {omega}, convention, pc);
    };
    return find_sign_changes(f, log_spaced_grid(t_lo, t_hi, scan_points), tol);
}

/// Anchor for z0 calibration: the point where epsilon_eff must be zero.
struct CalibrationAnchor {
    double omega;        // [rad/s]
    double temperature;  // [K]
};

/// Back-solve the cell length from epsilon_eff = 0 at the anchor:
///
///   z0^3 = hbar (1+2n) coth(x) / (2 C <(di)^2> L_l^(5/2) C_r^(5/2))
///
/// The z0 field of `p` is ignored. The photon number and fluctuation come
/// from `state`; the anchor supplies omega and temperature. The result is
/// verified by evaluating epsilon_eff at it (|eps| < 1e-9 C_r).
inline double calibrate_z0(const UnitCellParams& p, const ThermalFockState& state,
                           const CalibrationAnchor& anchor,
                           CothConvention convention = CothConvention::PaperEq14,
                           const PhysicalConstants& pc = codata_constants()) {
    p.validate();
    state.validate();
    detail::require_positive_finite(anchor.omega, "anchor omega");
    detail::require_positive_finite(anchor.temperature, "anchor temperature");

    const double factor =
        thermal_factor(state.n, anchor.omega, anchor.temperature, convention, pc);
    const double c_total = p.c_r + p.c_l;
    const double z0_cubed = pc.hbar * factor /
                            (2.0 * c_total * state.current_fluctuation *
                             std::pow(p.l_l, 2.5) * std::pow(p.c_r, 2.5));
    if (!(z0_cubed > 0.0) || !std::isfinite(z0_cubed)) {
        throw std::runtime_error("z0 calibration has no physical solution for these inputs");
    }
    const double z0 = std::cbrt(z0_cubed);

    UnitCellParams calibrated = p;
    calibrated.z0 = z0;
    ThermalFockState anchored = state;
    anchored.temperature = anchor.temperature;
    const double residual = epsilon_eff(calibrated, anchored, {anchor.omega}, convention, pc);
    if (!(std::fabs(residual) < 1e-9 * p.c_r)) {
        throw std::runtime_error("z0 calibration failed its round-trip check");
    }
    return z0;
}

}  // namespace crlh
