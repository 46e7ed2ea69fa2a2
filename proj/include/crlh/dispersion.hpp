#pragma once

// Dispersion relation of the CRLH unit cell,
//
//   beta^2 = (omega/omega_r)^2 + (omega_l/omega)^2 - k omega_l^2
//
// a dimensionless quantity. beta^2 > 0 is a propagating band, beta^2 < 0 is
// evanescent; values inside a configurable dead zone around zero classify as
// a band edge so that floating-point sign tests near roots stay stable.

#include <cmath>

#include "crlh/unit_cell.hpp"

namespace crlh {

enum class DispersionRegime { Propagating, Evanescent, BandEdge };

struct DispersionPoint {
    double beta_squared;       // dimensionless
    DispersionRegime regime;
    double beta_magnitude;     // sqrt(|beta_squared|)
};

/// Evaluate beta^2 at one frequency. edge_tol is relative to the sum of the
/// magnitudes of the three terms (default 1e-9).
inline DispersionPoint beta(const UnitCellParams& p, const EvaluationPoint& pt,
                            double edge_tol = 1e-9) {
    const DerivedCellQuantities d = derive_cell_quantities(p);
    pt.validate();
    if (edge_tol < 0.0 || !std::isfinite(edge_tol)) {
        throw std::invalid_argument("edge_tol must be nonnegative and finite");
    }

    const double right = pt.omega / d.omega_r;
    const double left = d.omega_l / pt.omega;
    const double t_right = right * right;
    const double t_left = left * left;
    const double t_coupling = d.k_coupling * d.omega_l * d.omega_l;

    const double beta_squared = t_right + t_left - t_coupling;
    const double scale = t_right + t_left + t_coupling;

    DispersionRegime regime;
    if (std::fabs(beta_squared) <= edge_tol * scale) {
        regime = DispersionRegime::BandEdge;
    } else if (beta_squared > 0.0) {
        regime = DispersionRegime::Propagating;
    } else {
        regime = DispersionRegime::Evanescent;
    }

    return {beta_squared, regime, std::sqrt(std::fabs(beta_squared))};
}

}  // namespace crlh
