#pragma once

// Lumped-element unit cell of a composite right/left-handed transmission
// line (CRLH-TL): series capacitor C_l and inductance L_r, shunt inductance
// L_l and capacitor C_r, plus the per-unit-cell length z0.
//
// The classical (non-thermal) circuit-level response of one cell is
//
//   epsilon(omega) = C_r - 1/(omega^2 L_l)   [farads]
//   mu(omega)      = L_r - 1/(omega^2 C_l)   [henries]
//
// Both are reported at circuit level (F and H, per cell), not per unit
// length; dividing by z0 is left to the caller.

#include <cmath>
#include <stdexcept>
#include <string>

namespace crlh {

namespace detail {

inline void require_positive_finite(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::invalid_argument(std::string(name) +
                                    " must be positive and finite, got " +
                                    std::to_string(value));
    }
}

}  // namespace detail

/// The four lumped elements of one unit cell plus the cell length.
struct UnitCellParams {
    double c_l;          // series capacitance [F]
    double l_l;          // shunt inductance [H]
    double c_r;          // shunt capacitance [F]
    double l_r;          // series inductance [H]
    double z0 = 1.0e-6;  // per-unit-cell length [m], mesoscopic scale

    void validate() const {
        detail::require_positive_finite(c_l, "c_l");
        detail::require_positive_finite(l_l, "l_l");
        detail::require_positive_finite(c_r, "c_r");
        detail::require_positive_finite(l_r, "l_r");
        detail::require_positive_finite(z0, "z0");
    }
};

/// Resonance scales and coupling constants of one cell.
///   omega_r = 1/sqrt(L_r C_r),  omega_l = 1/sqrt(L_l C_l)
///   k_coupling = L_r C_l + L_l C_r   [s^2]
///   c_total = C_r + C_l              [F]
struct DerivedCellQuantities {
    double omega_r;     // right-handed resonance [rad/s]
    double omega_l;     // left-handed resonance [rad/s]
    double k_coupling;  // [s^2]
    double c_total;     // [F]
};

inline DerivedCellQuantities derive_cell_quantities(const UnitCellParams& p) {
    p.validate();
    return {
        1.0 / std::sqrt(p.l_r * p.c_r),
        1.0 / std::sqrt(p.l_l * p.c_l),
        p.l_r * p.c_l + p.l_l * p.c_r,
        p.c_r + p.c_l,
    };
}

/// One evaluation point on the frequency axis.
struct EvaluationPoint {
    double omega;  // angular frequency [rad/s]

    void validate() const { detail::require_positive_finite(omega, "omega"); }
};

/// Classical effective permittivity C_r - 1/(omega^2 L_l), in farads.
inline double classical_epsilon(const UnitCellParams& p, const EvaluationPoint& pt) {
    p.validate();
    pt.validate();
    return p.c_r - 1.0 / (pt.omega * pt.omega * p.l_l);
}

/// Classical effective permeability L_r - 1/(omega^2 C_l), in henries.
inline double classical_mu(const UnitCellParams& p, const EvaluationPoint& pt) {
    p.validate();
    pt.validate();
    return p.l_r - 1.0 / (pt.omega * pt.omega * p.c_l);
}

}  // namespace crlh
