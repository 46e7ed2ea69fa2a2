#pragma once

// Effective permittivity and permeability of the unit cell in a thermal Fock
// state:
//
//   epsilon_eff = C_r - 2^(-2/5) [ hbar (1+2n) coth(x) / (C z0^3 <(di)^2> L_l^(5/2)) ]^(2/5)
//   mu_eff      = L_r - 2^(-2/5) [ hbar (1+2n) coth(x) / (C z0^3 <(di)^2> C_l^(5/2)) ]^(2/5)
//
// with C = C_r + C_l. Substituting the closed-form thermal current
// fluctuation for <(di)^2> collapses both brackets to 2/(omega^5 X^(5/2)) and
// recovers the classical responses exactly; tests certify that inversion.
//
// Left-handedness means both responses negative at the same evaluation point.

#include <cmath>
#include <stdexcept>
#include <string_view>

#include "crlh/constants.hpp"
#include "crlh/thermal.hpp"
#include "crlh/unit_cell.hpp"

namespace crlh {

enum class Handedness {
    LeftHanded,
    RightHanded,
    EpsilonNegativeOnly,
    MuNegativeOnly,
    OnBoundary,
};

/// Stable lowercase names, used verbatim in CSV/JSON output.
inline std::string_view to_string(Handedness h) {
    switch (h) {
        case Handedness::LeftHanded: return "left_handed";
        case Handedness::RightHanded: return "right_handed";
        case Handedness::EpsilonNegativeOnly: return "epsilon_negative_only";
        case Handedness::MuNegativeOnly: return "mu_negative_only";
        case Handedness::OnBoundary: return "on_boundary";
    }
    return "on_boundary";
}

/// Dead zones for the sign classification, relative to C_r and L_r.
struct ResponseTolerances {
    double epsilon_rel = 1e-12;
    double mu_rel = 1e-12;
};

struct MaterialResponse {
    double epsilon_eff;  // [F]
    double mu_eff;       // [H]
    Handedness handedness;
};

namespace detail {

inline constexpr double kTwoPowNeg2Fifths = 0.757858283255199;  // 2^(-2/5)

}  // namespace detail

/// Effective permittivity in the thermal Fock state, farads.
inline double epsilon_eff(const UnitCellParams& p, const ThermalFockState& state,
                          const EvaluationPoint& pt,
                          CothConvention convention = CothConvention::PaperEq14,
                          const PhysicalConstants& pc = codata_constants()) {
    const DerivedCellQuantities d = derive_cell_quantities(p);
    state.validate();
    pt.validate();
    const double factor = thermal_factor(state.n, pt.omega, state.temperature, convention, pc);
    const double bracket = pc.hbar * factor /
                           (d.c_total * (p.z0 * p.z0 * p.z0) * state.current_fluctuation *
                            std::pow(p.l_l, 2.5));
    if (!std::isfinite(bracket)) {
        throw std::overflow_error("epsilon_eff bracket is not finite; inputs are unphysical");
    }
    return p.c_r - detail::kTwoPowNeg2Fifths * std::pow(bracket, 0.4);
}

/// Effective permeability in the thermal Fock state, henries.
inline double mu_eff(const UnitCellParams& p, const ThermalFockState& state,
                     const EvaluationPoint& pt,
                     CothConvention convention = CothConvention::PaperEq14,
                     const PhysicalConstants& pc = codata_constants()) {
    const DerivedCellQuantities d = derive_cell_quantities(p);
    state.validate();
    pt.validate();
    const double factor = thermal_factor(state.n, pt.omega, state.temperature, convention, pc);
    const double bracket = pc.hbar * factor /
                           (d.c_total * (p.z0 * p.z0 * p.z0) * state.current_fluctuation *
                            std::pow(p.c_l, 2.5));
    if (!std::isfinite(bracket)) {
        throw std::overflow_error("mu_eff bracket is not finite; inputs are unphysical");
    }
    return p.l_r - detail::kTwoPowNeg2Fifths * std::pow(bracket, 0.4);
}

/// Sign classification with dead zones. Exhaustive and mutually exclusive.
inline Handedness classify_handedness(double eps, double mu, double tol_eps, double tol_mu) {
    if (std::fabs(eps) <= tol_eps || std::fabs(mu) <= tol_mu) {
        return Handedness::OnBoundary;
    }
    if (eps < 0.0 && mu < 0.0) return Handedness::LeftHanded;
    if (eps > 0.0 && mu > 0.0) return Handedness::RightHanded;
    if (eps < 0.0) return Handedness::EpsilonNegativeOnly;
    return Handedness::MuNegativeOnly;
}

/// Bundle epsilon_eff, mu_eff and the handedness class at one point.
inline MaterialResponse evaluate(const UnitCellParams& p, const ThermalFockState& state,
                                 const EvaluationPoint& pt,
                                 CothConvention convention = CothConvention::PaperEq14,
                                 const ResponseTolerances& tol = {},
                                 const PhysicalConstants& pc = codata_constants()) {
    const double eps = epsilon_eff(p, state, pt, convention, pc);
    const double mu = mu_eff(p, state, pt, convention, pc);
    return {eps, mu,
            classify_handedness(eps, mu, tol.epsilon_rel * p.c_r, tol.mu_rel * p.l_r)};
}

}  // namespace crlh
