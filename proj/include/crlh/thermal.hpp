#pragma once

// Thermal-state bookkeeping for the quantized unit cell.
//
// Thermo-field dynamics dresses a Fock state |n> with a thermal Bogoliubov
// rotation of angle theta, where sinh^2(theta) equals the Bose-Einstein
// occupation n0 = 1/(exp(hbar omega / k_B T) - 1). The current variance of
// the quantized cell in that state carries the factor (1+2n) coth(x); the
// coth argument is a runtime convention:
//
//   PaperEq14   : x = hbar omega / (k_B T)
//   StandardTFD : x = hbar omega / (2 k_B T)   (equals 1 + 2 n0 exactly)
//
// Closed form of the thermal-Fock current fluctuation for the quantized
// current i = (omega^2 / z0) eta:
//
//   <(di)^2> = hbar omega^5 (1+2n) coth(x) / (2 C z0^3)   [A^2]

#include <cmath>
#include <stdexcept>

#include "crlh/constants.hpp"
#include "crlh/unit_cell.hpp"

namespace crlh {

enum class CothConvention { PaperEq14, StandardTFD };

/// Numerically stable coth for x > 0. Series below 1e-4, saturation above 20.
inline double coth(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::invalid_argument("coth argument must be positive and finite");
    }
    if (x < 1e-4) {
        return 1.0 / x + x / 3.0 - x * x * x / 45.0;
    }
    if (x > 20.0) {
        return 1.0 + 2.0 * std::exp(-2.0 * x);
    }
    return 1.0 / std::tanh(x);
}

inline double coth_argument(double omega, double temperature, CothConvention convention,
                            const PhysicalConstants& pc = codata_constants()) {
    detail::require_positive_finite(omega, "omega");
    detail::require_positive_finite(temperature, "temperature");
    const double x = pc.hbar * omega / (pc.k_b * temperature);
    return convention == CothConvention::StandardTFD ? 0.5 * x : x;
}

/// Bose-Einstein occupation n0 = 1/(exp(hbar omega / k_B T) - 1).
/// Switches to the series k_B T/(hbar omega) - 1/2 for tiny arguments.
inline double thermal_photon_number(double omega, double temperature,
                                    const PhysicalConstants& pc = codata_constants()) {
    detail::require_positive_finite(omega, "omega");
    detail::require_positive_finite(temperature, "temperature");
    const double x = pc.hbar * omega / (pc.k_b * temperature);
    if (x < 1e-8) {
        return pc.k_b * temperature / (pc.hbar * omega) - 0.5;
    }
    return 1.0 / std::expm1(x);
}

/// Thermal Bogoliubov parameters: sinh^2(theta) = n0, cosh(2 theta) = 1 + 2 n0.
struct BogoliubovParams {
    double theta;       // thermal rotation angle
    double n0;          // Bose-Einstein occupation of the thermal vacuum
    double cosh2theta;  // 1 + 2 n0
};

inline BogoliubovParams bogoliubov_params(double omega, double temperature,
                                          const PhysicalConstants& pc = codata_constants()) {
    const double n0 = thermal_photon_number(omega, temperature, pc);
    return {std::asinh(std::sqrt(n0)), n0, 1.0 + 2.0 * n0};
}

/// The (1 + 2n) coth(x) factor multiplying the vacuum current variance.
inline double thermal_factor(int n, double omega, double temperature,
                             CothConvention convention = CothConvention::PaperEq14,
                             const PhysicalConstants& pc = codata_constants()) {
    if (n < 0) {
        throw std::invalid_argument("photon number n must be nonnegative");
    }
    return (1.0 + 2.0 * n) * coth(coth_argument(omega, temperature, convention, pc));
}

/// A photon-number state dressed to temperature T, with the current
/// fluctuation treated as an independent input knob.
struct ThermalFockState {
    int n;                       // field photon number
    double temperature;          // [K]
    double current_fluctuation;  // <(di)^2> [A^2]

    void validate() const {
        if (n < 0) {
            throw std::invalid_argument("photon number n must be nonnegative");
        }
        detail::require_positive_finite(temperature, "temperature");
        detail::require_positive_finite(current_fluctuation, "current_fluctuation");
    }
};

/// Thermal-Fock expectation of (di)^2 for the quantized cell current,
/// hbar omega^5 (1+2n) coth(x) / (2 c_total z0^3). Inverting the effective
/// response against this value recovers the classical epsilon and mu.
inline double current_fluctuation_thermal(int n, double omega, double temperature,
                                          double c_total, double z0,
                                          CothConvention convention = CothConvention::PaperEq14,
                                          const PhysicalConstants& pc = codata_constants()) {
    detail::require_positive_finite(c_total, "c_total");
    detail::require_positive_finite(z0, "z0");
    const double factor = thermal_factor(n, omega, temperature, convention, pc);
    const double omega5 = std::pow(omega, 5);
    return pc.hbar * omega5 * factor / (2.0 * c_total * (z0 * z0 * z0));
}

}  // namespace crlh
