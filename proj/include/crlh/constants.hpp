#pragma once

// Physical constants (SI). k_b is exact by definition since the 2019 SI
// revision; hbar is the CODATA value truncated to double precision.

namespace crlh {

struct PhysicalConstants {
    double hbar = 1.054571817e-34;  // reduced Planck constant [J s]
    double k_b = 1.380649e-23;      // Boltzmann constant [J/K]
};

constexpr PhysicalConstants codata_constants() { return {}; }

}  // namespace crlh
