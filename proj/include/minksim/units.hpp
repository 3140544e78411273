#pragma once

// Conversions between natural units (node counts, cell counts, mass units)
// and standard units, plus the relative velocity definition.

#include <cstdint>

#include "minksim/intmath.hpp"

namespace minksim {

/// Conversion coefficients between the node network's natural units and
/// standard units. c is the light speed (1.0 when working in light-time).
struct UnitSystem {
    double v_t = 10.0;  // lab-time nodes per unit length of light-time
    double v_l = 10.0;  // space cells per unit length
    double v_m = 1.0;   // mass units per unit mass
    double c = 1.0;     // light speed

    /// Throws ConfigError unless all coefficients are positive and finite.
    void validate() const;

    /// Node-units per cell-unit, as an exact rational.
    Rational node_per_cell_ratio() const { return rational_from_double(v_t / v_l); }

    /// Standard length of one tick of tau_r nodes.
    double tick_length(std::int64_t tau_r) const { return static_cast<double>(tau_r) / (c * v_t); }
};

/// tau nodes -> standard time.
double time_to_standard(std::int64_t tau, const UnitSystem& u);

/// rho cells -> standard length.
double distance_to_standard(std::int64_t rho, const UnitSystem& u);

/// mu mass units -> standard mass.
double mass_to_standard(std::int64_t mu, const UnitSystem& u);

/// beta = (rho in node units) / (ticks * tau_r). Rejects ticks*tau_r = 0.
double relative_velocity(std::int64_t rho, std::int64_t ticks, std::int64_t tau_r, const UnitSystem& u);

}  // namespace minksim
