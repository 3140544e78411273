#include "minksim/units.hpp"

#include <cmath>

#include "minksim/errors.hpp"

namespace minksim {

void UnitSystem::validate() const {
    auto bad = [](double x) { return !(x > 0.0) || !std::isfinite(x); };
    if (bad(v_t)) throw ConfigError("units: v_t must be positive and finite");
    if (bad(v_l)) throw ConfigError("units: v_l must be positive and finite");
    if (bad(v_m)) throw ConfigError("units: v_m must be positive and finite");
    if (bad(c)) throw ConfigError("units: c must be positive and finite");
    if (bad(v_t / v_l)) throw ConfigError("units: v_t/v_l must be positive and finite");
    try {
        node_per_cell_ratio();
    } catch (const std::exception&) {
        throw ConfigError("units: v_t/v_l must reduce to a small rational");
    }
}

double time_to_standard(std::int64_t tau, const UnitSystem& u) {
    return static_cast<double>(tau) / (u.c * u.v_t);
}

double distance_to_standard(std::int64_t rho, const UnitSystem& u) {
    return static_cast<double>(rho) / u.v_l;
}

double mass_to_standard(std::int64_t mu, const UnitSystem& u) {
    return static_cast<double>(mu) / u.v_m;
}

double relative_velocity(std::int64_t rho, std::int64_t ticks, std::int64_t tau_r, const UnitSystem& u) {
    if (ticks < 1 || tau_r < 1) throw ConfigError("relative_velocity: ticks and tau_r must be >= 1");
    double rho_nodes = static_cast<double>(rho) * (u.v_t / u.v_l);
    return rho_nodes / (static_cast<double>(ticks) * static_cast<double>(tau_r));
}

}  // namespace minksim
