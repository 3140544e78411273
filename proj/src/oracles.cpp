#include "minksim/oracles.hpp"

#include <cmath>

#include "minksim/errors.hpp"

namespace minksim {

double analytic_lab_time(std::int64_t ticks, double beta, double tick_len) {
    long double b = beta;
    return static_cast<double>(static_cast<long double>(ticks) * tick_len * sqrtl(1.0L + b * b));
}

long double analytic_velocity_ext(long double p) { return p / sqrtl(1.0L + p * p); }

long double analytic_energy_ext(long double p) { return sqrtl(1.0L + p * p); }

double analytic_velocity(double p) { return static_cast<double>(analytic_velocity_ext(p)); }

double analytic_energy(double p) { return static_cast<double>(analytic_energy_ext(p)); }

double relative_error(double measured, double exact) {
    if (exact == 0.0) throw ConfigError("relative_error: exact value must be nonzero");
    return 100.0 * std::abs(measured - exact) / std::abs(exact);
}

}  // namespace minksim
