#pragma once

// Closed-form special-relativity reference values used to validate the
// simulation, plus the relative-error helper for the tables' err% columns.
// Internals run in long double so the energy-momentum identity holds to
// 1e-12 across the checked momentum range.

#include <cstdint>

namespace minksim {

/// Exact lab time after `ticks` ticks at proper velocity beta:
/// ticks * tick_len * sqrt(1 + beta^2).
double analytic_lab_time(std::int64_t ticks, double beta, double tick_len);

/// Exact velocity at momentum p (units of m0*c): p / sqrt(1 + p^2).
double analytic_velocity(double p);

/// Exact energy at momentum p (units of m0*c^2): sqrt(1 + p^2).
double analytic_energy(double p);

/// Extended-precision variants for identity checks.
long double analytic_velocity_ext(long double p);
long double analytic_energy_ext(long double p);

/// 100 * |measured - exact| / exact. Rejects exact = 0.
double relative_error(double measured, double exact);

}  // namespace minksim
