#pragma once

// Scripted experiments: uniform motion (time dilation) and constant force
// (velocity and energy versus momentum), each with analytic reference
// columns and relative errors, plus plot-ready point extraction.

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "minksim/engine.hpp"
#include "minksim/units.hpp"

namespace minksim {

/// One row of the time-dilation table.
struct DilationRow {
    std::int64_t tw = 0;
    double x = 0.0;
    double t = 0.0;
    double ta = 0.0;
    double err_pct = 0.0;
    double tp = 0.0;
};

/// One row of the constant-force table.
struct ForceRow {
    std::int64_t tw = 0;
    double p = 0.0;
    double v = 0.0;       // NaN when the particle's clock is stopped
    double va = 0.0;
    double v_err_pct = 0.0;
    double e = 1.0;
    double ea = 1.0;
    double e_err_pct = 0.0;
    bool v_defined = true;
};

struct DilationOutcome {
    std::vector<DilationRow> rows;
    RunResult run;
};

struct ForceOutcome {
    std::vector<ForceRow> rows;
    RunResult run;
};

struct ExperimentOptions {
    std::int64_t n_cells = 0;  // 0 = sized from the run parameters
    bool cell_clocks = true;
    bool record_advances = false;
    std::int64_t total_nodes = 0;  // 0 = n_ticks * tau_r
};

/// Uniform motion at proper velocity beta: a particle with constant
/// momentum register beta * tau_r and no carriers. beta * tau_r must be a
/// whole node count.
DilationOutcome run_time_dilation(double beta, std::int64_t tau_r, std::int64_t n_ticks,
                                  const UnitSystem& units, const ExperimentOptions& opt = {});

/// Constant force: one carrier of t_i acts per tick on a particle of
/// natural rest mass mu (>= 1) initially at rest at the origin.
ForceOutcome run_constant_force(std::int64_t t_i, std::int64_t mu, std::int64_t tau_r,
                                std::int64_t n_ticks, const UnitSystem& units,
                                const ExperimentOptions& opt = {});

/// Per-tick (x, t) pairs of the world line.
std::vector<std::pair<double, double>> worldline_points(const std::vector<DilationRow>& rows);

/// Per-tick (p, v, va) triples for the velocity-momentum curve.
std::vector<std::tuple<double, double, double>> vp_curve_points(const std::vector<ForceRow>& rows);

}  // namespace minksim
