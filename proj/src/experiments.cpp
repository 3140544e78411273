#include "minksim/experiments.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "minksim/errors.hpp"
#include "minksim/oracles.hpp"

namespace minksim {

namespace {

std::int64_t integral_momentum(double beta, std::int64_t tau_r) {
    double j_exact = beta * static_cast<double>(tau_r);
    std::int64_t j = static_cast<std::int64_t>(std::llround(j_exact));
    if (std::abs(j_exact - static_cast<double>(j)) > 1e-9)
        throw ConfigError("time-dilation: beta * tau_r must be a whole node count (got " +
                          std::to_string(j_exact) + ")");
    return j;
}

Spacetime make_spacetime(std::int64_t tau_r, std::int64_t n_ticks, const UnitSystem& units,
                         std::int64_t n_cells, std::int64_t total_nodes) {
    Spacetime st;
    st.units = units;
    st.units.validate();
    st.sync = SyncParams{tau_r, units.node_per_cell_ratio()};
    std::int64_t last = total_nodes > 0 ? total_nodes : n_ticks * tau_r;
    st.timeline = LabTimeline::with_last_index(last, tau_r);
    st.lattice = SpaceLattice::build(n_cells);
    return st;
}

}  // namespace

DilationOutcome run_time_dilation(double beta, std::int64_t tau_r, std::int64_t n_ticks,
                                  const UnitSystem& units, const ExperimentOptions& opt) {
    if (n_ticks < 1) throw ConfigError("time-dilation: n_ticks must be >= 1");
    if (tau_r < 1) throw ConfigError("time-dilation: tau_r must be >= 1");
    if (beta < 0) throw ConfigError("time-dilation: beta must be >= 0");
    std::int64_t j = integral_momentum(beta, tau_r);

    // One node is one motion chance, so the horizon bounds the displacement.
    std::int64_t horizon = opt.total_nodes > 0 ? opt.total_nodes : n_ticks * tau_r;
    std::int64_t n_cells = opt.n_cells > 0 ? opt.n_cells : horizon + 2;
    Spacetime st = make_spacetime(tau_r, n_ticks, units, n_cells, opt.total_nodes);
    Particle p;
    p.position = 0;
    p.momentum = j;
    st.particles.push_back(p);

    Engine engine(std::move(st));
    RunOptions ro;
    ro.until_tick = n_ticks;
    ro.total_nodes = opt.total_nodes;
    ro.cell_clocks = opt.cell_clocks;
    ro.record_advances = opt.record_advances;
    RunResult run = engine.run(ro);

    double tick_len = units.tick_length(tau_r);
    DilationOutcome out;
    for (const auto& row : run.ticks) {
        const Observation& o = row[0];
        DilationRow r;
        r.tw = o.tick;
        r.x = o.x_std;
        r.t = o.t_std;
        r.ta = analytic_lab_time(o.tick, beta, tick_len);
        r.err_pct = o.tick == 0 ? 0.0 : relative_error(r.t, r.ta);
        r.tp = o.tp_std;
        out.rows.push_back(r);
    }
    out.run = std::move(run);
    return out;
}

ForceOutcome run_constant_force(std::int64_t t_i, std::int64_t mu, std::int64_t tau_r,
                                std::int64_t n_ticks, const UnitSystem& units,
                                const ExperimentOptions& opt) {
    if (t_i < 1) throw ConfigError("constant-force: t_i must be >= 1");
    if (mu < 1) throw ConfigError("constant-force: mu must be >= 1 (unit rest mass is mu=1)");
    if (n_ticks < 1) throw ConfigError("constant-force: n_ticks must be >= 1");
    if (tau_r < 1) throw ConfigError("constant-force: tau_r must be >= 1");

    std::int64_t horizon = opt.total_nodes > 0 ? opt.total_nodes : n_ticks * tau_r;
    std::int64_t n_cells = opt.n_cells > 0 ? opt.n_cells : horizon + 2;
    Spacetime st = make_spacetime(tau_r, n_ticks, units, n_cells, opt.total_nodes);
    Particle p;
    p.position = 0;
    // A particle of unit rest mass carries an empty absorption register;
    // each extra mass unit absorbs one more act before momentum grows.
    p.mass_register = mu - 1;
    st.particles.push_back(p);
    for (std::int64_t k = 1; k <= n_ticks; ++k) st.carrier_schedule[k] = Carrier{t_i, +1};

    Engine engine(std::move(st));
    RunOptions ro;
    ro.until_tick = n_ticks;
    ro.total_nodes = opt.total_nodes;
    ro.cell_clocks = opt.cell_clocks;
    ro.record_advances = opt.record_advances;
    RunResult run = engine.run(ro);

    ForceOutcome out;
    for (const auto& row : run.ticks) {
        const Observation& o = row[0];
        ForceRow r;
        r.tw = o.tick;
        r.p = o.p_meas;
        r.va = analytic_velocity(r.p);
        r.ea = analytic_energy(r.p);
        r.e = o.energy;
        r.e_err_pct = relative_error(r.e, r.ea);
        if (o.tick == 0) {
            r.v = 0.0;
            r.v_err_pct = 0.0;
        } else if (o.v_meas) {
            r.v = *o.v_meas;
            r.v_err_pct = r.va == 0.0 ? 0.0 : relative_error(r.v, r.va);
        } else {
            r.v = std::numeric_limits<double>::quiet_NaN();
            r.v_err_pct = std::numeric_limits<double>::quiet_NaN();
            r.v_defined = false;
        }
        out.rows.push_back(r);
    }
    out.run = std::move(run);
    return out;
}

std::vector<std::pair<double, double>> worldline_points(const std::vector<DilationRow>& rows) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(rows.size());
    for (const auto& r : rows) pts.emplace_back(r.x, r.t);
    return pts;
}

std::vector<std::tuple<double, double, double>> vp_curve_points(const std::vector<ForceRow>& rows) {
    std::vector<std::tuple<double, double, double>> pts;
    pts.reserve(rows.size());
    for (const auto& r : rows) pts.emplace_back(r.p, r.v, r.va);
    return pts;
}

}  // namespace minksim
