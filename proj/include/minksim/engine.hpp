#pragma once

// The main simulation loop: advance the lab timeline node by node, fire
// local time shifts at marked nodes, step particle jumps, and at every
// bearing boundary credit proper time, record observables, deliver the
// next tick's carrier, and reset.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minksim/particle.hpp"
#include "minksim/sync.hpp"
#include "minksim/temporal_network.hpp"
#include "minksim/units.hpp"

namespace minksim {

enum class EventKind { Advance, LocalTick, Move, Reset, Impact, ProperTick };

const char* to_string(EventKind k);

/// One entry of the run's event stream. Events are emitted in
/// non-decreasing node order.
struct TraceEvent {
    std::int64_t node = 0;
    EventKind kind = EventKind::Advance;
    std::int64_t cell = -1;      // -1 when not tied to a cell
    std::int64_t particle = -1;  // -1 when not tied to a particle
    // particle snapshot (valid for particle events)
    std::int64_t momentum = 0;
    std::int64_t jump_cursor = 0;
    std::int64_t proper_ticks = 0;
    // extras
    std::int64_t detail = 0;     // local-tick: next marked (-1 dormant); impact: acts * sign
    bool accepted = true;        // impact only

    std::string format() const;
};

/// Per-tick observables of one particle, in standard units where noted.
struct Observation {
    std::int64_t tick = 0;
    double x_std = 0.0;        // position
    double t_std = 0.0;        // measured lab time of the particle's cell
    double tp_std = 0.0;       // particle's own elapsed time
    double p_register = 0.0;   // momentum register / tau_r, in m0*c
    double p_meas = 0.0;       // accumulated impulse of the applied force
    double energy = 1.0;       // rest energy plus accumulated work
    std::optional<double> v_meas;     // coordinate velocity over the last tick
    std::optional<double> gamma_est;  // dt/dtp over the last tick
};

/// The whole simulated world.
struct Spacetime {
    LabTimeline timeline;
    SpaceLattice lattice;
    std::vector<Particle> particles;
    SyncParams sync;
    UnitSystem units;
    std::map<std::int64_t, Carrier> carrier_schedule;  // tick number -> carrier
};

/// Measures a particle: position, the invariant-interval lab time of its
/// last completed jump, proper time, momentum readings. Velocity and the
/// gamma estimate need the previous tick's observation; both are missing
/// when the measured time did not advance.
Observation measure(const Spacetime& st, const Particle& p, std::int64_t tick,
                    const Observation* prev, double tick_force);

struct RunOptions {
    std::int64_t until_tick = 1;
    std::int64_t total_nodes = 0;     // 0 = until_tick * tau_r
    bool cell_clocks = true;          // drive per-cell local clocks (trace/audit)
    bool record_advances = false;     // include advance events in the trace
    std::function<void(const TraceEvent&)> sink;  // optional event sink
};

struct RunResult {
    std::vector<std::vector<Observation>> ticks;  // [tick][particle]
    std::vector<TraceEvent> events;               // collected when requested
    std::int64_t carriers_offered = 0;
    std::int64_t carriers_delivered = 0;
    std::int64_t carriers_dropped = 0;
};

class Engine {
public:
    explicit Engine(Spacetime st);

    /// Runs the node loop and returns per-tick observations plus the event
    /// stream. Requires the timeline to cover the requested horizon.
    RunResult run(const RunOptions& opt);

    const Spacetime& spacetime() const { return st_; }

private:
    void boundary(std::int64_t tick, RunResult& out, const RunOptions& opt,
                  const std::vector<bool>& completed_entry);
    void emit(RunResult& out, const RunOptions& opt, TraceEvent ev);

    Spacetime st_;
    std::vector<Observation> prev_obs_;
    std::vector<double> tick_force_;  // force active during the tick that just ended
};

}  // namespace minksim
