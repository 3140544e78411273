#include "minksim/engine.hpp"

#include <cstdio>
#include <string>

#include "minksim/errors.hpp"

namespace minksim {

const char* to_string(EventKind k) {
    switch (k) {
        case EventKind::Advance: return "advance";
        case EventKind::LocalTick: return "local-tick";
        case EventKind::Move: return "move";
        case EventKind::Reset: return "reset";
        case EventKind::Impact: return "impact";
        case EventKind::ProperTick: return "proper-tick";
    }
    return "?";
}

std::string TraceEvent::format() const {
    char buf[160];
    switch (kind) {
        case EventKind::Advance:
            std::snprintf(buf, sizeof buf, "%lld advance - -", static_cast<long long>(node));
            break;
        case EventKind::LocalTick:
            std::snprintf(buf, sizeof buf, "%lld local-tick %lld next=%lld",
                          static_cast<long long>(node), static_cast<long long>(cell),
                          static_cast<long long>(detail));
            break;
        case EventKind::Impact:
            std::snprintf(buf, sizeof buf, "%lld impact %lld p%lld acts=%lld ok=%d j=%lld jc=%lld tp=%lld",
                          static_cast<long long>(node), static_cast<long long>(cell),
                          static_cast<long long>(particle), static_cast<long long>(detail),
                          accepted ? 1 : 0, static_cast<long long>(momentum),
                          static_cast<long long>(jump_cursor), static_cast<long long>(proper_ticks));
            break;
        default:
            std::snprintf(buf, sizeof buf, "%lld %s %lld p%lld j=%lld jc=%lld tp=%lld",
                          static_cast<long long>(node), to_string(kind), static_cast<long long>(cell),
                          static_cast<long long>(particle), static_cast<long long>(momentum),
                          static_cast<long long>(jump_cursor), static_cast<long long>(proper_ticks));
            break;
    }
    return buf;
}

Observation measure(const Spacetime& st, const Particle& p, std::int64_t tick,
                    const Observation* prev, double tick_force) {
    Observation o;
    o.tick = tick;
    o.x_std = distance_to_standard(p.position, st.units);
    std::int64_t sigma = p.proper_ticks * st.sync.tau_r;
    std::int64_t t_nodes = marked_index(sigma, p.completed_path, st.sync.ratio);
    o.t_std = time_to_standard(t_nodes, st.units);
    o.tp_std = time_to_standard(p.proper_ticks * st.sync.tau_r, st.units);
    o.p_register = static_cast<double>(p.momentum) / static_cast<double>(st.sync.tau_r);
    if (prev) {
        double dt = o.t_std - prev->t_std;
        double dx = o.x_std - prev->x_std;
        double dtp = o.tp_std - prev->tp_std;
        o.p_meas = prev->p_meas + tick_force * dt;
        o.energy = prev->energy + tick_force * dx;
        if (dt > 0.0) {
            o.v_meas = dx / dt;
            if (dtp > 0.0) o.gamma_est = dt / dtp;
        }
    }
    return o;
}

Engine::Engine(Spacetime st) : st_(std::move(st)) {
    st_.units.validate();
    if (st_.timeline.resolution() != st_.sync.tau_r)
        throw ConfigError("engine: timeline resolution differs from sync resolution");
    for (std::size_t i = 0; i < st_.particles.size(); ++i) {
        Particle& p = st_.particles[i];
        if (!st_.lattice.contains(p.position))
            throw ConfigError("engine: particle " + std::to_string(i) + " placed outside the lattice");
        SpaceCell& c = st_.lattice.cell(p.position);
        if (c.occupant) throw ConfigError("engine: two particles share cell " + std::to_string(p.position));
        c.occupant = i;
        p.birth_position = p.position;
        p.completed_path = p.path_hops;
    }
}

void Engine::emit(RunResult& out, const RunOptions& opt, TraceEvent ev) {
    if (opt.sink) opt.sink(ev);
    out.events.push_back(std::move(ev));
}

void Engine::boundary(std::int64_t tick, RunResult& out, const RunOptions& opt,
                      const std::vector<bool>& completed_entry) {
    std::int64_t node = tick * st_.sync.tau_r;
    auto& row = out.ticks.emplace_back();
    for (std::size_t i = 0; i < st_.particles.size(); ++i) {
        Particle& p = st_.particles[i];
        bool completed = tick == 0 ? p.motion_completed() : completed_entry[i];
        if (tick > 0 && completed) {
            ++p.proper_ticks;
            p.completed_path = p.path_hops;
            emit(out, opt, TraceEvent{node, EventKind::ProperTick, p.position,
                                      static_cast<std::int64_t>(i), p.momentum, p.jump_cursor,
                                      p.proper_ticks});
        }
        const Observation* prev = tick > 0 ? &prev_obs_[i] : nullptr;
        Observation obs = measure(st_, p, tick, prev, tick_force_[i]);
        row.push_back(obs);
        prev_obs_[i] = obs;

        // Carrier for the tick that starts at this boundary.
        auto it = st_.carrier_schedule.find(tick + 1);
        double next_force = 0.0;
        if (it != st_.carrier_schedule.end()) {
            const Carrier& c = it->second;
            ++out.carriers_offered;
            next_force = (c.sign >= 0 ? 1.0 : -1.0) *
                         force_from_intensity(c.acts, st_.units, st_.sync.tau_r);
            TraceEvent ev{node, EventKind::Impact, p.position, static_cast<std::int64_t>(i),
                          p.momentum, p.jump_cursor, p.proper_ticks,
                          c.acts * (c.sign >= 0 ? 1 : -1), true};
            if (completed) {
                try {
                    do_impact(p, c, st_.sync.tau_r);
                    ++out.carriers_delivered;
                } catch (const InteractionForbiddenError&) {
                    ev.accepted = false;  // time-stop surfaces as a recorded event
                    ++out.carriers_dropped;
                }
            } else {
                ev.accepted = false;
                ++out.carriers_dropped;
            }
            ev.momentum = p.momentum;
            emit(out, opt, std::move(ev));
        }
        tick_force_[i] = next_force;

        p.jump_cursor = p.momentum_magnitude();
        emit(out, opt, TraceEvent{node, EventKind::Reset, p.position, static_cast<std::int64_t>(i),
                                  p.momentum, p.jump_cursor, p.proper_ticks});
    }
}

RunResult Engine::run(const RunOptions& opt) {
    if (opt.until_tick < 0) throw ConfigError("engine: until_tick must be >= 0");
    std::int64_t tau_r = st_.sync.tau_r;
    std::int64_t horizon = opt.total_nodes > 0 ? opt.total_nodes : opt.until_tick * tau_r;
    if (horizon > st_.timeline.last_index())
        throw TimelineExhaustedError("engine: timeline ends at node " +
                                     std::to_string(st_.timeline.last_index()) +
                                     ", run needs node " + std::to_string(horizon));

    RunResult out;
    prev_obs_.assign(st_.particles.size(), Observation{});
    tick_force_.assign(st_.particles.size(), 0.0);

    if (opt.cell_clocks) {
        for (auto& cell : st_.lattice.cells())
            synchronize_cell(cell, st_.sync, st_.timeline.last_index());
    }

    std::vector<bool> completed_entry(st_.particles.size(), true);
    boundary(0, out, opt, completed_entry);

    for (std::int64_t step = 1; step <= horizon; ++step) {
        const TimeNode* node = st_.timeline.advance();
        if (!node) throw TimelineExhaustedError("engine: timeline exhausted at step " + std::to_string(step));
        if (opt.record_advances)
            emit(out, opt, TraceEvent{node->index, EventKind::Advance, -1, -1});

        for (std::size_t i = 0; i < st_.particles.size(); ++i)
            completed_entry[i] = st_.particles[i].motion_completed();

        if (opt.cell_clocks) {
            for (std::int64_t x : dispatch_tick(*node, st_.lattice, st_.sync, st_.timeline.last_index())) {
                const SpaceCell& cell = st_.lattice.cell(x);
                emit(out, opt, TraceEvent{node->index, EventKind::LocalTick, x, -1, 0, 0, 0,
                                          cell.marked ? *cell.marked : -1});
            }
        }

        for (std::size_t i = 0; i < st_.particles.size(); ++i) {
            Particle& p = st_.particles[i];
            if (!p.motion_completed()) {
                step_motion(p, st_.lattice, i);
                emit(out, opt, TraceEvent{node->index, EventKind::Move, p.position,
                                          static_cast<std::int64_t>(i), p.momentum, p.jump_cursor,
                                          p.proper_ticks});
            }
        }

        if (node->bearing) {
            std::int64_t tick = node->index / tau_r;
            if (tick <= opt.until_tick) boundary(tick, out, opt, completed_entry);
        }
    }
    return out;
}

}  // namespace minksim
