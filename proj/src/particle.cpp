#include "minksim/particle.hpp"

#include <string>

#include "minksim/errors.hpp"

namespace minksim {

MotionStatus step_motion(Particle& p, SpaceLattice& lattice, std::size_t particle_id) {
    if (p.motion_completed()) return MotionStatus::Completed;
    auto dest = lattice.neighbor(p.position, p.direction());
    if (!dest) {
        throw OutOfSpaceError("particle left the lattice at x=" + std::to_string(p.position) +
                              " moving " + (p.direction() > 0 ? "+1" : "-1"));
    }
    SpaceCell& to = lattice.cell(*dest);
    if (to.occupant && *to.occupant != particle_id) {
        throw ConfigError("cell " + std::to_string(*dest) + " already occupied");
    }
    lattice.cell(p.position).occupant.reset();
    to.occupant = particle_id;
    p.position = *dest;
    ++p.path_hops;
    --p.jump_cursor;
    return MotionStatus::Moved;
}

void reset(Particle& p, bool completed_in_time) {
    if (completed_in_time) {
        ++p.proper_ticks;
        p.completed_path = p.path_hops;
    }
    p.jump_cursor = p.momentum_magnitude();
}

void do_impact(Particle& p, const Carrier& c, std::int64_t tau_r) {
    if (!p.motion_completed()) {
        throw InteractionForbiddenError(ImpactRefusal::MotionIncomplete,
                                        "interaction forbidden: motion in progress");
    }
    if (p.momentum_magnitude() >= tau_r) {
        throw InteractionForbiddenError(ImpactRefusal::TimeStopped,
                                        "interaction forbidden: particle time is stopped");
    }
    std::int64_t acts = c.acts;
    // The rest-mass structure consumes acts before the register grows.
    std::int64_t absorbed = std::min(acts, p.mass_register);
    p.mass_register -= absorbed;
    acts -= absorbed;
    p.momentum += (c.sign >= 0 ? acts : -acts);
}

double force_from_intensity(std::int64_t t_i, const UnitSystem& u, std::int64_t tau_r) {
    double tr = static_cast<double>(tau_r);
    return (1.0 / u.v_m) * (u.v_t / (tr * tr)) * static_cast<double>(t_i);
}

double start_delay(std::int64_t mu, std::int64_t t_i, std::int64_t tau_r) {
    if (t_i == 0) throw ConfigError("start_delay: t_i must be >= 1");
    return static_cast<double>(tau_r) * static_cast<double>(mu) / static_cast<double>(t_i);
}

}  // namespace minksim
