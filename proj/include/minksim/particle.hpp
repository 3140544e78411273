#pragma once

// Point-particle state and mechanics: the momentum jump register, motion
// steps, bearing resets, interaction via carriers, and the force and
// start-delay formulas.

#include <cstdint>
#include <cstdlib>

#include "minksim/temporal_network.hpp"
#include "minksim/units.hpp"

namespace minksim {

/// One interaction message: a number of acts and a push direction.
/// sign = +1 pushes toward +x, -1 toward -x.
struct Carrier {
    std::int64_t acts = 1;
    int sign = +1;
};

/// A point particle. Momentum is a signed node count: the magnitude is the
/// jump register length, the sign the direction of motion.
struct Particle {
    std::int64_t position = 0;
    std::int64_t momentum = 0;       // signed register
    std::int64_t jump_cursor = 0;    // remaining steps of the current jump
    std::int64_t mass_register = 0;  // carrier acts absorbed before momentum grows
    std::int64_t proper_ticks = 0;   // completed-in-time bearing resets

    std::int64_t birth_position = 0;  // cell where the run started
    std::int64_t path_hops = 0;       // cells traversed, direction-independent
    std::int64_t completed_path = 0;  // path_hops at the last completed jump

    std::int64_t momentum_magnitude() const { return std::abs(momentum); }
    int direction() const { return momentum < 0 ? -1 : +1; }
    bool motion_completed() const { return jump_cursor == 0; }
};

enum class MotionStatus { Moved, Completed };

/// One motion step: if the jump is in progress, the cursor decrements and
/// the particle moves one cell in its direction (occupancy updated).
/// Throws OutOfSpaceError when the destination does not exist and
/// ConfigError when it is already occupied.
MotionStatus step_motion(Particle& p, SpaceLattice& lattice, std::size_t particle_id);

/// Bearing reset: refills the jump cursor from the register. When the jump
/// was already completed (completed_in_time), the particle's clock advances
/// one proper tick first.
void reset(Particle& p, bool completed_in_time);

/// Convenience overload: completion judged from the current cursor.
inline void reset(Particle& p) { reset(p, p.motion_completed()); }

/// Applies a carrier to the particle's momentum register. Only legal when
/// motion is completed and the particle's clock is running (register below
/// tau_r); otherwise throws InteractionForbiddenError. The mass register
/// absorbs acts before any reach the momentum register; momentum through
/// zero flips the sign.
void do_impact(Particle& p, const Carrier& c, std::int64_t tau_r);

/// Standard-unit force of t_i interaction acts per tick:
/// (1/v_m) * (v_t / tau_r^2) * t_i.
double force_from_intensity(std::int64_t t_i, const UnitSystem& u, std::int64_t tau_r);

/// Motion start delay in nodes for natural rest mass mu under intensity t_i:
/// tau_r * mu / t_i. Rejects t_i = 0.
double start_delay(std::int64_t mu, std::int64_t t_i, std::int64_t tau_r);

}  // namespace minksim
