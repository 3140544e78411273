#pragma once

// The synchronization rule and mechanism. Each cell's next local time shift
// is scheduled at the lab node given by the invariant interval
//   tau^2 = sigma^2 + (rho * ratio)^2,
// rounded up to the next whole node. The rule is evaluated in exact integer
// arithmetic.

#include <cstdint>
#include <vector>

#include "minksim/intmath.hpp"
#include "minksim/temporal_network.hpp"

namespace minksim {

/// Parameters of the synchronization rule.
struct SyncParams {
    std::int64_t tau_r = 10;   // nodes per tick
    Rational ratio;            // node-units per cell-unit (v_t / v_l)
};

/// Smallest integer tau with tau^2 >= sigma^2 + (rho * ratio)^2.
std::int64_t marked_index(std::int64_t sigma, std::int64_t rho, const Rational& ratio);

/// Outcome of scheduling a cell's next local shift.
enum class SyncStatus {
    Scheduled,       // marked lies within the timeline
    BeyondTimeline,  // the run is too short for this cell's next shift
};

/// Assigns cell.marked for its next local tick (local_ticks + 1), using the
/// cell's own tick count for sigma. The marked node is always assigned;
/// BeyondTimeline signals that it exceeds timeline_last.
SyncStatus synchronize_cell(SpaceCell& cell, const SyncParams& params, std::int64_t timeline_last);

/// Fires the local time shift of every cell whose marked equals the node's
/// index: local_ticks increments and the cell is rescheduled. Returns the
/// shifted cell coordinates in ascending order.
std::vector<std::int64_t> dispatch_tick(const TimeNode& node, SpaceLattice& lattice,
                                        const SyncParams& params, std::int64_t timeline_last);

}  // namespace minksim
