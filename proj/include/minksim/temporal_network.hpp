#pragma once

// The laboratory timeline (ordered time nodes with bearing flags) and the
// one-dimensional lattice of space cells. Links are ordinals into ordered
// sequences; traversal is strictly sequential, like the node lists they
// stand for.

#include <cstdint>
#include <optional>
#include <vector>

namespace minksim {

/// One node of laboratory time. The index doubles as the natural time value.
struct TimeNode {
    std::int64_t index = 0;
    bool bearing = false;  // true exactly when index > 0 and index % tau_r == 0
};

/// The laboratory timeline: materialized node sequence plus a forward-only
/// cursor. Node 0 is ordinary; bearing nodes sit at every positive multiple
/// of the resolution.
class LabTimeline {
public:
    LabTimeline() = default;  // empty placeholder; build() makes a usable one

    /// Timeline covering total_ticks ticks: total_ticks * tau_r + 1 nodes.
    static LabTimeline build(std::int64_t total_ticks, std::int64_t tau_r);

    /// Timeline with nodes 0..last_index, for runs cut at a raw node count.
    static LabTimeline with_last_index(std::int64_t last_index, std::int64_t tau_r);

    /// Moves the cursor one node forward and returns it; nullptr at the end
    /// of time (normal run termination).
    const TimeNode* advance();

    const TimeNode& current() const { return nodes_[cursor_]; }
    std::int64_t cursor() const { return cursor_; }
    std::int64_t last_index() const { return static_cast<std::int64_t>(nodes_.size()) - 1; }
    std::int64_t node_count() const { return static_cast<std::int64_t>(nodes_.size()); }
    std::int64_t resolution() const { return tau_r_; }
    const std::vector<TimeNode>& nodes() const { return nodes_; }

private:
    std::vector<TimeNode> nodes_;
    std::int64_t cursor_ = 0;
    std::int64_t tau_r_ = 1;
};

/// One cell of physical space.
struct SpaceCell {
    std::int64_t x = 0;            // cell coordinate, natural units
    std::int64_t local_ticks = 0;  // completed local time shifts
    std::optional<std::int64_t> marked;    // lab node of the next local shift
    std::optional<std::size_t> occupant;   // particle id, if any
};

/// Contiguous cells 0..n-1, at most one occupant each.
class SpaceLattice {
public:
    /// n_cells cells, all unoccupied, clocks unscheduled. Rejects n_cells < 1.
    static SpaceLattice build(std::int64_t n_cells);

    bool contains(std::int64_t x) const { return x >= 0 && x < size(); }
    std::int64_t size() const { return static_cast<std::int64_t>(cells_.size()); }

    SpaceCell& cell(std::int64_t x) { return cells_[static_cast<std::size_t>(x)]; }
    const SpaceCell& cell(std::int64_t x) const { return cells_[static_cast<std::size_t>(x)]; }

    /// Neighbor coordinate in the given direction (+1 / -1), or nullopt at
    /// the edge.
    std::optional<std::int64_t> neighbor(std::int64_t x, int direction) const;

    std::vector<SpaceCell>& cells() { return cells_; }
    const std::vector<SpaceCell>& cells() const { return cells_; }

private:
    std::vector<SpaceCell> cells_;
};

}  // namespace minksim
