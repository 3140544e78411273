#include "minksim/temporal_network.hpp"

#include "minksim/errors.hpp"

namespace minksim {

LabTimeline LabTimeline::build(std::int64_t total_ticks, std::int64_t tau_r) {
    if (total_ticks < 1) throw ConfigError("timeline: total_ticks must be >= 1");
    return with_last_index(total_ticks * tau_r, tau_r);
}

LabTimeline LabTimeline::with_last_index(std::int64_t last_index, std::int64_t tau_r) {
    if (tau_r < 1) throw ConfigError("timeline: tau_r must be >= 1");
    if (last_index < 0) throw ConfigError("timeline: last_index must be >= 0");
    LabTimeline t;
    t.tau_r_ = tau_r;
    t.nodes_.resize(static_cast<std::size_t>(last_index) + 1);
    for (std::int64_t i = 0; i <= last_index; ++i) {
        t.nodes_[static_cast<std::size_t>(i)] = TimeNode{i, i > 0 && i % tau_r == 0};
    }
    return t;
}

const TimeNode* LabTimeline::advance() {
    if (cursor_ + 1 > last_index()) return nullptr;
    ++cursor_;
    return &nodes_[static_cast<std::size_t>(cursor_)];
}

SpaceLattice SpaceLattice::build(std::int64_t n_cells) {
    if (n_cells < 1) throw ConfigError("lattice: n_cells must be >= 1");
    SpaceLattice l;
    l.cells_.resize(static_cast<std::size_t>(n_cells));
    for (std::int64_t x = 0; x < n_cells; ++x) l.cells_[static_cast<std::size_t>(x)].x = x;
    return l;
}

std::optional<std::int64_t> SpaceLattice::neighbor(std::int64_t x, int direction) const {
    std::int64_t nx = x + (direction >= 0 ? 1 : -1);
    if (!contains(nx)) return std::nullopt;
    return nx;
}

}  // namespace minksim
