#include "minksim/sync.hpp"

#include <stdexcept>

namespace minksim {

std::int64_t marked_index(std::int64_t sigma, std::int64_t rho, const Rational& ratio) {
    if (sigma < 0 || rho < 0) throw std::invalid_argument("marked_index: sigma and rho must be >= 0");
    // tau^2 >= sigma^2 + rho^2 (num/den)^2  <=>  (tau*den)^2 >= (sigma*den)^2 + (rho*num)^2
    uint128 a = static_cast<uint128>(sigma) * static_cast<std::uint64_t>(ratio.den);
    uint128 b = static_cast<uint128>(rho) * static_cast<std::uint64_t>(ratio.num);
    uint128 interval = a * a + b * b;
    std::uint64_t root = isqrt_ceil(interval);  // smallest integer >= den * tau_exact
    std::uint64_t den = static_cast<std::uint64_t>(ratio.den);
    return static_cast<std::int64_t>((root + den - 1) / den);
}

SyncStatus synchronize_cell(SpaceCell& cell, const SyncParams& params, std::int64_t timeline_last) {
    std::int64_t sigma = (cell.local_ticks + 1) * params.tau_r;
    cell.marked = marked_index(sigma, cell.x, params.ratio);
    return *cell.marked > timeline_last ? SyncStatus::BeyondTimeline : SyncStatus::Scheduled;
}

std::vector<std::int64_t> dispatch_tick(const TimeNode& node, SpaceLattice& lattice,
                                        const SyncParams& params, std::int64_t timeline_last) {
    std::vector<std::int64_t> shifted;
    for (auto& cell : lattice.cells()) {
        if (cell.marked && *cell.marked == node.index) {
            ++cell.local_ticks;
            shifted.push_back(cell.x);
            synchronize_cell(cell, params, timeline_last);
        }
    }
    return shifted;
}

}  // namespace minksim
