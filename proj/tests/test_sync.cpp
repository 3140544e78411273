#include <doctest.h>

#include <cmath>
#include <random>

#include "minksim/sync.hpp"

using namespace minksim;

namespace {

// Independent oracle: linear scan for the smallest tau with
// tau^2 >= sigma^2 + rho^2 (ratio 1). Kept free of isqrt on purpose.
std::int64_t scan_marked(std::int64_t sigma, std::int64_t rho) {
    unsigned __int128 target = static_cast<unsigned __int128>(sigma) * sigma +
                               static_cast<unsigned __int128>(rho) * rho;
    std::int64_t tau = 0;
    while (static_cast<unsigned __int128>(tau) * tau < target) ++tau;
    return tau;
}

Rational one() { return Rational(1, 1); }

}  // namespace

TEST_CASE("marked_index reference points") {
    CHECK(marked_index(10, 5, one()) == 12);
    CHECK(marked_index(60, 30, one()) == 68);
    CHECK(marked_index(20, 10, one()) == 23);
    CHECK(marked_index(20, 10, one()) == scan_marked(20, 10));
    for (std::int64_t k : {0, 1, 7, 100, 12345}) CHECK(marked_index(k, 0, one()) == k);
}

TEST_CASE("closed form equals the scan oracle on a sampled grid") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 4000; ++i) {
        std::int64_t sigma = static_cast<std::int64_t>(rng() % 2000);
        std::int64_t rho = static_cast<std::int64_t>(rng() % 500);
        CHECK(marked_index(sigma, rho, one()) == scan_marked(sigma, rho));
    }
}

TEST_CASE("marked_index with a non-unit rational ratio") {
    // ratio 1/2: tau^2 >= sigma^2 + rho^2/4
    Rational half(1, 2);
    CHECK(marked_index(0, 2, half) == 1);
    CHECK(marked_index(0, 3, half) == 2);   // ceil(1.5)
    CHECK(marked_index(10, 10, half) == 12);  // sqrt(100+25) = 11.18
    // ratio 3/2: tau^2 >= sigma^2 + 2.25 rho^2
    Rational r(3, 2);
    CHECK(marked_index(4, 2, r) == 5);  // sqrt(16+9) = 5 exactly
    // brute check against a long double scan
    for (std::int64_t sigma = 0; sigma < 40; ++sigma) {
        for (std::int64_t rho = 0; rho < 40; ++rho) {
            long double exact = sqrtl(static_cast<long double>(sigma) * sigma +
                                      (static_cast<long double>(rho) * 3 / 2) *
                                          (static_cast<long double>(rho) * 3 / 2));
            std::int64_t tau = 0;
            while (static_cast<long double>(tau) < exact) ++tau;
            CHECK(marked_index(sigma, rho, r) == tau);
        }
    }
}

TEST_CASE("monotonicity: non-decreasing in rho and sigma") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 3000; ++i) {
        std::int64_t sigma = static_cast<std::int64_t>(rng() % 5000);
        std::int64_t rho = static_cast<std::int64_t>(rng() % 1000);
        CHECK(marked_index(sigma, rho + 1, one()) >= marked_index(sigma, rho, one()));
        CHECK(marked_index(sigma + 1, rho, one()) >= marked_index(sigma, rho, one()));
    }
}

TEST_CASE("strict growth in sigma at tick granularity within the timelike range") {
    // one tick advances sigma by tau_r; with rho at most sigma (every
    // reachable particle history) the next marked node is strictly later
    std::mt19937_64 rng(14);
    for (int i = 0; i < 3000; ++i) {
        std::int64_t tau_r = 2 + static_cast<std::int64_t>(rng() % 49);
        std::int64_t ticks = 1 + static_cast<std::int64_t>(rng() % 100);
        std::int64_t sigma = ticks * tau_r;
        std::int64_t rho = static_cast<std::int64_t>(rng() % (sigma + 1));
        std::int64_t next_rho = rho + static_cast<std::int64_t>(rng() % tau_r);  // <= tau_r-1 cells
        CHECK(marked_index(sigma + tau_r, next_rho, one()) > marked_index(sigma, rho, one()));
    }
}

TEST_CASE("dilation direction: marked never precedes the origin clock") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 3000; ++i) {
        std::int64_t sigma = static_cast<std::int64_t>(rng() % 5000);
        std::int64_t rho = static_cast<std::int64_t>(rng() % 1000);
        std::int64_t m = marked_index(sigma, rho, one());
        CHECK(m >= sigma);
        if (rho == 0) CHECK(m == sigma);
        if (rho > 0 && sigma > 0) CHECK(m > sigma);
    }
}

TEST_CASE("discretization bound: 0 <= marked - exact root < 1") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 3000; ++i) {
        std::int64_t sigma = static_cast<std::int64_t>(rng() % 10000);
        std::int64_t rho = static_cast<std::int64_t>(rng() % 1000);
        long double exact = sqrtl(static_cast<long double>(sigma) * sigma +
                                  static_cast<long double>(rho) * rho);
        long double diff = static_cast<long double>(marked_index(sigma, rho, one())) - exact;
        CHECK(diff >= 0.0L);
        CHECK(diff < 1.0L);
    }
}

TEST_CASE("synchronize_cell schedules the next local tick") {
    SyncParams params{10, one()};
    SpaceCell cell;
    cell.x = 5;
    cell.local_ticks = 0;
    CHECK(synchronize_cell(cell, params, 1000) == SyncStatus::Scheduled);
    CHECK(cell.marked == 12);

    cell.x = 0;
    cell.local_ticks = 2;
    CHECK(synchronize_cell(cell, params, 1000) == SyncStatus::Scheduled);
    CHECK(cell.marked == 30);

    cell.x = 10;
    cell.local_ticks = 1;
    CHECK(synchronize_cell(cell, params, 1000) == SyncStatus::Scheduled);
    CHECK(cell.marked == 23);
}

TEST_CASE("synchronize_cell signals when the run is too short for the cell") {
    SyncParams params{10, one()};
    SpaceCell far;
    far.x = 200;
    CHECK(synchronize_cell(far, params, 80) == SyncStatus::BeyondTimeline);
    REQUIRE(far.marked.has_value());
    CHECK(*far.marked == 201);  // sqrt(100 + 40000) rounded up
    CHECK(synchronize_cell(far, params, 300) == SyncStatus::Scheduled);
}

TEST_CASE("dispatch_tick shifts exactly the cells marked for the node") {
    SyncParams params{10, one()};
    SpaceLattice l = SpaceLattice::build(20);
    for (auto& c : l.cells()) synchronize_cell(c, params, 1000);

    SUBCASE("cell 5 fires at node 12") {
        auto shifted = dispatch_tick(TimeNode{12, false}, l, params, 1000);
        // cells 5 and 6 both have first marked 12
        REQUIRE(shifted.size() == 2);
        CHECK(shifted[0] == 5);
        CHECK(shifted[1] == 6);
        CHECK(l.cell(5).local_ticks == 1);
        CHECK(l.cell(5).marked == 21);  // rescheduled: sqrt(400+25) -> 21
    }
    SUBCASE("no cell marked for node 7") {
        CHECK(dispatch_tick(TimeNode{7, false}, l, params, 1000).empty());
    }
    SUBCASE("only cell 0 fires at node 10") {
        auto shifted = dispatch_tick(TimeNode{10, true}, l, params, 1000);
        REQUIRE(shifted.size() == 1);
        CHECK(shifted[0] == 0);
        CHECK(l.cell(5).local_ticks == 0);
    }
}

TEST_CASE("convergence: doubling the resolution at least halves the worst relative error") {
    // fixed physical setup: beta = 0.5, tick length 1; vary the resolution
    auto max_err = [](std::int64_t tau_r) {
        std::int64_t j = tau_r / 2;
        long double worst = 0.0L;
        for (std::int64_t k = 1; k <= 8; ++k) {
            std::int64_t m = marked_index(k * tau_r, k * j, Rational(1, 1));
            long double t = static_cast<long double>(m) / static_cast<long double>(tau_r);
            long double ta = static_cast<long double>(k) * sqrtl(1.25L);
            long double err = fabsl(t - ta) / ta;
            if (err > worst) worst = err;
        }
        return worst;
    };
    long double e10 = max_err(10), e20 = max_err(20), e40 = max_err(40);
    CHECK(e20 <= e10 / 2);
    CHECK(e40 <= e20 / 2);
}
