#include <doctest.h>

#include <random>

#include "minksim/errors.hpp"
#include "minksim/temporal_network.hpp"

using namespace minksim;

TEST_CASE("timeline construction: node count and bearing placement") {
    LabTimeline t = LabTimeline::build(2, 10);
    CHECK(t.node_count() == 21);
    for (std::int64_t i = 0; i <= 20; ++i) {
        CHECK(t.nodes()[static_cast<std::size_t>(i)].bearing == (i == 10 || i == 20));
    }
}

TEST_CASE("resolution one: every node past zero is bearing") {
    LabTimeline t = LabTimeline::build(3, 1);
    CHECK(t.node_count() == 4);
    CHECK_FALSE(t.nodes()[0].bearing);
    for (std::size_t i = 1; i < 4; ++i) CHECK(t.nodes()[i].bearing);
}

TEST_CASE("bearing node count equals the tick count") {
    LabTimeline t = LabTimeline::build(8, 10);
    int bearing = 0;
    for (const auto& n : t.nodes()) bearing += n.bearing ? 1 : 0;
    CHECK(bearing == 8);
}

TEST_CASE("timeline rejects bad arguments") {
    CHECK_THROWS_AS(LabTimeline::build(0, 10), ConfigError);
    CHECK_THROWS_AS(LabTimeline::build(-1, 10), ConfigError);
    CHECK_THROWS_AS(LabTimeline::build(3, 0), ConfigError);
}

TEST_CASE("advance walks one node at a time and signals the end") {
    LabTimeline t = LabTimeline::build(1, 10);
    const TimeNode* n = t.advance();
    REQUIRE(n != nullptr);
    CHECK(n->index == 1);
    CHECK_FALSE(n->bearing);
    for (int i = 2; i <= 9; ++i) {
        n = t.advance();
        REQUIRE(n != nullptr);
    }
    CHECK(n->index == 9);
    n = t.advance();
    REQUIRE(n != nullptr);
    CHECK(n->index == 10);
    CHECK(n->bearing);
    CHECK(t.advance() == nullptr);  // end of time
    CHECK(t.advance() == nullptr);
}

TEST_CASE("advancing to exhaustion yields exactly the tick count of bearing nodes, in order") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        std::int64_t ticks = 1 + static_cast<std::int64_t>(rng() % 12);
        std::int64_t tau_r = 1 + static_cast<std::int64_t>(rng() % 20);
        LabTimeline t = LabTimeline::build(ticks, tau_r);
        std::int64_t bearing_seen = 0;
        std::int64_t prev = 0;
        while (const TimeNode* n = t.advance()) {
            CHECK(n->index == prev + 1);
            prev = n->index;
            CHECK(n->bearing == (n->index % tau_r == 0));
            if (n->bearing) ++bearing_seen;
        }
        CHECK(bearing_seen == ticks);
    }
}

TEST_CASE("lattice construction") {
    SpaceLattice one = SpaceLattice::build(1);
    CHECK(one.size() == 1);
    CHECK(one.cell(0).x == 0);
    CHECK_FALSE(one.cell(0).occupant.has_value());
    CHECK_FALSE(one.cell(0).marked.has_value());

    SpaceLattice l = SpaceLattice::build(80);
    CHECK(l.size() == 80);
    for (std::int64_t x = 0; x < 80; ++x) {
        CHECK(l.cell(x).x == x);
        CHECK(l.cell(x).local_ticks == 0);
    }
    CHECK(SpaceLattice::build(200).size() == 200);
    CHECK_THROWS_AS(SpaceLattice::build(0), ConfigError);
}

TEST_CASE("neighbor relation is symmetric and total on interior cells") {
    SpaceLattice l = SpaceLattice::build(10);
    for (std::int64_t x = 1; x < 9; ++x) {
        REQUIRE(l.neighbor(x, +1).has_value());
        REQUIRE(l.neighbor(x, -1).has_value());
        CHECK(*l.neighbor(x, +1) == x + 1);
        CHECK(*l.neighbor(x, -1) == x - 1);
        CHECK(*l.neighbor(*l.neighbor(x, +1), -1) == x);
    }
    CHECK_FALSE(l.neighbor(9, +1).has_value());
    CHECK_FALSE(l.neighbor(0, -1).has_value());
}
