#include <doctest.h>

#include <cmath>

#include "minksim/errors.hpp"
#include "minksim/oracles.hpp"

using namespace minksim;
using doctest::Approx;

TEST_CASE("analytic lab time") {
    CHECK(analytic_lab_time(1, 0.5, 1.0) == Approx(1.118033988749895));
    CHECK(analytic_lab_time(4, 0.0, 1.0) == Approx(4.0));
    CHECK(analytic_lab_time(5, 0.5, 1.0) == Approx(5.590169943749474));
}

TEST_CASE("analytic velocity") {
    CHECK(analytic_velocity(0.42) == Approx(0.38723).epsilon(1e-4));
    CHECK(analytic_velocity(0.0) == 0.0);
    CHECK(analytic_velocity(0.88) == Approx(0.66055).epsilon(1e-4));
}

TEST_CASE("analytic energy") {
    CHECK(analytic_energy(0.0) == Approx(1.0));
    CHECK(analytic_energy(0.53) == Approx(1.13177).epsilon(1e-4));
    CHECK(analytic_energy(0.88) == Approx(1.33207).epsilon(1e-4));
}

TEST_CASE("relative error") {
    CHECK(relative_error(1.2, 1.118033988749895) == Approx(7.33).epsilon(1e-3));
    CHECK(relative_error(3.7, 3.7) == 0.0);
    CHECK(relative_error(2.3, 2.23606797749979) == Approx(2.86).epsilon(1e-3));
    CHECK_THROWS_AS(relative_error(1.0, 0.0), ConfigError);
}

TEST_CASE("energy-momentum identity holds to 1e-12 across the range") {
    for (int i = 0; i <= 10000; ++i) {
        long double p = 100.0L * static_cast<long double>(i) / 10000.0L;
        long double e = analytic_energy_ext(p);
        CHECK(fabsl(e * e - p * p - 1.0L) <= 1e-12L);
    }
}

TEST_CASE("velocity, energy and momentum are mutually consistent") {
    for (int i = 0; i <= 2000; ++i) {
        double p = 30.0 * i / 2000.0;
        double va = analytic_velocity(p);
        double ea = analytic_energy(p);
        CHECK(va == Approx(p / ea).epsilon(1e-12));
        if (p > 0) CHECK(ea == Approx(1.0 / std::sqrt(1.0 - va * va)).epsilon(1e-9));
        CHECK(va >= 0.0);
        CHECK(va < 1.0);
        CHECK(ea >= 1.0);
    }
}

TEST_CASE("the run's proper velocity equals displacement per proper tick") {
    // t_a(Tw) * sqrt(1 - v^2) with v = beta/sqrt(1+beta^2) recovers Tw:
    // the configured beta is displacement per unit of particle time.
    for (double beta : {0.1, 0.5, 0.9, 2.0}) {
        double va = beta / std::sqrt(1.0 + beta * beta);
        for (std::int64_t tw : {1, 5, 8}) {
            double ta = analytic_lab_time(tw, beta, 1.0);
            CHECK(ta * std::sqrt(1.0 - va * va) == Approx(static_cast<double>(tw)).epsilon(1e-12));
        }
    }
}
