#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "udw/scenario.hpp"

using namespace udw;

namespace {

Scenario rest_pair(double L, double T) {
    Scenario s;
    s.dimension = 3;
    s.alice.worldline = Worldline::rest({0.0, 0.0, 0.0});
    s.alice.switching = SwitchingProfile::sudden(0.0, T);
    s.bob.worldline = Worldline::rest({L, 0.0, 0.0});
    s.bob.switching = SwitchingProfile::sudden(L, T);
    return s;
}

} // namespace

TEST_CASE("mirror swaps roles and reflects switching windows") {
    const double L = 2.0, T = 3.0;
    const auto m = mirror(rest_pair(L, T));
    // new sender is the old receiver, coupling over [-L-T, -L]
    CHECK(m.alice.worldline.base_position().x == L);
    CHECK(m.alice.switching.start() == doctest::Approx(-L - T));
    CHECK(m.alice.switching.duration() == T);
    // new receiver is the old sender, coupling over [-T, 0]
    CHECK(m.bob.worldline.base_position().x == 0.0);
    CHECK(m.bob.switching.start() == doctest::Approx(-T));
    CHECK(m.bob.switching.duration() == T);
}

TEST_CASE("mirror reflects worldlines through t=0") {
    Scenario s;
    s.alice.worldline = Worldline::inertial({0.5, -0.2, 0.0}, {1.0, 2.0, 0.0});
    s.alice.switching = SwitchingProfile::gaussian(1.5, 0.4);
    s.bob.worldline = Worldline::uniform_acceleration(2.0);
    s.bob.switching = SwitchingProfile::exponential_decay(1.0);

    const auto m = mirror(s);
    // the hyperbola is its own time reflection
    CHECK(m.alice.worldline.kind() == WorldlineKind::UniformAcceleration);
    CHECK(m.alice.worldline.accel() == 2.0);
    // the inertial line reverses velocity, keeping its t=0 anchor point
    CHECK(m.bob.worldline.base_velocity().x == -0.5);
    CHECK(m.bob.worldline.base_velocity().y == 0.2);
    CHECK(m.bob.worldline.base_position().x == 1.0);
    // x'(t) = x(-t) pointwise
    for (double t : {-2.0, -0.5, 1.3}) {
        CHECK(m.bob.worldline.position(t).x ==
              doctest::Approx(s.alice.worldline.position(-t).x).epsilon(1e-15));
        CHECK(m.alice.worldline.position(t).x ==
              doctest::Approx(s.bob.worldline.position(-t).x).epsilon(1e-15));
    }
    // switching profiles reflect in proper time
    CHECK(m.bob.switching.center() == -1.5);
    CHECK(m.alice.switching.kind() == SwitchingKind::ExponentialDecay);
    CHECK(m.alice.switching.width() == 1.0);
}

TEST_CASE("mirror is an involution up to role exchange") {
    Scenario s;
    s.dimension = 2;
    s.alice.coupling = 0.01;
    s.alice.gap = 1.7;
    s.alice.worldline = Worldline::inertial({0.3, 0.0, 0.0}, {-1.0, 0.0, 0.0});
    s.alice.switching = SwitchingProfile::sudden(0.5, 2.0);
    s.bob.coupling = 0.02;
    s.bob.gap = 0.9;
    s.bob.worldline = Worldline::rest({4.0, 0.0, 0.0});
    s.bob.switching = SwitchingProfile::gaussian(3.0, 0.7);
    s.tail_cutoff = 1e-12;

    const auto mm = mirror(mirror(s));
    CHECK(mm.dimension == s.dimension);
    CHECK(mm.tail_cutoff == s.tail_cutoff);
    CHECK(mm.alice.coupling == s.alice.coupling);
    CHECK(mm.alice.gap == s.alice.gap);
    CHECK(mm.alice.worldline.base_velocity().x == s.alice.worldline.base_velocity().x);
    CHECK(mm.alice.worldline.base_position().x == s.alice.worldline.base_position().x);
    CHECK(mm.alice.switching.start() == s.alice.switching.start());
    CHECK(mm.alice.switching.duration() == s.alice.switching.duration());
    CHECK(mm.bob.coupling == s.bob.coupling);
    CHECK(mm.bob.switching.center() == s.bob.switching.center());
    CHECK(mm.bob.switching.width() == s.bob.switching.width());
}

TEST_CASE("perturbative smallness warnings per dimension") {
    Scenario s = rest_pair(2.0, 1.0);

    s.dimension = 1;
    s.alice.coupling = 0.3;
    s.alice.gap = 1.0;
    s.bob.coupling = 0.05;
    s.bob.gap = 1.0;
    auto w = perturbative_warnings(s);
    REQUIRE(w.size() == 1);
    CHECK(w[0].find("alice") != std::string::npos);

    s.alice.coupling = 0.05;
    CHECK(perturbative_warnings(s).empty());

    // in 2+1 the ratio is coupling over sqrt(gap)
    s.dimension = 2;
    s.alice.coupling = 0.4;
    s.alice.gap = 9.0;
    w = perturbative_warnings(s);
    REQUIRE(w.size() == 1);
    s.alice.coupling = 0.3; // exactly 0.1 is still acceptable
    CHECK(perturbative_warnings(s).empty());

    // in 3+1 the coupling itself is the dimensionless ratio
    s.dimension = 3;
    s.alice.coupling = 0.2;
    CHECK(perturbative_warnings(s).size() == 1);
    s.alice.coupling = 0.05;
    CHECK(perturbative_warnings(s).empty());
}

TEST_CASE("zero gap leaves the smallness ratio undefined in low dimensions") {
    Scenario s = rest_pair(1.0, 1.0);
    s.dimension = 1;
    s.alice.coupling = 0.01;
    s.alice.gap = 0.0;
    s.bob.coupling = 0.01;
    s.bob.gap = 1.0;
    auto w = perturbative_warnings(s);
    REQUIRE(w.size() == 1);
    CHECK(w[0].find("undefined") != std::string::npos);

    // dimensionless coupling needs no gap in 3+1
    s.dimension = 3;
    CHECK(perturbative_warnings(s).empty());
}

TEST_CASE("negative couplings are rejected") {
    Scenario s = rest_pair(1.0, 1.0);
    s.alice.coupling = -0.1;
    CHECK_THROWS_AS(perturbative_warnings(s), std::invalid_argument);
}
