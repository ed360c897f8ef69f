#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fracl1/grid.hpp"

using namespace fracl1;

TEST_CASE("basic construction") {
    UniformGrid g(1.0, 4);
    CHECK(g.step() == 0.25);
    CHECK(g.node(0) == 0.0);
    CHECK(g.node(1) == 0.25);
    CHECK(g.node(2) == 0.5);
    CHECK(g.node(3) == 0.75);
    CHECK(g.node(4) == 1.0);
}

TEST_CASE("paper base resolution") {
    UniformGrid g(1.0, 1024);
    CHECK(g.step() == std::pow(2.0, -10));
}

TEST_CASE("node arithmetic on non-unit horizon") {
    UniformGrid g(2.0, 8);
    CHECK(g.node(3) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(g.node(8) == 2.0);
}

TEST_CASE("tau times N reproduces T within one ulp") {
    for (int n : {3, 7, 10, 1000, 1024}) {
        UniformGrid g(1.7, n);
        CHECK(g.step() * n == doctest::Approx(1.7).epsilon(1e-15));
    }
}

TEST_CASE("nodes strictly increasing with exact endpoints") {
    UniformGrid g(3.1, 1000);
    auto nodes = g.nodes();
    CHECK(nodes.front() == 0.0);
    CHECK(nodes.back() == 3.1);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        CHECK(nodes[i] > nodes[i - 1]);
    }
}

TEST_CASE("refinement nests coarse nodes bit-exactly") {
    SUBCASE("dyadic") {
        UniformGrid g(1.0, 4);
        UniformGrid f = g.refined(2);
        CHECK(f.steps() == 8);
        for (int n = 0; n <= 4; ++n) {
            CHECK(g.node(n) == f.node(2 * n));
        }
        CHECK(g.node(2) == 0.5);
        CHECK(f.node(4) == 0.5);
    }
    SUBCASE("non-dyadic factors and horizons") {
        UniformGrid g(0.7, 3);
        UniformGrid f = g.refined(3);
        CHECK(f.steps() == 9);
        for (int n = 0; n <= 3; ++n) {
            CHECK(g.node(n) == f.node(3 * n));
        }
    }
    SUBCASE("order formula resolutions") {
        UniformGrid g(1.0, 1024);
        CHECK(g.refined(4).steps() == 4096);
    }
}

TEST_CASE("refinement composes") {
    UniformGrid g(1.3, 5);
    UniformGrid a = g.refined(2).refined(3);
    UniformGrid b = g.refined(6);
    CHECK(a == b);
    for (int n = 0; n <= a.steps(); ++n) {
        CHECK(a.node(n) == b.node(n));
    }
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(UniformGrid(0.0, 4), ParameterError);
    CHECK_THROWS_AS(UniformGrid(-1.0, 4), ParameterError);
    CHECK_THROWS_AS(UniformGrid(1.0, 0), ParameterError);
    CHECK_THROWS_AS(UniformGrid(1.0, 4).refined(1), ParameterError);
}
