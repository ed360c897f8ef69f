#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fracl1/l1_scheme.hpp"
#include "fracl1/test_functions.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace fracl1;

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

TEST_CASE("coefficient values") {
    L1Coefficients b(FractionalOrder(0.5), 8);
    CHECK(b[0] == 1.0);
    CHECK(b[1] == doctest::Approx(0.4142135623730950488).epsilon(1e-15)); // sqrt(2) - 1
    L1Coefficients c(FractionalOrder(0.3), 8);
    CHECK(c[0] == 1.0);
    CHECK(c[3] == doctest::Approx(0.48134654157119541919).epsilon(1e-15)); // 4^0.7 - 3^0.7
}

TEST_CASE("coefficient invariants across alpha sweep") {
    for (double a : {0.1, 0.3, 0.5, 0.6, 0.9}) {
        L1Coefficients b(FractionalOrder(a), 4096);
        CHECK(b[0] == 1.0);
        for (int i = 1; i < b.size(); ++i) {
            CHECK(b[i] > 0.0);
            CHECK(b[i] < b[i - 1]);
        }
        // telescoping: sum_{i=1}^{n-1} (b_{n-i-1} - b_{n-i}) == b_0 - b_{n-1}
        for (int n : {2, 17, 1024, 4096}) {
            double sum = 0.0;
            for (int i = 1; i < n; ++i) {
                sum += b[n - i - 1] - b[n - i];
            }
            CHECK(sum == doctest::Approx(b[0] - b[n - 1]).epsilon(1e-12));
        }
    }
}

TEST_CASE("operator annihilates constants") {
    for (double a : {0.1, 0.5, 0.9}) {
        UniformGrid grid(1.0, 16);
        auto samples = sample_function(Constant{7.0}, grid);
        DiscreteDerivative d = l1_apply(FractionalOrder(a), grid, samples);
        for (int n = 1; n <= grid.steps(); ++n) {
            CHECK(std::abs(d.at(n)) <= 1e-12);
        }
    }
}

TEST_CASE("operator is exact on affine functions") {
    for (double a : {0.1, 0.3, 0.5, 0.6, 0.9}) {
        for (int n_steps : {4, 64, 1024}) {
            UniformGrid grid(1.0, n_steps);
            auto samples = sample_function(Linear{0.3, 2.0}, grid);
            DiscreteDerivative d = l1_apply(FractionalOrder(a), grid, samples);
            const double g = std::tgamma(2.0 - a);
            for (int n = 1; n <= n_steps; ++n) {
                const double expected = 2.0 * std::pow(grid.node(n), 1.0 - a) / g;
                CHECK(d.at(n) == doctest::Approx(expected).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("two-interval hand evaluation of t^2 at alpha = 1/2") {
    UniformGrid grid(1.0, 2);
    auto samples = sample_function(Quadratic{}, grid);
    DiscreteDerivative d = l1_apply(FractionalOrder(0.5), grid, samples);
    // (tau^{-1/2}/Gamma(3/2)) * [b_1*(1/4) + b_0*(3/4)]
    //   = (2*sqrt(2)/sqrt(pi)) * ((sqrt(2)-1)/4 + 3/4)
    const double expected = 2.0 * std::sqrt(2.0) * ((std::sqrt(2.0) - 1.0) * 0.25 + 0.75) / kSqrtPi;
    CHECK(expected == doctest::Approx(1.3620741443506216428).epsilon(1e-15)); // mpmath
    CHECK(d.at(2) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("coefficient and integrated forms agree on random samples") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (double a : {0.1, 0.5, 0.9}) {
        UniformGrid grid(1.0, 257);
        std::vector<double> samples(static_cast<std::size_t>(grid.steps()) + 1);
        for (double& v : samples) v = dist(rng);
        DiscreteDerivative lhs = l1_apply(FractionalOrder(a), grid, samples);
        DiscreteDerivative rhs = l1_apply_integrated(FractionalOrder(a), grid, samples);
        for (int n = 1; n <= grid.steps(); ++n) {
            CHECK(lhs.at(n) == doctest::Approx(rhs.at(n)).epsilon(1e-12));
        }
    }
}

TEST_CASE("linearity") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    UniformGrid grid(1.0, 64);
    std::vector<double> y1(65), y2(65), combo(65);
    for (std::size_t i = 0; i < 65; ++i) {
        y1[i] = dist(rng);
        y2[i] = dist(rng);
        combo[i] = 1.7 * y1[i] - 0.4 * y2[i];
    }
    FractionalOrder a(0.6);
    DiscreteDerivative d1 = l1_apply(a, grid, y1);
    DiscreteDerivative d2 = l1_apply(a, grid, y2);
    DiscreteDerivative dc = l1_apply(a, grid, combo);
    for (int n = 1; n <= 64; ++n) {
        CHECK(dc.at(n) == doctest::Approx(1.7 * d1.at(n) - 0.4 * d2.at(n)).epsilon(1e-12));
    }
}

TEST_CASE("single-node evaluation mirrors the full apply") {
    UniformGrid grid(1.0, 32);
    auto samples = sample_function(PowerProfile(1.5), grid);
    FractionalOrder a(0.3);
    DiscreteDerivative d = l1_apply(a, grid, samples);
    for (int n : {1, 2, 17, 32}) {
        CHECK(l1_apply_single(a, grid, samples, n) == doctest::Approx(d.at(n)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(l1_apply_single(a, grid, samples, 0), DomainError);
}

TEST_CASE("errors") {
    UniformGrid grid(1.0, 8);
    std::vector<double> short_samples(5, 1.0);
    CHECK_THROWS_AS(l1_apply(FractionalOrder(0.5), grid, short_samples), ParameterError);
    std::vector<double> bad(9, 1.0);
    bad[3] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(l1_apply(FractionalOrder(0.5), grid, bad), ParameterError);
    CHECK_THROWS_AS(FractionalOrder(0.0), ParameterError);
    CHECK_THROWS_AS(FractionalOrder(1.0), ParameterError);
    DiscreteDerivative d = l1_apply(FractionalOrder(0.5), grid, std::vector<double>(9, 1.0));
    CHECK_THROWS_AS(d.at(0), DomainError);
}
