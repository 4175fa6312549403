#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "schoenberg/quadrature.hpp"

using namespace schoenberg;

TEST(GaussLegendre, IntegratesPolynomialsExactly)
{
    for (std::size_t n : {1u, 2u, 5u, 16u, 64u, 200u}) {
        const auto rule = gauss_legendre(n);
        for (std::size_t k = 0; k <= 2 * n - 1; ++k) {
            const double value = rule.integrate([k](double x) { return std::pow(x, double(k)); });
            const double exact = (k % 2 == 1) ? 0.0 : 2.0 / (k + 1.0);
            EXPECT_NEAR(value, exact, 1e-13) << "n=" << n << " k=" << k;
        }
    }
}

TEST(GaussLegendre, KnownThreePointRule)
{
    const auto rule = gauss_legendre(3);
    EXPECT_NEAR(rule.nodes[0], -std::sqrt(0.6), 1e-15);
    EXPECT_NEAR(rule.nodes[1], 0.0, 1e-15);
    EXPECT_NEAR(rule.nodes[2], std::sqrt(0.6), 1e-15);
    EXPECT_NEAR(rule.weights[0], 5.0 / 9.0, 1e-15);
    EXPECT_NEAR(rule.weights[1], 8.0 / 9.0, 1e-15);
}

TEST(GaussLegendre, WeightsSumToIntervalLength)
{
    for (std::size_t n : {7u, 128u, 1000u}) {
        const auto rule = theta_rule(n);
        double total = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) {
            EXPECT_GT(rule.weights[i], 0.0);
            EXPECT_GE(rule.nodes[i], 0.0);
            EXPECT_LE(rule.nodes[i], std::numbers::pi);
            total += rule.weights[i];
        }
        EXPECT_NEAR(total, std::numbers::pi, 1e-12);
    }
}

TEST(GaussLegendre, TrigonometricIntegrandOnTheta)
{
    const auto rule = theta_rule(128);
    EXPECT_NEAR(rule.integrate([](double t) { return std::sin(t) * std::sin(t); }), std::numbers::pi / 2, 1e-14);
    EXPECT_NEAR(rule.integrate([](double t) { return std::cos(7 * t) * std::cos(7 * t); }), std::numbers::pi / 2, 1e-14);
}

TEST(GaussLegendre, DefaultNodeCount)
{
    EXPECT_EQ(default_theta_nodes(10), 128u);
    EXPECT_EQ(default_theta_nodes(100), 232u);
}

TEST(GaussLegendre, RejectsDegenerateRules)
{
    EXPECT_THROW(gauss_legendre(0), DomainError);
    EXPECT_THROW(gauss_legendre(4, 1.0, 1.0), DomainError);
}
