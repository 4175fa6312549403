#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "schoenberg/dimension_walk_real.hpp"
#include "schoenberg/function_library.hpp"

using namespace schoenberg;

namespace {

double max_diff(const RealSchoenbergSequence& a, const RealSchoenbergSequence& b)
{
    double err = 0.0;
    for (int n = 0; n <= std::max(a.truncation(), b.truncation()); ++n) {
        err = std::max(err, std::abs(a.at(n) - b.at(n)));
    }
    return err;
}

} // namespace

TEST(WalkUp, DeltaAtZeroStaysDelta)
{
    for (int d = 1; d <= 6; ++d) {
        const auto up = walk_up(RealSchoenbergSequence(d, {1.0}));
        EXPECT_EQ(up.d, d + 2);
        EXPECT_NEAR(up.at(0), 1.0, 1e-15);
    }
}

TEST(WalkUp, CircleToSphereSmallCase)
{
    // cos 2t = 2u^2 - 1 = 3/2 c_2 - 1/2 on S^3, with c_2 = (4u^2 - 1)/3.
    const auto up = walk_up(RealSchoenbergSequence(1, {0.0, 0.0, 1.0}));
    EXPECT_NEAR(up.at(0), -0.5, 1e-15);
    EXPECT_NEAR(up.at(1), 0.0, 1e-15);
    EXPECT_NEAR(up.at(2), 1.5, 1e-15);
}

TEST(WalkUp, PoissonFirstCoefficientOnThreeSphere)
{
    // r = 1/2: b_{1,1} = 1/3, b_{3,1} = 1/12, so b_{1,3} = (1/3 - 1/12) = 1/4.
    const auto b1 = RealSchoenbergSequence(1, oracle::poisson_circle_coeffs(0.5, 62), false);
    const auto b3 = walk_up(b1);
    EXPECT_EQ(b3.truncation(), 60);
    EXPECT_NEAR(b3.at(1), 0.25, 1e-15);
}

TEST(WalkUp, MatchesQuadratureAtHigherDimension)
{
    Rng rng(5);
    for (int d = 1; d <= 6; ++d) {
        const auto seq = random_real_sequence(rng, d, 20);
        const auto up = walk_up(seq);
        const auto oracle_coeffs = compute_real_coeffs(as_function(seq), d + 2, 20).sequence;
        EXPECT_LE(max_diff(up, oracle_coeffs), 1e-10) << "d=" << d;
    }
}

TEST(WalkUp, PointwiseEquivalence)
{
    Rng rng(13);
    for (int d = 1; d <= 6; ++d) {
        const auto seq = random_real_sequence(rng, d, 25);
        const auto up = walk_up(seq);
        for (int i = 0; i <= 500; ++i) {
            const double theta = std::numbers::pi * i / 500.0;
            EXPECT_NEAR(reconstruct(up, theta), reconstruct(seq, theta), 1e-9);
        }
    }
}

TEST(WalkUp, TruncatedInfiniteInputLosesTwo)
{
    const auto seq = RealSchoenbergSequence(2, {0.5, 0.3, 0.2}, false);
    EXPECT_EQ(walk_up(seq).truncation(), 0);
    EXPECT_THROW(walk_up(RealSchoenbergSequence(2, {0.5, 0.5}, false)), InvalidSequence);
}

TEST(WalkDownWeight, MatchesTelescopedProduct)
{
    for (int d = 2; d <= 9; ++d) {
        for (int n = 0; n <= 40; ++n) {
            for (int j = 0; j <= 60; ++j) {
                const double ref = oracle::real_walk_weight_product(j, n, d);
                EXPECT_NEAR(walk_down_weight(j, n, d), ref, 1e-12 * ref) << "j=" << j << " n=" << n << " d=" << d;
            }
        }
    }
}

TEST(WalkDownWeight, CircleWeights)
{
    EXPECT_DOUBLE_EQ(walk_down_weight(0, 0, 1), 1.0);
    EXPECT_DOUBLE_EQ(walk_down_weight(2, 0, 1), 0.2);
    EXPECT_DOUBLE_EQ(walk_down_weight(0, 1, 1), 1.0);
    EXPECT_DOUBLE_EQ(walk_down_weight(1, 3, 1), 1.0 / 3.0);
}

TEST(WalkDownWeight, PositiveAndAtMostOne)
{
    for (int d = 1; d <= 10; ++d) {
        for (int n = 0; n <= 200; ++n) {
            for (int j = 0; j <= 200; ++j) {
                const double w = walk_down_weight(j, n, d);
                ASSERT_GT(w, 0.0) << "j=" << j << " n=" << n << " d=" << d;
                ASSERT_LE(w, 1.0 + 1e-14);
            }
        }
    }
}

TEST(WalkDownWeight, LogSpaceBranchIsContinuous)
{
    for (int d : {2, 5, 9}) {
        for (int n : {0, 3, 17}) {
            const int j = kDirectProductLimit + 1;
            const double ref = oracle::real_walk_weight_product(j, n, d);
            EXPECT_NEAR(walk_down_weight(j, n, d), ref, 1e-12 * ref);
        }
    }
}

TEST(WalkDown, InvertsWalkUp)
{
    Rng rng(99);
    for (int d = 1; d <= 8; ++d) {
        for (int t = 0; t < 20; ++t) {
            const auto seq = random_real_sequence(rng, d, 30);
            const auto back = walk_down(walk_up(seq));
            EXPECT_LE(max_diff(back.sequence, seq), 1e-11);
            EXPECT_DOUBLE_EQ(back.unresolved_mass, 0.0);
            EXPECT_NEAR(back.sequence.mass(), seq.mass(), 1e-12);
        }
    }
}

TEST(WalkDown, PoissonSeriesRecoversCircleCoefficients)
{
    const auto b1 = oracle::poisson_circle_coeffs(0.5, 62);
    const auto b3 = walk_up(RealSchoenbergSequence(1, b1, false));
    const auto down = walk_down(b3, 20);
    EXPECT_FALSE(down.sequence.finite_support);
    for (int n = 0; n <= 20; ++n) {
        EXPECT_NEAR(down.sequence.at(n), b1[static_cast<std::size_t>(n)], 1e-8) << "n=" << n;
    }
    EXPECT_GT(down.unresolved_mass, 0.0);
    EXPECT_LT(down.unresolved_mass, 1e-10);
}

TEST(WalkDown, Errors)
{
    EXPECT_THROW(walk_down(RealSchoenbergSequence(2, {1.0})), DomainError);
    EXPECT_THROW(walk_down(RealSchoenbergSequence(4, {1.2, -0.2, 0.0}, false)), InvalidSequence);
    EXPECT_THROW(walk_down(RealSchoenbergSequence(4, {0.5, 0.5}, false), 5), InvalidSequence);
    // Finitely supported input may carry negative entries.
    EXPECT_NO_THROW(walk_down(RealSchoenbergSequence(4, {1.2, -0.2, 0.0})));
}

TEST(WalkDown, RoundTripPreservesFiniteSupportFlag)
{
    const auto seq = RealSchoenbergSequence(3, {0.2, 0.3, 0.5});
    const auto down = walk_down(walk_up(seq));
    EXPECT_TRUE(down.sequence.finite_support);
    EXPECT_EQ(down.sequence.d, 3);
}

TEST(CrossProject, MatchesRecomputePath)
{
    Rng rng(17);
    for (auto [d, dp] : {std::pair{5, 2}, {4, 1}, {6, 3}, {3, 2}, {7, 1}}) {
        const auto seq = random_real_sequence(rng, d, 15);
        const auto a = cross_project(seq, dp);
        const auto b = cross_project_via_reconstruct(seq, dp);
        EXPECT_EQ(a.d, dp);
        EXPECT_LE(max_diff(a, b), 1e-12) << d << "->" << dp;
        EXPECT_NEAR(a.mass(), 1.0, 1e-12);
        EXPECT_GE(a.min_coeff(), -1e-12);
    }
}

TEST(CrossProject, TwoStepsEqualsWalkDown)
{
    Rng rng(23);
    for (int d = 3; d <= 8; ++d) {
        const auto seq = random_real_sequence(rng, d, 12);
        EXPECT_LE(max_diff(cross_project(seq, d - 2), walk_down(seq).sequence), 1e-12);
    }
}

TEST(CrossProject, DegreeOneMapsToDegreeOne)
{
    const auto seq = RealSchoenbergSequence(5, {0.0, 1.0});
    const auto down = cross_project(seq, 2);
    EXPECT_NEAR(down.at(1), 1.0, 1e-13);
    EXPECT_NEAR(down.at(0), 0.0, 1e-13);
}

TEST(CrossProject, Errors)
{
    const auto seq = RealSchoenbergSequence(3, {0.5, 0.5});
    EXPECT_THROW(cross_project(seq, 3), DomainError);
    EXPECT_THROW(cross_project(seq, 0), DomainError);
    EXPECT_THROW(cross_project(RealSchoenbergSequence(4, {0.5, 0.5}, false), 2), InvalidSequence);
}
