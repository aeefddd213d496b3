#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hawkes/diagnostics.hpp"
#include "hawkes/errors.hpp"
#include "hawkes/mean_intensity.hpp"
#include "hawkes/rng.hpp"
#include "hawkes/simulate.hpp"
#include "oracles.hpp"

namespace hawkes {
namespace {

const HawkesModel kP1(0.5, {{9.0, 10.0}});
const HawkesModel kFigure(0.5, {{3.1, 9.9}, {5.9, 10.0}});

TEST(RngTest, SeedMixingIsDeterministicAndSpreads) {
    EXPECT_EQ(mix_seed(1, 2), mix_seed(1, 2));
    EXPECT_NE(mix_seed(1, 2), mix_seed(1, 3));
    EXPECT_NE(mix_seed(1, 2), mix_seed(2, 2));
    Rng a(9), b(9);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(RngTest, UniformRanges) {
    Rng rng(3);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform();
        const double v = rng.uniform_open();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        ASSERT_GT(v, 0.0);
        ASSERT_LT(v, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / 100000.0, 0.5, 0.005);
}

TEST(RngTest, ExponentialMean) {
    Rng rng(4);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) sum += rng.exponential(2.0);
    EXPECT_NEAR(sum / 100000.0, 0.5, 0.01);
}

TEST(SimulateHorizonTest, SameSeedSamePath) {
    EXPECT_EQ(simulate_horizon(kP1, 200.0, 42), simulate_horizon(kP1, 200.0, 42));
    EXPECT_NE(simulate_horizon(kP1, 200.0, 42), simulate_horizon(kP1, 200.0, 43));
}

TEST(SimulateHorizonTest, PathProperties) {
    const auto events = simulate_horizon(kFigure, 300.0, 1);
    EXPECT_DOUBLE_EQ(events.horizon(), 300.0);
    ASSERT_FALSE(events.empty());
    EXPECT_GT(events.times().front(), 0.0);
    EXPECT_LE(events.times().back(), 300.0);
    EXPECT_TRUE(std::is_sorted(events.times().begin(), events.times().end()));
}

TEST(SimulateHorizonTest, RejectsBadInput) {
    EXPECT_THROW((void)simulate_horizon(HawkesModel(1.0, {{1.0, 1.0}}), 10.0, 1), std::domain_error);
    EXPECT_THROW((void)simulate_horizon(kP1, 0.0, 1), std::invalid_argument);
    EXPECT_THROW((void)simulate_horizon(kP1, 1000.0, 1, {.max_events = 10}), RunawaySimulationError);
}

TEST(SimulateHorizonTest, PoissonMeanCount) {
    const auto poisson = HawkesModel::degenerate(2.0, {{0.0, 1.0}});
    std::vector<double> counts;
    for (std::uint64_t r = 0; r < 1000; ++r) {
        counts.push_back(static_cast<double>(simulate_horizon(poisson, 1000.0, mix_seed(7, r)).size()));
    }
    const auto [mean, se] = testing::mean_se(counts);
    EXPECT_NEAR(mean, 2000.0, 3.0 * std::sqrt(2000.0));
    EXPECT_NEAR(mean, 2000.0, 4.0 * se);
}

TEST(SimulateHorizonTest, MeanCountMatchesTheory) {
    std::vector<double> counts;
    for (std::uint64_t r = 0; r < 200; ++r) {
        counts.push_back(static_cast<double>(simulate_horizon(kP1, 500.0, mix_seed(8, r)).size()));
    }
    const auto [mean, se] = testing::mean_se(counts);
    EXPECT_NEAR(mean, 2495.5, 3.0 * se);
}

TEST(SimulateHorizonTest, ResidualsAreUnitExponential) {
    for (const auto& model : {kP1, kFigure}) {
        const auto events = simulate_horizon(model, 2000.0, 99);
        std::vector<double> residuals;
        double previous = 0.0;
        for (const double t : events.times()) {
            const double value = testing::brute_compensator(model, events.times(), t);
            residuals.push_back(value - previous);
            previous = value;
        }
        EXPECT_GT(ks_test_exponential(residuals).p_value, 0.001);
    }
}

TEST(SimulateCountTest, ExactCountAndDeterminism) {
    const auto events = simulate_count(kFigure, 1000, 5);
    EXPECT_EQ(events.size(), 1000u);
    EXPECT_DOUBLE_EQ(events.horizon(), events.times().back());
    EXPECT_EQ(events, simulate_count(kFigure, 1000, 5));
    EXPECT_THROW((void)simulate_count(kFigure, 0, 5), std::invalid_argument);
}

TEST(SimulateCountTest, FirstArrivalOfUnitPoisson) {
    const auto poisson = HawkesModel::degenerate(1.0, {{0.0, 1.0}});
    std::vector<double> first;
    for (std::uint64_t r = 0; r < 1000; ++r) first.push_back(simulate_count(poisson, 1, mix_seed(3, r)).horizon());
    EXPECT_NEAR(testing::mean_se(first).mean, 1.0, 0.1);
    EXPECT_GT(ks_test_exponential(first).p_value, 0.001);
}

TEST(SimulateCountTest, PrefixMatchesHorizonRun) {
    // Both modes consume the same random stream, so the horizon run is a prefix.
    const auto by_count = simulate_count(kP1, 300, 21);
    const auto by_time = simulate_horizon(kP1, by_count.horizon(), 21);
    ASSERT_EQ(by_time.size(), 300u);
    EXPECT_TRUE(std::equal(by_time.times().begin(), by_time.times().end(), by_count.times().begin()));
}

}  // namespace
}  // namespace hawkes
