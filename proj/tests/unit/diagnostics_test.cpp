#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "hawkes/diagnostics.hpp"
#include "hawkes/simulate.hpp"
#include "oracles.hpp"

namespace hawkes {
namespace {

TEST(ResidualsTest, MatchBruteForceCompensator) {
    const HawkesModel model(0.5, {{3.1, 9.9}, {5.9, 10.0}});
    const auto events = simulate_horizon(model, 50.0, 4);
    const auto residuals = time_change_residuals(model, events);
    ASSERT_EQ(residuals.size(), events.size());
    double cumulative = 0.0;
    for (std::size_t k = 0; k < residuals.size(); ++k) {
        cumulative += residuals[k];
        const double expected = testing::brute_compensator(model, events.times(), events.times()[k]);
        EXPECT_NEAR(cumulative, expected, 1e-9 * expected);
    }
}

TEST(KolmogorovTest, SurvivalFunction) {
    EXPECT_DOUBLE_EQ(kolmogorov_survival(0.0), 1.0);
    // Tabulated quantiles of the Kolmogorov distribution.
    EXPECT_NEAR(kolmogorov_survival(1.3581), 0.05, 1e-4);
    EXPECT_NEAR(kolmogorov_survival(1.6276), 0.01, 1e-4);
    EXPECT_NEAR(kolmogorov_survival(1.2238), 0.10, 1e-4);
    EXPECT_LT(kolmogorov_survival(5.0), 1e-20);
}

TEST(KsTest, StatisticByHand) {
    // Uniform CDF, samples {0.1, 0.5, 0.8}: D = max(1/3 - 0.1, 0.5 - 1/3, 2/3 - 0.5, 1 - 0.8, 0.8 - 2/3).
    const std::vector<double> samples{0.5, 0.1, 0.8};
    const auto result = ks_test(samples, [](double x) { return std::clamp(x, 0.0, 1.0); });
    EXPECT_NEAR(result.statistic, 1.0 / 3.0 - 0.1, 1e-15);
    EXPECT_EQ(result.sample_size, 3u);
}

TEST(KsTest, AcceptsAndRejects) {
    std::mt19937_64 gen(1);
    std::exponential_distribution<double> unit(1.0), faster(1.5);
    std::vector<double> good(2000), bad(2000);
    for (auto& v : good) v = unit(gen);
    for (auto& v : bad) v = faster(gen);
    EXPECT_GT(ks_test_exponential(good).p_value, 0.01);
    EXPECT_LT(ks_test_exponential(bad).p_value, 1e-6);
    EXPECT_GT(ks_test_exponential(bad, 1.5).p_value, 0.01);
    EXPECT_THROW((void)ks_test_exponential(std::vector<double>{}), std::invalid_argument);
}

TEST(KsTest, PValueIsRoughlyUniformUnderNull) {
    std::mt19937_64 gen(2);
    std::exponential_distribution<double> unit(1.0);
    int rejected = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<double> sample(200);
        for (auto& v : sample) v = unit(gen);
        if (ks_test_exponential(sample).p_value < 0.05) ++rejected;
    }
    EXPECT_NEAR(rejected / 400.0, 0.05, 0.035);
}

}  // namespace
}  // namespace hawkes
