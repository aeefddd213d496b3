#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hawkes/errors.hpp"
#include "hawkes/inference.hpp"
#include "hawkes/rng.hpp"
#include "hawkes/simulate.hpp"
#include "oracles.hpp"

namespace hawkes {
namespace {

const HawkesModel kP1(0.5, {{9.0, 10.0}});

TEST(ReparametrizationTest, RoundTrip) {
    std::mt19937_64 gen(1);
    for (std::size_t order = 1; order <= 4; ++order) {
        const Reparametrization map(order, 1.0 - 1e-6);
        for (int trial = 0; trial < 20; ++trial) {
            const auto model = testing::random_stationary_model(gen, order);
            const auto theta = map.to_theta(map.to_unconstrained(model));
            const auto expected = model.parameters();
            for (std::size_t i = 0; i < theta.size(); ++i) EXPECT_NEAR(theta[i], expected[i], 1e-10 * expected[i]);
        }
    }
}

TEST(ReparametrizationTest, AnyPointIsFeasible) {
    std::mt19937_64 gen(2);
    std::normal_distribution<double> normal(0.0, 5.0);
    const Reparametrization map(3, 0.99);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> x(map.dimension());
        for (auto& v : x) v = normal(gen);
        const auto theta = map.to_theta(x);
        for (const double v : theta) EXPECT_GT(v, 0.0);
        EXPECT_LT(theta[4], theta[5]);
        EXPECT_LT(theta[5], theta[6]);
        const double n = theta[1] / theta[4] + theta[2] / theta[5] + theta[3] / theta[6];
        EXPECT_LT(n, 0.99 * (1.0 + 1e-12));
    }
}

TEST(ReparametrizationTest, PullBackMatchesFiniteDifferences) {
    std::mt19937_64 gen(3);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::size_t order = 1; order <= 3; ++order) {
        const Reparametrization map(order, 1.0 - 1e-6);
        // A linear functional of theta makes the chain rule easy to check.
        std::vector<double> weights(map.dimension());
        for (auto& w : weights) w = normal(gen);
        std::vector<double> x(map.dimension());
        for (auto& v : x) v = 0.5 * normal(gen);
        const auto theta = map.to_theta(x);
        const auto analytic = map.pull_back(x, theta, weights);
        const auto numeric = testing::central_gradient(
            [&](std::span<const double> point) {
                const auto t = map.to_theta(point);
                double sum = 0.0;
                for (std::size_t i = 0; i < t.size(); ++i) sum += weights[i] * t[i];
                return sum;
            },
            x);
        for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(analytic[i], numeric[i], 1e-6 * std::max(1.0, std::abs(numeric[i])));
    }
}

TEST(FitTest, InsufficientData) {
    const EventSequence few({1.0, 2.0}, 3.0);
    EXPECT_THROW((void)fit(few, 1), InsufficientDataError);
    EXPECT_THROW((void)fit(EventSequence({1.0, 2.0, 3.0, 4.0}, 5.0), 2), InsufficientDataError);
}

TEST(FitTest, OptionsValidation) {
    FitOptions options;
    options.restarts = 0;
    EXPECT_THROW(options.validate(), std::invalid_argument);
    options.restarts = 1;
    options.branching_cap = 1.0;
    EXPECT_THROW(options.validate(), std::invalid_argument);
    EXPECT_EQ(parse_init_strategy(to_string(InitStrategy::random)), InitStrategy::random);
    EXPECT_THROW((void)parse_init_strategy("nope"), std::invalid_argument);
}

TEST(FitTest, RecoversOrderOneModel) {
    const auto events = simulate_horizon(kP1, 5000.0, 2024);
    const auto result = fit(events, 1, {.restarts = 5, .seed = 1});
    EXPECT_TRUE(result.converged);
    EXPECT_NEAR(result.model.mu(), 0.5, 3.0 * 0.011276);
    EXPECT_NEAR(result.model.terms()[0].alpha, 9.0, 0.6);
    EXPECT_NEAR(result.model.terms()[0].beta, 10.0, 0.6);
    EXPECT_LT(branching_ratio(result.model), 1.0);
    EXPECT_NEAR(result.log_likelihood, log_likelihood(result.model, events), 1e-9);
    // Stationary point: the gradient vanishes relative to the sample size.
    for (const double g : log_likelihood_gradient(result.model, events)) EXPECT_LT(std::abs(g), 1e-2);
}

TEST(FitTest, BeatsTrueParameters) {
    const auto events = simulate_horizon(kP1, 1000.0, 77);
    const auto result = fit(events, 1);
    EXPECT_GE(result.log_likelihood, log_likelihood(kP1, events) - 1e-9);
}

TEST(FitTest, RefitFromEstimateDoesNotDecrease) {
    const auto events = simulate_horizon(kP1, 1000.0, 78);
    const auto first = fit(events, 1, {.restarts = 3});
    FitOptions again{.restarts = 1, .init_strategy = InitStrategy::random, .seed = 9};
    again.warm_starts.push_back(first.model);
    const auto second = fit(events, 1, again);
    EXPECT_GE(second.log_likelihood, first.log_likelihood - 1e-8 * std::abs(first.log_likelihood));
}

TEST(FitTest, DeterministicForFixedSeed) {
    const auto events = simulate_horizon(HawkesModel(0.5, {{3.1, 9.9}, {0.5, 20.0}}), 500.0, 5);
    const FitOptions options{.restarts = 4, .seed = 11};
    const auto a = fit(events, 2, options);
    const auto b = fit(events, 2, options);
    EXPECT_EQ(a.model, b.model);
    EXPECT_EQ(a.log_likelihood, b.log_likelihood);
    EXPECT_EQ(a.restart_index, b.restart_index);
}

TEST(FitTest, PoissonDataFitsTheRate) {
    // On Poisson data the likelihood is nearly flat along slow kernels, so
    // (mu, n) individually wander; the implied rate mu / (1 - n) and the tiny
    // likelihood gain over the Poisson fit are what the data pin down.
    const auto poisson = HawkesModel::degenerate(2.0, {{0.0, 1.0}});
    constexpr int kReps = 100;
    int rate_ok = 0;
    int small_branching = 0;
    double largest_gain = 0.0;
    for (int r = 0; r < kReps; ++r) {
        const auto events = simulate_horizon(poisson, 10000.0, mix_seed(31, static_cast<std::uint64_t>(r)));
        const auto result = fit(events, 1, {.restarts = 3, .seed = static_cast<std::uint64_t>(r)});
        const double n = branching_ratio(result.model);
        const double rate = result.model.mu() / (1.0 - n);
        rate_ok += rate >= 1.9 && rate <= 2.1 ? 1 : 0;
        small_branching += n < 0.1 ? 1 : 0;
        const auto count = static_cast<double>(events.size());
        const double poisson_fit = count * std::log(count / 10000.0) - count;
        EXPECT_GE(result.log_likelihood, poisson_fit - 1e-7 * std::abs(poisson_fit));
        largest_gain = std::max(largest_gain, result.log_likelihood - poisson_fit);
    }
    EXPECT_GE(rate_ok, 95);
    EXPECT_GE(small_branching, 75);
    EXPECT_LT(largest_gain, 10.0);
}

TEST(FitTest, TwoTermWarmStartFromOneTerm) {
    const HawkesModel truth(0.5, {{0.00066, 0.001}, {100.0, 300.0}});
    const auto events = simulate_horizon(truth, 2000.0, 3);
    const auto one = fit(events, 1, {.restarts = 3});
    FitOptions options{.restarts = 3};
    options.warm_starts.push_back(one.model);
    const auto two = fit(events, 2, options);
    EXPECT_GE(two.log_likelihood, one.log_likelihood - 1e-6);
    EXPECT_EQ(two.starts_tried, 3u + 3u);
}

TEST(RmseTest, Arithmetic) {
    const std::vector<double> exact{0.5, 0.5, 0.5};
    EXPECT_DOUBLE_EQ(rmse(0.5, exact), 0.0);
    const std::vector<double> spread{1.0, 3.0};
    EXPECT_DOUBLE_EQ(rmse(2.0, spread), 1.0);
    EXPECT_DOUBLE_EQ(relative_rmse(2.0, spread), 0.5);
    const std::vector<double> table{0.5 + 0.039664, 0.5 - 0.039664, 0.5 + 0.039664, 0.5 - 0.039664};
    EXPECT_NEAR(rmse(0.5, table), 0.039664, 1e-15);
    EXPECT_THROW((void)relative_rmse(0.0, spread), std::domain_error);
    EXPECT_THROW((void)rmse(1.0, std::vector<double>{}), std::invalid_argument);
}

}  // namespace
}  // namespace hawkes
