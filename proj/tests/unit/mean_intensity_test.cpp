#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "hawkes/errors.hpp"
#include "hawkes/mean_intensity.hpp"
#include "oracles.hpp"

namespace hawkes {
namespace {

const HawkesModel kP1(0.5, {{9.0, 10.0}});
const HawkesModel kFigure(0.5, {{3.1, 9.9}, {5.9, 10.0}});
const HawkesModel kSet2(0.05, {{0.01761905, 0.04761905}, {0.28, 0.6666667}});
const HawkesModel kP3(0.5, {{0.00033, 0.001}, {3.3, 10.0}, {100.0, 300.0}});

// P = 2 closed form written from gamma / xi directly.
double p2_closed_form(const HawkesModel& m, double t) {
    const double a1 = m.terms()[0].alpha, b1 = m.terms()[0].beta;
    const double a2 = m.terms()[1].alpha, b2 = m.terms()[1].beta;
    const double gamma = a1 + a2 - b1 - b2;
    const double c = b1 * b2 - a1 * b2 - a2 * b1;
    const double xi = std::sqrt(gamma * gamma - 4.0 * c);
    const double s2 = (gamma + xi) / 2.0, s3 = (gamma - xi) / 2.0;
    const double A1 = b1 * b2 / c;
    const double A2 = (s2 + b1) * (s2 + b2) / (s2 * (s2 - s3));
    const double A3 = (s3 + b1) * (s3 + b2) / (s3 * (s3 - s2));
    return m.mu() * (A1 + A2 * std::exp(s2 * t) + A3 * std::exp(s3 * t));
}

TEST(StationaryMeanTest, KnownValues) {
    EXPECT_NEAR(stationary_mean_intensity(kP1), 5.0, 1e-12);
    EXPECT_NEAR(stationary_mean_intensity(kSet2), 0.05 / (1.0 - branching_ratio(kSet2)), 1e-15);
    EXPECT_NEAR(stationary_mean_intensity(kSet2), 0.238095, 1e-5);
    const HawkesModel near_critical(1.0, {{1.0 - 1e-9, 1.0}});
    EXPECT_NEAR(stationary_mean_intensity(near_critical), 1e9, 1e9 * 1e-6);
    EXPECT_THROW((void)stationary_mean_intensity(HawkesModel(1.0, {{1.0, 1.0}})), std::domain_error);
}

TEST(MeanIntensityP1Test, KnownValues) {
    EXPECT_DOUBLE_EQ(mean_intensity_p1(kP1, 0.0), 0.5);
    EXPECT_NEAR(mean_intensity_p1(kP1, 1.0), 0.5 * (10.0 - 9.0 * std::exp(-1.0)), 1e-14);
    EXPECT_NEAR(mean_intensity_p1(kP1, 1.0), 3.344543, 1e-6);
    EXPECT_NEAR(mean_intensity_p1(kP1, 50.0), 5.0, 1e-12);
}

TEST(MeanIntensityP1Test, SingularLimit) {
    const HawkesModel critical(2.0, {{3.0, 3.0}});
    EXPECT_DOUBLE_EQ(mean_intensity_p1(critical, 4.0), 2.0 * (1.0 + 3.0 * 4.0));
    EXPECT_THROW((void)expansion_p1(critical), std::domain_error);
    // Continuity across the switch-over.
    const HawkesModel close(2.0, {{3.0, 3.0 * (1.0 + 1e-8)}});
    EXPECT_NEAR(mean_intensity_p1(close, 4.0), 26.0, 1e-5);
}

TEST(MeanIntensityP1Test, NonStationaryMatchesOde) {
    const HawkesModel explosive(1.0, {{2.0, 1.5}});
    for (const double t : {0.5, 1.0, 3.0}) {
        EXPECT_NEAR(mean_intensity_p1(explosive, t), testing::ode_mean_intensity(explosive, t).phi, 1e-8);
    }
}

TEST(MeanIntensityP2Test, MatchesClosedFormAndOde) {
    for (const auto& model : {kFigure, kSet2}) {
        EXPECT_NEAR(mean_intensity_p2(model, 0.0), model.mu(), 1e-14);
        for (const double t : {0.1, 0.5, 1.0, 5.0, 20.0}) {
            const double value = mean_intensity_p2(model, t);
            EXPECT_NEAR(value, p2_closed_form(model, t), 1e-10 * value);
            EXPECT_NEAR(value, testing::ode_mean_intensity(model, t).phi, 1e-8 * value);
        }
    }
}

TEST(MeanIntensityP2Test, StationaryLevel) {
    const MeanIntensityCurve curve(expansion_p2(kFigure), kFigure.mu());
    EXPECT_NEAR(curve.stationary_level(), stationary_mean_intensity(kFigure), 1e-12);
    EXPECT_NEAR(curve.stationary_level(), 5.161627, 1e-6);
    EXPECT_NEAR(curve(1e4), curve.stationary_level(), 1e-12);
}

TEST(MeanIntensityP2Test, CoefficientsSumToOne) {
    for (const auto& model : {kFigure, kSet2}) {
        const auto e = expansion_p2(model);
        EXPECT_NEAR(std::abs(e.coefficient_sum() - 1.0), 0.0, 1e-12);
        EXPECT_EQ(e.poles.front(), 0.0);
    }
}

TEST(MeanIntensityP2Test, RequiresStationarity) {
    EXPECT_THROW((void)expansion_p2(HawkesModel(1.0, {{1.0, 1.0}, {2.0, 3.0}})), std::domain_error);
}

TEST(MeanIntensityGeneralTest, ReproducesLowOrderPaths) {
    EXPECT_NEAR(mean_intensity_general(kP1, 1.0), 3.344543, 1e-6);
    EXPECT_NEAR(mean_intensity_general(kP1, 1.0), mean_intensity_p1(kP1, 1.0), 1e-9 * 3.35);
    EXPECT_NEAR(mean_intensity_general(kFigure, 200.0), 5.161627, 1e-6);
    for (const double t : {0.0, 0.3, 2.0, 20.0}) {
        const double reference = mean_intensity_p2(kSet2, t);
        EXPECT_NEAR(mean_intensity_general(kSet2, t), reference, 1e-9 * reference);
    }
}

TEST(MeanIntensityGeneralTest, ThreeTermModelMatchesOde) {
    for (const double t : {0.01, 0.1, 1.0, 5.0, 20.0}) {
        const double expected = testing::ode_mean_intensity(kP3, t, 2e-5).phi;
        EXPECT_NEAR(mean_intensity_general(kP3, t), expected, 1e-6 * expected);
    }
}

TEST(MeanIntensityGeneralTest, RandomModelsHaveUnitCoefficientSum) {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto model = testing::random_stationary_model(gen, 1 + trial % 4);
        const auto e = expansion_general(model);
        EXPECT_LT(std::abs(e.coefficient_sum() - 1.0), 1e-10);
        EXPECT_NEAR(model.mu() * e.coefficients.front().real(), stationary_mean_intensity(model),
                    1e-10 * stationary_mean_intensity(model));
        for (std::size_t i = 1; i < e.poles.size(); ++i) EXPECT_LT(e.poles[i].real(), 0.0);
    }
}

TEST(MeanIntensityGeneralTest, PhiIsIncreasingFromMu) {
    std::mt19937_64 gen(6);
    for (int trial = 0; trial < 50; ++trial) {
        const auto model = testing::random_stationary_model(gen, 1 + trial % 3);
        double previous = model.mu() * (1.0 - 1e-12);
        for (double t = 0.0; t <= 30.0; t += 0.5) {
            const double value = mean_intensity_general(model, t);
            EXPECT_GE(value, previous - 1e-10 * value);
            previous = value;
        }
        EXPECT_LE(previous, stationary_mean_intensity(model) * (1.0 + 1e-10));
    }
}

TEST(ExpectedCountTest, KnownValues) {
    EXPECT_DOUBLE_EQ(expected_count(kP1, 0.0), 0.0);
    EXPECT_NEAR(expected_count(kP1, 500.0), 0.5 * (10.0 * 500.0 - 9.0 * (1.0 - std::exp(-500.0))), 1e-9);
    EXPECT_NEAR(expected_count(kP1, 500.0), 2495.5, 1e-9);
    // Closed form: mu (A_1 T + sum_i A_i (exp(s_i T) - 1) / s_i) with s_2 = -1/60, s_3 = -0.4.
    EXPECT_NEAR(expected_count(kSet2, 21600.0), 5133.3336, 1e-3);
    EXPECT_NEAR(expected_count(kSet2, 21600.0), 5137.0, 1e-3 * 5137.0);
    EXPECT_THROW((void)expected_count(kP1, -1.0), std::invalid_argument);
}

TEST(ExpectedCountTest, MatchesOdeIntegral) {
    for (const auto& model : {kP1, kFigure, kSet2, kP3}) {
        const double expected = testing::ode_mean_intensity(model, 8.0, 2e-5).count;
        EXPECT_NEAR(expected_count(model, 8.0), expected, 1e-7 * expected);
    }
}

TEST(ExpectedCountTest, BelowStationaryLine) {
    for (const auto& model : {kP1, kFigure, kSet2, kP3}) {
        const double level = stationary_mean_intensity(model);
        for (const double t : {1.0, 10.0, 100.0}) EXPECT_LT(expected_count(model, t), level * t);
    }
}

TEST(VolterraTest, ZeroKernelIsConstant) {
    const auto poisson = HawkesModel::degenerate(2.0, {{0.0, 1.0}});
    const auto grid = UniformGrid::spanning(5.0, 500);
    for (const double v : volterra_mean_intensity(poisson, grid)) EXPECT_DOUBLE_EQ(v, 2.0);
    const auto counts = volterra_expected_count(poisson, grid);
    EXPECT_NEAR(counts.back(), 10.0, 1e-12);
}

TEST(VolterraTest, MatchesAnalyticCurves) {
    const auto grid = UniformGrid::spanning(20.0, 20000);  // h = 1e-3
    const auto p1 = volterra_mean_intensity(kP1, grid);
    EXPECT_NEAR(p1[1000], 3.344543, 1e-4);
    const auto p2 = volterra_mean_intensity(kFigure, grid);
    for (std::size_t j = 0; j < grid.points; j += 97) {
        EXPECT_NEAR(p1[j], mean_intensity_p1(kP1, grid.node(j)), 1e-4);
        EXPECT_NEAR(p2[j], mean_intensity_p2(kFigure, grid.node(j)), 1e-4);
    }
}

TEST(VolterraTest, SecondOrderConvergence) {
    const double exact = mean_intensity_p1(kP1, 1.0);
    const double coarse = volterra_mean_intensity(kP1, UniformGrid::spanning(1.0, 100)).back();
    const double fine = volterra_mean_intensity(kP1, UniformGrid::spanning(1.0, 200)).back();
    const double ratio = std::abs(coarse - exact) / std::abs(fine - exact);
    EXPECT_GT(ratio, 3.5);
    EXPECT_LT(ratio, 4.5);
}

TEST(VolterraTest, ThreeTermModel) {
    const auto grid = UniformGrid::spanning(20.0, 200000);  // resolves beta = 300
    const auto phi = volterra_mean_intensity(kP3, grid);
    for (std::size_t j = 0; j < grid.points; j += 9973) {
        EXPECT_NEAR(phi[j], mean_intensity_general(kP3, grid.node(j)), 1e-4);
    }
}

}  // namespace
}  // namespace hawkes
