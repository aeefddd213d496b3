#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "hawkes/optimizer.hpp"

namespace hawkes {
namespace {

double rosenbrock(std::span<const double> x, std::span<double> g) {
    const double a = 1.0 - x[0];
    const double b = x[1] - x[0] * x[0];
    if (!g.empty()) {
        g[0] = -2.0 * a - 400.0 * x[0] * b;
        g[1] = 200.0 * b;
    }
    return a * a + 100.0 * b * b;
}

TEST(BfgsTest, Rosenbrock) {
    const auto result = minimize_bfgs(rosenbrock, {-1.2, 1.0}, {.max_iterations = 1000, .relative_tolerance = 1e-14,
                                                               .gradient_tolerance = 1e-8});
    EXPECT_TRUE(result.converged);
    EXPECT_NEAR(result.x[0], 1.0, 1e-5);
    EXPECT_NEAR(result.x[1], 1.0, 1e-5);
    EXPECT_FALSE(result.used_simplex);
}

TEST(BfgsTest, IllConditionedQuadratic) {
    const std::vector<double> scale{1.0, 100.0, 1e4, 1e-2};
    auto quadratic = [&](std::span<const double> x, std::span<double> g) {
        double f = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double d = x[i] - static_cast<double>(i);
            f += 0.5 * scale[i] * d * d;
            if (!g.empty()) g[i] = scale[i] * d;
        }
        return f;
    };
    const auto result = minimize_bfgs(quadratic, {5.0, 5.0, 5.0, 5.0},
                                      {.max_iterations = 500, .relative_tolerance = 1e-16, .gradient_tolerance = 1e-9});
    EXPECT_TRUE(result.converged);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(result.x[i], static_cast<double>(i), 1e-6);
}

TEST(BfgsTest, RespectsInfiniteBarrier) {
    // f = x - log(x) has its minimum at 1 and is +inf for x <= 0.
    auto barrier = [](std::span<const double> x, std::span<double> g) {
        if (x[0] <= 0.0) return std::numeric_limits<double>::infinity();
        if (!g.empty()) g[0] = 1.0 - 1.0 / x[0];
        return x[0] - std::log(x[0]);
    };
    const auto result = minimize_bfgs(barrier, {0.01});
    EXPECT_NEAR(result.x[0], 1.0, 1e-4);
}

TEST(BfgsTest, NonFiniteStart) {
    auto bad = [](std::span<const double>, std::span<double>) { return std::numeric_limits<double>::infinity(); };
    const auto result = minimize_bfgs(bad, {0.0});
    EXPECT_FALSE(result.converged);
}

TEST(NelderMeadTest, Rosenbrock) {
    const auto result = minimize_nelder_mead(rosenbrock, {-1.2, 1.0},
                                             {.max_iterations = 5000, .relative_tolerance = 1e-14}, 0.5);
    EXPECT_NEAR(result.x[0], 1.0, 1e-3);
    EXPECT_NEAR(result.x[1], 1.0, 2e-3);
}

}  // namespace
}  // namespace hawkes
