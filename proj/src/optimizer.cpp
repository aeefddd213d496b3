#include "hawkes/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

namespace hawkes {

namespace {

using Vector = std::vector<double>;

constexpr double kArmijo = 1e-4;
constexpr double kCurvature = 0.9;
constexpr int kMaxBracketSteps = 40;
constexpr int kMaxZoomSteps = 40;

double dot(const Vector& a, const Vector& b) { return std::inner_product(a.begin(), a.end(), b.begin(), 0.0); }

double max_abs(const Vector& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

bool usable(double f) { return std::isfinite(f); }

// Evaluates f and its gradient, counting calls.
struct Evaluator {
    const Objective& objective;
    std::size_t calls{0};

    double operator()(const Vector& x, Vector& gradient) {
        ++calls;
        gradient.assign(x.size(), 0.0);
        const double f = objective(x, gradient);
        if (!usable(f)) return std::numeric_limits<double>::infinity();
        for (double g : gradient) {
            if (!std::isfinite(g)) return std::numeric_limits<double>::infinity();
        }
        return f;
    }

    double value(const Vector& x) {
        ++calls;
        const double f = objective(x, {});
        return usable(f) ? f : std::numeric_limits<double>::infinity();
    }
};

struct LinePoint {
    double step{0.0};
    double value{0.0};
    double slope{0.0};
    Vector x;
    Vector gradient;
};

// Strong-Wolfe line search along `direction` (Nocedal & Wright, Alg. 3.5/3.6),
// zooming with safeguarded quadratic interpolation.
std::optional<LinePoint> wolfe_search(Evaluator& eval, const Vector& x, double f0, const Vector& g0,
                                      const Vector& direction, double first_step) {
    const double slope0 = dot(g0, direction);
    auto probe = [&](double step) {
        LinePoint p;
        p.step = step;
        p.x.resize(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) p.x[i] = x[i] + step * direction[i];
        p.value = eval(p.x, p.gradient);
        p.slope = usable(p.value) ? dot(p.gradient, direction) : std::numeric_limits<double>::quiet_NaN();
        return p;
    };
    auto sufficient = [&](const LinePoint& p) { return p.value <= f0 + kArmijo * p.step * slope0; };
    auto curvature = [&](const LinePoint& p) { return std::abs(p.slope) <= -kCurvature * slope0; };

    auto zoom = [&](LinePoint lo, LinePoint hi) -> std::optional<LinePoint> {
        for (int i = 0; i < kMaxZoomSteps; ++i) {
            const double width = hi.step - lo.step;
            double trial = lo.step + 0.5 * width;
            if (usable(hi.value)) {
                const double denom = 2.0 * (hi.value - lo.value - lo.slope * width);
                if (denom > 0.0) trial = lo.step - lo.slope * width * width / denom;
            }
            const double a = std::min(lo.step, hi.step);
            const double b = std::max(lo.step, hi.step);
            trial = std::clamp(trial, a + 0.1 * (b - a), b - 0.1 * (b - a));
            LinePoint p = probe(trial);
            if (!usable(p.value) || !sufficient(p) || p.value >= lo.value) {
                hi = std::move(p);
            } else {
                if (curvature(p)) return p;
                if (p.slope * (hi.step - lo.step) >= 0.0) hi = lo;
                lo = std::move(p);
            }
            if (std::abs(hi.step - lo.step) <= 1e-16 * std::max(1.0, lo.step)) break;
        }
        // Accept the best sufficient-decrease point even without curvature.
        if (lo.step > 0.0 && lo.value < f0) return lo;
        return std::nullopt;
    };

    LinePoint previous;
    previous.step = 0.0;
    previous.value = f0;
    previous.slope = slope0;
    previous.x = x;
    previous.gradient = g0;

    double step = first_step;
    for (int i = 0; i < kMaxBracketSteps; ++i) {
        LinePoint p = probe(step);
        if (!usable(p.value)) {
            // Outside the domain: shrink toward the last good point.
            return zoom(std::move(previous), std::move(p));
        }
        if (!sufficient(p) || (i > 0 && p.value >= previous.value)) {
            return zoom(std::move(previous), std::move(p));
        }
        if (curvature(p)) return p;
        if (p.slope >= 0.0) return zoom(std::move(p), std::move(previous));
        previous = std::move(p);
        step *= 2.0;
    }
    if (previous.step > 0.0) return previous;
    return std::nullopt;
}

}  // namespace

OptimizerResult minimize_bfgs(const Objective& objective, std::vector<double> start,
                              const OptimizerOptions& options) {
    const std::size_t dim = start.size();
    Evaluator eval{objective};
    OptimizerResult result;

    Vector x = std::move(start);
    Vector g;
    double f = eval(x, g);
    if (!usable(f)) {
        result.x = x;
        result.value = f;
        result.evaluations = eval.calls;
        return result;
    }

    // Inverse Hessian approximation, row-major.
    Vector h(dim * dim, 0.0);
    auto reset_hessian = [&](double scale) {
        std::fill(h.begin(), h.end(), 0.0);
        for (std::size_t i = 0; i < dim; ++i) h[i * dim + i] = scale;
    };
    reset_hessian(1.0);
    bool fresh_hessian = true;

    Vector direction(dim), s(dim), y(dim), hy(dim);
    std::size_t iteration = 0;
    for (; iteration < options.max_iterations; ++iteration) {
        if (max_abs(g) <= options.gradient_tolerance) {
            result.converged = true;
            break;
        }
        for (std::size_t i = 0; i < dim; ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < dim; ++j) sum -= h[i * dim + j] * g[j];
            direction[i] = sum;
        }
        if (!(dot(direction, g) < 0.0)) {
            reset_hessian(1.0);
            fresh_hessian = true;
            for (std::size_t i = 0; i < dim; ++i) direction[i] = -g[i];
        }
        const double first_step = fresh_hessian ? std::min(1.0, 1.0 / std::max(max_abs(g), 1e-300)) : 1.0;
        auto point = wolfe_search(eval, x, f, g, direction, first_step);
        if (!point) {
            if (!fresh_hessian) {
                reset_hessian(1.0);
                fresh_hessian = true;
                continue;
            }
            auto simplex = minimize_nelder_mead(objective, x, options);
            simplex.iterations += iteration;
            simplex.evaluations += eval.calls;
            simplex.used_simplex = true;
            if (simplex.value > f) {
                simplex.x = x;
                simplex.value = f;
            }
            return simplex;
        }

        for (std::size_t i = 0; i < dim; ++i) {
            s[i] = point->x[i] - x[i];
            y[i] = point->gradient[i] - g[i];
        }
        const double previous_value = f;
        x = std::move(point->x);
        g = std::move(point->gradient);
        f = point->value;

        const double sy = dot(s, y);
        if (sy > 1e-12 * std::sqrt(dot(s, s) * dot(y, y))) {
            if (fresh_hessian) reset_hessian(sy / dot(y, y));
            const double rho = 1.0 / sy;
            for (std::size_t i = 0; i < dim; ++i) {
                double sum = 0.0;
                for (std::size_t j = 0; j < dim; ++j) sum += h[i * dim + j] * y[j];
                hy[i] = sum;
            }
            const double yhy = dot(y, hy);
            for (std::size_t i = 0; i < dim; ++i) {
                for (std::size_t j = 0; j < dim; ++j) {
                    h[i * dim + j] += -rho * (hy[i] * s[j] + s[i] * hy[j]) + (rho * rho * yhy + rho) * s[i] * s[j];
                }
            }
            fresh_hessian = false;
        }

        if (std::abs(previous_value - f) <= options.relative_tolerance * std::max(1.0, std::abs(f))) {
            result.converged = true;
            ++iteration;
            break;
        }
    }

    result.x = std::move(x);
    result.value = f;
    result.iterations = iteration;
    result.evaluations = eval.calls;
    return result;
}

OptimizerResult minimize_nelder_mead(const Objective& objective, std::vector<double> start,
                                     const OptimizerOptions& options, double initial_step) {
    const std::size_t dim = start.size();
    Evaluator eval{objective};
    std::vector<Vector> simplex(dim + 1, start);
    Vector values(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += initial_step;
    for (std::size_t i = 0; i <= dim; ++i) values[i] = eval.value(simplex[i]);

    const std::size_t max_evaluations = std::max<std::size_t>(200 * dim, 20 * options.max_iterations);
    std::vector<std::size_t> order(dim + 1);
    OptimizerResult result;
    std::size_t iteration = 0;
    Vector centroid(dim), trial(dim), trial2(dim);

    while (eval.calls < max_evaluations) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[dim - 1];

        double spread = 0.0;
        for (std::size_t i = 0; i <= dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                spread = std::max(spread, std::abs(simplex[i][j] - simplex[best][j]));
            }
        }
        const double fspread = values[worst] - values[best];
        if (usable(fspread) && fspread <= options.relative_tolerance * std::max(1.0, std::abs(values[best])) &&
            spread <= 1e-6) {
            result.converged = true;
            break;
        }
        ++iteration;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == worst) continue;
            for (std::size_t j = 0; j < dim; ++j) centroid[j] += simplex[i][j] / static_cast<double>(dim);
        }
        auto along = [&](double coefficient, Vector& out) {
            for (std::size_t j = 0; j < dim; ++j) out[j] = centroid[j] + coefficient * (simplex[worst][j] - centroid[j]);
            return eval.value(out);
        };

        const double reflected = along(-1.0, trial);
        if (reflected < values[best]) {
            const double expanded = along(-2.0, trial2);
            if (expanded < reflected) {
                simplex[worst] = trial2;
                values[worst] = expanded;
            } else {
                simplex[worst] = trial;
                values[worst] = reflected;
            }
            continue;
        }
        if (reflected < values[second]) {
            simplex[worst] = trial;
            values[worst] = reflected;
            continue;
        }
        const bool outside = reflected < values[worst];
        const double contracted = along(outside ? -0.5 : 0.5, trial2);
        if (contracted < (outside ? reflected : values[worst])) {
            simplex[worst] = trial2;
            values[worst] = contracted;
            continue;
        }
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == best) continue;
            for (std::size_t j = 0; j < dim; ++j) simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
            values[i] = eval.value(simplex[i]);
        }
    }

    const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
    result.x = simplex[best];
    result.value = values[best];
    result.iterations = iteration;
    result.evaluations = eval.calls;
    return result;
}

}  // namespace hawkes
