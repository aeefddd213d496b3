#include "hawkes/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hawkes/errors.hpp"
#include "hawkes/optimizer.hpp"
#include "hawkes/rng.hpp"

namespace hawkes {

namespace {

constexpr double kCoordinateLimit = 60.0;

double logistic(double z) { return z >= 0.0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z)); }

// Model from raw theta, repairing the floating-point edge cases the
// reparametrization can produce at its limits (alpha underflow to 0, a
// branching ratio one ulp above the cap).
HawkesModel model_from_theta(std::vector<double> theta, double cap) {
    const std::size_t order = (theta.size() - 1) / 2;
    double n = 0.0;
    for (std::size_t m = 0; m < order; ++m) n += theta[1 + m] / theta[1 + order + m];
    if (n > cap) {
        for (std::size_t m = 0; m < order; ++m) theta[1 + m] *= cap / n;
    }
    bool zero_alpha = false;
    std::vector<KernelTerm> terms(order);
    for (std::size_t m = 0; m < order; ++m) {
        terms[m] = {theta[1 + m], theta[1 + order + m]};
        zero_alpha = zero_alpha || terms[m].alpha == 0.0;
    }
    return zero_alpha ? HawkesModel::degenerate(theta[0], std::move(terms)) : HawkesModel(theta[0], std::move(terms));
}

// Time scales used to place starting values: betas between 1/T and the
// inverse of the 5% quantile of the interarrival times.
struct StartScales {
    double rate;  // n / T
    double beta_lo;
    double beta_hi;
};

StartScales start_scales(const EventSequence& events) {
    const auto times = events.times();
    const double horizon = events.horizon() > 0.0 ? events.horizon() : 1.0;
    std::vector<double> gaps;
    gaps.reserve(times.size());
    double previous = 0.0;
    for (const double t : times) {
        if (t - previous > 0.0) gaps.push_back(t - previous);
        previous = t;
    }
    double short_gap = horizon / static_cast<double>(std::max<std::size_t>(times.size(), 1));
    if (!gaps.empty()) {
        const auto k = static_cast<std::ptrdiff_t>(gaps.size() / 20);
        std::nth_element(gaps.begin(), gaps.begin() + k, gaps.end());
        short_gap = gaps[static_cast<std::size_t>(k)];
    }
    const double beta_lo = 1.0 / horizon;
    const double beta_hi = std::max(1.0 / short_gap, 100.0 * beta_lo);
    return {static_cast<double>(times.size()) / horizon, beta_lo, beta_hi};
}

HawkesModel moment_start(const StartScales& scales, std::size_t order) {
    const double branching = 0.5;
    std::vector<KernelTerm> terms(order);
    const double ratio = scales.beta_hi / scales.beta_lo;
    for (std::size_t m = 0; m < order; ++m) {
        const double beta = scales.beta_lo * std::pow(ratio, (static_cast<double>(m) + 0.5) / order);
        terms[m] = {branching / order * beta, beta};
    }
    return HawkesModel(0.5 * scales.rate, std::move(terms));
}

HawkesModel random_start(const StartScales& scales, std::size_t order, double cap, Rng& rng) {
    const double branching = cap * rng.uniform(0.05, 0.95);
    const double mu = scales.rate * (1.0 - branching) * std::exp(rng.uniform(-0.5, 0.5));
    std::vector<double> betas(order);
    std::vector<double> shares(order);
    double share_total = 0.0;
    const double log_lo = std::log(scales.beta_lo);
    const double log_hi = std::log(scales.beta_hi);
    for (;;) {
        for (auto& b : betas) b = std::exp(rng.uniform(log_lo, log_hi));
        std::sort(betas.begin(), betas.end());
        if (std::adjacent_find(betas.begin(), betas.end()) == betas.end()) break;
    }
    for (auto& s : shares) {
        s = rng.exponential(1.0);
        share_total += s;
    }
    std::vector<KernelTerm> terms(order);
    for (std::size_t m = 0; m < order; ++m) terms[m] = {branching * shares[m] / share_total * betas[m], betas[m]};
    return HawkesModel(mu, std::move(terms));
}

// Starting models of order `order` derived from a model of order - 1.
std::vector<HawkesModel> embed(const HawkesModel& lower, double cap) {
    std::vector<HawkesModel> out;
    const auto terms = lower.terms();
    const double n = branching_ratio(lower);
    for (std::size_t j = 0; j < terms.size(); ++j) {
        std::vector<KernelTerm> split(terms.begin(), terms.end());
        const double share = terms[j].alpha / terms[j].beta / 2.0;
        const double slow = terms[j].beta * 0.95;
        const double fast = terms[j].beta * 1.05;
        split[j] = {share * slow, slow};
        split.push_back({share * fast, fast});
        try {
            out.push_back(HawkesModel::degenerate(lower.mu(), std::move(split)));
        } catch (const std::invalid_argument&) {
            // Split collided with a neighbouring beta; skip this start.
        }
    }
    const double spare = 0.05 * std::max(cap - n, 0.0);
    const double beta_slow = terms.empty() ? 1.0 : terms.front().beta / 10.0;
    const double beta_fast = terms.empty() ? 10.0 : terms.back().beta * 10.0;
    for (const double beta : {beta_slow, beta_fast}) {
        std::vector<KernelTerm> extended(terms.begin(), terms.end());
        extended.push_back({spare * beta, beta});
        out.push_back(HawkesModel::degenerate(lower.mu(), std::move(extended)));
    }
    return out;
}

// Pulls alpha of every term slightly inside the feasible region so the
// unconstrained coordinates are finite.
HawkesModel interior(const HawkesModel& model, double cap) {
    std::vector<KernelTerm> terms(model.terms().begin(), model.terms().end());
    const double floor_share = 1e-6;
    double n = 0.0;
    for (auto& t : terms) {
        t.alpha = std::max(t.alpha, floor_share * t.beta);
        n += t.alpha / t.beta;
    }
    const double limit = cap * (1.0 - 1e-9);
    if (n >= limit) {
        for (auto& t : terms) t.alpha *= limit / n * (1.0 - 1e-6);
    }
    return HawkesModel(model.mu(), std::move(terms));
}

struct RestartOutcome {
    std::vector<double> theta;
    double log_likelihood{-std::numeric_limits<double>::infinity()};
    bool converged{false};
    std::size_t iterations{0};
};

RestartOutcome run_start(const EventSequence& events, const Reparametrization& map, const HawkesModel& start,
                         const FitOptions& options) {
    const Objective objective = [&](std::span<const double> x, std::span<double> gradient) -> double {
        for (const double v : x) {
            if (!std::isfinite(v) || std::abs(v) > kCoordinateLimit) return std::numeric_limits<double>::infinity();
        }
        const auto theta = map.to_theta(x);
        const std::size_t order = map.order();
        for (std::size_t m = 0; m < order; ++m) {
            const double beta = theta[1 + order + m];
            if (!(beta > 0.0) || (m > 0 && !(beta > theta[order + m]))) {
                return std::numeric_limits<double>::infinity();
            }
        }
        if (!(theta[0] > 0.0)) return std::numeric_limits<double>::infinity();
        std::vector<double> theta_gradient(gradient.empty() ? 0 : theta.size());
        const double value = evaluate_log_likelihood(theta, events, theta_gradient);
        if (!std::isfinite(value)) return std::numeric_limits<double>::infinity();
        if (!gradient.empty()) {
            const auto g = map.pull_back(x, theta, theta_gradient);
            for (std::size_t i = 0; i < g.size(); ++i) gradient[i] = -g[i];
        }
        return -value;
    };

    OptimizerOptions optimizer;
    optimizer.max_iterations = options.max_iterations;
    optimizer.relative_tolerance = options.tolerance;
    optimizer.gradient_tolerance = options.gradient_tolerance;

    RestartOutcome outcome;
    std::vector<double> x0;
    try {
        x0 = map.to_unconstrained(interior(start, options.branching_cap));
    } catch (const std::exception&) {
        return outcome;
    }
    const auto result = minimize_bfgs(objective, std::move(x0), optimizer);
    if (!std::isfinite(result.value)) return outcome;
    outcome.theta = map.to_theta(result.x);
    outcome.log_likelihood = -result.value;
    outcome.converged = result.converged;
    outcome.iterations = result.iterations;
    return outcome;
}

}  // namespace

std::string_view to_string(InitStrategy strategy) noexcept {
    switch (strategy) {
        case InitStrategy::moment_then_random: return "moment_then_random";
        case InitStrategy::random: return "random";
    }
    return "unknown";
}

InitStrategy parse_init_strategy(std::string_view name) {
    if (name == "moment_then_random") return InitStrategy::moment_then_random;
    if (name == "random") return InitStrategy::random;
    throw std::invalid_argument("unknown init strategy: " + std::string(name));
}

void FitOptions::validate() const {
    if (restarts < 1) throw std::invalid_argument("FitOptions: restarts must be >= 1");
    if (!(branching_cap > 0.0 && branching_cap < 1.0)) {
        throw std::invalid_argument("FitOptions: branching_cap must lie in (0, 1)");
    }
    if (!(tolerance > 0.0)) throw std::invalid_argument("FitOptions: tolerance must be positive");
}

Reparametrization::Reparametrization(std::size_t order, double branching_cap)
    : order_(order), cap_(branching_cap) {
    if (order == 0) throw std::invalid_argument("Reparametrization: order must be >= 1");
    if (!(cap_ > 0.0 && cap_ < 1.0)) throw std::invalid_argument("Reparametrization: cap must lie in (0, 1)");
}

std::vector<double> Reparametrization::to_theta(std::span<const double> x) const {
    const std::size_t p = order_;
    std::vector<double> theta(1 + 2 * p);
    theta[0] = std::exp(x[0]);
    double beta = 0.0;
    for (std::size_t m = 0; m < p; ++m) {
        beta += std::exp(x[1 + m]);
        theta[1 + p + m] = beta;
    }
    const double n = cap_ * logistic(x[1 + p]);
    // softmax over (w_1..w_{P-1}, 0)
    double largest = 0.0;
    for (std::size_t m = 0; m + 1 < p; ++m) largest = std::max(largest, x[2 + p + m]);
    std::vector<double> share(p);
    double total = 0.0;
    for (std::size_t m = 0; m < p; ++m) {
        const double w = m + 1 < p ? x[2 + p + m] : 0.0;
        share[m] = std::exp(w - largest);
        total += share[m];
    }
    for (std::size_t m = 0; m < p; ++m) theta[1 + m] = theta[1 + p + m] * n * share[m] / total;
    return theta;
}

std::vector<double> Reparametrization::to_unconstrained(const HawkesModel& model) const {
    if (model.order() != order_) throw std::invalid_argument("Reparametrization: order mismatch");
    const std::size_t p = order_;
    const auto terms = model.terms();
    const double n = branching_ratio(model);
    if (!(n > 0.0 && n < cap_)) throw std::domain_error("Reparametrization: branching ratio outside (0, cap)");
    std::vector<double> x(1 + 2 * p);
    x[0] = std::log(model.mu());
    for (std::size_t m = 0; m < p; ++m) {
        x[1 + m] = std::log(m == 0 ? terms[0].beta : terms[m].beta - terms[m - 1].beta);
    }
    const double fraction = n / cap_;
    x[1 + p] = std::log(fraction / (1.0 - fraction));
    const double last_share = terms[p - 1].alpha / terms[p - 1].beta;
    for (std::size_t m = 0; m + 1 < p; ++m) {
        x[2 + p + m] = std::log((terms[m].alpha / terms[m].beta) / last_share);
    }
    return x;
}

std::vector<double> Reparametrization::pull_back(std::span<const double> x, std::span<const double> theta,
                                                 std::span<const double> theta_gradient) const {
    const std::size_t p = order_;
    const double sigma = logistic(x[1 + p]);
    const double n = cap_ * sigma;
    std::vector<double> share(p);
    for (std::size_t m = 0; m < p; ++m) share[m] = theta[1 + m] / (theta[1 + p + m] * n);

    const auto d_alpha = theta_gradient.subspan(1, p);
    const auto d_beta = theta_gradient.subspan(1 + p, p);
    std::vector<double> grad(1 + 2 * p, 0.0);
    grad[0] = theta[0] * theta_gradient[0];

    // alpha_m = beta_m * n * s_m, so beta_m also acts through alpha_m.
    double tail = 0.0;
    for (std::size_t j = p; j-- > 0;) {
        tail += d_beta[j] + d_alpha[j] * n * share[j];
        grad[1 + j] = std::exp(x[1 + j]) * tail;
    }
    double d_n = 0.0;
    for (std::size_t m = 0; m < p; ++m) d_n += d_alpha[m] * theta[1 + p + m] * share[m];
    grad[1 + p] = d_n * cap_ * sigma * (1.0 - sigma);

    // d alpha_m / d w_j = beta_m n s_m (delta_mj - s_j)
    double weighted = 0.0;
    for (std::size_t m = 0; m < p; ++m) weighted += d_alpha[m] * theta[1 + p + m] * n * share[m];
    for (std::size_t j = 0; j + 1 < p; ++j) {
        grad[2 + p + j] = d_alpha[j] * theta[1 + p + j] * n * share[j] - weighted * share[j];
    }
    return grad;
}

FitResult fit(const EventSequence& events, std::size_t order, const FitOptions& options) {
    options.validate();
    if (order == 0) throw std::invalid_argument("fit: order must be >= 1");
    const std::size_t parameters = 1 + 2 * order;
    if (events.size() < parameters) {
        throw InsufficientDataError("fit: " + std::to_string(events.size()) + " events for " +
                                    std::to_string(parameters) + " parameters");
    }
    if (!(events.horizon() > 0.0)) throw InsufficientDataError("fit: horizon must be positive");

    const Reparametrization map(order, options.branching_cap);
    const StartScales scales = start_scales(events);
    Rng rng(mix_seed(options.seed, order));

    std::vector<HawkesModel> starts;
    for (std::size_t r = 0; r < options.restarts; ++r) {
        if (r == 0 && options.init_strategy == InitStrategy::moment_then_random) {
            starts.push_back(moment_start(scales, order));
        } else {
            starts.push_back(random_start(scales, order, options.branching_cap, rng));
        }
    }
    for (const auto& warm : options.warm_starts) {
        if (warm.order() == order) {
            starts.push_back(warm);
        } else if (warm.order() + 1 == order) {
            for (auto& embedded : embed(warm, options.branching_cap)) starts.push_back(std::move(embedded));
        }
    }

    std::size_t best = starts.size();
    std::size_t converged_count = 0;
    RestartOutcome winner;
    for (std::size_t r = 0; r < starts.size(); ++r) {
        auto outcome = run_start(events, map, starts[r], options);
        if (outcome.theta.empty()) continue;
        converged_count += outcome.converged ? 1 : 0;
        if (best == starts.size() || outcome.log_likelihood > winner.log_likelihood) {
            best = r;
            winner = std::move(outcome);
        }
    }
    if (best == starts.size()) {
        throw std::runtime_error("fit: no starting point produced a finite likelihood");
    }

    HawkesModel model = model_from_theta(winner.theta, options.branching_cap);
    const double value = log_likelihood(model, events);
    return FitResult{std::move(model), value, winner.converged, winner.iterations, best, starts.size(),
                     converged_count};
}

double rmse(double true_value, std::span<const double> estimates) {
    if (estimates.empty()) throw std::invalid_argument("rmse: no estimates");
    double sum = 0.0;
    for (const double e : estimates) sum += (true_value - e) * (true_value - e);
    return std::sqrt(sum / static_cast<double>(estimates.size()));
}

double relative_rmse(double true_value, std::span<const double> estimates) {
    if (true_value == 0.0) throw std::domain_error("relative_rmse: true value is zero");
    return rmse(true_value, estimates) / std::abs(true_value);
}

}  // namespace hawkes
