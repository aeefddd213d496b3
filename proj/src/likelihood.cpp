#include "hawkes/likelihood.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hawkes {

double log_likelihood_direct(const HawkesModel& model, const EventSequence& events) {
    const auto times = events.times();
    const double horizon = events.horizon();
    double value = -model.mu() * horizon;
    for (const auto& term : model.terms()) {
        double mass = 0.0;
        for (const double t : times) mass += -std::expm1(-term.beta * (horizon - t));
        value -= term.alpha / term.beta * mass;
    }
    for (std::size_t k = 0; k < times.size(); ++k) {
        double rate = model.mu();
        for (const auto& term : model.terms()) {
            double sum = 0.0;
            for (std::size_t i = 0; i < k; ++i) sum += std::exp(-term.beta * (times[k] - times[i]));
            rate += term.alpha * sum;
        }
        if (!(rate > 0.0)) throw std::logic_error("log_likelihood_direct: non-positive intensity");
        value += std::log(rate);
    }
    return value;
}

double evaluate_log_likelihood(std::span<const double> theta, const EventSequence& events,
                               std::span<double> gradient) {
    if (theta.empty() || theta.size() % 2 == 0) {
        throw std::invalid_argument("evaluate_log_likelihood: theta must have length 1 + 2P");
    }
    const bool want_gradient = !gradient.empty();
    if (want_gradient && gradient.size() != theta.size()) {
        throw std::invalid_argument("evaluate_log_likelihood: gradient size mismatch");
    }
    const std::size_t order = (theta.size() - 1) / 2;
    const double mu = theta[0];
    const auto alpha = theta.subspan(1, order);
    const auto beta = theta.subspan(1 + order, order);
    const auto times = events.times();
    const double horizon = events.horizon();
    const std::size_t n = times.size();

    // Per-term recursion state at the current event:
    //   excitation[m] = A_m(k) = sum_{i<k} exp(-beta_m (t_k - t_i))
    //   lagged[m]     = C_m(k) = sum_{i<k} (t_k - t_i) exp(-beta_m (t_k - t_i))
    std::vector<double> excitation(order, 0.0), lagged(order, 0.0);
    std::vector<double> score_alpha(order, 0.0), score_beta(order, 0.0);
    double score_mu = 0.0;
    double value = 0.0;

    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            const double gap = times[k] - times[k - 1];
            for (std::size_t m = 0; m < order; ++m) {
                const double decay = std::exp(-beta[m] * gap);
                if (want_gradient) lagged[m] = decay * (lagged[m] + gap * (1.0 + excitation[m]));
                excitation[m] = decay * (1.0 + excitation[m]);
            }
        }
        double rate = mu;
        for (std::size_t m = 0; m < order; ++m) rate += alpha[m] * excitation[m];
        if (!(rate > 0.0) || !std::isfinite(rate)) return -std::numeric_limits<double>::infinity();
        value += std::log(rate);
        if (want_gradient) {
            const double inv = 1.0 / rate;
            score_mu += inv;
            for (std::size_t m = 0; m < order; ++m) {
                score_alpha[m] += excitation[m] * inv;
                score_beta[m] -= alpha[m] * lagged[m] * inv;
            }
        }
    }

    value -= mu * horizon;
    const double tail = n > 0 ? horizon - times[n - 1] : 0.0;
    for (std::size_t m = 0; m < order; ++m) {
        // sum_i exp(-beta (T - t_i)) and sum_i (T - t_i) exp(-beta (T - t_i)),
        // propagated from the last event to the horizon.
        double surviving = 0.0;
        double surviving_lag = 0.0;
        if (n > 0) {
            const double decay = std::exp(-beta[m] * tail);
            surviving = decay * (1.0 + excitation[m]);
            surviving_lag = decay * (lagged[m] + tail * (1.0 + excitation[m]));
        }
        const double mass = static_cast<double>(n) - surviving;
        value -= alpha[m] / beta[m] * mass;
        if (want_gradient) {
            score_alpha[m] -= mass / beta[m];
            score_beta[m] += alpha[m] / (beta[m] * beta[m]) * mass - alpha[m] / beta[m] * surviving_lag;
        }
    }

    if (want_gradient) {
        gradient[0] = score_mu - horizon;
        for (std::size_t m = 0; m < order; ++m) {
            gradient[1 + m] = score_alpha[m];
            gradient[1 + order + m] = score_beta[m];
        }
    }
    return value;
}

double log_likelihood(const HawkesModel& model, const EventSequence& events) {
    const auto theta = model.parameters();
    return evaluate_log_likelihood(theta, events);
}

std::vector<double> log_likelihood_gradient(const HawkesModel& model, const EventSequence& events) {
    const auto theta = model.parameters();
    std::vector<double> gradient(theta.size());
    evaluate_log_likelihood(theta, events, gradient);
    return gradient;
}

}  // namespace hawkes
