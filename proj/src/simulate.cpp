#include "hawkes/simulate.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hawkes/errors.hpp"
#include "hawkes/rng.hpp"

namespace hawkes {

namespace {

// Thinning state: excitation_[m] = sum_{t_i <= now} exp(-beta_m (now - t_i)),
// updated with the same one-step recursion as the likelihood.
class ThinningSampler {
public:
    ThinningSampler(const HawkesModel& model, std::uint64_t seed)
        : model_(model), rng_(seed), excitation_(model.order(), 0.0), decay_rates_(model.betas()) {
        alphas_ = model.alphas();
    }

    /// Next accepted event time, or nullopt once a candidate exceeds `stop`.
    std::optional<double> next(double stop) {
        for (;;) {
            const double bound = intensity();
            const double wait = rng_.exponential(bound);
            const double candidate = now_ + wait;
            if (candidate > stop) return std::nullopt;
            // A wait below the spacing of doubles at `now_` cannot produce a new time.
            if (candidate <= now_) continue;
            for (std::size_t m = 0; m < excitation_.size(); ++m) {
                excitation_[m] *= std::exp(-decay_rates_[m] * wait);
            }
            now_ = candidate;
            const double rate = intensity();
            if (rate > bound * (1.0 + 1e-12)) {
                throw std::logic_error("thinning bound violated: intensity increased between events");
            }
            if (rng_.uniform() * bound <= rate) {
                for (auto& e : excitation_) e += 1.0;
                return candidate;
            }
        }
    }

private:
    double intensity() const {
        double rate = model_.mu();
        for (std::size_t m = 0; m < excitation_.size(); ++m) rate += alphas_[m] * excitation_[m];
        return rate;
    }

    const HawkesModel& model_;
    Rng rng_;
    double now_{0.0};
    std::vector<double> excitation_;
    std::vector<double> decay_rates_;
    std::vector<double> alphas_;
};

void require_stationary(const HawkesModel& model) {
    if (!(branching_ratio(model) < 1.0)) {
        throw std::domain_error("simulate: branching ratio must be < 1");
    }
}

}  // namespace

EventSequence simulate_horizon(const HawkesModel& model, double horizon, std::uint64_t seed,
                               const SimulationLimits& limits) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw std::invalid_argument("simulate_horizon: horizon must be positive and finite");
    }
    require_stationary(model);
    ThinningSampler sampler(model, seed);
    std::vector<double> times;
    while (auto t = sampler.next(horizon)) {
        if (times.size() >= limits.max_events) {
            throw RunawaySimulationError("simulate_horizon: event cap of " + std::to_string(limits.max_events) +
                                         " exceeded before horizon " + std::to_string(horizon));
        }
        times.push_back(*t);
    }
    return EventSequence(std::move(times), horizon);
}

EventSequence simulate_count(const HawkesModel& model, std::size_t target_count, std::uint64_t seed,
                             const SimulationLimits& limits) {
    if (target_count == 0) throw std::invalid_argument("simulate_count: target count must be >= 1");
    require_stationary(model);
    ThinningSampler sampler(model, seed);
    std::vector<double> times;
    times.reserve(target_count);
    while (times.size() < target_count) {
        auto t = sampler.next(limits.max_time);
        if (!t) {
            throw RunawaySimulationError("simulate_count: simulated time cap reached after " +
                                         std::to_string(times.size()) + " events");
        }
        times.push_back(*t);
    }
    return EventSequence::ending_at_last_event(std::move(times));
}

}  // namespace hawkes
