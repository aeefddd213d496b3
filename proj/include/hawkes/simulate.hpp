#pragma once

#include <cstddef>
#include <cstdint>

#include "hawkes/core.hpp"

namespace hawkes {

/// Runaway guards for the thinning sampler.
struct SimulationLimits {
    std::size_t max_events{10'000'000};
    /// Simulated-time cap for count-targeted runs.
    double max_time{1e15};
};

/// Realization on (0, horizon] started from an empty history at t = 0, by
/// Ogata thinning. The proposal rate after each accepted or rejected
/// candidate is lambda(t+), which dominates lambda until the next event
/// because every kernel term is decreasing.
///
/// Throws std::domain_error unless the branching ratio is < 1 and
/// RunawaySimulationError when more than `limits.max_events` are accepted.
[[nodiscard]] EventSequence simulate_horizon(const HawkesModel& model, double horizon, std::uint64_t seed,
                                             const SimulationLimits& limits = {});

/// Exactly `target_count` events; the horizon is the last event time.
[[nodiscard]] EventSequence simulate_count(const HawkesModel& model, std::size_t target_count,
                                           std::uint64_t seed, const SimulationLimits& limits = {});

}  // namespace hawkes
