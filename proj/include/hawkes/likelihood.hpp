#pragma once

#include <span>
#include <vector>

#include "hawkes/core.hpp"

namespace hawkes {

// Log-likelihood of events on [0, T]:
//
//   L = -mu T - sum_m (alpha_m / beta_m) sum_i (1 - exp(-beta_m (T - t_i)))
//       + sum_k log(mu + sum_m alpha_m sum_{i<k} exp(-beta_m (t_k - t_i))).
//
// Every recorded event (t_k <= T) contributes a log term; the boundary term
// always uses the recorded horizon T, which may exceed the last event.

/// O(n^2) reference evaluation of the formula above.
[[nodiscard]] double log_likelihood_direct(const HawkesModel& model, const EventSequence& events);

/// O(nP) evaluation with A_m(k) = (1 + A_m(k-1)) exp(-beta_m (t_k - t_{k-1})), A_m(1) = 0.
[[nodiscard]] double log_likelihood(const HawkesModel& model, const EventSequence& events);

/// Gradient with respect to theta = (mu, alpha_1..alpha_P, beta_1..beta_P).
[[nodiscard]] std::vector<double> log_likelihood_gradient(const HawkesModel& model, const EventSequence& events);

/// Recursive evaluation on a raw parameter vector theta (length 1 + 2P).
/// Parameters only need to be positive; ordering is not checked. When
/// `gradient` is non-empty it must have the same length as theta and
/// receives dL/dtheta. Returns -infinity if an intensity is not positive.
double evaluate_log_likelihood(std::span<const double> theta, const EventSequence& events,
                               std::span<double> gradient = {});

}  // namespace hawkes
