#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hawkes/core.hpp"

namespace hawkes {

/// Compensator increments Lambda(t_k) - Lambda(t_{k-1}) (with t_0 = 0).
/// Under the true model they are i.i.d. Exp(1) by the time-change theorem.
[[nodiscard]] std::vector<double> time_change_residuals(const HawkesModel& model, const EventSequence& events);

struct KsResult {
    double statistic{0.0};
    double p_value{1.0};
    std::size_t sample_size{0};
};

/// One-sample Kolmogorov-Smirnov test against a continuous CDF, with the
/// asymptotic Kolmogorov p-value (Stephens' small-sample correction).
[[nodiscard]] KsResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf);

/// KS test against Exp(rate).
[[nodiscard]] KsResult ks_test_exponential(std::span<const double> samples, double rate = 1.0);

/// Survival function of the Kolmogorov distribution, P(K > lambda).
[[nodiscard]] double kolmogorov_survival(double lambda);

}  // namespace hawkes
