#include "hawkes/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hawkes {

std::vector<double> time_change_residuals(const HawkesModel& model, const EventSequence& events) {
    const auto times = events.times();
    const auto terms = model.terms();
    std::vector<double> excitation(terms.size(), 0.0);  // sum_{i<=k} exp(-beta (t_k - t_i))
    std::vector<double> residuals;
    residuals.reserve(times.size());
    double previous = 0.0;
    for (std::size_t k = 0; k < times.size(); ++k) {
        const double gap = times[k] - previous;
        double increment = model.mu() * gap;
        for (std::size_t m = 0; m < terms.size(); ++m) {
            if (k > 0) {
                increment += terms[m].alpha / terms[m].beta * excitation[m] * -std::expm1(-terms[m].beta * gap);
                excitation[m] *= std::exp(-terms[m].beta * gap);
            }
            excitation[m] += 1.0;
        }
        residuals.push_back(increment);
        previous = times[k];
    }
    return residuals;
}

double kolmogorov_survival(double lambda) {
    if (lambda <= 0.0) return 1.0;
    if (lambda < 0.2) return 1.0;  // series converges slowly; value is 1 to double precision
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 == 1 ? 2.0 : -2.0) * term;
        if (term < 1e-18) break;
    }
    return std::clamp(sum, 0.0, 1.0);
}

KsResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_test: no samples");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const auto n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
    }
    const double root = std::sqrt(n);
    return {d, kolmogorov_survival((root + 0.12 + 0.11 / root) * d), sorted.size()};
}

KsResult ks_test_exponential(std::span<const double> samples, double rate) {
    if (!(rate > 0.0)) throw std::invalid_argument("ks_test_exponential: rate must be positive");
    return ks_test(samples, [rate](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-rate * x); });
}

}  // namespace hawkes
