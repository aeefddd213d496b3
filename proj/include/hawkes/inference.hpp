#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hawkes/core.hpp"
#include "hawkes/likelihood.hpp"

namespace hawkes {

enum class InitStrategy {
    /// Start 0 is the moment heuristic, the rest are random.
    moment_then_random,
    /// Every start is random.
    random,
};

[[nodiscard]] std::string_view to_string(InitStrategy strategy) noexcept;
[[nodiscard]] InitStrategy parse_init_strategy(std::string_view name);

struct FitOptions {
    std::size_t restarts{10};
    std::size_t max_iterations{500};
    /// Relative change of the log-likelihood that counts as converged.
    double tolerance{1e-8};
    double gradient_tolerance{1e-6};
    /// Upper bound on the branching ratio of every fitted model.
    double branching_cap{1.0 - 1e-6};
    InitStrategy init_strategy{InitStrategy::moment_then_random};
    std::uint64_t seed{0};
    /// Extra starting models tried after the regular starts. A model of the
    /// requested order is used as is; a model of order P - 1 is embedded by
    /// splitting each of its terms and by adding a slower or faster term.
    std::vector<HawkesModel> warm_starts{};

    /// Throws std::invalid_argument unless restarts >= 1 and 0 < cap < 1.
    void validate() const;
};

struct FitResult {
    HawkesModel model;
    double log_likelihood{0.0};
    bool converged{false};
    std::size_t iterations{0};
    std::size_t restart_index{0};
    std::size_t starts_tried{0};
    std::size_t starts_converged{0};
};

/// Unconstrained coordinates of a Hawkes-P model:
///   x = (log mu, log beta_1, log(beta_2 - beta_1), ..., logit(n / cap), w_1..w_{P-1})
/// with alpha_m = beta_m * n * softmax(w_1..w_{P-1}, 0)_m. Every x maps to a
/// model with positive parameters, increasing betas and branching ratio < cap.
class Reparametrization {
public:
    Reparametrization(std::size_t order, double branching_cap);

    [[nodiscard]] std::size_t order() const noexcept { return order_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return 1 + 2 * order_; }

    /// theta = (mu, alpha..., beta...) for unconstrained x.
    [[nodiscard]] std::vector<double> to_theta(std::span<const double> x) const;

    /// Inverse map. The model must have branching ratio < cap.
    [[nodiscard]] std::vector<double> to_unconstrained(const HawkesModel& model) const;

    /// Chain rule: dL/dx from dL/dtheta evaluated at theta = to_theta(x).
    [[nodiscard]] std::vector<double> pull_back(std::span<const double> x, std::span<const double> theta,
                                                std::span<const double> theta_gradient) const;

private:
    std::size_t order_;
    double cap_;
};

/// Maximum-likelihood fit of a Hawkes-P model by multistart quasi-Newton
/// search in the unconstrained coordinates. The best restart wins; ties go to
/// the lowest restart index. Throws InsufficientDataError when the sequence
/// has fewer than 1 + 2P events.
[[nodiscard]] FitResult fit(const EventSequence& events, std::size_t order, const FitOptions& options = {});

/// sqrt(mean((truth - estimate)^2)). Throws std::invalid_argument on empty input.
[[nodiscard]] double rmse(double true_value, std::span<const double> estimates);

/// rmse / |truth|. Throws std::domain_error when truth == 0.
[[nodiscard]] double relative_rmse(double true_value, std::span<const double> estimates);

}  // namespace hawkes
