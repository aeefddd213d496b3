#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hawkes/core.hpp"
#include "hawkes/inference.hpp"

namespace hawkes {

/// Inputs of an information criterion: maximal log-likelihood, parameter
/// count k (1 + 2P for Hawkes-P) and sample size n (event count).
struct ICInput {
    double log_likelihood{0.0};
    std::size_t k{0};
    std::size_t n{0};
};

/// -2L + 2k
[[nodiscard]] double aic(const ICInput& input) noexcept;
/// -2L + 2kn / (n - k - 1); std::domain_error when n <= k + 1.
[[nodiscard]] double aicc(const ICInput& input);
/// -2L + k ln n; std::domain_error when n == 0.
[[nodiscard]] double bic(const ICInput& input);
/// -2L + 2k ln ln n; std::domain_error when n <= 2.
[[nodiscard]] double hq(const ICInput& input);

enum class Criterion { aic, aicc, bic, hq, aicc_aic };

[[nodiscard]] std::string_view to_string(Criterion criterion) noexcept;
[[nodiscard]] Criterion parse_criterion(std::string_view name);

/// When the combined AICc/AIC rule switches to AICc.
struct AiccAicRule {
    enum class Mode {
        fixed,         // n < fixed_threshold
        forty_k_max,   // n < 40 * k_max
    };
    Mode mode{Mode::fixed};
    double fixed_threshold{120.0};

    [[nodiscard]] double threshold(std::size_t k_max) const noexcept;
};

/// Value of `criterion` for one candidate. For aicc_aic, `k_max` is the
/// largest parameter count among the candidates.
[[nodiscard]] double information_criterion(Criterion criterion, const ICInput& input, std::size_t k_max,
                                           const AiccAicRule& rule = {});

/// Index of the minimum; ties go to the smallest order.
[[nodiscard]] std::size_t argmin_order(std::span<const std::size_t> orders, std::span<const double> values);

/// A fitted candidate order, or the reason it was excluded.
struct CandidateFit {
    std::size_t order{0};
    std::optional<FitResult> fit;
    std::string warning;
};

struct SelectionResult {
    Criterion criterion{Criterion::aic};
    /// For aicc_aic: whichever of aicc / aic was applied.
    Criterion applied{Criterion::aic};
    std::vector<std::size_t> candidate_orders;
    std::vector<double> ic_values;
    std::vector<FitResult> fits;
    std::size_t chosen_order{0};
    std::vector<std::string> warnings;
};

/// Fits every order in ascending order. Each fit is warm-started from the
/// fit of the next lower order, so nested likelihoods stay monotone in
/// practice. Orders without enough data carry a warning instead of a fit.
[[nodiscard]] std::vector<CandidateFit> fit_candidates(const EventSequence& events,
                                                       std::span<const std::size_t> orders,
                                                       const FitOptions& options);

/// Scores already fitted candidates. Throws std::runtime_error when no
/// candidate can be scored.
[[nodiscard]] SelectionResult choose_order(Criterion criterion, std::span<const CandidateFit> candidates,
                                           std::size_t sample_size, const AiccAicRule& rule = {});

/// fit_candidates followed by choose_order with n = events.size().
[[nodiscard]] SelectionResult select_order(const EventSequence& events, std::span<const std::size_t> orders,
                                           Criterion criterion, const FitOptions& options,
                                           const AiccAicRule& rule = {});

}  // namespace hawkes
