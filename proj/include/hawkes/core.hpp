#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hawkes {

/// One exponential term alpha * exp(-beta * tau) of the excitation kernel.
struct KernelTerm {
    double alpha{0.0};
    double beta{0.0};

    friend bool operator==(const KernelTerm&, const KernelTerm&) = default;
};

enum class Stationarity {
    unconstrained,
    required,  // branching ratio must be < 1
};

/// Exponential Hawkes model of order P:
///   lambda(t) = mu + sum_m alpha_m sum_{t_i < t} exp(-beta_m (t - t_i)).
///
/// Terms are stored sorted by strictly increasing beta. The standard
/// constructor requires mu > 0, alpha > 0 and beta > 0; `degenerate` relaxes
/// alpha to alpha >= 0 so that Poisson limits can be expressed.
class HawkesModel {
public:
    HawkesModel(double mu, std::vector<KernelTerm> terms,
                Stationarity stationarity = Stationarity::unconstrained);

    /// Same as the constructor but accepts alpha == 0 terms.
    [[nodiscard]] static HawkesModel degenerate(double mu, std::vector<KernelTerm> terms,
                                                Stationarity stationarity = Stationarity::unconstrained);

    /// Inverse of `parameters()`: (mu, alpha_1..alpha_P, beta_1..beta_P).
    [[nodiscard]] static HawkesModel from_parameters(std::span<const double> theta,
                                                     Stationarity stationarity = Stationarity::unconstrained);

    [[nodiscard]] double mu() const noexcept { return mu_; }
    [[nodiscard]] std::span<const KernelTerm> terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t order() const noexcept { return terms_.size(); }
    [[nodiscard]] std::size_t parameter_count() const noexcept { return 1 + 2 * terms_.size(); }
    [[nodiscard]] Stationarity stationarity() const noexcept { return stationarity_; }
    [[nodiscard]] bool is_degenerate() const noexcept;

    [[nodiscard]] std::vector<double> alphas() const;
    [[nodiscard]] std::vector<double> betas() const;
    /// Flat parameter vector theta = (mu, alpha_1..alpha_P, beta_1..beta_P).
    [[nodiscard]] std::vector<double> parameters() const;

    friend bool operator==(const HawkesModel& a, const HawkesModel& b) {
        return a.mu_ == b.mu_ && a.terms_ == b.terms_;
    }

private:
    HawkesModel(double mu, std::vector<KernelTerm> terms, Stationarity stationarity, bool allow_zero_alpha);

    double mu_;
    std::vector<KernelTerm> terms_;
    Stationarity stationarity_;
};

/// Strictly increasing event times on [0, horizon].
class EventSequence {
public:
    EventSequence(std::vector<double> times, double horizon);

    /// Horizon defaults to the last event time (0 for an empty sequence).
    [[nodiscard]] static EventSequence ending_at_last_event(std::vector<double> times);

    [[nodiscard]] std::span<const double> times() const noexcept { return times_; }
    [[nodiscard]] double horizon() const noexcept { return horizon_; }
    [[nodiscard]] std::size_t size() const noexcept { return times_.size(); }
    [[nodiscard]] bool empty() const noexcept { return times_.empty(); }

    /// N(t): number of events with t_i <= t.
    [[nodiscard]] std::size_t count_until(double t) const;

    /// Copy with every time (and the horizon) shifted by `offset`.
    [[nodiscard]] EventSequence shifted(double offset) const;

    friend bool operator==(const EventSequence&, const EventSequence&) = default;

private:
    std::vector<double> times_;
    double horizon_;
};

/// n = sum_m alpha_m / beta_m.
[[nodiscard]] double branching_ratio(const HawkesModel& model) noexcept;

/// lambda(t). Only events strictly before t contribute.
[[nodiscard]] double conditional_intensity(const HawkesModel& model, const EventSequence& events, double t);

/// Lambda(t) = integral_0^t lambda(s) ds in closed form.
[[nodiscard]] double compensator(const HawkesModel& model, const EventSequence& events, double t);

}  // namespace hawkes
