#include "hawkes/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hawkes {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

HawkesModel::HawkesModel(double mu, std::vector<KernelTerm> terms, Stationarity stationarity)
    : HawkesModel(mu, std::move(terms), stationarity, false) {}

HawkesModel HawkesModel::degenerate(double mu, std::vector<KernelTerm> terms, Stationarity stationarity) {
    return HawkesModel(mu, std::move(terms), stationarity, true);
}

HawkesModel::HawkesModel(double mu, std::vector<KernelTerm> terms, Stationarity stationarity,
                         bool allow_zero_alpha)
    : mu_(mu), terms_(std::move(terms)), stationarity_(stationarity) {
    if (!positive_finite(mu_)) {
        throw std::invalid_argument("HawkesModel: mu must be positive and finite");
    }
    for (const auto& term : terms_) {
        const bool alpha_ok = allow_zero_alpha ? (std::isfinite(term.alpha) && term.alpha >= 0.0)
                                               : positive_finite(term.alpha);
        if (!alpha_ok) {
            throw std::invalid_argument("HawkesModel: invalid alpha " + std::to_string(term.alpha));
        }
        if (!positive_finite(term.beta)) {
            throw std::invalid_argument("HawkesModel: beta must be positive and finite");
        }
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const KernelTerm& a, const KernelTerm& b) { return a.beta < b.beta; });
    for (std::size_t m = 1; m < terms_.size(); ++m) {
        if (terms_[m].beta == terms_[m - 1].beta) {
            throw std::invalid_argument("HawkesModel: tied beta values are not identifiable");
        }
    }
    if (stationarity_ == Stationarity::required && !(branching_ratio(*this) < 1.0)) {
        throw std::domain_error("HawkesModel: branching ratio must be < 1 for a stationary model");
    }
}

HawkesModel HawkesModel::from_parameters(std::span<const double> theta, Stationarity stationarity) {
    if (theta.empty() || theta.size() % 2 == 0) {
        throw std::invalid_argument("HawkesModel: parameter vector must have length 1 + 2P");
    }
    const std::size_t order = (theta.size() - 1) / 2;
    std::vector<KernelTerm> terms(order);
    for (std::size_t m = 0; m < order; ++m) {
        terms[m] = {theta[1 + m], theta[1 + order + m]};
    }
    return HawkesModel(theta[0], std::move(terms), stationarity);
}

bool HawkesModel::is_degenerate() const noexcept {
    return std::any_of(terms_.begin(), terms_.end(), [](const KernelTerm& t) { return t.alpha == 0.0; });
}

std::vector<double> HawkesModel::alphas() const {
    std::vector<double> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(t.alpha);
    return out;
}

std::vector<double> HawkesModel::betas() const {
    std::vector<double> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(t.beta);
    return out;
}

std::vector<double> HawkesModel::parameters() const {
    std::vector<double> theta;
    theta.reserve(parameter_count());
    theta.push_back(mu_);
    for (const auto& t : terms_) theta.push_back(t.alpha);
    for (const auto& t : terms_) theta.push_back(t.beta);
    return theta;
}

EventSequence::EventSequence(std::vector<double> times, double horizon)
    : times_(std::move(times)), horizon_(horizon) {
    if (!std::isfinite(horizon_) || horizon_ < 0.0) {
        throw std::invalid_argument("EventSequence: horizon must be finite and non-negative");
    }
    for (std::size_t i = 0; i < times_.size(); ++i) {
        const double t = times_[i];
        if (!std::isfinite(t) || t < 0.0) {
            throw std::invalid_argument("EventSequence: event times must be finite and non-negative");
        }
        if (i > 0 && !(t > times_[i - 1])) {
            throw std::invalid_argument("EventSequence: event times must be strictly increasing");
        }
    }
    if (!times_.empty() && times_.back() > horizon_) {
        throw std::invalid_argument("EventSequence: last event lies beyond the horizon");
    }
}

EventSequence EventSequence::ending_at_last_event(std::vector<double> times) {
    const double horizon = times.empty() ? 0.0 : times.back();
    return EventSequence(std::move(times), horizon);
}

std::size_t EventSequence::count_until(double t) const {
    return static_cast<std::size_t>(std::upper_bound(times_.begin(), times_.end(), t) - times_.begin());
}

EventSequence EventSequence::shifted(double offset) const {
    std::vector<double> moved(times_);
    for (auto& t : moved) t += offset;
    return EventSequence(std::move(moved), horizon_ + offset);
}

double branching_ratio(const HawkesModel& model) noexcept {
    double n = 0.0;
    for (const auto& t : model.terms()) n += t.alpha / t.beta;
    return n;
}

double conditional_intensity(const HawkesModel& model, const EventSequence& events, double t) {
    const auto times = events.times();
    const auto end = std::lower_bound(times.begin(), times.end(), t);
    double excitation = 0.0;
    for (const auto& term : model.terms()) {
        double sum = 0.0;
        for (auto it = times.begin(); it != end; ++it) sum += std::exp(-term.beta * (t - *it));
        excitation += term.alpha * sum;
    }
    return model.mu() + excitation;
}

double compensator(const HawkesModel& model, const EventSequence& events, double t) {
    if (t <= 0.0) return 0.0;
    const auto times = events.times();
    const auto end = std::lower_bound(times.begin(), times.end(), t);
    double value = model.mu() * t;
    for (const auto& term : model.terms()) {
        double sum = 0.0;
        for (auto it = times.begin(); it != end; ++it) sum += -std::expm1(-term.beta * (t - *it));
        value += term.alpha / term.beta * sum;
    }
    return value;
}

}  // namespace hawkes
