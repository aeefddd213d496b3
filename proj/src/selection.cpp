#include "hawkes/selection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hawkes/errors.hpp"

namespace hawkes {

double aic(const ICInput& input) noexcept {
    return -2.0 * input.log_likelihood + 2.0 * static_cast<double>(input.k);
}

double aicc(const ICInput& input) {
    if (input.n <= input.k + 1) throw std::domain_error("aicc: requires n > k + 1");
    const auto k = static_cast<double>(input.k);
    const auto n = static_cast<double>(input.n);
    return -2.0 * input.log_likelihood + 2.0 * k * n / (n - k - 1.0);
}

double bic(const ICInput& input) {
    if (input.n == 0) throw std::domain_error("bic: requires n >= 1");
    return -2.0 * input.log_likelihood + static_cast<double>(input.k) * std::log(static_cast<double>(input.n));
}

double hq(const ICInput& input) {
    if (input.n <= 2) throw std::domain_error("hq: requires n >= 3");
    return -2.0 * input.log_likelihood +
           2.0 * static_cast<double>(input.k) * std::log(std::log(static_cast<double>(input.n)));
}

std::string_view to_string(Criterion criterion) noexcept {
    switch (criterion) {
        case Criterion::aic: return "aic";
        case Criterion::aicc: return "aicc";
        case Criterion::bic: return "bic";
        case Criterion::hq: return "hq";
        case Criterion::aicc_aic: return "aicc_aic";
    }
    return "unknown";
}

Criterion parse_criterion(std::string_view name) {
    for (auto c : {Criterion::aic, Criterion::aicc, Criterion::bic, Criterion::hq, Criterion::aicc_aic}) {
        if (name == to_string(c)) return c;
    }
    throw std::invalid_argument("unknown criterion: " + std::string(name));
}

double AiccAicRule::threshold(std::size_t k_max) const noexcept {
    return mode == Mode::fixed ? fixed_threshold : 40.0 * static_cast<double>(k_max);
}

namespace {

Criterion resolve(Criterion criterion, std::size_t n, std::size_t k_max, const AiccAicRule& rule) {
    if (criterion != Criterion::aicc_aic) return criterion;
    return static_cast<double>(n) < rule.threshold(k_max) ? Criterion::aicc : Criterion::aic;
}

double evaluate(Criterion resolved, const ICInput& input) {
    switch (resolved) {
        case Criterion::aic: return aic(input);
        case Criterion::aicc: return aicc(input);
        case Criterion::bic: return bic(input);
        case Criterion::hq: return hq(input);
        case Criterion::aicc_aic: break;
    }
    throw std::logic_error("unresolved criterion");
}

}  // namespace

double information_criterion(Criterion criterion, const ICInput& input, std::size_t k_max,
                             const AiccAicRule& rule) {
    return evaluate(resolve(criterion, input.n, k_max, rule), input);
}

std::size_t argmin_order(std::span<const std::size_t> orders, std::span<const double> values) {
    if (orders.empty() || orders.size() != values.size()) {
        throw std::invalid_argument("argmin_order: need matching non-empty inputs");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < orders.size(); ++i) {
        if (values[i] < values[best] || (values[i] == values[best] && orders[i] < orders[best])) best = i;
    }
    return best;
}

std::vector<CandidateFit> fit_candidates(const EventSequence& events, std::span<const std::size_t> orders,
                                         const FitOptions& options) {
    if (orders.empty()) throw std::invalid_argument("fit_candidates: no candidate orders");
    std::vector<std::size_t> sorted(orders.begin(), orders.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<CandidateFit> out;
    std::optional<HawkesModel> previous;
    std::size_t previous_order = 0;
    for (const std::size_t order : sorted) {
        CandidateFit candidate;
        candidate.order = order;
        FitOptions local = options;
        if (previous && previous_order + 1 == order) local.warm_starts.push_back(*previous);
        try {
            candidate.fit = fit(events, order, local);
        } catch (const InsufficientDataError& e) {
            candidate.warning = "order " + std::to_string(order) + " excluded: " + e.what();
        }
        out.push_back(std::move(candidate));
        if (out.back().fit) {
            previous = out.back().fit->model;
            previous_order = order;
        }
    }
    return out;
}

SelectionResult choose_order(Criterion criterion, std::span<const CandidateFit> candidates,
                             std::size_t sample_size, const AiccAicRule& rule) {
    SelectionResult result;
    result.criterion = criterion;
    std::size_t k_max = 0;
    for (const auto& c : candidates) {
        if (c.fit) k_max = std::max(k_max, 1 + 2 * c.order);
    }
    result.applied = resolve(criterion, sample_size, k_max, rule);
    for (const auto& c : candidates) {
        if (!c.fit) {
            result.warnings.push_back(c.warning);
            continue;
        }
        const ICInput input{c.fit->log_likelihood, 1 + 2 * c.order, sample_size};
        try {
            result.ic_values.push_back(evaluate(result.applied, input));
        } catch (const std::domain_error& e) {
            result.warnings.push_back("order " + std::to_string(c.order) + " excluded: " + e.what());
            continue;
        }
        result.candidate_orders.push_back(c.order);
        result.fits.push_back(*c.fit);
    }
    if (result.candidate_orders.empty()) {
        throw std::runtime_error("select_order: no candidate order could be scored");
    }
    result.chosen_order = result.candidate_orders[argmin_order(result.candidate_orders, result.ic_values)];
    return result;
}

SelectionResult select_order(const EventSequence& events, std::span<const std::size_t> orders, Criterion criterion,
                             const FitOptions& options, const AiccAicRule& rule) {
    const auto candidates = fit_candidates(events, orders, options);
    return choose_order(criterion, candidates, events.size(), rule);
}

}  // namespace hawkes
