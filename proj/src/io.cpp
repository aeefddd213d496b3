#include "hawkes/io.hpp"

#include <cerrno>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hawkes {

Json to_json(const HawkesModel& model) {
    return Json{{"mu", model.mu()}, {"alpha", model.alphas()}, {"beta", model.betas()}};
}

HawkesModel model_from_json(const Json& json) {
    const auto alpha = json.at("alpha").get<std::vector<double>>();
    const auto beta = json.at("beta").get<std::vector<double>>();
    if (alpha.size() != beta.size()) throw std::invalid_argument("model JSON: alpha and beta lengths differ");
    std::vector<KernelTerm> terms(alpha.size());
    bool zero_alpha = false;
    for (std::size_t m = 0; m < alpha.size(); ++m) {
        terms[m] = {alpha[m], beta[m]};
        zero_alpha = zero_alpha || alpha[m] == 0.0;
    }
    const double mu = json.at("mu").get<double>();
    return zero_alpha ? HawkesModel::degenerate(mu, std::move(terms)) : HawkesModel(mu, std::move(terms));
}

Json to_json(const FitOptions& options) {
    Json warm = Json::array();
    for (const auto& m : options.warm_starts) warm.push_back(to_json(m));
    return Json{{"restarts", options.restarts},
                {"max_iterations", options.max_iterations},
                {"tolerance", options.tolerance},
                {"gradient_tolerance", options.gradient_tolerance},
                {"branching_cap", options.branching_cap},
                {"init_strategy", std::string(to_string(options.init_strategy))},
                {"seed", options.seed},
                {"warm_starts", warm}};
}

FitOptions fit_options_from_json(const Json& json) {
    FitOptions options;
    options.restarts = json.value("restarts", options.restarts);
    options.max_iterations = json.value("max_iterations", options.max_iterations);
    options.tolerance = json.value("tolerance", options.tolerance);
    options.gradient_tolerance = json.value("gradient_tolerance", options.gradient_tolerance);
    options.branching_cap = json.value("branching_cap", options.branching_cap);
    if (json.contains("init_strategy")) {
        options.init_strategy = parse_init_strategy(json.at("init_strategy").get<std::string>());
    }
    options.seed = json.value("seed", options.seed);
    if (json.contains("warm_starts")) {
        for (const auto& m : json.at("warm_starts")) options.warm_starts.push_back(model_from_json(m));
    }
    options.validate();
    return options;
}

Json to_json(const FitResult& result) {
    return Json{{"model", to_json(result.model)},
                {"log_likelihood", result.log_likelihood},
                {"branching_ratio", branching_ratio(result.model)},
                {"converged", result.converged},
                {"iterations", result.iterations},
                {"restart_index", result.restart_index},
                {"starts_tried", result.starts_tried},
                {"starts_converged", result.starts_converged}};
}

Json to_json(const SelectionResult& result) {
    Json fits = Json::array();
    for (const auto& f : result.fits) fits.push_back(to_json(f));
    return Json{{"criterion", std::string(to_string(result.criterion))},
                {"applied_criterion", std::string(to_string(result.applied))},
                {"candidate_orders", result.candidate_orders},
                {"ic_values", result.ic_values},
                {"chosen_order", result.chosen_order},
                {"fits", fits},
                {"warnings", result.warnings}};
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return Json::parse(in);
}

void write_json_file(const std::filesystem::path& path, const Json& json) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << json.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

HawkesModel read_model_file(const std::filesystem::path& path) { return model_from_json(read_json_file(path)); }

std::string format_double(double value) {
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buffer, end);
}

void write_events_csv(const std::filesystem::path& path, const EventSequence& events) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "t\n";
    for (const double t : events.times()) out << format_double(t) << '\n';
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::filesystem::path sidecar_path(const std::filesystem::path& events_path) {
    auto p = events_path;
    p.replace_extension(".json");
    return p;
}

EventSequence read_events_csv(const std::filesystem::path& path, std::optional<double> horizon) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path.string() + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "t") throw std::runtime_error(path.string() + ": expected header line \"t\"");
    std::vector<double> times;
    std::size_t line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
        if (ec != std::errc{} || ptr != line.data() + line.size()) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_number) + ": not a number");
        }
        times.push_back(value);
    }
    if (!horizon) {
        const auto sidecar = sidecar_path(path);
        if (std::filesystem::exists(sidecar)) {
            const auto meta = read_json_file(sidecar);
            if (meta.contains("horizon")) horizon = meta.at("horizon").get<double>();
        }
    }
    if (!horizon) return EventSequence::ending_at_last_event(std::move(times));
    return EventSequence(std::move(times), *horizon);
}

}  // namespace hawkes
