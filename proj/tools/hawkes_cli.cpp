// hawkes: command-line front end for simulation, fitting, order selection,
// mean-intensity curves and Monte-Carlo experiments.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hawkes/harness.hpp"
#include "hawkes/io.hpp"
#include "hawkes/mean_intensity.hpp"
#include "hawkes/rng.hpp"
#include "hawkes/simulate.hpp"

namespace {

using namespace hawkes;
namespace fs = std::filesystem;

void print_json(const Json& json, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << json.dump(2) << '\n';
    } else {
        write_json_file(out, json);
    }
}

struct SimulateArgs {
    std::string model;
    std::optional<double> horizon;
    std::optional<std::size_t> count;
    std::uint64_t seed{0};
    std::size_t replications{1};
    std::string out{"paths"};
};

void run_simulate(const SimulateArgs& args) {
    const HawkesModel model = read_model_file(args.model);
    fs::create_directories(args.out);
    Json seeds = Json::array();
    Json files = Json::array();
    for (std::size_t r = 0; r < args.replications; ++r) {
        const std::uint64_t seed = args.replications == 1 ? args.seed : mix_seed(args.seed, r);
        const EventSequence events =
            args.count ? simulate_count(model, *args.count, seed) : simulate_horizon(model, *args.horizon, seed);
        char name[32];
        std::snprintf(name, sizeof(name), "path_%04zu.csv", r);
        const fs::path path = fs::path(args.out) / name;
        write_events_csv(path, events);
        write_json_file(sidecar_path(path), Json{{"horizon", events.horizon()}, {"seed", seed}});
        seeds.push_back(seed);
        files.push_back(name);
    }
    Json manifest{{"model", to_json(model)},
                  {"master_seed", args.seed},
                  {"seeds", seeds},
                  {"files", files},
                  {"generator_id", std::string(kGeneratorId)}};
    if (args.count) {
        manifest["count"] = *args.count;
    } else {
        manifest["horizon"] = *args.horizon;
    }
    write_json_file(fs::path(args.out) / "manifest.json", manifest);
}

struct FitArgs {
    std::string events;
    std::optional<double> horizon;
    std::size_t order{1};
    std::size_t restarts{10};
    std::uint64_t seed{0};
    std::string out;
};

void run_fit(const FitArgs& args) {
    const EventSequence events = read_events_csv(args.events, args.horizon);
    FitOptions options;
    options.restarts = args.restarts;
    options.seed = args.seed;
    const FitResult result = fit(events, args.order, options);
    Json json = to_json(result);
    json["sample_size"] = events.size();
    json["horizon"] = events.horizon();
    print_json(json, args.out);
}

struct SelectArgs {
    std::string events;
    std::optional<double> horizon;
    std::vector<std::size_t> orders{1, 2, 3};
    std::string criterion{"bic"};
    std::size_t restarts{10};
    std::uint64_t seed{0};
    double aicc_threshold{120.0};
    bool forty_k_max{false};
    std::string out;
};

void run_select(const SelectArgs& args) {
    const EventSequence events = read_events_csv(args.events, args.horizon);
    FitOptions options;
    options.restarts = args.restarts;
    options.seed = args.seed;
    AiccAicRule rule;
    rule.fixed_threshold = args.aicc_threshold;
    if (args.forty_k_max) rule.mode = AiccAicRule::Mode::forty_k_max;
    const SelectionResult result = select_order(events, args.orders, parse_criterion(args.criterion), options, rule);
    print_json(to_json(result), args.out);
}

struct IntensityArgs {
    std::string model;
    double t_max{10.0};
    std::size_t points{101};
    std::string method{"analytic"};
    std::string out;
};

void run_intensity(const IntensityArgs& args) {
    const HawkesModel model = read_model_file(args.model);
    if (args.points < 2) throw std::invalid_argument("intensity: need at least 2 points");
    const double step = args.t_max / static_cast<double>(args.points - 1);
    std::vector<double> t(args.points), phi(args.points), count(args.points);
    for (std::size_t j = 0; j < args.points; ++j) t[j] = step * static_cast<double>(j);

    if (args.method == "volterra") {
        double beta_max = 0.0;
        for (const auto& term : model.terms()) beta_max = std::max(beta_max, term.beta);
        const auto per_node = static_cast<std::size_t>(
            std::clamp(std::ceil(1000.0 * beta_max * step), 1.0, 5e6 / static_cast<double>(args.points)));
        const UniformGrid grid = UniformGrid::spanning(args.t_max, (args.points - 1) * per_node);
        const auto values = volterra_mean_intensity(model, grid);
        const auto counts = volterra_expected_count(model, grid);
        for (std::size_t j = 0; j < args.points; ++j) {
            phi[j] = values[j * per_node];
            count[j] = counts[j * per_node];
        }
    } else if (args.method == "analytic" || args.method == "general") {
        std::optional<MeanIntensityCurve> curve;
        if (args.method == "general") {
            curve.emplace(expansion_general(model), model.mu());
        } else if (model.order() == 1) {
            curve.emplace(expansion_p1(model), model.mu());
        } else if (model.order() == 2) {
            curve.emplace(expansion_p2(model), model.mu());
        } else {
            throw std::invalid_argument("intensity: the analytic method covers orders 1 and 2; use general");
        }
        for (std::size_t j = 0; j < args.points; ++j) {
            phi[j] = (*curve)(t[j]);
            count[j] = curve->expected_count(t[j]);
        }
    } else {
        throw std::invalid_argument("intensity: unknown method " + args.method);
    }

    std::ofstream file;
    if (!args.out.empty() && args.out != "-") {
        file.open(args.out);
        if (!file) throw std::runtime_error("cannot write " + args.out);
    }
    std::ostream& os = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;
    os << "t,phi,expected_count\n";
    for (std::size_t j = 0; j < args.points; ++j) {
        os << format_double(t[j]) << ',' << format_double(phi[j]) << ',' << format_double(count[j]) << '\n';
    }
}

struct ExperimentArgs {
    std::string config;
    std::optional<std::size_t> scale;
    std::string out;
};

void run_experiment_command(const ExperimentArgs& args) {
    ExperimentConfig config = experiment_config_from_json(read_json_file(args.config));
    if (args.scale) {
        config.replications = *args.scale;
        if (config.mean_curve) config.mean_curve->paths = *args.scale;
    }
    if (!args.out.empty()) config.output_dir = args.out;
    const std::size_t workers = default_worker_count();
    std::cerr << "experiment " << config.name << ": " << config.horizons.size() << " cells x " << config.replications
              << " replications on " << workers << " worker(s)\n";
    const ExperimentReport report = run_experiment(config, workers);
    write_report(report, config.output_dir);
    for (const auto& cell : report.cells) {
        std::cerr << "  horizon " << cell.horizon << ": mean n = " << cell.average_sample_size
                  << ", fit failures = " << cell.fit_failures << (cell.valid ? "" : " (cell invalid)") << '\n';
    }
    std::cerr << "wrote " << config.output_dir.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exponential Hawkes process toolkit"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Simulate event paths");
    simulate->add_option("--model", sim.model, "Model JSON file")->required()->check(CLI::ExistingFile);
    auto* horizon_opt = simulate->add_option("--horizon", sim.horizon, "Observation horizon T");
    auto* count_opt = simulate->add_option("--count", sim.count, "Number of events per path");
    horizon_opt->excludes(count_opt);
    simulate->add_option("--seed", sim.seed, "Master seed");
    simulate->add_option("--replications", sim.replications, "Number of paths")->check(CLI::PositiveNumber);
    simulate->add_option("--out", sim.out, "Output directory");
    simulate->callback([&] {
        if (!sim.horizon && !sim.count) throw CLI::ValidationError("simulate", "give --horizon or --count");
    });

    FitArgs fit_args;
    auto* fit_cmd = app.add_subcommand("fit", "Maximum-likelihood fit of one order");
    fit_cmd->add_option("--events", fit_args.events, "Events CSV")->required()->check(CLI::ExistingFile);
    fit_cmd->add_option("--horizon", fit_args.horizon, "Horizon (default: sidecar JSON, else last event)");
    fit_cmd->add_option("--order", fit_args.order, "Number of kernel terms")->check(CLI::PositiveNumber);
    fit_cmd->add_option("--restarts", fit_args.restarts, "Optimizer starts")->check(CLI::PositiveNumber);
    fit_cmd->add_option("--seed", fit_args.seed, "Seed for random starts");
    fit_cmd->add_option("--out", fit_args.out, "Output JSON (default stdout)");

    SelectArgs sel;
    auto* select = app.add_subcommand("select", "Choose the order by an information criterion");
    select->add_option("--events", sel.events, "Events CSV")->required()->check(CLI::ExistingFile);
    select->add_option("--horizon", sel.horizon, "Horizon (default: sidecar JSON, else last event)");
    select->add_option("--orders", sel.orders, "Candidate orders")->delimiter(',');
    select->add_option("--criterion", sel.criterion, "aic | aicc | bic | hq | aicc_aic")
        ->check(CLI::IsMember({"aic", "aicc", "bic", "hq", "aicc_aic"}));
    select->add_option("--restarts", sel.restarts, "Optimizer starts per order")->check(CLI::PositiveNumber);
    select->add_option("--seed", sel.seed, "Seed for random starts");
    select->add_option("--aicc-threshold", sel.aicc_threshold, "aicc_aic switch: AICc below this sample size");
    select->add_flag("--forty-k-max", sel.forty_k_max, "aicc_aic switch at 40 k_max instead");
    select->add_option("--out", sel.out, "Output JSON (default stdout)");

    IntensityArgs ia;
    auto* intensity = app.add_subcommand("intensity", "Mean intensity and expected count on a grid");
    intensity->add_option("--model", ia.model, "Model JSON file")->required()->check(CLI::ExistingFile);
    intensity->add_option("--t-max", ia.t_max, "Grid end")->check(CLI::PositiveNumber);
    intensity->add_option("--points", ia.points, "Grid points including t = 0");
    intensity->add_option("--method", ia.method, "analytic | general | volterra")
        ->check(CLI::IsMember({"analytic", "general", "volterra"}));
    intensity->add_option("--out", ia.out, "Output CSV (default stdout)");

    ExperimentArgs ea;
    auto* experiment = app.add_subcommand("experiment", "Run a Monte-Carlo experiment from a config file");
    experiment->add_option("--config", ea.config, "Experiment config JSON")->required()->check(CLI::ExistingFile);
    experiment->add_option("--scale", ea.scale, "Override the replication count")->check(CLI::PositiveNumber);
    experiment->add_option("--out", ea.out, "Output directory (overrides the config)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*simulate) run_simulate(sim);
        if (*fit_cmd) run_fit(fit_args);
        if (*select) run_select(sel);
        if (*intensity) run_intensity(ia);
        if (*experiment) run_experiment_command(ea);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
