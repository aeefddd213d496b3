#include "hawkes/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "hawkes/mean_intensity.hpp"
#include "hawkes/rng.hpp"
#include "hawkes/simulate.hpp"

namespace hawkes {

namespace {

constexpr double kInvalidFailureShare = 0.2;
constexpr std::uint64_t kCurveStream = 0xC0FFEE;

// Runs task(i) for i in [0, count) on `workers` threads pulling indices from
// a shared counter. The first exception is rethrown after all threads join.
template <typename Task>
void parallel_for(std::size_t count, std::size_t workers, Task&& task) {
    workers = std::max<std::size_t>(1, std::min(workers, count));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto loop = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        loop();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(loop);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
}

std::vector<std::string> parameter_names(std::size_t order) {
    std::vector<std::string> names{"mu"};
    for (std::size_t m = 1; m <= order; ++m) names.push_back("alpha_" + std::to_string(m));
    for (std::size_t m = 1; m <= order; ++m) names.push_back("beta_" + std::to_string(m));
    return names;
}

std::string timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

std::string one_decimal(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.1f", value);
    return buffer;
}

ReplicationRecord run_replication(const ExperimentConfig& config, std::size_t cell, std::size_t index) {
    ReplicationRecord record;
    record.index = index;
    record.seed = replication_seed(config.master_seed, cell, index);
    record.chosen_orders.assign(config.criteria.size(), std::nullopt);
    const double horizon = config.horizons[cell];

    const EventSequence events =
        config.mode == HorizonMode::time
            ? simulate_horizon(config.true_model, horizon, record.seed)
            : simulate_count(config.true_model, static_cast<std::size_t>(horizon), record.seed);
    record.sample_size = events.size();
    record.horizon = events.horizon();

    FitOptions options = config.fit_options;
    options.seed = mix_seed(record.seed, 1);
    const std::size_t true_order = config.true_model.order();

    std::vector<std::size_t> orders;
    if (!config.criteria.empty()) orders = config.candidate_orders;
    if (std::find(orders.begin(), orders.end(), true_order) == orders.end()) orders.push_back(true_order);

    try {
        const auto candidates = fit_candidates(events, orders, options);
        for (const auto& c : candidates) {
            if (c.order == true_order) {
                if (c.fit) {
                    record.estimate = c.fit->model.parameters();
                    record.log_likelihood = c.fit->log_likelihood;
                    record.converged = c.fit->converged;
                } else {
                    record.error = c.warning;
                }
            }
        }
        std::vector<CandidateFit> scored;
        for (const auto& c : candidates) {
            if (std::find(config.candidate_orders.begin(), config.candidate_orders.end(), c.order) !=
                config.candidate_orders.end()) {
                scored.push_back(c);
            }
        }
        for (std::size_t i = 0; i < config.criteria.size(); ++i) {
            try {
                record.chosen_orders[i] = choose_order(config.criteria[i], scored, events.size(), config.aicc_rule).chosen_order;
            } catch (const std::exception&) {
                // recorded as a failed selection
            }
        }
    } catch (const std::exception& e) {
        record.error = e.what();
    }
    return record;
}

CellReport aggregate(const ExperimentConfig& config, std::size_t cell, std::vector<ReplicationRecord> records) {
    CellReport report;
    report.horizon = config.horizons[cell];
    report.replications = records.size();
    report.parameter_names = parameter_names(config.true_model.order());
    report.true_values = config.true_model.parameters();

    double sum = 0.0;
    double sum_sq = 0.0;
    for (const auto& r : records) {
        const auto n = static_cast<double>(r.sample_size);
        sum += n;
        sum_sq += n * n;
    }
    const auto count = static_cast<double>(records.size());
    report.average_sample_size = sum / count;
    if (records.size() > 1) {
        const double variance = std::max(0.0, (sum_sq - sum * sum / count) / (count - 1.0));
        report.sample_size_standard_error = std::sqrt(variance / count);
    }

    std::vector<std::vector<double>> columns(report.true_values.size());
    for (const auto& r : records) {
        if (!r.estimate || !r.converged) {
            ++report.fit_failures;
            continue;
        }
        for (std::size_t j = 0; j < columns.size(); ++j) columns[j].push_back((*r.estimate)[j]);
    }
    report.rmse_samples = columns.empty() ? 0 : columns.front().size();
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].empty()) {
            report.rmse_absolute.push_back(std::nan(""));
            report.rmse_relative.push_back(std::nan(""));
        } else {
            report.rmse_absolute.push_back(rmse(report.true_values[j], columns[j]));
            report.rmse_relative.push_back(relative_rmse(report.true_values[j], columns[j]));
        }
    }

    std::vector<std::size_t> orders(config.candidate_orders);
    std::sort(orders.begin(), orders.end());
    for (std::size_t i = 0; i < config.criteria.size(); ++i) {
        SelectionTable table;
        table.criterion = config.criteria[i];
        table.orders = orders;
        table.counts.assign(orders.size(), 0);
        for (const auto& r : records) {
            if (!r.chosen_orders[i]) continue;
            const auto it = std::find(orders.begin(), orders.end(), *r.chosen_orders[i]);
            ++table.counts[static_cast<std::size_t>(it - orders.begin())];
            ++table.selected;
        }
        for (const auto c : table.counts) {
            table.percent.push_back(table.selected == 0 ? 0.0 : 100.0 * static_cast<double>(c) / table.selected);
        }
        report.selection.push_back(std::move(table));
    }
    report.valid = static_cast<double>(report.fit_failures) <= kInvalidFailureShare * count;
    report.records = std::move(records);
    return report;
}

Json to_json(const ReplicationRecord& r) {
    Json chosen = Json::array();
    for (const auto& c : r.chosen_orders) chosen.push_back(c ? Json(*c) : Json(nullptr));
    return Json{{"index", r.index},
                {"seed", r.seed},
                {"sample_size", r.sample_size},
                {"horizon", r.horizon},
                {"estimate", r.estimate ? Json(*r.estimate) : Json(nullptr)},
                {"log_likelihood", r.log_likelihood},
                {"converged", r.converged},
                {"chosen_orders", chosen},
                {"error", r.error}};
}

ReplicationRecord record_from_json(const Json& j) {
    ReplicationRecord r;
    r.index = j.at("index").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.sample_size = j.at("sample_size").get<std::size_t>();
    r.horizon = j.at("horizon").get<double>();
    if (!j.at("estimate").is_null()) r.estimate = j.at("estimate").get<std::vector<double>>();
    r.log_likelihood = j.at("log_likelihood").get<double>();
    r.converged = j.at("converged").get<bool>();
    for (const auto& c : j.at("chosen_orders")) {
        r.chosen_orders.push_back(c.is_null() ? std::nullopt : std::optional<std::size_t>(c.get<std::size_t>()));
    }
    r.error = j.at("error").get<std::string>();
    return r;
}

// NaN is not representable in JSON; store it as null.
Json numbers_to_json(const std::vector<double>& values) {
    Json out = Json::array();
    for (const double v : values) out.push_back(std::isfinite(v) ? Json(v) : Json(nullptr));
    return out;
}

std::vector<double> numbers_from_json(const Json& j) {
    std::vector<double> out;
    for (const auto& v : j) out.push_back(v.is_null() ? std::nan("") : v.get<double>());
    return out;
}

Json to_json(const CountCurve& c) {
    return Json{{"grid", c.grid}, {"mean", c.mean}, {"standard_error", c.standard_error}};
}

CountCurve curve_from_json(const Json& j) {
    return {j.at("grid").get<std::vector<double>>(), j.at("mean").get<std::vector<double>>(),
            j.at("standard_error").get<std::vector<double>>()};
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string csv_number(double value) { return std::isfinite(value) ? format_double(value) : std::string("nan"); }

}  // namespace

void ExperimentConfig::validate() const {
    if (true_model.order() == 0) throw std::invalid_argument("experiment: true model needs at least one term");
    if (!(branching_ratio(true_model) < 1.0)) throw std::invalid_argument("experiment: true model must be stationary");
    if (horizons.empty()) throw std::invalid_argument("experiment: horizons must be non-empty");
    for (const double h : horizons) {
        if (!(h > 0.0)) throw std::invalid_argument("experiment: horizons must be positive");
        if (mode == HorizonMode::count && h != std::floor(h)) {
            throw std::invalid_argument("experiment: target counts must be integers");
        }
    }
    if (replications < 1) throw std::invalid_argument("experiment: replications must be >= 1");
    if (!criteria.empty() && candidate_orders.empty()) {
        throw std::invalid_argument("experiment: criteria need candidate orders");
    }
    for (const auto p : candidate_orders) {
        if (p == 0) throw std::invalid_argument("experiment: candidate orders must be >= 1");
    }
    fit_options.validate();
    if (mean_curve && (mean_curve->paths == 0 || mean_curve->target_count == 0 || mean_curve->grid_points == 0)) {
        throw std::invalid_argument("experiment: mean_curve settings must be positive");
    }
}

ExperimentConfig experiment_config_from_json(const Json& json) {
    ExperimentConfig c;
    c.name = json.value("name", c.name);
    c.true_model = model_from_json(json.at("true_model"));
    if (json.contains("horizons") && json.contains("target_counts")) {
        throw std::invalid_argument("experiment: give either horizons or target_counts, not both");
    }
    if (json.contains("target_counts")) {
        c.mode = HorizonMode::count;
        c.horizons = json.at("target_counts").get<std::vector<double>>();
    } else {
        c.horizons = json.at("horizons").get<std::vector<double>>();
    }
    c.replications = json.value("replications", c.replications);
    if (json.contains("candidate_orders")) c.candidate_orders = json.at("candidate_orders").get<std::vector<std::size_t>>();
    if (json.contains("criteria")) {
        for (const auto& name : json.at("criteria")) c.criteria.push_back(parse_criterion(name.get<std::string>()));
    }
    if (json.contains("fit_options")) c.fit_options = fit_options_from_json(json.at("fit_options"));
    if (json.contains("aicc_rule")) {
        const auto& rule = json.at("aicc_rule");
        const auto mode = rule.value("mode", std::string("fixed"));
        if (mode == "fixed") {
            c.aicc_rule.mode = AiccAicRule::Mode::fixed;
        } else if (mode == "forty_k_max") {
            c.aicc_rule.mode = AiccAicRule::Mode::forty_k_max;
        } else {
            throw std::invalid_argument("experiment: unknown aicc_rule mode " + mode);
        }
        c.aicc_rule.fixed_threshold = rule.value("threshold", c.aicc_rule.fixed_threshold);
    }
    c.master_seed = json.value("master_seed", c.master_seed);
    c.output_dir = json.value("output_dir", c.output_dir.string());
    if (json.contains("mean_curve")) {
        const auto& mc = json.at("mean_curve");
        MeanCurveConfig curve;
        curve.paths = mc.value("paths", curve.paths);
        curve.target_count = mc.value("target_count", curve.target_count);
        curve.grid_points = mc.value("grid_points", curve.grid_points);
        c.mean_curve = curve;
    }
    c.validate();
    return c;
}

Json to_json(const ExperimentConfig& c) {
    Json criteria = Json::array();
    for (const auto crit : c.criteria) criteria.push_back(std::string(to_string(crit)));
    Json j{{"name", c.name},
           {"true_model", to_json(c.true_model)},
           {c.mode == HorizonMode::time ? "horizons" : "target_counts", c.horizons},
           {"replications", c.replications},
           {"candidate_orders", c.candidate_orders},
           {"criteria", criteria},
           {"fit_options", to_json(c.fit_options)},
           {"aicc_rule",
            {{"mode", c.aicc_rule.mode == AiccAicRule::Mode::fixed ? "fixed" : "forty_k_max"},
             {"threshold", c.aicc_rule.fixed_threshold}}},
           {"master_seed", c.master_seed},
           {"output_dir", c.output_dir.string()}};
    if (c.mean_curve) {
        j["mean_curve"] = {{"paths", c.mean_curve->paths},
                           {"target_count", c.mean_curve->target_count},
                           {"grid_points", c.mean_curve->grid_points}};
    }
    return j;
}

std::string config_hash(const ExperimentConfig& config) {
    const std::string text = to_json(config).dump();
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const unsigned char ch : text) {
        hash ^= ch;
        hash *= 0x100000001b3ULL;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

std::uint64_t replication_seed(std::uint64_t master, std::size_t cell, std::size_t replication) noexcept {
    return mix_seed(mix_seed(master, cell), replication);
}

std::size_t default_worker_count() {
    if (const char* env = std::getenv("HAWKES_WORKERS")) {
        const long value = std::strtol(env, nullptr, 10);
        if (value > 0) return static_cast<std::size_t>(value);
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

ExperimentReport run_experiment(const ExperimentConfig& config, std::size_t workers) {
    config.validate();
    if (workers == 0) workers = default_worker_count();

    const std::size_t cells = config.horizons.size();
    const std::size_t per_cell = config.replications;
    std::vector<ReplicationRecord> records(cells * per_cell);
    parallel_for(records.size(), workers, [&](std::size_t task) {
        records[task] = run_replication(config, task / per_cell, task % per_cell);
    });

    ExperimentReport report;
    report.config = to_json(config);
    report.config_hash = config_hash(config);
    report.master_seed = config.master_seed;
    report.generator_id = std::string(kGeneratorId);
    report.generated_at = timestamp_utc();
    for (std::size_t cell = 0; cell < cells; ++cell) {
        std::vector<ReplicationRecord> slice(std::make_move_iterator(records.begin() + cell * per_cell),
                                             std::make_move_iterator(records.begin() + (cell + 1) * per_cell));
        report.cells.push_back(aggregate(config, cell, std::move(slice)));
    }
    if (config.mean_curve) {
        report.mean_curve = mean_count_curve(config.true_model, *config.mean_curve, config.master_seed, workers);
    }
    return report;
}

CountCurve empirical_average_count(std::span<const EventSequence> paths, std::span<const double> grid) {
    if (paths.empty()) throw std::invalid_argument("empirical_average_count: no paths");
    CountCurve curve;
    curve.grid.assign(grid.begin(), grid.end());
    const auto count = static_cast<double>(paths.size());
    for (const double t : grid) {
        double sum = 0.0;
        double sum_sq = 0.0;
        for (const auto& path : paths) {
            const auto n = static_cast<double>(path.count_until(t));
            sum += n;
            sum_sq += n * n;
        }
        const double mean = sum / count;
        double se = 0.0;
        if (paths.size() > 1) {
            const double variance = std::max(0.0, (sum_sq - sum * sum / count) / (count - 1.0));
            se = std::sqrt(variance / count);
        }
        curve.mean.push_back(mean);
        curve.standard_error.push_back(se);
    }
    return curve;
}

MeanCurveReport mean_count_curve(const HawkesModel& model, const MeanCurveConfig& config, std::uint64_t master_seed,
                                 std::size_t workers) {
    if (workers == 0) workers = default_worker_count();
    std::vector<std::optional<EventSequence>> simulated(config.paths);
    parallel_for(config.paths, workers, [&](std::size_t i) {
        simulated[i] = simulate_count(model, config.target_count, mix_seed(mix_seed(master_seed, kCurveStream), i));
    });
    std::vector<EventSequence> paths;
    paths.reserve(simulated.size());
    double common = std::numeric_limits<double>::infinity();
    for (auto& p : simulated) {
        common = std::min(common, p->horizon());
        paths.push_back(std::move(*p));
    }
    std::vector<double> grid(config.grid_points);
    for (std::size_t j = 0; j < grid.size(); ++j) {
        grid[j] = common * static_cast<double>(j + 1) / static_cast<double>(config.grid_points);
    }

    MeanCurveReport report;
    report.paths = config.paths;
    report.target_count = config.target_count;
    report.empirical = empirical_average_count(paths, grid);
    const double level = stationary_mean_intensity(model);
    for (const double t : grid) {
        report.theoretical_nonstationary.push_back(expected_count(model, t));
        report.theoretical_stationary.push_back(level * t);
    }
    return report;
}

Json to_json(const ExperimentReport& report) {
    Json cells = Json::array();
    for (const auto& cell : report.cells) {
        Json selection = Json::array();
        for (const auto& table : cell.selection) {
            selection.push_back({{"criterion", std::string(to_string(table.criterion))},
                                 {"orders", table.orders},
                                 {"counts", table.counts},
                                 {"percent", table.percent},
                                 {"selected", table.selected}});
        }
        Json records = Json::array();
        for (const auto& r : cell.records) records.push_back(to_json(r));
        cells.push_back({{"horizon", cell.horizon},
                         {"replications", cell.replications},
                         {"average_sample_size", cell.average_sample_size},
                         {"sample_size_standard_error", cell.sample_size_standard_error},
                         {"parameter_names", cell.parameter_names},
                         {"true_values", cell.true_values},
                         {"rmse_absolute", numbers_to_json(cell.rmse_absolute)},
                         {"rmse_relative", numbers_to_json(cell.rmse_relative)},
                         {"fit_failures", cell.fit_failures},
                         {"rmse_samples", cell.rmse_samples},
                         {"selection", selection},
                         {"valid", cell.valid},
                         {"records", records}});
    }
    Json j{{"provenance",
            {{"config_hash", report.config_hash},
             {"master_seed", report.master_seed},
             {"generator_id", report.generator_id},
             {"generated_at", report.generated_at}}},
           {"config", report.config},
           {"cells", cells}};
    if (report.mean_curve) {
        const auto& mc = *report.mean_curve;
        j["mean_curve"] = {{"paths", mc.paths},
                           {"target_count", mc.target_count},
                           {"empirical", to_json(mc.empirical)},
                           {"theoretical_nonstationary", mc.theoretical_nonstationary},
                           {"theoretical_stationary", mc.theoretical_stationary}};
    }
    return j;
}

ExperimentReport experiment_report_from_json(const Json& j) {
    ExperimentReport report;
    const auto& prov = j.at("provenance");
    report.config_hash = prov.at("config_hash").get<std::string>();
    report.master_seed = prov.at("master_seed").get<std::uint64_t>();
    report.generator_id = prov.at("generator_id").get<std::string>();
    report.generated_at = prov.at("generated_at").get<std::string>();
    report.config = j.at("config");
    for (const auto& c : j.at("cells")) {
        CellReport cell;
        cell.horizon = c.at("horizon").get<double>();
        cell.replications = c.at("replications").get<std::size_t>();
        cell.average_sample_size = c.at("average_sample_size").get<double>();
        cell.sample_size_standard_error = c.at("sample_size_standard_error").get<double>();
        cell.parameter_names = c.at("parameter_names").get<std::vector<std::string>>();
        cell.true_values = c.at("true_values").get<std::vector<double>>();
        cell.rmse_absolute = numbers_from_json(c.at("rmse_absolute"));
        cell.rmse_relative = numbers_from_json(c.at("rmse_relative"));
        cell.fit_failures = c.at("fit_failures").get<std::size_t>();
        cell.rmse_samples = c.at("rmse_samples").get<std::size_t>();
        for (const auto& t : c.at("selection")) {
            SelectionTable table;
            table.criterion = parse_criterion(t.at("criterion").get<std::string>());
            table.orders = t.at("orders").get<std::vector<std::size_t>>();
            table.counts = t.at("counts").get<std::vector<std::size_t>>();
            table.percent = t.at("percent").get<std::vector<double>>();
            table.selected = t.at("selected").get<std::size_t>();
            cell.selection.push_back(std::move(table));
        }
        cell.valid = c.at("valid").get<bool>();
        for (const auto& r : c.at("records")) cell.records.push_back(record_from_json(r));
        report.cells.push_back(std::move(cell));
    }
    if (j.contains("mean_curve")) {
        const auto& mc = j.at("mean_curve");
        MeanCurveReport curve;
        curve.paths = mc.at("paths").get<std::size_t>();
        curve.target_count = mc.at("target_count").get<std::size_t>();
        curve.empirical = curve_from_json(mc.at("empirical"));
        curve.theoretical_nonstationary = mc.at("theoretical_nonstationary").get<std::vector<double>>();
        curve.theoretical_stationary = mc.at("theoretical_stationary").get<std::vector<double>>();
        report.mean_curve = std::move(curve);
    }
    return report;
}

void write_report(const ExperimentReport& report, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

    std::vector<std::string> files{"report.json"};
    write_json_file(dir / "report.json", to_json(report));

    if (!report.cells.empty()) {
        const auto& names = report.cells.front().parameter_names;
        for (const bool relative : {false, true}) {
            std::string text = "horizon";
            for (const auto& name : names) text += "," + name;
            text += ",average_sample_size,rmse_samples,fit_failures\n";
            for (const auto& cell : report.cells) {
                text += csv_number(cell.horizon);
                const auto& values = relative ? cell.rmse_relative : cell.rmse_absolute;
                for (const double v : values) text += "," + csv_number(relative ? 100.0 * v : v);
                text += "," + one_decimal(cell.average_sample_size) + "," + std::to_string(cell.rmse_samples) + "," +
                        std::to_string(cell.fit_failures) + "\n";
            }
            const std::string file = relative ? "rmse_rel.csv" : "rmse_abs.csv";
            write_text(dir / file, text);
            files.push_back(file);
        }

        const std::size_t criteria = report.cells.front().selection.size();
        for (std::size_t i = 0; i < criteria; ++i) {
            const auto& first = report.cells.front().selection[i];
            std::string text = "horizon";
            for (const auto p : first.orders) text += ",P=" + std::to_string(p);
            for (const auto p : first.orders) text += ",count_P=" + std::to_string(p);
            text += ",selected,average_sample_size\n";
            for (const auto& cell : report.cells) {
                const auto& table = cell.selection[i];
                text += csv_number(cell.horizon);
                for (const double pct : table.percent) text += "," + one_decimal(pct);
                for (const auto c : table.counts) text += "," + std::to_string(c);
                text += "," + std::to_string(table.selected) + "," + one_decimal(cell.average_sample_size) + "\n";
            }
            const std::string file = "selection_" + std::string(to_string(first.criterion)) + ".csv";
            write_text(dir / file, text);
            files.push_back(file);
        }
    }

    if (report.mean_curve) {
        const auto& mc = *report.mean_curve;
        std::string text = "t,empirical,theoretical_nonstationary,theoretical_stationary\n";
        for (std::size_t j = 0; j < mc.empirical.grid.size(); ++j) {
            text += csv_number(mc.empirical.grid[j]) + "," + csv_number(mc.empirical.mean[j]) + "," +
                    csv_number(mc.theoretical_nonstationary[j]) + "," + csv_number(mc.theoretical_stationary[j]) + "\n";
        }
        write_text(dir / "figure1.csv", text);
        files.push_back("figure1.csv");
    }

    files.push_back("manifest.json");
    write_json_file(dir / "manifest.json", Json{{"config_hash", report.config_hash},
                                                {"master_seed", report.master_seed},
                                                {"generator_id", report.generator_id},
                                                {"generated_at", report.generated_at},
                                                {"files", files}});
}

}  // namespace hawkes
