#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hawkes/core.hpp"
#include "hawkes/inference.hpp"
#include "hawkes/io.hpp"
#include "hawkes/selection.hpp"

namespace hawkes {

enum class HorizonMode {
    time,   // simulate on (0, T]
    count,  // simulate a fixed number of events
};

/// Average-count curve against its theoretical value (the edge-effect plot).
struct MeanCurveConfig {
    std::size_t paths{200};
    std::size_t target_count{1000};
    std::size_t grid_points{50};

    friend bool operator==(const MeanCurveConfig&, const MeanCurveConfig&) = default;
};

struct ExperimentConfig {
    std::string name{"experiment"};
    HawkesModel true_model{1.0, {}};
    HorizonMode mode{HorizonMode::time};
    /// Horizons T (time mode) or target event counts (count mode).
    std::vector<double> horizons;
    std::size_t replications{1};
    std::vector<std::size_t> candidate_orders{1, 2, 3};
    std::vector<Criterion> criteria;
    FitOptions fit_options{};
    AiccAicRule aicc_rule{};
    std::uint64_t master_seed{0};
    std::filesystem::path output_dir{"out"};
    std::optional<MeanCurveConfig> mean_curve;

    /// Throws std::invalid_argument for an unusable configuration.
    void validate() const;
};

[[nodiscard]] ExperimentConfig experiment_config_from_json(const Json& json);
/// Every field, defaults included.
[[nodiscard]] Json to_json(const ExperimentConfig& config);

/// FNV-1a 64 of the compact JSON dump, as 16 hex digits.
[[nodiscard]] std::string config_hash(const ExperimentConfig& config);

/// Seed of replication `replication` in horizon cell `cell`:
/// mix_seed(mix_seed(master, cell), replication).
[[nodiscard]] std::uint64_t replication_seed(std::uint64_t master, std::size_t cell, std::size_t replication) noexcept;

struct ReplicationRecord {
    std::size_t index{0};
    std::uint64_t seed{0};
    std::size_t sample_size{0};
    double horizon{0.0};
    /// theta of the true-order fit (absent when the fit threw).
    std::optional<std::vector<double>> estimate;
    double log_likelihood{0.0};
    bool converged{false};
    /// Chosen order per configured criterion (absent when selection failed).
    std::vector<std::optional<std::size_t>> chosen_orders;
    std::string error;

    friend bool operator==(const ReplicationRecord&, const ReplicationRecord&) = default;
};

struct SelectionTable {
    Criterion criterion{Criterion::aic};
    std::vector<std::size_t> orders;
    std::vector<std::size_t> counts;
    std::vector<double> percent;
    std::size_t selected{0};  // replications with a successful selection

    friend bool operator==(const SelectionTable&, const SelectionTable&) = default;
};

struct CellReport {
    double horizon{0.0};
    std::size_t replications{0};
    double average_sample_size{0.0};
    double sample_size_standard_error{0.0};
    std::vector<std::string> parameter_names;
    std::vector<double> true_values;
    std::vector<double> rmse_absolute;
    std::vector<double> rmse_relative;
    /// Replications excluded from RMSE (non-converged or failed fits).
    std::size_t fit_failures{0};
    std::size_t rmse_samples{0};
    std::vector<SelectionTable> selection;
    bool valid{true};
    std::vector<ReplicationRecord> records;

    friend bool operator==(const CellReport&, const CellReport&) = default;
};

struct CountCurve {
    std::vector<double> grid;
    std::vector<double> mean;
    std::vector<double> standard_error;

    friend bool operator==(const CountCurve&, const CountCurve&) = default;
};

struct MeanCurveReport {
    std::size_t paths{0};
    std::size_t target_count{0};
    CountCurve empirical;
    std::vector<double> theoretical_nonstationary;
    std::vector<double> theoretical_stationary;

    friend bool operator==(const MeanCurveReport&, const MeanCurveReport&) = default;
};

struct ExperimentReport {
    Json config;
    std::string config_hash;
    std::uint64_t master_seed{0};
    std::string generator_id;
    /// Wall-clock timestamp; the only field that differs between reruns.
    std::string generated_at;
    std::vector<CellReport> cells;
    std::optional<MeanCurveReport> mean_curve;

    friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

/// Worker count from HAWKES_WORKERS, else hardware concurrency (at least 1).
[[nodiscard]] std::size_t default_worker_count();

/// Simulates, fits and selects every (horizon, replication) pair. Output is a
/// function of the configuration only; `workers` changes wall time, not results.
[[nodiscard]] ExperimentReport run_experiment(const ExperimentConfig& config, std::size_t workers = 0);

/// Mean and standard error of N(t) across paths at each grid node.
[[nodiscard]] CountCurve empirical_average_count(std::span<const EventSequence> paths, std::span<const double> grid);

/// Simulates the mean-count curve: `paths` count-targeted runs, a grid of
/// `grid_points` nodes up to the shortest path, and both theoretical curves.
[[nodiscard]] MeanCurveReport mean_count_curve(const HawkesModel& model, const MeanCurveConfig& config,
                                               std::uint64_t master_seed, std::size_t workers = 0);

[[nodiscard]] Json to_json(const ExperimentReport& report);
[[nodiscard]] ExperimentReport experiment_report_from_json(const Json& json);

/// Writes report.json, rmse_abs.csv, rmse_rel.csv, selection_<criterion>.csv
/// (one per criterion), figure1.csv (when a curve is present) and
/// manifest.json into `dir`, creating it if needed.
void write_report(const ExperimentReport& report, const std::filesystem::path& dir);

}  // namespace hawkes
