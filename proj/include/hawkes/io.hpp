#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "hawkes/core.hpp"
#include "hawkes/inference.hpp"
#include "hawkes/selection.hpp"

namespace hawkes {

using Json = nlohmann::json;

// Model: {"mu": float, "alpha": [floats], "beta": [floats]}
[[nodiscard]] Json to_json(const HawkesModel& model);
/// Models with zero alphas are accepted and built with HawkesModel::degenerate.
[[nodiscard]] HawkesModel model_from_json(const Json& json);

[[nodiscard]] Json to_json(const FitOptions& options);
/// Missing keys keep their defaults.
[[nodiscard]] FitOptions fit_options_from_json(const Json& json);

[[nodiscard]] Json to_json(const FitResult& result);
[[nodiscard]] Json to_json(const SelectionResult& result);

[[nodiscard]] Json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline. Throws std::runtime_error on I/O failure.
void write_json_file(const std::filesystem::path& path, const Json& json);

[[nodiscard]] HawkesModel read_model_file(const std::filesystem::path& path);

/// Shortest decimal text that parses back to the same double.
[[nodiscard]] std::string format_double(double value);

/// One event time per line under a header line "t".
void write_events_csv(const std::filesystem::path& path, const EventSequence& events);

/// Sidecar next to an events file: same stem with extension ".json".
[[nodiscard]] std::filesystem::path sidecar_path(const std::filesystem::path& events_path);

/// Reads an events CSV. The horizon is taken from `horizon` if given, else
/// from the sidecar's "horizon" key if the sidecar exists, else from the
/// last event time.
[[nodiscard]] EventSequence read_events_csv(const std::filesystem::path& path,
                                            std::optional<double> horizon = std::nullopt);

}  // namespace hawkes
