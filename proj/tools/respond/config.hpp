#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "respond/model.hpp"

namespace respond::cli {

enum class Task {
  Spectrum,
  Curves,
  WindingMap,
  GreensSweep,
  FreqSweep,
  AnalyticCompare,
  Disorder,
  Fig1,
  Fig2,
  Fig3,
  FigS1,
};

std::string_view to_string(Task t) noexcept;
std::optional<Task> parse_task(std::string_view s);
const std::vector<Task>& all_tasks();

/// Bad configuration. Maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Union of every task's options. Only the keys listed by option_keys(task)
/// are read from or written to JSON; the rest keep their defaults.
struct TaskOptions {
  std::vector<int> sizes;
  std::vector<int> spectrum_sizes;
  std::vector<std::string> boundaries;
  std::vector<std::string> labels;
  int samples = 0;
  int curve_samples = 0;
  std::vector<Complex> omegas;
  Complex omega_from;
  Complex omega_to;
  std::vector<std::string> endpoint_rules;
  std::vector<int> excitations;  ///< 0 stands for N
  std::string contour;
  std::array<double, 2> re_range{};
  std::array<double, 2> im_range{};
  std::array<int, 2> grid{};
  std::vector<std::string> targets;
  double half_width = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
  bool profile = false;
  std::string closed_form_mode;

  bool operator==(const TaskOptions&) const = default;
};

struct ExperimentConfig {
  std::string name;
  Task task = Task::Spectrum;
  ModelParams params;
  BoundaryKind boundary = BoundaryKind::Pobc;
  TaskOptions options;
  std::string output_dir = "out";

  bool operator==(const ExperimentConfig&) const = default;
};

/// Option keys accepted by a task, in the order they are documented.
const std::vector<std::string>& option_keys(Task t);
TaskOptions default_options(Task t);

/// Parses and validates a config document. `cli_task` is the task named on
/// the command line; a "task" field in the document must agree with it.
ExperimentConfig parse_config(const nlohmann::json& doc, Task cli_task);
ExperimentConfig load_config(const std::string& path, Task cli_task);

nlohmann::json to_json(const ExperimentConfig& c);

/// Defaults of one option rendered as JSON, for help text.
nlohmann::json option_default_json(Task t, const std::string& key);

}  // namespace respond::cli
