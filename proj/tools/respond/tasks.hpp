#pragma once

#include <string>

#include "config.hpp"
#include "output.hpp"

namespace respond::cli {

/// Runs one task, writing its CSVs into `out` and recording summary values
/// in out.results(). Numerical failures propagate as respond::Error.
void run_task(const ExperimentConfig& c, unsigned threads, RunOutput& out);

/// Help text for `respond <task> --help`: purpose, options with defaults,
/// and the column layout of every file the task writes.
std::string describe(Task t);
/// First sentence of the task description.
std::string summary(Task t);

}  // namespace respond::cli
