#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "config.hpp"
#include "csv.hpp"

namespace respond::cli {

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

/// Lowercase version string baked in at configure time.
std::string_view version_string() noexcept;

struct FileRecord {
  std::string path;  ///< relative to the output directory
  std::string sha256;
  std::size_t rows = 0;
  std::vector<std::string> columns;
};

/// Collects the files of one run and writes the manifest last.
class RunOutput {
 public:
  RunOutput(std::filesystem::path dir, const ExperimentConfig& config, std::string config_path,
            unsigned threads);

  void write_csv(const std::string& file, const CsvTable& table);
  /// Free-form per-task results recorded in the manifest.
  nlohmann::json& results() { return results_; }

  /// status is "ok" or "failed"; error fields are filled for failures.
  void write_manifest(const std::string& status, const std::string& error_code = {},
                      const std::string& error_message = {});

  [[nodiscard]] const std::filesystem::path& dir() const { return dir_; }
  [[nodiscard]] const std::vector<FileRecord>& files() const { return files_; }

 private:
  std::filesystem::path dir_;
  nlohmann::json config_json_;
  std::string config_path_;
  std::string task_;
  std::string name_;
  unsigned threads_;
  std::chrono::steady_clock::time_point start_;
  std::vector<FileRecord> files_;
  nlohmann::json results_ = nlohmann::json::object();
};

}  // namespace respond::cli
