#include "output.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#ifndef RESPOND_VERSION
#define RESPOND_VERSION "unknown"
#endif

namespace respond::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 0xF];
  }
  return out;
}

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return sha256_hex(ss.str());
}

std::string_view version_string() noexcept { return RESPOND_VERSION; }

namespace {

void write_bytes(const fs::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

RunOutput::RunOutput(fs::path dir, const ExperimentConfig& config, std::string config_path,
                     unsigned threads)
    : dir_(std::move(dir)),
      config_json_(to_json(config)),
      config_path_(std::move(config_path)),
      task_(to_string(config.task)),
      name_(config.name),
      threads_(threads),
      start_(std::chrono::steady_clock::now()) {
  fs::create_directories(dir_);
}

void RunOutput::write_csv(const std::string& file, const CsvTable& table) {
  write_bytes(dir_ / file, table.text());
  files_.push_back({file, sha256_hex(table.text()), table.rows(), table.columns()});
}

void RunOutput::write_manifest(const std::string& status, const std::string& error_code,
                               const std::string& error_message) {
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  json inputs = {{"config_path", config_path_}, {"config", config_json_}};
  if (!config_path_.empty()) {
    try {
      inputs["config_sha256"] = sha256_file(config_path_);
    } catch (const std::exception&) {
      inputs["config_sha256"] = nullptr;
    }
  }
  json files = json::array();
  for (const auto& f : files_) {
    files.push_back({{"path", f.path}, {"sha256", f.sha256}, {"rows", f.rows}, {"columns", f.columns}});
  }
  json m = {{"name", name_},
            {"task", task_},
            {"version", std::string(version_string())},
            {"inputs", inputs},
            {"threads", threads_},
            {"wall_time_s", wall},
            {"files", files},
            {"status", status},
            {"results", results_}};
  if (status != "ok") m["error"] = {{"code", error_code}, {"message", error_message}};
  write_bytes(dir_ / "manifest.json", m.dump(2) + "\n");
}

}  // namespace respond::cli
