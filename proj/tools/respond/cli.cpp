#include "cli.hpp"

#include <filesystem>
#include <string>

#include "CLI11.hpp"
#include "config.hpp"
#include "output.hpp"
#include "respond/error.hpp"
#include "respond/parallel.hpp"
#include "tasks.hpp"

namespace respond::cli {

namespace {

std::string task_list() {
  std::string s;
  for (Task t : all_tasks()) s += (s.empty() ? "" : ", ") + std::string(to_string(t));
  return s;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boundary-sensitive response of the Hatano-Nelson chain", "respond"};
  app.set_version_flag("--version", std::string(version_string()));
  app.require_subcommand(1);
  app.footer("Tasks: " + task_list() + "\nRun `respond <task> --help` for options and output columns.");

  std::string config_path;
  std::string out_dir;
  unsigned threads = 0;
  for (Task t : all_tasks()) {
    CLI::App* sub = app.add_subcommand(std::string(to_string(t)), summary(t));
    sub->set_help_flag();
    sub->add_option("--config", config_path, "JSON config file")->required();
    sub->add_option("--threads", threads, "worker threads (default RESPOND_THREADS, else 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", out_dir, "output directory, overrides output_dir");
  }

  // Per-task help is ours, so it can list defaults and output columns.
  if (argc >= 2) {
    if (const auto t = parse_task(argv[1])) {
      for (int i = 2; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "-h" || a == "--help") {
          out << describe(*t);
          return kExitOk;
        }
      }
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const Task task = *parse_task(sub->get_name());

  ExperimentConfig config;
  try {
    config = load_config(config_path, task);
  } catch (const ConfigError& e) {
    err << "respond: config error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!out_dir.empty()) config.output_dir = out_dir;
  threads = resolve_threads(threads);

  std::error_code ec;
  if (std::filesystem::exists(config.output_dir, ec) && !std::filesystem::is_directory(config.output_dir, ec)) {
    err << "respond: config error: output path '" << config.output_dir << "' is not a directory\n";
    return kExitUsage;
  }

  RunOutput output(config.output_dir, config, std::filesystem::absolute(config_path).string(), threads);
  try {
    run_task(config, threads, output);
  } catch (const Error& e) {
    output.write_manifest("failed", std::string(to_string(e.code())), e.what());
    err << "respond: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  output.write_manifest("ok");
  out << "respond " << to_string(task) << ": wrote " << output.files().size() << " file(s) and manifest.json to "
      << config.output_dir << "\n";
  return kExitOk;
}

}  // namespace respond::cli
