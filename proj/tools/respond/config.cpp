#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>

#include "respond/curves.hpp"
#include "respond/error.hpp"
#include "respond/greens_numeric.hpp"

namespace respond::cli {

using nlohmann::json;

namespace {

struct TaskName {
  Task task;
  std::string_view name;
};

constexpr TaskName kTaskNames[] = {
    {Task::Spectrum, "spectrum"},
    {Task::Curves, "curves"},
    {Task::WindingMap, "winding-map"},
    {Task::GreensSweep, "greens-sweep"},
    {Task::FreqSweep, "freq-sweep"},
    {Task::AnalyticCompare, "analytic-compare"},
    {Task::Disorder, "disorder"},
    {Task::Fig1, "fig1"},
    {Task::Fig2, "fig2"},
    {Task::Fig3, "fig3"},
    {Task::FigS1, "figS1"},
};

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

Complex complex_from(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  fail(where + ": expected a number or [re, im]");
}

json complex_to(Complex z) { return json::array({z.real(), z.imag()}); }

int int_from(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where + ": expected an integer");
  return j.get<int>();
}

double double_from(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where + ": expected a number");
  return j.get<double>();
}

std::vector<std::string> strings_from(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) fail(where + ": expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<int> ints_from(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array of integers");
  std::vector<int> out;
  for (const auto& e : j) out.push_back(int_from(e, where));
  return out;
}

int site_from(const json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "N") return 0;
  const int v = int_from(j, where);
  if (v < 1) fail(where + ": sites are 1-based, or \"N\" for the last site");
  return v;
}

json site_to(int s) { return s == 0 ? json("N") : json(s); }

template <typename T, std::size_t M>
std::array<T, M> fixed_from(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != M) fail(where + ": expected an array of " + std::to_string(M));
  std::array<T, M> out{};
  for (std::size_t i = 0; i < M; ++i) {
    if constexpr (std::is_integral_v<T>) {
      out[i] = int_from(j[i], where);
    } else {
      out[i] = double_from(j[i], where);
    }
  }
  return out;
}

// One accessor per option key: read from JSON into TaskOptions and back.
struct OptionField {
  std::function<void(TaskOptions&, const json&)> read;
  std::function<json(const TaskOptions&)> write;
};

const std::map<std::string, OptionField>& option_fields() {
  static const std::map<std::string, OptionField> fields = {
      {"sizes", {[](TaskOptions& o, const json& j) { o.sizes = ints_from(j, "sizes"); },
                 [](const TaskOptions& o) { return json(o.sizes); }}},
      {"spectrum_sizes",
       {[](TaskOptions& o, const json& j) { o.spectrum_sizes = ints_from(j, "spectrum_sizes"); },
        [](const TaskOptions& o) { return json(o.spectrum_sizes); }}},
      {"boundaries", {[](TaskOptions& o, const json& j) { o.boundaries = strings_from(j, "boundaries"); },
                      [](const TaskOptions& o) { return json(o.boundaries); }}},
      {"labels", {[](TaskOptions& o, const json& j) { o.labels = strings_from(j, "labels"); },
                  [](const TaskOptions& o) { return json(o.labels); }}},
      {"samples", {[](TaskOptions& o, const json& j) { o.samples = int_from(j, "samples"); },
                   [](const TaskOptions& o) { return json(o.samples); }}},
      {"curve_samples",
       {[](TaskOptions& o, const json& j) { o.curve_samples = int_from(j, "curve_samples"); },
        [](const TaskOptions& o) { return json(o.curve_samples); }}},
      {"omegas",
       {[](TaskOptions& o, const json& j) {
          if (!j.is_array()) fail("omegas: expected an array of [re, im]");
          o.omegas.clear();
          for (const auto& e : j) o.omegas.push_back(complex_from(e, "omegas"));
        },
        [](const TaskOptions& o) {
          json a = json::array();
          for (Complex z : o.omegas) a.push_back(complex_to(z));
          return a;
        }}},
      {"omega_from", {[](TaskOptions& o, const json& j) { o.omega_from = complex_from(j, "omega_from"); },
                      [](const TaskOptions& o) { return complex_to(o.omega_from); }}},
      {"omega_to", {[](TaskOptions& o, const json& j) { o.omega_to = complex_from(j, "omega_to"); },
                    [](const TaskOptions& o) { return complex_to(o.omega_to); }}},
      {"endpoint_rules",
       {[](TaskOptions& o, const json& j) { o.endpoint_rules = strings_from(j, "endpoint_rules"); },
        [](const TaskOptions& o) { return json(o.endpoint_rules); }}},
      {"excitations",
       {[](TaskOptions& o, const json& j) {
          if (!j.is_array()) fail("excitations: expected an array");
          o.excitations.clear();
          for (const auto& e : j) o.excitations.push_back(site_from(e, "excitations"));
        },
        [](const TaskOptions& o) {
          json a = json::array();
          for (int s : o.excitations) a.push_back(site_to(s));
          return a;
        }}},
      {"contour",
       {[](TaskOptions& o, const json& j) {
          if (!j.is_string()) fail("contour: expected a string");
          o.contour = j.get<std::string>();
        },
        [](const TaskOptions& o) { return json(o.contour); }}},
      {"re_range", {[](TaskOptions& o, const json& j) { o.re_range = fixed_from<double, 2>(j, "re_range"); },
                    [](const TaskOptions& o) { return json(o.re_range); }}},
      {"im_range", {[](TaskOptions& o, const json& j) { o.im_range = fixed_from<double, 2>(j, "im_range"); },
                    [](const TaskOptions& o) { return json(o.im_range); }}},
      {"grid", {[](TaskOptions& o, const json& j) { o.grid = fixed_from<int, 2>(j, "grid"); },
                [](const TaskOptions& o) { return json(o.grid); }}},
      {"targets", {[](TaskOptions& o, const json& j) { o.targets = strings_from(j, "targets"); },
                   [](const TaskOptions& o) { return json(o.targets); }}},
      {"half_width", {[](TaskOptions& o, const json& j) { o.half_width = double_from(j, "half_width"); },
                      [](const TaskOptions& o) { return json(o.half_width); }}},
      {"trials", {[](TaskOptions& o, const json& j) { o.trials = int_from(j, "trials"); },
                  [](const TaskOptions& o) { return json(o.trials); }}},
      {"seed",
       {[](TaskOptions& o, const json& j) {
          if (!j.is_number_unsigned()) fail("seed: expected a non-negative integer");
          o.seed = j.get<std::uint64_t>();
        },
        [](const TaskOptions& o) { return json(o.seed); }}},
      {"profile",
       {[](TaskOptions& o, const json& j) {
          if (!j.is_boolean()) fail("profile: expected true or false");
          o.profile = j.get<bool>();
        },
        [](const TaskOptions& o) { return json(o.profile); }}},
      {"closed_form_mode",
       {[](TaskOptions& o, const json& j) {
          if (!j.is_string()) fail("closed_form_mode: expected a string");
          o.closed_form_mode = j.get<std::string>();
        },
        [](const TaskOptions& o) { return json(o.closed_form_mode); }}},
  };
  return fields;
}

std::vector<int> range(int from, int to, int step) {
  std::vector<int> v;
  for (int n = from; n <= to; n += step) v.push_back(n);
  return v;
}

void check_member(const std::vector<std::string>& values, const std::vector<std::string>& allowed,
                  const std::string& key) {
  for (const auto& v : values) {
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
      fail(key + ": unknown value '" + v + "'");
    }
  }
}

void validate_options(const ExperimentConfig& c) {
  const TaskOptions& o = c.options;
  const auto& keys = option_keys(c.task);
  auto has = [&](const char* k) { return std::find(keys.begin(), keys.end(), k) != keys.end(); };

  if (has("sizes")) {
    if (o.sizes.empty()) fail("sizes: must not be empty");
    for (int n : o.sizes) {
      try {
        validate_params(c.params.with_sites(n));
      } catch (const Error& e) {
        fail("sizes: " + std::string(e.what()));
      }
    }
  }
  if (has("spectrum_sizes")) {
    if (o.spectrum_sizes.empty()) fail("spectrum_sizes: must not be empty");
    for (int n : o.spectrum_sizes) {
      try {
        validate_params(c.params.with_sites(n));
      } catch (const Error& e) {
        fail("spectrum_sizes: " + std::string(e.what()));
      }
    }
  }
  if (has("boundaries")) {
    if (o.boundaries.empty()) fail("boundaries: must not be empty");
    check_member(o.boundaries, {"obc", "pbc", "pobc"}, "boundaries");
  }
  if (has("labels")) {
    for (const auto& l : o.labels) {
      try {
        parse_curve_label(l);
      } catch (const Error&) {
        fail("labels: unknown curve label '" + l + "'");
      }
    }
  }
  if (has("contour")) {
    try {
      const CurveLabel l = parse_curve_label(o.contour);
      if (l == CurveLabel::FGBZ1 || l == CurveLabel::FGBZ2) fail("contour: must be a continuum curve");
    } catch (const Error&) {
      fail("contour: unknown curve label '" + o.contour + "'");
    }
  }
  if (has("samples") && o.samples < 2) fail("samples: must be >= 2");
  if (has("curve_samples") && o.curve_samples < 64) fail("curve_samples: must be >= 64");
  if (has("omegas") && o.omegas.empty()) fail("omegas: must not be empty");
  if (has("endpoint_rules")) {
    if (o.endpoint_rules.empty()) fail("endpoint_rules: must not be empty");
    check_member(o.endpoint_rules, {"N1", "1N"}, "endpoint_rules");
  }
  if (has("excitations")) {
    if (o.excitations.empty()) fail("excitations: must not be empty");
    const int smallest = has("sizes") ? *std::min_element(o.sizes.begin(), o.sizes.end()) : c.params.n_sites;
    for (int s : o.excitations) {
      if (s > smallest) fail("excitations: site " + std::to_string(s) + " exceeds the chain length");
    }
  }
  if (c.task == Task::Fig2 && o.excitations.size() != o.omegas.size()) {
    fail("excitations: fig2 pairs each omega with one excitation site, so the lists need equal length");
  }
  if (has("grid") && (o.grid[0] < 2 || o.grid[1] < 2)) fail("grid: needs at least 2 points per axis");
  if (has("re_range") && !(o.re_range[0] < o.re_range[1])) fail("re_range: expected [min, max]");
  if (has("im_range") && !(o.im_range[0] < o.im_range[1])) fail("im_range: expected [min, max]");
  if (has("targets")) {
    if (o.targets.empty()) fail("targets: must not be empty");
    check_member(o.targets, {"hoppings", "onsite", "hoppings+corner"}, "targets");
  }
  if (has("half_width") && !(o.half_width >= 0.0)) fail("half_width: must be >= 0");
  if (has("trials") && o.trials < 1) fail("trials: must be >= 1");
  if (has("closed_form_mode")) check_member({o.closed_form_mode}, {"leading_sum", "dominant"}, "closed_form_mode");
  if (has("omega_from") && has("omega_to") && o.omega_from == o.omega_to) {
    fail("omega_from and omega_to must differ");
  }
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) fail(where + ": unknown field '" + key + "'");
  }
}

}  // namespace

std::string_view to_string(Task t) noexcept {
  for (const auto& tn : kTaskNames) {
    if (tn.task == t) return tn.name;
  }
  return "spectrum";
}

std::optional<Task> parse_task(std::string_view s) {
  for (const auto& tn : kTaskNames) {
    if (tn.name == s) return tn.task;
  }
  return std::nullopt;
}

const std::vector<Task>& all_tasks() {
  static const std::vector<Task> tasks = [] {
    std::vector<Task> v;
    for (const auto& tn : kTaskNames) v.push_back(tn.task);
    return v;
  }();
  return tasks;
}

const std::vector<std::string>& option_keys(Task t) {
  static const std::map<Task, std::vector<std::string>> keys = {
      {Task::Spectrum, {"sizes", "boundaries", "samples"}},
      {Task::Curves, {"labels", "sizes", "curve_samples"}},
      {Task::WindingMap, {"contour", "curve_samples", "re_range", "im_range", "grid", "omega_from", "omega_to"}},
      {Task::GreensSweep, {"omegas", "sizes", "endpoint_rules", "boundaries"}},
      {Task::FreqSweep, {"omega_from", "omega_to", "samples", "endpoint_rules", "boundaries"}},
      {Task::AnalyticCompare, {"omegas", "sizes", "excitations", "closed_form_mode"}},
      {Task::Disorder, {"omegas", "excitations", "targets", "half_width", "trials", "seed", "profile"}},
      {Task::Fig1, {"sizes", "spectrum_sizes", "omegas", "samples", "curve_samples", "omega_from", "omega_to"}},
      {Task::Fig2, {"sizes", "omegas", "excitations", "curve_samples", "closed_form_mode"}},
      {Task::Fig3, {"omegas", "targets", "half_width", "trials", "seed"}},
      {Task::FigS1, {"omegas", "excitations", "closed_form_mode"}},
  };
  return keys.at(t);
}

TaskOptions default_options(Task t) {
  TaskOptions o;
  o.samples = 256;
  o.curve_samples = 1024;
  o.omegas = {Complex(0, 0.1), Complex(0, 0.4)};
  o.omega_from = Complex(0, 0.01);
  o.omega_to = Complex(0, 0.5);
  o.endpoint_rules = {"N1", "1N"};
  o.excitations = {1};
  o.contour = "CGBZ1";
  o.re_range = {-2.0, 2.0};
  o.im_range = {-1.5, 1.5};
  o.grid = {41, 31};
  o.targets = {"hoppings", "onsite"};
  o.half_width = 0.05;
  o.trials = 100;
  o.seed = 42;
  o.profile = true;
  o.closed_form_mode = "leading_sum";
  o.boundaries = {"pobc"};
  switch (t) {
    case Task::Spectrum:
      o.sizes = {20, 60};
      o.boundaries = {"pbc", "obc", "pobc"};
      break;
    case Task::Curves:
      o.sizes = {60};
      o.labels = {"BZ", "GBZ", "RGBZ1", "RGBZ2", "CGBZ1", "CGBZ2", "FGBZ1", "FGBZ2"};
      o.curve_samples = 512;
      break;
    case Task::WindingMap:
      o.omega_from = Complex(0, 0.0);
      break;
    case Task::GreensSweep:
      o.sizes = range(20, 100, 10);
      o.boundaries = {"pobc", "obc"};
      break;
    case Task::FreqSweep:
      o.samples = 50;
      o.boundaries = {"pobc", "obc"};
      break;
    case Task::AnalyticCompare:
      o.sizes = {60};
      o.omegas = {Complex(0, 0.1)};
      break;
    case Task::Disorder:
      o.omegas = {Complex(0, 0.25), Complex(0, 0.4)};
      break;
    case Task::Fig1:
      o.sizes = range(20, 100, 10);
      o.spectrum_sizes = {20, 60};
      o.samples = 50;
      break;
    case Task::Fig2:
      o.sizes = {60, 80, 100};
      o.excitations = {1, 0};
      break;
    case Task::Fig3:
      o.omegas = {Complex(0, 0.25), Complex(0, 0.4)};
      break;
    case Task::FigS1:
      o.omegas = {Complex(0, 2.8)};
      o.excitations = {90, 10};
      break;
  }
  return o;
}

json option_default_json(Task t, const std::string& key) {
  return option_fields().at(key).write(default_options(t));
}

ExperimentConfig parse_config(const json& doc, Task cli_task) {
  if (!doc.is_object()) fail("config: expected a JSON object");
  reject_unknown(doc, {"name", "task", "params", "options", "output_dir"}, "config");

  ExperimentConfig c;
  c.task = cli_task;
  if (doc.contains("task")) {
    if (!doc["task"].is_string()) fail("task: expected a string");
    const auto t = parse_task(doc["task"].get<std::string>());
    if (!t) fail("task: unknown task '" + doc["task"].get<std::string>() + "'");
    if (*t != cli_task) {
      fail("task: config names '" + std::string(to_string(*t)) + "' but the command line asks for '" +
           std::string(to_string(cli_task)) + "'");
    }
  }
  if (!doc.contains("name") || !doc["name"].is_string()) fail("name: required string");
  c.name = doc["name"].get<std::string>();
  if (c.name.empty() || c.name.find('/') != std::string::npos) fail("name: must be a non-empty file-name stem");

  if (!doc.contains("params") || !doc["params"].is_object()) fail("params: required object");
  const json& p = doc["params"];
  reject_unknown(p, {"t1", "t2", "delta", "n_sites", "boundary"}, "params");
  for (const char* k : {"t1", "t2", "delta", "n_sites"}) {
    if (!p.contains(k)) fail(std::string("params: missing '") + k + "'");
  }
  c.params.t1 = complex_from(p["t1"], "params.t1");
  c.params.t2 = complex_from(p["t2"], "params.t2");
  c.params.delta = complex_from(p["delta"], "params.delta");
  c.params.n_sites = int_from(p["n_sites"], "params.n_sites");
  if (p.contains("boundary")) {
    if (!p["boundary"].is_string()) fail("params.boundary: expected a string");
    try {
      c.boundary = parse_boundary(p["boundary"].get<std::string>());
    } catch (const Error& e) {
      fail("params.boundary: " + std::string(e.what()));
    }
  }
  try {
    validate_params(c.params);
  } catch (const Error& e) {
    fail("params: " + std::string(e.what()));
  }

  c.options = default_options(cli_task);
  if (doc.contains("options")) {
    const json& o = doc["options"];
    if (!o.is_object()) fail("options: expected an object");
    const auto& keys = option_keys(cli_task);
    for (const auto& [key, value] : o.items()) {
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        fail("options: unknown field '" + key + "' for task " + std::string(to_string(cli_task)));
      }
      option_fields().at(key).read(c.options, value);
    }
  }
  if (doc.contains("output_dir")) {
    if (!doc["output_dir"].is_string() || doc["output_dir"].get<std::string>().empty()) {
      fail("output_dir: expected a non-empty string");
    }
    c.output_dir = doc["output_dir"].get<std::string>();
  }
  validate_options(c);
  return c;
}

ExperimentConfig load_config(const std::string& path, Task cli_task) {
  std::ifstream in(path);
  if (!in) fail("cannot read config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail("config is not valid JSON: " + std::string(e.what()));
  }
  return parse_config(doc, cli_task);
}

json to_json(const ExperimentConfig& c) {
  json doc;
  doc["name"] = c.name;
  doc["task"] = std::string(to_string(c.task));
  doc["params"] = {{"t1", complex_to(c.params.t1)},
                   {"t2", complex_to(c.params.t2)},
                   {"delta", complex_to(c.params.delta)},
                   {"n_sites", c.params.n_sites},
                   {"boundary", std::string(to_string(c.boundary))}};
  json opts = json::object();
  for (const auto& key : option_keys(c.task)) opts[key] = option_fields().at(key).write(c.options);
  doc["options"] = opts;
  doc["output_dir"] = c.output_dir;
  return doc;
}

}  // namespace respond::cli
