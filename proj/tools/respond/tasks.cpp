#include "tasks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

#include "respond/respond.hpp"

namespace respond::cli {

using nlohmann::json;

namespace {

// Column layouts. Shared by the writers and the help text.
const std::vector<std::string> kSpectraCols = {"n_sites",  "boundary", "e_re",     "e_im",    "beta1_re",
                                               "beta1_im", "beta2_re", "beta2_im", "residual"};
const std::vector<std::string> kCurveCols = {"label", "n_sites", "theta", "beta_re", "beta_im"};
const std::vector<std::string> kWindingCols = {"omega_re", "omega_im", "contour", "winding", "resolved"};
const std::vector<std::string> kGreensCols = {"n_sites", "k",      "l",        "omega_re",     "omega_im",
                                              "g_re",    "g_im",   "abs_g",    "log10_abs_g",  "method",
                                              "boundary", "rule",  "cond_estimate", "near_singular"};
const std::vector<std::string> kAnalyticCols = {
    "n_sites",     "k",          "l",           "omega_re",   "omega_im",           "g_num_re",
    "g_num_im",    "log10_abs_num", "g_cf_re",  "g_cf_im",    "log10_abs_cf",       "rel_err",
    "dominant_q",  "correction_dominant", "regime", "n0",     "n1"};
const std::vector<std::string> kDisorderCols = {
    "k",       "l",          "omega_re",       "omega_im",      "target",      "half_width",
    "trials",  "seed",       "median_abs_err", "mean_abs_err",  "p90_abs_err", "dropped_trials"};
const std::vector<std::string> kKinkCols = {"n_sites", "omega_re",   "omega_im",    "l",  "breakpoint",
                                            "slope_left", "slope_right", "n0", "n1", "found"};
const std::vector<std::string> kRootCols = {"omega_re", "omega_im", "root", "beta_re", "beta_im",
                                            "abs_beta", "inside_cgbz1"};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

std::string omega_key(Complex w) {
  return format_double(w.real()) + (w.imag() < 0 ? "" : "+") + format_double(w.imag()) + "i";
}

int resolve_site(int s, int n) { return s == 0 ? n : s; }

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---- spectra and curves -------------------------------------------------

SpectrumSet spectrum_for(const ModelParams& p, BoundaryKind bc, int samples) {
  switch (bc) {
    case BoundaryKind::Pbc: return pbc_spectrum(p, samples);
    case BoundaryKind::Obc: return obc_spectrum(p, samples);
    case BoundaryKind::Pobc: break;
  }
  return pobc_spectrum(p);
}

void add_spectrum(CsvTable& t, const SpectrumSet& s, int n) {
  for (const auto& pt : s.points) {
    t.add({cell(n), cell(to_string(s.boundary)), cell(pt.energy.real()), cell(pt.energy.imag()),
           cell(pt.beta1.real()), cell(pt.beta1.imag()), cell(pt.beta2.real()), cell(pt.beta2.imag()),
           cell(pt.residual)});
  }
}

CsvTable spectra_table(const ModelParams& base, const std::vector<int>& sizes,
                       const std::vector<std::string>& boundaries, int samples, json& results) {
  CsvTable t(kSpectraCols);
  for (int n : sizes) {
    const ModelParams p = base.with_sites(n);
    for (const auto& b : boundaries) {
      const SpectrumSet s = spectrum_for(p, parse_boundary(b), samples);
      add_spectrum(t, s, n);
      if (s.boundary == BoundaryKind::Pobc) {
        double max_im = 0.0;
        for (const auto& pt : s.points) max_im = std::max(max_im, std::abs(pt.energy.imag()));
        results["pobc_max_abs_imag"][std::to_string(n)] = max_im;
        results["pobc_eigenvalues"][std::to_string(n)] = s.points.size();
      }
    }
  }
  return t;
}

void add_curve(CsvTable& t, const Curve& c, int n) {
  for (std::size_t i = 0; i < c.samples.size(); ++i) {
    const double theta = i < c.theta.size() ? c.theta[i] : std::arg(c.samples[i]);
    t.add({cell(to_string(c.label)), cell(n), cell(theta), cell(c.samples[i].real()),
           cell(c.samples[i].imag())});
  }
}

CsvTable curves_table(const ModelParams& base, const std::vector<int>& sizes,
                      const std::vector<std::string>& labels, int samples, json& results) {
  CsvTable t(kCurveCols);
  for (int n : sizes) {
    const ModelParams p = base.with_sites(n);
    std::optional<CurvePair> fgbz;
    for (const auto& name : labels) {
      const CurveLabel label = parse_curve_label(name);
      if (label == CurveLabel::FGBZ1 || label == CurveLabel::FGBZ2) {
        if (!fgbz) fgbz = fgbz_points(pobc_spectrum(p));
        add_curve(t, label == CurveLabel::FGBZ1 ? fgbz->first : fgbz->second, n);
      } else {
        add_curve(t, make_curve(label, p, samples), n);
      }
    }
    results["critical_length"][std::to_string(n)] = critical_length(p);
  }
  return t;
}

// ---- Green's functions --------------------------------------------------

void add_green_row(CsvTable& t, const SweepRow& r, BoundaryKind bc, EndpointRule rule) {
  const GreenResult& g = r.result;
  t.add({cell(r.n_sites), cell(g.query.k), cell(g.query.l), cell(g.query.omega.real()),
         cell(g.query.omega.imag()), cell(g.value.real()), cell(g.value.imag()), cell(std::abs(g.value)),
         cell(log10_magnitude(g)), cell(to_string(g.method)), cell(to_string(bc)), cell(to_string(rule)),
         cell(g.cond_estimate), cell(r.near_singular ? 1 : 0)});
}

CsvTable size_sweep_table(const ModelParams& base, const std::vector<std::string>& boundaries,
                          const std::vector<std::string>& rules, const std::vector<Complex>& omegas,
                          const std::vector<int>& sizes, unsigned threads, json& results) {
  CsvTable t(kGreensCols);
  for (const auto& b : boundaries) {
    const BoundaryKind bc = parse_boundary(b);
    for (const auto& rname : rules) {
      const EndpointRule rule = parse_endpoint_rule(rname);
      for (Complex w : omegas) {
        const auto rows = size_sweep(base, bc, w, sizes, rule, threads);
        std::vector<double> x, y;
        int flagged = 0;
        for (const auto& r : rows) {
          add_green_row(t, r, bc, rule);
          x.push_back(r.n_sites);
          y.push_back(log10_magnitude(r.result));
          flagged += r.near_singular ? 1 : 0;
        }
        json entry = {{"boundary", b}, {"rule", rname}, {"omega", complex_json(w)}, {"near_singular_rows", flagged}};
        entry["log10_slope_per_site"] = x.size() >= 2 ? json(fit_slope(x, y)) : json(nullptr);
        results["size_sweeps"].push_back(entry);
      }
    }
  }
  return t;
}

CsvTable freq_sweep_table(const ModelParams& p, const std::vector<std::string>& boundaries,
                          const std::vector<std::string>& rules, Complex from, Complex to, int samples,
                          unsigned threads, json& results) {
  CsvTable t(kGreensCols);
  for (const auto& b : boundaries) {
    const BoundaryKind bc = parse_boundary(b);
    for (const auto& rname : rules) {
      const EndpointRule rule = parse_endpoint_rule(rname);
      const FrequencySweep fs = frequency_sweep(p, bc, from, to, samples, rule, threads);
      for (const auto& r : fs.rows) add_green_row(t, r, bc, rule);
      results["freq_sweeps"].push_back(
          {{"boundary", b},
           {"rule", rname},
           {"steepest_omega", fs.steepest_omega ? complex_json(*fs.steepest_omega) : json(nullptr)}});
    }
  }
  try {
    const RegimeBoundary rb = regime_boundary_scan(p, FrequencyRay{from, to - from, 1.0, 64});
    results["omega_c"] = complex_json(rb.omega_c);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoTransition) throw;
    results["omega_c"] = nullptr;
  }
  return t;
}

// Numeric pOBC column next to the closed form, one row per response site.
void add_profile(CsvTable& t, const ModelParams& p, Complex w, int l, ClosedFormMode mode,
                 unsigned threads, std::vector<double>* log10_num) {
  const int n = p.n_sites;
  const ResolventColumn col = solve_resolvent(build_hamiltonian(p, BoundaryKind::Pobc), w, l);
  if (col.cond_estimate >= kNearSingularCondition) {
    throw Error(ErrorCode::NearSingular, "pOBC resolvent at N=" + std::to_string(n) + ", omega " +
                                             omega_key(w) + " has condition estimate " +
                                             format_double(col.cond_estimate));
  }
  const CriticalScales cs = critical_scales(p, w);
  std::vector<GreenResult> cf(static_cast<std::size_t>(n));
  parallel_for(cf.size(), threads, [&](std::size_t i) { cf[i] = closed_form(p, w, static_cast<int>(i) + 1, l, mode); });
  for (int k = 1; k <= n; ++k) {
    const Complex g = col.x(k - 1);
    const GreenResult& c = cf[static_cast<std::size_t>(k - 1)];
    const double rel = std::abs(c.value - g) / std::abs(g);
    t.add({cell(n), cell(k), cell(l), cell(w.real()), cell(w.imag()), cell(g.real()), cell(g.imag()),
           cell(std::log10(std::abs(g))), cell(c.value.real()), cell(c.value.imag()),
           cell(log10_magnitude(c)), cell(c.log10_abs ? kNaN : rel), cell(c.dominant_q.value_or(0)),
           cell(c.correction_dominant ? 1 : 0), cell(c.regime ? to_string(*c.regime) : "none"),
           cell(cs.n_0), cell(cs.n_1)});
    if (log10_num) log10_num->push_back(std::log10(std::abs(g)));
  }
}

// Kink of log10|G_{k,l}| against distance from the excitation, on the longer
// side of l.
void add_kink(CsvTable& t, const ModelParams& p, Complex w, int l, const std::vector<double>& log10_col,
              json& results) {
  const int n = p.n_sites;
  std::vector<double> x, y;
  if (l > n / 2) {
    for (int k = l; k >= 1; --k) {
      x.push_back(l - k);
      y.push_back(log10_col[static_cast<std::size_t>(k - 1)]);
    }
  } else {
    for (int k = l; k <= n; ++k) {
      x.push_back(k - l);
      y.push_back(log10_col[static_cast<std::size_t>(k - 1)]);
    }
  }
  const CriticalScales cs = critical_scales(p, w);
  KinkFit fit{kNaN, kNaN, kNaN, kNaN};
  bool found = true;
  try {
    fit = crossover_detect(x, y);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoKink && e.code() != ErrorCode::InvalidArgument) throw;
    found = false;
  }
  t.add({cell(n), cell(w.real()), cell(w.imag()), cell(l), cell(fit.breakpoint), cell(fit.slope_left),
         cell(fit.slope_right), cell(cs.n_0), cell(cs.n_1), cell(found ? 1 : 0)});
  results["kinks"].push_back({{"n_sites", n},
                              {"omega", complex_json(w)},
                              {"l", l},
                              {"breakpoint", found ? json(fit.breakpoint) : json(nullptr)},
                              {"n0", cs.n_0},
                              {"n1", cs.n_1}});
}

ClosedFormMode parse_mode(const std::string& s) {
  return s == "dominant" ? ClosedFormMode::Dominant : ClosedFormMode::LeadingSum;
}

CsvTable roots_table(const ModelParams& p, const std::vector<Complex>& omegas, int curve_samples) {
  CsvTable t(kRootCols);
  const Curve c = make_curve(CurveLabel::CGBZ1, p, curve_samples);
  for (Complex w : omegas) {
    const BlochRoots r = bloch_roots(p, w);
    int idx = 0;
    for (Complex b : {r.beta_a, r.beta_b}) {
      t.add({cell(w.real()), cell(w.imag()), cell(idx++ == 0 ? "a" : "b"), cell(b.real()), cell(b.imag()),
             cell(std::abs(b)), cell(point_inside(c, b) ? 1 : 0)});
    }
  }
  return t;
}

// ---- disorder -----------------------------------------------------------

void add_stats(CsvTable& t, const ErrorStats& s, DisorderTarget target, double w) {
  t.add({cell(s.query.k), cell(s.query.l), cell(s.query.omega.real()), cell(s.query.omega.imag()),
         cell(to_string(target)), cell(w), cell(s.trials), cell(std::to_string(s.seed)),
         cell(s.median_abs_err), cell(s.mean_abs_err), cell(s.p90_abs_err), cell(s.dropped_trials)});
}

CsvTable disorder_table(const ModelParams& p, const TaskOptions& o, const std::vector<int>& excitations,
                        bool profile, unsigned threads, json& results) {
  CsvTable t(kDisorderCols);
  const int n = p.n_sites;
  for (Complex w : o.omegas) {
    for (int site : excitations) {
      const int l = resolve_site(site, n);
      for (const auto& tname : o.targets) {
        const DisorderTarget target = parse_disorder_target(tname);
        const DisorderSpec spec{target, o.half_width, o.seed};
        std::vector<ErrorStats> stats;
        if (profile) {
          stats = error_profile(p, w, l, spec, o.trials, threads);
        } else {
          stats.push_back(relative_error_ensemble(p, {n, l, w}, spec, o.trials, threads));
        }
        std::vector<double> medians;
        int dropped = 0;
        for (const auto& s : stats) {
          add_stats(t, s, target, o.half_width);
          medians.push_back(s.median_abs_err);
          dropped = std::max(dropped, s.dropped_trials);
        }
        const ErrorStats& end = stats.back();
        json entry = {{"omega", complex_json(w)},
                      {"l", l},
                      {"target", tname},
                      {"k", end.query.k},
                      {"median_abs_err", end.median_abs_err},
                      {"max_dropped_trials", dropped}};
        if (profile && medians.size() >= 3) {
          const TrendTest tt = mann_kendall(medians);
          entry["trend_z"] = tt.z;
          entry["trend"] = tt.increasing ? "increasing" : tt.decreasing ? "decreasing" : "none";
        }
        results["disorder"].push_back(entry);
      }
    }
  }
  return t;
}

// ---- runners ------------------------------------------------------------

void run_spectrum(const ExperimentConfig& c, unsigned, RunOutput& out) {
  const auto& o = c.options;
  out.write_csv("spectra.csv", spectra_table(c.params, o.sizes, o.boundaries, o.samples, out.results()));
}

void run_curves(const ExperimentConfig& c, unsigned, RunOutput& out) {
  const auto& o = c.options;
  out.write_csv("curves.csv", curves_table(c.params, o.sizes, o.labels, o.curve_samples, out.results()));
}

void run_winding_map(const ExperimentConfig& c, unsigned threads, RunOutput& out) {
  const auto& o = c.options;
  const ModelParams& p = c.params;
  const Curve contour = make_curve(parse_curve_label(o.contour), p, o.curve_samples);
  const int nx = o.grid[0];
  const int ny = o.grid[1];
  std::vector<Complex> omegas;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      omegas.emplace_back(o.re_range[0] + (o.re_range[1] - o.re_range[0]) * i / (nx - 1),
                          o.im_range[0] + (o.im_range[1] - o.im_range[0]) * j / (ny - 1));
    }
  }
  std::vector<std::optional<int>> wind(omegas.size());
  parallel_for(omegas.size(), threads, [&](std::size_t i) {
    try {
      wind[i] = winding_number(contour, p, omegas[i]).value;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::OmegaOnImage && e.code() != ErrorCode::UnresolvedWinding) throw;
    }
  });
  CsvTable t(kWindingCols);
  int unresolved = 0;
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    t.add({cell(omegas[i].real()), cell(omegas[i].imag()), cell(o.contour), cell(wind[i].value_or(0)),
           cell(wind[i] ? 1 : 0)});
    unresolved += wind[i] ? 0 : 1;
  }
  out.write_csv("winding.csv", t);
  out.results()["unresolved_points"] = unresolved;
  try {
    const RegimeBoundary rb =
        regime_boundary_scan(p, FrequencyRay{o.omega_from, o.omega_to - o.omega_from, 1.0, 64}, o.curve_samples);
    out.results()["omega_c"] = complex_json(rb.omega_c);
    out.results()["winding_below"] = rb.winding_below;
    out.results()["winding_above"] = rb.winding_above;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoTransition) throw;
    out.results()["omega_c"] = nullptr;
  }
}

void run_greens_sweep(const ExperimentConfig& c, unsigned threads, RunOutput& out) {
  const auto& o = c.options;
  out.write_csv("greens.csv", size_sweep_table(c.params, o.boundaries, o.endpoint_rules, o.omegas, o.sizes,
                                               threads, out.results()));
}

void run_freq_sweep(const ExperimentConfig& c, unsigned threads, RunOutput& out) {
  const auto& o = c.options;
  out.write_csv("greens.csv", freq_sweep_table(c.params, o.boundaries, o.endpoint_rules, o.omega_from,
                                               o.omega_to, o.samples, threads, out.results()));
}

void run_analytic_compare(const ExperimentConfig& c, unsigned threads, RunOutput& out) {
  const auto& o = c.options;
  CsvTable t(kAnalyticCols);
  for (int n : o.sizes) {
    const ModelParams p = c.params.with_sites(n);
    for (Complex w : o.omegas) {
      for (int site : o.excitations) {
        add_profile(t, p, w, resolve_site(site, n), parse_mode(o.closed_form_mode), threads, nullptr);
      }
    }
  }
  out.write_csv("analytic.csv", t);
}

void run_disorder(const ExperimentConfig& c, unsigned threads, RunOutput& out) {
  const auto& o = c.options;
  out.write_csv("disorder.csv", disorder_table(c.params, o, o.excitations, o.profile, threads, out.results()));
}

void run_fig1(const ExperimentConfig& c, unsigned threads, RunOutput& out) {
  const auto& o = c.options;
  json& res = out.results();
  out.write_csv("spectra.csv", spectra_table(c.params, o.spectrum_sizes, {"pbc", "obc", "pobc"}, o.curve_samples, res));
  out.write_csv("curves.csv", curves_table(c.params, {c.params.n_sites},
                                           {"BZ", "GBZ", "FGBZ1", "FGBZ2"}, o.curve_samples, res));
  out.write_csv("greens.csv",
                size_sweep_table(c.params, {"pobc", "obc"}, {"N1", "1N"}, o.omegas, o.sizes, threads, res));
  out.write_csv("freq.csv", freq_sweep_table(c.params, {"pobc"}, {"N1", "1N"}, o.omega_from, o.omega_to,
                                             o.samples, threads, res));
}

void run_fig2(const ExperimentConfig& c, unsigned threads, RunOutput& out) {
  const auto& o = c.options;
  json& res = out.results();
  out.write_csv("curves.csv", curves_table(c.params, {c.params.n_sites}, {"CGBZ1"}, o.curve_samples, res));
  out.write_csv("roots.csv", roots_table(c.params, o.omegas, o.curve_samples));
  CsvTable profiles(kAnalyticCols);
  CsvTable kinks(kKinkCols);
  for (int n : o.sizes) {
    const ModelParams p = c.params.with_sites(n);
    for (std::size_t i = 0; i < o.omegas.size(); ++i) {
      const int l = resolve_site(o.excitations[i], n);
      std::vector<double> col;
      add_profile(profiles, p, o.omegas[i], l, parse_mode(o.closed_form_mode), threads, &col);
      add_kink(kinks, p, o.omegas[i], l, col, res);
    }
  }
  out.write_csv("analytic.csv", profiles);
  out.write_csv("kinks.csv", kinks);
}

void run_fig3(const ExperimentConfig& c, unsigned threads, RunOutput& out) {
  out.write_csv("disorder.csv", disorder_table(c.params, c.options, {1}, true, threads, out.results()));
}

void run_figS1(const ExperimentConfig& c, unsigned threads, RunOutput& out) {
  const auto& o = c.options;
  const ModelParams& p = c.params;
  CsvTable profiles(kAnalyticCols);
  CsvTable kinks(kKinkCols);
  for (Complex w : o.omegas) {
    for (int site : o.excitations) {
      const int l = resolve_site(site, p.n_sites);
      std::vector<double> col;
      add_profile(profiles, p, w, l, parse_mode(o.closed_form_mode), threads, &col);
      add_kink(kinks, p, w, l, col, out.results());
    }
  }
  out.write_csv("analytic.csv", profiles);
  out.write_csv("kinks.csv", kinks);
}

struct TaskInfo {
  void (*run)(const ExperimentConfig&, unsigned, RunOutput&);
  const char* summary;
  std::vector<std::pair<std::string, const std::vector<std::string>*>> files;
};

const std::map<Task, TaskInfo>& task_table() {
  static const std::map<Task, TaskInfo> table = {
      {Task::Spectrum,
       {run_spectrum, "Eigenvalues with their Bloch root pairs. pbc and obc are the thermodynamic-limit curves "
                      "sampled at `samples` points; pobc is the full spectrum of the N-site chain.",
        {{"spectra.csv", &kSpectraCols}}}},
      {Task::Curves,
       {run_curves, "Brillouin-zone curves in the complex beta plane. FGBZ1/FGBZ2 are the root sets of the "
                    "pOBC spectrum; the others are continuum curves with `curve_samples` points.",
        {{"curves.csv", &kCurveCols}}}},
      {Task::WindingMap,
       {run_winding_map, "Winding number of E(beta) - omega around `contour` on a grid of omega, plus the "
                         "regime transition omega_c along the ray omega_from -> omega_to (manifest results).",
        {{"winding.csv", &kWindingCols}}}},
      {Task::GreensSweep,
       {run_greens_sweep, "End-to-end Green's function G_{N,1} or G_{1,N} against chain length, for every "
                          "omega, endpoint rule and boundary. Rows with condition estimate >= 1e12 are kept "
                          "and flagged near_singular.",
        {{"greens.csv", &kGreensCols}}}},
      {Task::FreqSweep,
       {run_freq_sweep, "End-to-end Green's function along omega_from -> omega_to at N = params.n_sites. "
                        "The steepest log|G| step and omega_c go to the manifest results.",
        {{"greens.csv", &kGreensCols}}}},
      {Task::AnalyticCompare,
       {run_analytic_compare, "Numeric pOBC resolvent column G_{k,l} next to the closed-form residue "
                              "expression for every response site k. Excitation \"N\" means the last site.",
        {{"analytic.csv", &kAnalyticCols}}}},
      {Task::Disorder,
       {run_disorder, "Ensemble relative error |(G_disordered - G_clean) / G_clean| under uniform disorder "
                      "U(-half_width, half_width). With profile=true every k = 1..N is reported, otherwise "
                      "k = N only.",
        {{"disorder.csv", &kDisorderCols}}}},
      {Task::Fig1,
       {run_fig1, "Spectra (pbc, obc, pobc at each of spectrum_sizes), BZ/GBZ/fGBZ curves at params.n_sites, "
                  "size sweeps for every omega on pobc and obc, and a pobc frequency sweep.",
        {{"spectra.csv", &kSpectraCols},
         {"curves.csv", &kCurveCols},
         {"greens.csv", &kGreensCols},
         {"freq.csv", &kGreensCols}}}},
      {Task::Fig2,
       {run_fig2, "cGBZ1 with the Bloch roots of each omega, numeric and closed-form profiles G_{k,l} for "
                  "each (omega, excitation) pair at every size, and the kink of each profile.",
        {{"curves.csv", &kCurveCols},
         {"roots.csv", &kRootCols},
         {"analytic.csv", &kAnalyticCols},
         {"kinks.csv", &kKinkCols}}}},
      {Task::Fig3,
       {run_fig3, "Disorder error profiles over k at excitation l = 1 for every omega and target.",
        {{"disorder.csv", &kDisorderCols}}}},
      {Task::FigS1,
       {run_figS1, "Profiles at large |omega| for every excitation site, with kinks against N_0 and N_1.",
        {{"analytic.csv", &kAnalyticCols}, {"kinks.csv", &kKinkCols}}}},
  };
  return table;
}

}  // namespace

void run_task(const ExperimentConfig& c, unsigned threads, RunOutput& out) {
  out.results()["n_sites"] = c.params.n_sites;
  task_table().at(c.task).run(c, threads, out);
}

std::string summary(Task t) {
  const std::string s = task_table().at(t).summary;
  return s.substr(0, s.find(". ") == std::string::npos ? s.size() : s.find(". ") + 1);
}

std::string describe(Task t) {
  const TaskInfo& info = task_table().at(t);
  std::ostringstream s;
  s << "respond " << to_string(t) << " --config <file> [--threads n] [--out dir]\n\n"
    << info.summary << "\n\n"
    << "Config (JSON):\n"
    << "  name        file-name stem, required\n"
    << "  task        optional; must equal \"" << to_string(t) << "\" when present\n"
    << "  params      {t1, t2, delta: number or [re, im], n_sites: int, boundary: obc|pbc|pobc}\n"
    << "  output_dir  default \"out\"; --out overrides it\n"
    << "  options     (unknown keys are rejected)\n";
  for (const auto& key : option_keys(t)) {
    s << "    " << key << " = " << option_default_json(t, key).dump() << "\n";
  }
  s << "\nThreads: --threads, else RESPOND_THREADS, else 1. Results do not depend on the count.\n"
    << "\nOutputs (CSV, header row, 17 significant digits, LF):\n";
  for (const auto& [file, cols] : info.files) {
    s << "  " << file << ": ";
    for (std::size_t i = 0; i < cols->size(); ++i) s << (i ? "," : "") << (*cols)[i];
    s << "\n";
  }
  s << "  manifest.json: name, task, version, inputs, threads, wall_time_s, files[path, sha256, rows, "
       "columns], status, results\n"
    << "\nExit status: 0 ok, 2 config error (nothing written), 3 numerical failure (partial manifest).\n";
  return s.str();
}

}  // namespace respond::cli
