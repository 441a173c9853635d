#include "respond/disorder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "respond/error.hpp"
#include "respond/parallel.hpp"

namespace respond {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_ensemble(const DisorderSpec& spec, int trials) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (!(spec.half_width >= 0.0)) throw Error(ErrorCode::InvalidArgument, "half_width must be >= 0");
}

Complex clean_value(const ModelParams& p, const Matrix& clean, const GreenQuery& q) {
  const Complex g = resolvent_column(clean, q.omega, q.l).x(q.k - 1);
  if (!(std::abs(g) > 1e-300)) {
    throw Error(ErrorCode::CleanValueZero, "clean Green's function vanishes at N = " +
                                               std::to_string(p.n_sites));
  }
  return g;
}

ErrorStats to_stats(const GreenQuery& q, const std::vector<double>& samples, std::uint64_t seed) {
  ErrorStats s;
  s.query = q;
  s.trials = static_cast<int>(samples.size());
  s.seed = seed;
  const SummaryStats sum = summarize(samples);
  s.dropped_trials = s.trials - sum.count;
  s.median_abs_err = sum.median;
  s.mean_abs_err = sum.mean;
  s.p90_abs_err = sum.p90;
  return s;
}

}  // namespace

std::vector<double> relative_error_samples(const ModelParams& p, const GreenQuery& q,
                                           const DisorderSpec& spec, int trials,
                                           unsigned threads) {
  validate_params(p);
  check_ensemble(spec, trials);
  if (q.k < 1 || q.k > p.n_sites || q.l < 1 || q.l > p.n_sites) {
    throw Error(ErrorCode::InvalidArgument, "site index out of range");
  }
  const Complex g = clean_value(p, build_hamiltonian(p, BoundaryKind::Pobc), q);
  std::vector<double> out(static_cast<std::size_t>(trials), kNaN);
  parallel_for(out.size(), threads, [&](std::size_t i) {
    const Matrix h = build_hamiltonian(p, BoundaryKind::Pobc, spec, i);
    try {
      const Complex gbar = resolvent_column(h, q.omega, q.l).x(q.k - 1);
      out[i] = std::abs((gbar - g) / g);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NearSingular) throw;
    }
  });
  return out;
}

ErrorStats relative_error_ensemble(const ModelParams& p, const GreenQuery& q,
                                   const DisorderSpec& spec, int trials, unsigned threads) {
  return to_stats(q, relative_error_samples(p, q, spec, trials, threads), spec.seed);
}

std::vector<ErrorStats> error_profile(const ModelParams& p, Complex omega, int l,
                                      const DisorderSpec& spec, int trials, unsigned threads) {
  validate_params(p);
  check_ensemble(spec, trials);
  const int n = p.n_sites;
  if (l < 1 || l > n) throw Error(ErrorCode::InvalidArgument, "excitation site out of range");
  const Vector clean = resolvent_column(build_hamiltonian(p, BoundaryKind::Pobc), omega, l).x;
  for (int k = 1; k <= n; ++k) {
    if (!(std::abs(clean(k - 1)) > 1e-300)) {
      throw Error(ErrorCode::CleanValueZero, "clean G vanishes at k = " + std::to_string(k));
    }
  }
  // samples[k][trial]
  std::vector<std::vector<double>> samples(static_cast<std::size_t>(n),
                                           std::vector<double>(static_cast<std::size_t>(trials), kNaN));
  parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t i) {
    const Matrix h = build_hamiltonian(p, BoundaryKind::Pobc, spec, i);
    try {
      const Vector x = resolvent_column(h, omega, l).x;
      for (int k = 0; k < n; ++k) samples[k][i] = std::abs((x(k) - clean(k)) / clean(k));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NearSingular) throw;
    }
  });
  std::vector<ErrorStats> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    out.push_back(to_stats(GreenQuery{k, l, omega}, samples[k - 1], spec.seed));
  }
  return out;
}

SummaryStats summarize(std::vector<double> values) {
  std::erase_if(values, [](double v) { return std::isnan(v); });
  SummaryStats s;
  s.count = static_cast<int>(values.size());
  if (values.empty()) {
    s.median = s.mean = s.p90 = kNaN;
    return s;
  }
  // Sorting first makes the sum, and hence the mean, independent of trial order.
  std::sort(values.begin(), values.end());
  auto quantile = [&](double prob) {
    const double pos = prob * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
  };
  double total = 0.0;
  for (double v : values) total += v;
  s.mean = total / static_cast<double>(values.size());
  s.median = quantile(0.5);
  s.p90 = quantile(0.9);
  return s;
}

TrendTest mann_kendall(const std::vector<double>& series, double z_critical) {
  const std::size_t n = series.size();
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "Mann-Kendall needs at least 3 points");
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = series[j] - series[i];
      s += (d > 0.0) - (d < 0.0);
    }
  }
  std::vector<double> sorted = series;
  std::sort(sorted.begin(), sorted.end());
  const double nn = static_cast<double>(n);
  double var = nn * (nn - 1.0) * (2.0 * nn + 5.0);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    var -= t * (t - 1.0) * (2.0 * t + 5.0);
    i = j;
  }
  var /= 18.0;
  TrendTest r;
  r.s = s;
  if (var > 0.0) {
    if (s > 0.0) r.z = (s - 1.0) / std::sqrt(var);
    if (s < 0.0) r.z = (s + 1.0) / std::sqrt(var);
  }
  r.increasing = r.z > z_critical;
  r.decreasing = r.z < -z_critical;
  return r;
}

}  // namespace respond
