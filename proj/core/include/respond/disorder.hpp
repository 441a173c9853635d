#pragma once

#include <cstdint>
#include <vector>

#include "respond/greens_numeric.hpp"
#include "respond/model.hpp"

namespace respond {

/// Ensemble statistics of |dG| with dG = (G_disordered - G_clean) / G_clean.
struct ErrorStats {
  GreenQuery query;
  int trials = 0;
  int dropped_trials = 0;  ///< NearSingular realizations
  double median_abs_err = 0.0;
  double mean_abs_err = 0.0;
  double p90_abs_err = 0.0;
  std::uint64_t seed = 0;
};

/// Per-trial |dG| values, indexed by trial; NaN marks a dropped trial.
std::vector<double> relative_error_samples(const ModelParams& p, const GreenQuery& q,
                                           const DisorderSpec& spec, int trials,
                                           unsigned threads = 1);

ErrorStats relative_error_ensemble(const ModelParams& p, const GreenQuery& q,
                                   const DisorderSpec& spec, int trials, unsigned threads = 1);

/// ErrorStats for every response site k = 1..N at fixed excitation l. Each
/// trial's Hamiltonian is shared by all k.
std::vector<ErrorStats> error_profile(const ModelParams& p, Complex omega, int l,
                                      const DisorderSpec& spec, int trials,
                                      unsigned threads = 1);

/// Statistics of a sample set (NaNs skipped); quantiles by linear interpolation.
struct SummaryStats {
  double median = 0.0;
  double mean = 0.0;
  double p90 = 0.0;
  int count = 0;
};

SummaryStats summarize(std::vector<double> values);

struct TrendTest {
  double s = 0.0;  ///< Mann-Kendall S statistic
  double z = 0.0;  ///< continuity-corrected normal score
  bool increasing = false;  ///< significant upward trend at the given level
  bool decreasing = false;
};

/// Two-sided Mann-Kendall trend test (normal approximation with tie correction).
TrendTest mann_kendall(const std::vector<double>& series, double z_critical = 1.959963984540054);

}  // namespace respond
