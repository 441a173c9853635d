#pragma once

#include <vector>

#include "respond/bulk.hpp"
#include "respond/greens_numeric.hpp"
#include "respond/log_polar.hpp"
#include "respond/model.hpp"

namespace respond {

/// Regime of omega for a chain of p.n_sites, from the position of the Bloch
/// roots relative to cGBZ1. Throws UnclassifiedConfiguration when beta_a is
/// outside and beta_b inside (or both inside).
Regime classify_regime(const ModelParams& p, Complex omega, int curve_samples = 1024);

/// Contour-integral term of order q (boundary traversals) of the Laurent
/// expansion of G_{k,l}(omega) over cGBZ1.
struct ExpansionTerm {
  int q = 0;
  Complex value;
  int samples_used = 0;
  double integrand_scale = 0.0;  ///< mean |integrand| on the final grid, same prefactor as value
};

struct QuadratureOptions {
  int initial_samples = 256;
  int max_samples = 1 << 16;
  double relative_tolerance = 1e-6;
};

ExpansionTerm expansion_term(const ModelParams& p, Complex omega, int k, int l, int q,
                             const QuadratureOptions& opts = {});

enum class ClosedFormMode {
  LeadingSum,  ///< sum of the regime's two leading candidates
  Dominant,    ///< the larger candidate only
};

GreenResult closed_form(const ModelParams& p, Complex omega, int k, int l,
                        ClosedFormMode mode = ClosedFormMode::LeadingSum);

// Individual residue expressions in log-polar form, so beta^{+-N} never
// overflows. q_minus_one is the nontrivial-regime leading term (k >= l);
// q_zero the full q = 0 residue for the given regime; q_one the trivial-regime
// right-boundary term; correction the first-order-in-delta r(G).
LogPolar closed_form_q_minus_one(const ModelParams& p, const BlochRoots& roots, int k, int l);
LogPolar closed_form_q_zero(const ModelParams& p, const BlochRoots& roots, Regime regime, int k,
                            int l);
LogPolar closed_form_q_one(const ModelParams& p, const BlochRoots& roots, int k, int l);
LogPolar closed_form_correction(const ModelParams& p, const BlochRoots& roots, int k, int l);

struct CriticalScales {
  double n_c = 0.0;  ///< fGBZ bifurcation length
  double n_0 = 0.0;  ///< trivial-regime crossover distance
  double n_1 = 0.0;  ///< anomalous-scaling transition distance
  double l_c = 0.0;  ///< localization length from the theta = 0 cGBZ1 point
};

/// N_c = |ln(t2/delta) / ln r| alone; independent of omega.
double critical_length(const ModelParams& p);

CriticalScales critical_scales(const ModelParams& p, Complex omega);

/// Right/left eigenvector superposition weights of the two-root ansatz.
struct EigenCoefficients {
  Complex c1{1.0, 0.0};
  Complex c2;
  Complex c1_tilde{1.0, 0.0};
  Complex c2_tilde{-1.0, 0.0};
  bool corrected = false;
};

EigenCoefficients eigen_coefficients(const ModelParams& p, Complex beta1, Complex beta2,
                                     bool corrected);

struct KinkFit {
  double breakpoint = 0.0;
  double slope_left = 0.0;
  double slope_right = 0.0;
  double residual = 0.0;  ///< total squared residual of the two-segment fit
};

struct KinkOptions {
  int min_points_per_side = 10;
  double noise_rms = 1e-3;  ///< single-line RMS below this means no kink
};

/// Two-segment least-squares fit of y(x); x must be increasing. Throws NoKink.
KinkFit crossover_detect(const std::vector<double>& x, const std::vector<double>& y,
                         const KinkOptions& opts = {});

}  // namespace respond
