#pragma once

#include "respond/curves.hpp"

namespace respond {

struct WindingResult {
  int value = 0;
  CurveLabel contour_label = CurveLabel::CGBZ1;
  Complex omega;
  double max_step = 0.0;  ///< largest per-segment argument increment
  int samples = 0;        ///< samples of the contour actually used
};

/// Winding of E(beta) - omega as beta runs once around c. Continuum curves
/// are rebuilt at doubled resolution (up to `max_refinements` times) while
/// any per-segment argument step reaches pi/2.
WindingResult winding_number(const Curve& c, const ModelParams& p, Complex omega,
                             int max_refinements = 4);

/// Argument-principle oracle: roots of t1 beta^2 - omega beta + t2 inside c
/// minus the pole at beta = 0 (if inside).
int winding_oracle(const Curve& c, const ModelParams& p, Complex omega);

struct FrequencyRay {
  Complex origin;
  Complex direction;
  double t_max = 1.0;
  int steps = 64;

  [[nodiscard]] Complex at(double t) const { return origin + t * direction; }
};

struct RegimeBoundary {
  Complex omega_c;
  int winding_below = 0;  ///< winding at the origin side
  int winding_above = 0;
};

/// Scans the ray on `steps` points for the first change of cGBZ1 winding and
/// bisects it down to |d omega| < tolerance, or until a midpoint falls on the
/// sampled contour image. Throws NoTransition.
RegimeBoundary regime_boundary_scan(const ModelParams& p, const FrequencyRay& ray,
                                    int curve_samples = 1024, double tolerance = 1e-6);

}  // namespace respond
