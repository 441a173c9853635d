#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "respond/model.hpp"
#include "respond/spectra.hpp"

namespace respond {

enum class CurveLabel { BZ, GBZ, RGBZ1, RGBZ2, CGBZ1, CGBZ2, FGBZ1, FGBZ2 };

std::string_view to_string(CurveLabel label) noexcept;
CurveLabel parse_curve_label(std::string_view s);

/// Closed, counterclockwise sampling of a contour in the complex-beta plane.
/// The last sample connects back to the first.
struct Curve {
  CurveLabel label = CurveLabel::BZ;
  std::vector<Complex> samples;
  std::vector<double> theta;       ///< defining angle of each sample
  std::optional<int> n_sites;      ///< set for rGBZ, cGBZ and fGBZ
  bool discrete = false;           ///< fGBZ point sets, not continuum samples
};

struct CurvePair {
  Curve first;
  Curve second;
};

/// BZ (unit circle) and GBZ (circle of radius |r|). Requires m >= 64.
CurvePair standard_curves(const ModelParams& p, int m);

struct RgbzCircles {
  Curve rgbz1;  ///< radius (t2/delta)^{1/N}
  Curve rgbz2;  ///< radius r^2 (delta/t2)^{1/N}
  bool below_critical_length = false;  ///< N <= N_c; circles still returned
};

RgbzCircles rgbz_circles(const ModelParams& p, int m);

struct CgbzOptions {
  double tolerance = 1e-12;
  int max_fixed_point_iterations = 200;
  int max_newton_iterations = 100;
};

/// Preimage of the rGBZ circle under the renormalization map f1 (branch 1)
/// or f2 (branch 2), sampled at theta_j = 2 pi j / m.
Curve cgbz_curve(const ModelParams& p, int branch, int m, const CgbzOptions& opts = {});

/// Solves beta (1 - beta^2/r^2)^{1/N} = rho1 e^{i theta} for one angle.
Complex cgbz1_point(const ModelParams& p, double theta, const CgbzOptions& opts = {});

/// Forward maps. f1(b) = b (1 - b^2/r^2)^{1/N}, f2(b) = b / (1 - r^2/b^2)^{1/N}.
Complex renormalize_f1(const ModelParams& p, Complex beta);
Complex renormalize_f2(const ModelParams& p, Complex beta);

/// FGBZ1 = {beta1}, FGBZ2 = {beta2} of a pOBC spectrum, each sorted by argument.
CurvePair fgbz_points(const SpectrumSet& spectrum);

/// Rebuilds a continuum curve of the given label with m samples.
Curve make_curve(CurveLabel label, const ModelParams& p, int m);

/// Polygonal winding number of the sample loop about z.
int polygon_winding(const std::vector<Complex>& loop, Complex z);

/// Minimum distance from z to any segment of the closed polygon.
double distance_to_polygon(const std::vector<Complex>& loop, Complex z);

/// True iff the polygonal winding of c about z is nonzero. Throws OnBoundary
/// when z is within `boundary_tol` of a segment.
bool point_inside(const Curve& c, Complex z, double boundary_tol = 1e-9);

}  // namespace respond
