#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "respond/curves.hpp"
#include "respond/error.hpp"
#include "respond/spectra.hpp"
#include "respond/winding.hpp"

using namespace respond;

namespace {

double image_distance(const Curve& c, const ModelParams& p, Complex w) {
  std::vector<Complex> img;
  for (Complex b : c.samples) img.push_back(bulk_energy(p, b));
  return distance_to_polygon(img, w);
}

}  // namespace

TEST(Winding, CgbzRegimes) {
  const ModelParams p = baseline_params(60);
  const Curve c = cgbz_curve(p, 1, 1024);
  EXPECT_EQ(winding_number(c, p, Complex(0, 0.1)).value, -1);
  EXPECT_EQ(winding_number(c, p, Complex(0, 0.4)).value, 0);
  const WindingResult w = winding_number(c, p, Complex(0, 0.1));
  EXPECT_LT(w.max_step, std::numbers::pi / 2);
  EXPECT_EQ(w.contour_label, CurveLabel::CGBZ1);
}

TEST(Winding, GbzFarFrequency) {
  const ModelParams p = baseline_params(60);
  const Curve gbz = make_curve(CurveLabel::GBZ, p, 256);
  EXPECT_EQ(winding_number(gbz, p, Complex(0, 2)).value, 0);
}

TEST(Winding, OracleExamples) {
  const ModelParams p = baseline_params(60);
  EXPECT_EQ(winding_oracle(make_curve(CurveLabel::BZ, p, 256), p, Complex{}), -1);
  const Curve c = cgbz_curve(p, 1, 1024);
  EXPECT_EQ(winding_oracle(c, p, Complex(0, 0.1)), -1);
  EXPECT_EQ(winding_oracle(c, p, Complex(0, 0.4)), 0);
}

TEST(Winding, AgreesWithOracleOnRandomFrequencies) {
  const ModelParams p = baseline_params(60);
  const Curve c = cgbz_curve(p, 1, 1024);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  int checked = 0;
  while (checked < 200) {
    const Complex w(u(rng), u(rng));
    if (std::abs(w) > 2.5 || image_distance(c, p, w) < 1e-3) continue;
    EXPECT_EQ(winding_number(c, p, w).value, winding_oracle(c, p, w)) << w;
    ++checked;
  }
}

TEST(Winding, OrientationFlipNegates) {
  const ModelParams p = baseline_params(60);
  Curve c = cgbz_curve(p, 1, 512);
  std::reverse(c.samples.begin(), c.samples.end());
  EXPECT_EQ(winding_number(c, p, Complex(0, 0.1)).value, 1);
}

TEST(Winding, InvariantUnderDoubling) {
  const ModelParams p = baseline_params(60);
  for (Complex w : {Complex(0, 0.1), Complex(0.5, 0.05), Complex(-1.0, -0.3)}) {
    EXPECT_EQ(winding_number(cgbz_curve(p, 1, 256), p, w).value,
              winding_number(cgbz_curve(p, 1, 512), p, w).value);
  }
}

TEST(Winding, OmegaOnImageRejected) {
  const ModelParams p = baseline_params(60);
  const Curve c = cgbz_curve(p, 1, 256);
  try {
    winding_number(c, p, bulk_energy(p, c.samples[10]));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OmegaOnImage);
  }
}

TEST(Winding, FgbzPointSetAsPolygon) {
  const ModelParams p = baseline_params(60);
  const Curve f = fgbz_points(pobc_spectrum(p)).first;
  EXPECT_EQ(winding_number(f, p, Complex(0, 0.1)).value, -1);
  EXPECT_EQ(winding_number(f, p, Complex(0, 0.4)).value, 0);
}

TEST(Winding, CoarseDiscreteSetIsUnresolved) {
  const ModelParams p = baseline_params(60);
  Curve f = fgbz_points(pobc_spectrum(p)).first;
  std::vector<Complex> sparse;
  for (std::size_t j = 0; j < f.samples.size(); j += 15) sparse.push_back(f.samples[j]);
  f.samples = sparse;
  try {
    winding_number(f, p, Complex(0, 0.1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnresolvedWinding);
  }
}

TEST(RegimeBoundary, CriticalFrequency) {
  const ModelParams p = baseline_params(60);
  const RegimeBoundary b = regime_boundary_scan(p, FrequencyRay{Complex{}, Complex(0, 1), 0.5, 50});
  EXPECT_NEAR(b.omega_c.imag(), 0.233, 0.01);
  EXPECT_NEAR(b.omega_c.real(), 0.0, 1e-12);
  EXPECT_EQ(b.winding_below, -1);
  EXPECT_EQ(b.winding_above, 0);
}

TEST(RegimeBoundary, MatchesSpectralLoopTop) {
  const ModelParams p = baseline_params(60);
  double top = 0.0;
  for (const auto& pt : pobc_spectrum(p).points) top = std::max(top, pt.energy.imag());
  const RegimeBoundary b = regime_boundary_scan(p, FrequencyRay{Complex{}, Complex(0, 1), 0.5, 50});
  EXPECT_NEAR(b.omega_c.imag(), top, 2e-3);
}

TEST(RegimeBoundary, NoTransitionInsideOneRegime) {
  const ModelParams p = baseline_params(60);
  try {
    regime_boundary_scan(p, FrequencyRay{Complex(0, 0.3), Complex(0, 1), 0.5, 20});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoTransition);
  }
}
