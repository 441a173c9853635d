#include <gtest/gtest.h>

#include <random>

#include "respond/curves.hpp"
#include "respond/error.hpp"
#include "respond/greens_analytic.hpp"
#include "respond/winding.hpp"

using namespace respond;

namespace {

const Complex kOmega1(0, 0.1);
const Complex kOmega2(0, 0.4);

Complex numeric(const ModelParams& p, int k, int l, Complex w) {
  return green_entry(p, BoundaryKind::Pobc, {k, l, w}).value;
}

// log10|G_{k,N}| against distance N - k, increasing distance.
void column_profile(const ModelParams& p, Complex w, std::vector<double>& x, std::vector<double>& y) {
  const int n = p.n_sites;
  const Vector col = resolvent_column(build_hamiltonian(p, BoundaryKind::Pobc), w, n).x;
  x.clear();
  y.clear();
  for (int k = n; k >= 1; --k) {
    x.push_back(n - k);
    y.push_back(std::log10(std::abs(col(k - 1))));
  }
}

}  // namespace

TEST(ClassifyRegime, BaselineFrequencies) {
  const ModelParams p = baseline_params(60);
  EXPECT_EQ(classify_regime(p, kOmega1), Regime::Nontrivial);
  EXPECT_EQ(classify_regime(p, kOmega2), Regime::Trivial);
}

TEST(ClassifyRegime, MatchesWindingOnRandomFrequencies) {
  const ModelParams p = baseline_params(60);
  const Curve c = cgbz_curve(p, 1, 1024);
  std::vector<Complex> image;
  for (Complex b : c.samples) image.push_back(bulk_energy(p, b));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  int checked = 0;
  while (checked < 100) {
    const Complex w(u(rng), u(rng));
    if (distance_to_polygon(image, w) < 1e-3) continue;
    const int wn = winding_number(c, p, w).value;
    ASSERT_TRUE(wn == -1 || wn == 0) << w;
    EXPECT_EQ(classify_regime(p, w), wn == -1 ? Regime::Nontrivial : Regime::Trivial) << w;
    ++checked;
  }
}

TEST(ExpansionTerm, LeadingTermIsInverseDelta) {
  const ExpansionTerm t = expansion_term(baseline_params(60), kOmega1, 60, 1, -1);
  EXPECT_NEAR(t.value.real(), -1e5, 1e2);
  EXPECT_GE(t.samples_used, 256);
}

TEST(ExpansionTerm, ZerothOrderVanishesForForwardResponse) {
  const ModelParams p = baseline_params(60);
  for (int k : {1, 30, 60}) {
    const ExpansionTerm t = expansion_term(p, kOmega1, k, 1, 0);
    EXPECT_LT(std::abs(t.value) / t.integrand_scale, 1e-8) << "k = " << k;
  }
}

TEST(ExpansionTerm, SumMatchesResolvent) {
  const ModelParams p = baseline_params(60);
  for (auto [k, l] : {std::pair{30, 1}, std::pair{60, 1}, std::pair{45, 20}}) {
    Complex sum{};
    for (int q = -2; q <= 2; ++q) sum += expansion_term(p, kOmega1, k, l, q).value;
    const Complex g = numeric(p, k, l, kOmega1);
    EXPECT_LT(std::abs(sum - g), 0.01 * std::abs(g)) << k << "," << l;
  }
}

TEST(ExpansionTerm, NontrivialHierarchy) {
  const ModelParams p = baseline_params(60);
  for (int k : {20, 40, 60}) {
    const double q0 = std::abs(expansion_term(p, kOmega1, k, 1, 0).value);
    const double qm1 = std::abs(expansion_term(p, kOmega1, k, 1, -1).value);
    EXPECT_LT(q0, 1e-6 * qm1) << "k = " << k;
  }
}

TEST(ExpansionTerm, TrivialHierarchy) {
  const ModelParams p = baseline_params(60);
  for (int k : {20, 40, 60}) {
    const double q0 = std::abs(expansion_term(p, kOmega2, k, 1, 0).value);
    const double q1 = std::abs(expansion_term(p, kOmega2, k, 1, 1).value);
    EXPECT_LT(q1, q0) << "k = " << k;
  }
}

TEST(ExpansionTerm, RejectsCoarseGrid) {
  QuadratureOptions o;
  o.initial_samples = 128;
  EXPECT_THROW(expansion_term(baseline_params(60), kOmega1, 60, 1, -1, o), Error);
}

TEST(ExpansionTerm, ReportsNonConvergence) {
  QuadratureOptions o;
  o.max_samples = 512;
  o.relative_tolerance = 1e-15;
  try {
    expansion_term(baseline_params(60), kOmega1, 30, 1, 0, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::QuadratureNonConvergent);
  }
}

TEST(ClosedForm, ScaleFreeAmplificationIsExact) {
  for (int n : {60, 80, 100}) {
    const GreenResult g = closed_form(baseline_params(n), kOmega1, n, 1);
    EXPECT_NEAR(g.value.real(), -1e5, 1e-10 * 1e5) << "N = " << n;
    EXPECT_NEAR(g.value.imag(), 0.0, 1e-10 * 1e5);
    EXPECT_EQ(g.dominant_q, -1);
    EXPECT_EQ(g.regime, Regime::Nontrivial);
    EXPECT_EQ(g.method, GreenMethod::ClosedForm);
  }
}

TEST(ClosedForm, IdentityHoldsAcrossNontrivialRegime) {
  const ModelParams p = baseline_params(60);
  for (Complex w : {Complex(0, 0.05), Complex(0, 0.2), Complex(0.3, 0.1), Complex(-0.5, -0.05)}) {
    ASSERT_EQ(classify_regime(p, w), Regime::Nontrivial) << w;
    const GreenResult g = closed_form(p, w, 60, 1);
    EXPECT_LT(std::abs(g.value - Complex(-1e5)), 1e-10 * 1e5) << w;
  }
}

TEST(ClosedForm, SuppressedEndToEnd) {
  const GreenResult g = closed_form(baseline_params(60), kOmega2, 1, 60);
  EXPECT_NEAR(g.value.real(), -1.14424e-5, 1e-4 * 1.14424e-5);
  EXPECT_EQ(g.regime, Regime::Trivial);
  EXPECT_EQ(g.dominant_q, 1);
}

TEST(ClosedForm, BackwardNeighbourInNontrivialRegime) {
  const GreenResult g = closed_form(baseline_params(60), kOmega1, 1, 2);
  EXPECT_NEAR(g.value.real(), -1.0, 1e-12);
  EXPECT_EQ(g.dominant_q, 0);
}

TEST(ClosedForm, AgreesWithResolventOnForwardProfile) {
  const ModelParams p = baseline_params(60);
  for (int k = 1; k <= 60; ++k) {
    const Complex g = numeric(p, k, 1, kOmega1);
    EXPECT_LT(std::abs(closed_form(p, kOmega1, k, 1).value - g), 0.05 * std::abs(g)) << "k = " << k;
  }
}

TEST(ClosedForm, AgreesWithResolventOnBackwardProfileAwayFromKink) {
  const ModelParams p = baseline_params(60);
  std::vector<double> x, y;
  column_profile(p, kOmega2, x, y);
  const double kink_k = 60 - crossover_detect(x, y).breakpoint;
  for (int k = 1; k <= 60; ++k) {
    if (std::abs(k - kink_k) <= 2.0) continue;
    const Complex g = numeric(p, k, 60, kOmega2);
    EXPECT_LT(std::abs(closed_form(p, kOmega2, k, 60).value - g), 0.05 * std::abs(g)) << "k = " << k;
  }
}

TEST(ClosedForm, DominantModePicksLargerCandidate) {
  const ModelParams p = baseline_params(60);
  const BlochRoots r = bloch_roots(p, kOmega2);
  const LogPolar g0 = closed_form_q_zero(p, r, Regime::Trivial, 1, 60);
  const LogPolar g1 = closed_form_q_one(p, r, 1, 60);
  const GreenResult d = closed_form(p, kOmega2, 1, 60, ClosedFormMode::Dominant);
  const Complex expect = g0.log_abs > g1.log_abs ? g0.value() : g1.value();
  EXPECT_LT(std::abs(d.value - expect), 1e-14 * std::abs(expect));
}

TEST(ClosedForm, ForwardTrivialUsesCorrection) {
  const ModelParams p = baseline_params(60);
  for (int k : {5, 30, 59}) {
    const Complex g = numeric(p, k, 1, kOmega2);
    EXPECT_LT(std::abs(closed_form(p, kOmega2, k, 1).value - g), 0.01 * std::abs(g)) << "k = " << k;
  }
}

TEST(ClosedForm, LargeRootsStayFinite) {
  const GreenResult g = closed_form(baseline_params(100), Complex(0, 2.8), 100, 10);
  ASSERT_TRUE(g.log10_abs.has_value());
  EXPECT_TRUE(std::isfinite(*g.log10_abs));
  const Complex n = numeric(baseline_params(100), 100, 10, Complex(0, 2.8));
  EXPECT_NEAR(*g.log10_abs, std::log10(std::abs(n)), 0.05);
}

TEST(ClosedForm, ZeroDeltaRejected) {
  EXPECT_THROW(closed_form(baseline_params(60).with_delta(0.0), kOmega1, 60, 1), Error);
}

TEST(CriticalScales, BaselineLengths) {
  const ModelParams p = baseline_params(60);
  EXPECT_NEAR(critical_length(p), 33.22, 0.005);
  const CriticalScales s = critical_scales(p, kOmega2);
  EXPECT_NEAR(s.n_c, 33.22, 0.005);
  EXPECT_NEAR(s.n_0, 13.38, 0.005);
  const CriticalScales big = critical_scales(baseline_params(100), Complex(0, 2.8));
  EXPECT_NEAR(big.n_1, 66.1, 0.05);
  EXPECT_NEAR(big.n_0, 41.93, 0.01);
}

TEST(CriticalScales, LocalizationLengthScalesWithSize) {
  const double a = critical_scales(baseline_params(60), kOmega2).l_c;
  const double b = critical_scales(baseline_params(120), kOmega2).l_c;
  EXPECT_NEAR(a, 4.620, 1e-3);
  EXPECT_NEAR(b / a, 2.0, 0.1);
}

TEST(CriticalScales, Errors) {
  EXPECT_THROW(critical_scales(baseline_params(60).with_delta(0.0), kOmega2), Error);
  EXPECT_THROW(critical_scales(baseline_params(60), Complex{}), Error);  // equal moduli
}

TEST(EigenCoefficients, UncorrectedValues) {
  const ModelParams p = baseline_params(60);
  const Complex b1(1.1, 0.3), b2 = p.r2() / b1;
  const EigenCoefficients c = eigen_coefficients(p, b1, b2, false);
  EXPECT_EQ(c.c1, Complex(1.0));
  EXPECT_EQ(c.c1_tilde, Complex(1.0));
  EXPECT_EQ(c.c2_tilde, Complex(-1.0));
  EXPECT_LT(std::abs(c.c2 + ipow(b1, 61) / ipow(b2, 61)), 1e-14 * std::abs(c.c2));
  const EigenCoefficients d = eigen_coefficients(p, b1, b2, true);
  EXPECT_TRUE(d.corrected);
  EXPECT_NE(d.c1, Complex(1.0));
}

TEST(CrossoverDetect, PureExponentialHasNoKink) {
  std::vector<double> x, y;
  for (int i = 0; i < 40; ++i) {
    x.push_back(i);
    y.push_back(1.0 + 0.3 * i);
  }
  try {
    crossover_detect(x, y);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoKink);
  }
}

TEST(CrossoverDetect, SyntheticHinge) {
  std::vector<double> x, y;
  for (int i = 0; i < 60; ++i) {
    x.push_back(i);
    y.push_back(i < 25 ? -0.1 * i : -2.5 - 0.4 * (i - 25));
  }
  const KinkFit f = crossover_detect(x, y);
  EXPECT_NEAR(f.breakpoint, 24.5, 1.0);
  EXPECT_NEAR(f.slope_left, -0.1, 1e-2);
  EXPECT_NEAR(f.slope_right, -0.4, 1e-2);
}

TEST(CrossoverDetect, TooFewPoints) {
  EXPECT_THROW(crossover_detect({0, 1, 2}, {0, 1, 3}), Error);
}

TEST(CrossoverDetect, TrivialRegimeKinkTracksFormula) {
  for (int n : {60, 80, 100}) {
    const ModelParams p = baseline_params(n);
    std::vector<double> x, y;
    column_profile(p, kOmega2, x, y);
    EXPECT_NEAR(crossover_detect(x, y).breakpoint, critical_scales(p, kOmega2).n_0, 3.0) << "N = " << n;
  }
}

TEST(CrossoverDetect, AnomalousScalingKink) {
  const ModelParams p = baseline_params(100);
  const Complex w(0, 2.8);
  const Vector col = resolvent_column(build_hamiltonian(p, BoundaryKind::Pobc), w, 10).x;
  std::vector<double> x, y;
  for (int k = 10; k <= 100; ++k) {
    x.push_back(k - 10);
    y.push_back(std::log10(std::abs(col(k - 1))));
  }
  EXPECT_NEAR(crossover_detect(x, y).breakpoint, critical_scales(p, w).n_1, 3.0);
}
