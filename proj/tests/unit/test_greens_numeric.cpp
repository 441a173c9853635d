#include <gtest/gtest.h>

#include <random>

#include "respond/bulk.hpp"
#include "respond/error.hpp"
#include "respond/greens_numeric.hpp"
#include "respond/spectra.hpp"
#include "respond/winding.hpp"

using namespace respond;

TEST(Resolvent, ZeroHamiltonianIsDiagonal) {
  const Matrix h = Matrix::Zero(5, 5);
  const Complex w(0.3, -0.7);
  const ResolventColumn col = resolvent_column(h, w, 4);
  for (int k = 0; k < 5; ++k) {
    EXPECT_LT(std::abs(col.x(k) - (k == 3 ? 1.0 / w : Complex{})), 1e-15);
  }
}

TEST(Resolvent, ThreeSiteAdjugate) {
  const GreenResult g = green_entry({0.5, 1.0, 0.0, 3}, BoundaryKind::Obc, {3, 1, 2.0});
  EXPECT_NEAR(std::abs(g.value - Complex(1.0 / 6.0)), 0.0, 1e-15);
  EXPECT_GT(g.cond_estimate, 0.0);
  EXPECT_EQ(g.method, GreenMethod::Numeric);
}

TEST(Resolvent, EndToEndAmplificationNearInverseDelta) {
  const GreenResult g = green_entry(baseline_params(60), BoundaryKind::Pobc, {60, 1, Complex(0, 0.1)});
  EXPECT_NEAR(std::abs(g.value), 1e5, 1e3);
}

TEST(Resolvent, HighPrecisionEndToEndValues) {
  // Frozen from 50-digit mpmath solves of the same linear systems.
  struct Row { int n; double g_times_delta; };
  for (Row r : {Row{40, -7.3667}, Row{60, -1.00347}, Row{80, -1.0000139}, Row{100, -1.00000006}}) {
    const GreenResult g = green_entry(baseline_params(r.n), BoundaryKind::Pobc, {r.n, 1, Complex(0, 0.1)});
    EXPECT_NEAR(g.value.real() * 1e-5, r.g_times_delta, 5e-5 * std::abs(r.g_times_delta)) << "N=" << r.n;
    EXPECT_LT(std::abs(g.value.imag()), 1e-6 * std::abs(g.value));
  }
  for (Row r : {Row{40, -1.14451e-5}, Row{60, -1.14527e-5}, Row{80, -1.14820e-5}, Row{100, -1.15962e-5}}) {
    const GreenResult g = green_entry(baseline_params(r.n), BoundaryKind::Pobc, {1, r.n, Complex(0, 0.4)});
    EXPECT_NEAR(g.value.real(), r.g_times_delta, 2e-5 * std::abs(r.g_times_delta)) << "N=" << r.n;
  }
}

TEST(Resolvent, IdentityResidual) {
  const ModelParams p = baseline_params(80);
  const Matrix h = build_hamiltonian(p, BoundaryKind::Pobc);
  const double hnorm = h.cwiseAbs().colwise().sum().maxCoeff();
  for (Complex w : {Complex(0, 0.1), Complex(0, 0.4), Complex(0.7, -0.2), Complex(0, 2.8)}) {
    for (int l : {1, 17, 80}) {
      const ResolventColumn col = resolvent_column(h, w, l);
      Vector e = Vector::Zero(80);
      e(l - 1) = 1.0;
      const double res = ((w * Matrix::Identity(80, 80) - h) * col.x - e).norm();
      EXPECT_LT(res, 1e-10 * (std::abs(w) + hnorm));
    }
  }
}

TEST(Resolvent, FirstResolventIdentity) {
  const ModelParams p = baseline_params(40);
  const Matrix h = build_hamiltonian(p, BoundaryKind::Pobc);
  const Complex w1(0.2, 0.5), w2(-0.4, 0.3);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> site(1, 40);
  for (int trial = 0; trial < 3; ++trial) {
    const int k = site(rng), l = site(rng);
    const Vector c1 = resolvent_column(h, w1, l).x;
    const Vector c2 = resolvent_column(h, w2, l).x;
    // G(w1) - G(w2) = (w2 - w1) G(w1) G(w2); the (k,l) entry needs row k of G(w1).
    Complex prod{};
    for (int m = 1; m <= 40; ++m) prod += resolvent_column(h, w1, m).x(k - 1) * c2(m - 1);
    const Complex lhs = c1(k - 1) - c2(k - 1);
    EXPECT_LT(std::abs(lhs - (w2 - w1) * prod), 1e-8 * std::abs(lhs)) << k << "," << l;
  }
}

TEST(Resolvent, SmallDeltaApproachesObc) {
  const ModelParams p = baseline_params(20).with_delta(1e-12);
  const GreenQuery q{20, 1, Complex(0, 0.1)};
  const Complex a = green_entry(p, BoundaryKind::Pobc, q).value;
  const Complex b = green_entry(p, BoundaryKind::Obc, q).value;
  EXPECT_LT(std::abs(a - b), 1e-6 * std::abs(b));
}

TEST(Resolvent, NearSingularAtEigenvalue) {
  const ModelParams p = baseline_params(3).with_delta(0.0);
  try {
    green_entry(p, BoundaryKind::Obc, {1, 1, Complex(1.0)});  // eigenvalue of the 3-site OBC chain
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NearSingular);
  }
}

TEST(Resolvent, SiteOutOfRange) {
  EXPECT_THROW(green_entry(baseline_params(10), BoundaryKind::Pobc, {11, 1, Complex(0, 0.1)}), Error);
}

TEST(SizeSweep, ObcExponentialLaw) {
  const ModelParams p = baseline_params(40).with_delta(0.0);
  std::vector<int> sizes;
  for (int n = 40; n <= 100; n += 10) sizes.push_back(n);
  const auto rows = size_sweep(p, BoundaryKind::Obc, Complex(0, 0.1), sizes, EndpointRule::NOne);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    const double x = r.n_sites, y = log10_magnitude(r.result);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double m = static_cast<double>(rows.size());
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  EXPECT_NEAR(slope, std::log10(1.317745), 0.01 * 0.11984);
}

TEST(SizeSweep, ObcValuesMatchContinuant) {
  // G_{N,1} of the open chain is t2^{N-1} / D_N(omega).
  const ModelParams p = baseline_params(40).with_delta(0.0);
  const Complex w(0, 0.1);
  const auto rows = size_sweep(p, BoundaryKind::Obc, w, {40, 70, 100}, EndpointRule::NOne);
  for (const auto& r : rows) {
    const Complex exact = std::pow(p.t2, r.n_sites - 1) / continuant(p.t1, p.t2, w, r.n_sites);
    EXPECT_LT(std::abs(r.result.value - exact), 1e-9 * std::abs(exact)) << "N = " << r.n_sites;
  }
  EXPECT_FALSE(rows[0].near_singular);
  EXPECT_TRUE(rows[2].near_singular);
}

TEST(SizeSweep, SuppressedEntryIsNearlySizeIndependent) {
  const auto rows = size_sweep(baseline_params(60), BoundaryKind::Pobc, Complex(0, 0.4), {60, 80, 100},
                               EndpointRule::OneN);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& r : rows) EXPECT_NEAR(std::abs(r.result.value), 1.14e-5, 0.03e-5);
}

TEST(SizeSweep, ThreadCountDoesNotChangeResults) {
  const std::vector<int> sizes{40, 50, 60, 70, 80};
  const auto a = size_sweep(baseline_params(60), BoundaryKind::Pobc, Complex(0, 0.1), sizes, EndpointRule::NOne, 1);
  const auto b = size_sweep(baseline_params(60), BoundaryKind::Pobc, Complex(0, 0.1), sizes, EndpointRule::NOne, 4);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].result.value, b[i].result.value);
    EXPECT_EQ(a[i].n_sites, sizes[i]);
  }
}

TEST(SizeSweep, RejectsTinySizes) {
  EXPECT_THROW(size_sweep(baseline_params(60), BoundaryKind::Pobc, Complex(0, 0.1), {2}, EndpointRule::NOne), Error);
}

TEST(EndpointRule, Parsing) {
  EXPECT_EQ(parse_endpoint_rule("N1"), EndpointRule::NOne);
  EXPECT_EQ(parse_endpoint_rule("(1,N)"), EndpointRule::OneN);
  EXPECT_THROW(parse_endpoint_rule("NN"), Error);
  const GreenQuery q = endpoint_query(EndpointRule::OneN, 30, Complex(0, 0.4));
  EXPECT_EQ(q.k, 1);
  EXPECT_EQ(q.l, 30);
}

TEST(FrequencySweep, PlateauThenDrop) {
  const FrequencySweep s = frequency_sweep(baseline_params(60), BoundaryKind::Pobc, Complex(0, 0.01),
                                           Complex(0, 0.5), 50, EndpointRule::NOne);
  ASSERT_EQ(s.rows.size(), 50u);
  for (const auto& r : s.rows) {
    const double w = r.result.query.omega.imag();
    if (w < 0.15) EXPECT_NEAR(log10_magnitude(r.result), 5.0, 0.02) << w;
    if (w > 0.35) EXPECT_LT(log10_magnitude(r.result), 3.0) << w;
  }
}

TEST(FrequencySweep, SteepestSlopeNearCriticalFrequency) {
  const ModelParams p = baseline_params(60);
  const FrequencySweep s =
      frequency_sweep(p, BoundaryKind::Pobc, Complex(0, 0.01), Complex(0, 0.5), 50, EndpointRule::NOne);
  ASSERT_TRUE(s.steepest_omega.has_value());
  const RegimeBoundary b = regime_boundary_scan(p, FrequencyRay{Complex{}, Complex(0, 1), 0.5, 50});
  EXPECT_NEAR(s.steepest_omega->imag(), b.omega_c.imag(), 0.02);
}

TEST(FrequencySweep, ReverseRuleMirrorsAboutTransition) {
  // Both curves normalized by their scale-free levels (1/delta and delta),
  // then (1,N) at omega_c - d compared with (N,1) at omega_c + d.
  const ModelParams p = baseline_params(60);
  const double wc =
      regime_boundary_scan(p, FrequencyRay{Complex{}, Complex(0, 1), 0.5, 50}).omega_c.imag();
  const double delta = std::abs(p.delta);
  for (int j = 1; j <= 22; ++j) {
    const double d = 0.01 * j;
    const Complex up = green_entry(p, BoundaryKind::Pobc, {60, 1, Complex(0, wc + d)}).value;
    const Complex down = green_entry(p, BoundaryKind::Pobc, {1, 60, Complex(0, wc - d)}).value;
    if (std::abs(up) < 1e-12 || std::abs(down) < 1e-12) continue;
    const double a = std::log10(std::abs(up) * delta);
    const double b = std::log10(std::abs(down) / delta);
    EXPECT_LE(std::abs(a - b), 0.1 * std::max(std::abs(a), std::abs(b))) << "d = " << d;
  }
}
