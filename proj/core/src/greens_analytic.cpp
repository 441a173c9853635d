#include "respond/greens_analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "respond/curves.hpp"
#include "respond/error.hpp"

namespace respond {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_sites(const ModelParams& p, int k, int l) {
  if (k < 1 || k > p.n_sites || l < 1 || l > p.n_sites) {
    throw Error(ErrorCode::InvalidArgument, "site index out of range");
  }
}

void require_delta(const ModelParams& p) {
  if (std::abs(p.delta) == 0.0) throw Error(ErrorCode::ZeroDelta, "delta must be nonzero");
}

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Shorthands for log-polar powers of the roots and of r^2.
struct RootPowers {
  LogPolar a, b, r2, t1, t2, delta;

  RootPowers(const ModelParams& p, const BlochRoots& roots)
      : a(LogPolar::from(roots.beta_a)),
        b(LogPolar::from(roots.beta_b)),
        r2(LogPolar::from(p.r2())),
        t1(LogPolar::from(p.t1)),
        t2(LogPolar::from(p.t2)),
        delta(LogPolar::from(p.delta)) {}

  // Numerator F(z) = z^{k-l} - z^{k+l}/r^{2l} - (z^{2N+2-k-l}/r^{2N+2-2k} - z^{2N+2+l-k}/r^{2N+2+2l-2k})
  [[nodiscard]] LogPolar numerator(LogPolar z, int n, int k, int l) const {
    return log_sum({z.pow(k - l), -(z.pow(k + l) / r2.pow(l)),
                    -(z.pow(2 * n + 2 - k - l) / r2.pow(n + 1 - k)),
                    z.pow(2 * n + 2 + l - k) / r2.pow(n + 1 + l - k)});
  }
};

LogPolar one() { return LogPolar{0.0, 0.0}; }

}  // namespace

Regime classify_regime(const ModelParams& p, Complex omega, int curve_samples) {
  const BlochRoots roots = bloch_roots(p, omega);
  const Curve c = cgbz_curve(p, 1, curve_samples);
  const bool a_inside = point_inside(c, roots.beta_a);
  const bool b_inside = point_inside(c, roots.beta_b);
  if (!a_inside && !b_inside) return Regime::Nontrivial;
  if (a_inside && !b_inside) return Regime::Trivial;
  throw Error(ErrorCode::UnclassifiedConfiguration,
              "Bloch roots in an unexpected position relative to cGBZ1");
}

ExpansionTerm expansion_term(const ModelParams& p, Complex omega, int k, int l, int q,
                             const QuadratureOptions& opts) {
  validate_params(p);
  require_delta(p);
  require_sites(p, k, l);
  if (opts.initial_samples < 256) {
    throw Error(ErrorCode::InvalidArgument, "expansion_term needs at least 256 samples");
  }
  const int n = p.n_sites;
  const Complex r2 = p.r2();
  const Complex rho = std::pow(p.t2 / p.delta, 1.0 / n);
  const Complex prefactor = std::pow(p.delta / p.t2, static_cast<double>(q));

  // Integrand times d(beta)/d(theta) / (2 pi i), with the cGBZ1 parametrized
  // through beta~ = rho e^{i theta} = f1(beta).
  auto node = [&](double theta) {
    const Complex beta = cgbz1_point(p, theta);
    const Complex u = 1.0 - beta * beta / r2;
    const Complex f1_prime =
        std::pow(u, 1.0 / n) * (1.0 - 2.0 * (beta * beta / r2) / (static_cast<double>(n) * u));
    const Complex numer = ipow(beta, k - l) - ipow(beta, k + l) / ipow(r2, l) -
                          (ipow(beta, 2 * n + 2 - k - l) / ipow(r2, n + 1 - k) -
                           ipow(beta, 2 * n + 2 + l - k) / ipow(r2, n + 1 + l - k));
    const Complex kernel = ipow(beta, static_cast<long long>(q) * n) * ipow(u, q);
    const Complex integrand = numer / (beta * (omega - bulk_energy(p, beta))) * kernel;
    const Complex tilde = rho * std::polar(1.0, theta);
    return integrand * tilde / f1_prime;
  };

  int m = opts.initial_samples;
  Complex sum{};
  double scale = 0.0;
  for (int j = 0; j < m; ++j) {
    const Complex g = node(kTwoPi * j / m);
    sum += g;
    scale += std::abs(g);
  }
  Complex estimate = sum / static_cast<double>(m);
  while (2 * m <= opts.max_samples) {
    // Doubling reuses the existing nodes; only the odd ones are new.
    for (int j = 1; j < 2 * m; j += 2) {
      const Complex g = node(kTwoPi * j / (2 * m));
      sum += g;
      scale += std::abs(g);
    }
    m *= 2;
    const Complex refined = sum / static_cast<double>(m);
    const double change = std::abs(refined - estimate);
    const double mean_abs = scale / m;
    estimate = refined;
    if (change <= opts.relative_tolerance * std::abs(refined) || change <= 1e-13 * mean_abs) {
      return ExpansionTerm{q, prefactor * refined, m, std::abs(prefactor) * mean_abs};
    }
  }
  throw Error(ErrorCode::QuadratureNonConvergent,
              "q = " + std::to_string(q) + " term not stable at " + std::to_string(m) + " samples");
}

LogPolar closed_form_q_minus_one(const ModelParams& p, const BlochRoots& roots, int k, int l) {
  const RootPowers w(p, roots);
  const int n = p.n_sites;
  const int l1 = std::min(l - 1, floor_div(n + l - 1 - k, 2));
  const int l2 = std::min(l - 1, floor_div(k + l - n - 3, 2));
  LogPolar s1{};
  for (int m = 0; m <= l1; ++m) {
    s1 = s1 + (w.a.pow(k - l + 2 * m - n) - w.b.pow(k - l + 2 * m - n)) / w.r2.pow(m);
  }
  LogPolar s2{};
  for (int m = 0; m <= l2; ++m) {
    s2 = s2 + (w.a.pow(n + 2 - k + 2 * m - l) - w.b.pow(n + 2 - k + 2 * m - l)) /
                  w.r2.pow(n + 1 - k + m);
  }
  const LogPolar a_minus_b = LogPolar::from(roots.beta_a - roots.beta_b);
  return (w.t2 / w.delta) * (s1 - s2) / (w.t1 * a_minus_b);
}

LogPolar closed_form_q_zero(const ModelParams& p, const BlochRoots& roots, Regime regime, int k,
                            int l) {
  const RootPowers w(p, roots);
  const int n = p.n_sites;
  const LogPolar a_minus_b = LogPolar::from(roots.beta_a - roots.beta_b);
  if (regime == Regime::Nontrivial) {
    // Only the pole at beta = 0 lies inside cGBZ1, and only for k < l.
    if (k >= l) return {};
    return (w.a.pow(k - l) - w.b.pow(k - l)) / (w.t1 * a_minus_b);
  }
  // Trivial regime: beta_a inside, beta_b outside.
  if (k >= l) {
    return -(w.numerator(w.a, n, k, l) / (w.t1 * a_minus_b));
  }
  const LogPolar boundary = log_sum({w.a.pow(k + l) / w.r2.pow(l),
                                     w.a.pow(2 * n + 2 - k - l) / w.r2.pow(n + 1 - k),
                                     -(w.a.pow(2 * n + 2 + l - k) / w.r2.pow(n + 1 + l - k))});
  return -(w.b.pow(k - l) / (w.t1 * a_minus_b)) + boundary / (w.t1 * a_minus_b);
}

LogPolar closed_form_q_one(const ModelParams& p, const BlochRoots& roots, int k, int l) {
  const RootPowers w(p, roots);
  const int n = p.n_sites;
  const LogPolar a2r = w.a.pow(2) / w.r2;
  const LogPolar bracket = log_sum({one(), -a2r.pow(l), -a2r.pow(n + 1 - k), a2r.pow(n + 1 + l - k)});
  const LogPolar a_minus_b = LogPolar::from(roots.beta_a - roots.beta_b);
  return -((w.delta / w.t2) * bracket * w.a.pow(k - l + n) * (one() - a2r) / (w.t1 * a_minus_b));
}

LogPolar closed_form_correction(const ModelParams& p, const BlochRoots& roots, int k, int l) {
  const RootPowers w(p, roots);
  const int n = p.n_sites;
  const LogPolar b_minus_a = LogPolar::from(roots.beta_b - roots.beta_a);
  return w.delta * w.b.pow(k - l - n) * (one() - w.r2 / w.b.pow(2)) /
         (w.t1.pow(2) * b_minus_a);
}

GreenResult closed_form(const ModelParams& p, Complex omega, int k, int l, ClosedFormMode mode) {
  validate_params(p);
  require_delta(p);
  require_sites(p, k, l);
  const BlochRoots roots = bloch_roots(p, omega);
  const Regime regime = classify_regime(p, omega);

  LogPolar value;
  int dominant_q = 0;
  bool correction_dominant = false;
  if (regime == Regime::Nontrivial) {
    if (k >= l) {
      value = closed_form_q_minus_one(p, roots, k, l);
      dominant_q = -1;
    } else {
      value = closed_form_q_zero(p, roots, regime, k, l);
      dominant_q = 0;
    }
  } else {
    const LogPolar g0 = closed_form_q_zero(p, roots, regime, k, l);
    const LogPolar other =
        k >= l ? closed_form_correction(p, roots, k, l) : closed_form_q_one(p, roots, k, l);
    const bool other_wins = other.log_abs > g0.log_abs;
    if (k >= l) {
      correction_dominant = other_wins;
      dominant_q = 0;
    } else {
      dominant_q = other_wins ? 1 : 0;
    }
    if (mode == ClosedFormMode::LeadingSum) {
      value = g0 + other;
    } else {
      value = other_wins ? other : g0;
    }
  }

  GreenResult g;
  g.query = GreenQuery{k, l, omega};
  g.value = value.value();
  g.method = GreenMethod::ClosedForm;
  g.regime = regime;
  g.dominant_q = dominant_q;
  g.correction_dominant = correction_dominant;
  g.log10_abs = value.log10_abs();
  return g;
}

double critical_length(const ModelParams& p) {
  require_delta(p);
  return std::abs(std::log(std::abs(p.t2 / p.delta)) / std::log(std::abs(p.r())));
}

CriticalScales critical_scales(const ModelParams& p, Complex omega) {
  require_delta(p);
  const BlochRoots roots = bloch_roots(p, omega);
  const double la = std::log(std::abs(roots.beta_a));
  const double lb = std::log(std::abs(roots.beta_b));
  if (std::abs(la - lb) <= 1e-12 * std::max(1.0, std::abs(la))) throw Error(ErrorCode::DegenerateRoots, "|beta_a| == |beta_b|");
  const double ld = std::log(std::abs(p.delta));
  const double n = p.n_sites;
  CriticalScales s;
  s.n_c = critical_length(p);
  s.n_0 = std::abs((n * la + ld) / (la - lb));
  s.n_1 = std::abs((n * lb - ld) / (la - lb));
  s.l_c = std::abs(1.0 / std::log(std::abs(cgbz1_point(p, 0.0))));
  return s;
}

EigenCoefficients eigen_coefficients(const ModelParams& p, Complex beta1, Complex beta2,
                                     bool corrected) {
  const int n = p.n_sites;
  EigenCoefficients c;
  c.c2 = -ipow(beta1, n + 1) / ipow(beta2, n + 1);
  c.corrected = corrected;
  if (corrected) {
    c.c1 = 1.0 + p.delta * ipow(beta1, -n) / p.t1;
    c.c1_tilde = std::conj(c.c1);
  }
  return c;
}

namespace {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double ssr = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y, std::size_t begin,
                 std::size_t end) {
  const double count = static_cast<double>(end - begin);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  for (std::size_t i = begin; i < end; ++i) {
    const double e = y[i] - (f.intercept + f.slope * x[i]);
    f.ssr += e * e;
  }
  return f;
}

}  // namespace

KinkFit crossover_detect(const std::vector<double>& x, const std::vector<double>& y,
                         const KinkOptions& opts) {
  const std::size_t n = x.size();
  const auto side = static_cast<std::size_t>(opts.min_points_per_side);
  if (y.size() != n || n < 2 * side || side < 2) {
    throw Error(ErrorCode::InvalidArgument, "need at least min_points_per_side points per segment");
  }
  const LineFit single = fit_line(x, y, 0, n);
  if (std::sqrt(single.ssr / static_cast<double>(n)) < opts.noise_rms) {
    throw Error(ErrorCode::NoKink, "a single line fits within the noise level");
  }
  KinkFit best;
  best.residual = std::numeric_limits<double>::infinity();
  for (std::size_t i = side; i + side <= n; ++i) {
    const LineFit left = fit_line(x, y, 0, i);
    const LineFit right = fit_line(x, y, i, n);
    const double total = left.ssr + right.ssr;
    if (total < best.residual) {
      best = KinkFit{0.5 * (x[i - 1] + x[i]), left.slope, right.slope, total};
    }
  }
  return best;
}

}  // namespace respond
