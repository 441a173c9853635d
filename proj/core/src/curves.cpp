#include "respond/curves.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "respond/bulk.hpp"
#include "respond/error.hpp"

namespace respond {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Curve circle(CurveLabel label, Complex radius, int m, std::optional<int> n_sites) {
  Curve c;
  c.label = label;
  c.n_sites = n_sites;
  c.samples.reserve(m);
  c.theta.reserve(m);
  for (int j = 0; j < m; ++j) {
    const double th = kTwoPi * j / m;
    c.samples.push_back(radius * std::polar(1.0, th));
    c.theta.push_back(th);
  }
  return c;
}

void require_samples(int m) {
  if (m < 64) throw Error(ErrorCode::InvalidArgument, "curves need at least 64 samples");
}

void require_delta(const ModelParams& p) {
  if (std::abs(p.delta) == 0.0) {
    throw Error(ErrorCode::ZeroDelta, "delta = 0 has no renormalized circle");
  }
}

Complex rho1(const ModelParams& p) { return std::pow(p.t2 / p.delta, 1.0 / p.n_sites); }
Complex rho2(const ModelParams& p) { return p.r2() * std::pow(p.delta / p.t2, 1.0 / p.n_sites); }

Complex f1_derivative(const ModelParams& p, Complex beta) {
  const double n = p.n_sites;
  const Complex u = 1.0 - beta * beta / p.r2();
  return std::pow(u, 1.0 / n) * (1.0 - 2.0 * (beta * beta / p.r2()) / (n * u));
}

Complex f2_derivative(const ModelParams& p, Complex beta) {
  const double n = p.n_sites;
  const Complex v = 1.0 - p.r2() / (beta * beta);
  // d/dbeta [beta v^{-1/N}] = v^{-1/N} (1 - 2 r^2 / (N beta^2 v))
  return std::pow(v, -1.0 / n) * (1.0 - 2.0 * p.r2() / (n * beta * beta * v));
}

// Fixed-point iteration beta <- step(beta), then Newton on map(beta) = target.
template <class Step, class Map, class Deriv>
Complex solve_preimage(Complex target, Step step, Map map, Deriv deriv, const CgbzOptions& opts,
                       double theta) {
  auto converged = [&](Complex b) {
    return std::abs(map(b) - target) <= 1e-10 * std::abs(target);
  };
  Complex beta = target;
  for (int it = 0; it < opts.max_fixed_point_iterations; ++it) {
    const Complex next = step(beta);
    const double change = std::abs(next - beta);
    beta = next;
    if (!std::isfinite(beta.real()) || !std::isfinite(beta.imag())) break;
    if (change <= opts.tolerance * std::max(1.0, std::abs(beta))) {
      if (converged(beta)) return beta;
      break;
    }
  }
  // Newton fallback: restart from the last finite iterate or the target.
  if (!std::isfinite(beta.real()) || !std::isfinite(beta.imag())) beta = target;
  for (int it = 0; it < opts.max_newton_iterations; ++it) {
    const Complex d = deriv(beta);
    if (d == Complex{}) break;
    const Complex s = (map(beta) - target) / d;
    beta -= s;
    if (std::abs(s) <= opts.tolerance * std::max(1.0, std::abs(beta))) break;
  }
  if (!converged(beta)) {
    throw Error(ErrorCode::ConvergenceFailure,
                "cGBZ preimage did not converge at theta = " + std::to_string(theta));
  }
  return beta;
}

}  // namespace

std::string_view to_string(CurveLabel label) noexcept {
  switch (label) {
    case CurveLabel::BZ: return "BZ";
    case CurveLabel::GBZ: return "GBZ";
    case CurveLabel::RGBZ1: return "RGBZ1";
    case CurveLabel::RGBZ2: return "RGBZ2";
    case CurveLabel::CGBZ1: return "CGBZ1";
    case CurveLabel::CGBZ2: return "CGBZ2";
    case CurveLabel::FGBZ1: return "FGBZ1";
    case CurveLabel::FGBZ2: return "FGBZ2";
  }
  return "BZ";
}

CurveLabel parse_curve_label(std::string_view s) {
  for (auto label : {CurveLabel::BZ, CurveLabel::GBZ, CurveLabel::RGBZ1, CurveLabel::RGBZ2,
                     CurveLabel::CGBZ1, CurveLabel::CGBZ2, CurveLabel::FGBZ1, CurveLabel::FGBZ2}) {
    if (to_string(label) == s) return label;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown curve label '" + std::string(s) + "'");
}

CurvePair standard_curves(const ModelParams& p, int m) {
  require_samples(m);
  return {circle(CurveLabel::BZ, 1.0, m, std::nullopt),
          circle(CurveLabel::GBZ, std::abs(p.r()), m, std::nullopt)};
}

RgbzCircles rgbz_circles(const ModelParams& p, int m) {
  require_samples(m);
  require_delta(p);
  RgbzCircles out;
  out.rgbz1 = circle(CurveLabel::RGBZ1, std::abs(rho1(p)), m, p.n_sites);
  out.rgbz2 = circle(CurveLabel::RGBZ2, std::abs(rho2(p)), m, p.n_sites);
  const double n_c = std::abs(std::log(std::abs(p.t2 / p.delta)) / std::log(std::abs(p.r())));
  out.below_critical_length = static_cast<double>(p.n_sites) <= n_c;
  return out;
}

Complex renormalize_f1(const ModelParams& p, Complex beta) {
  return beta * std::pow(1.0 - beta * beta / p.r2(), 1.0 / p.n_sites);
}

Complex renormalize_f2(const ModelParams& p, Complex beta) {
  return beta / std::pow(1.0 - p.r2() / (beta * beta), 1.0 / p.n_sites);
}

Complex cgbz1_point(const ModelParams& p, double theta, const CgbzOptions& opts) {
  require_delta(p);
  const Complex target = rho1(p) * std::polar(1.0, theta);
  const double inv_n = 1.0 / p.n_sites;
  const Complex r2 = p.r2();
  return solve_preimage(
      target, [&](Complex b) { return target * std::pow(1.0 - b * b / r2, -inv_n); },
      [&](Complex b) { return renormalize_f1(p, b); }, [&](Complex b) { return f1_derivative(p, b); },
      opts, theta);
}

namespace {

Complex cgbz2_point(const ModelParams& p, double theta, const CgbzOptions& opts) {
  const Complex target = rho2(p) * std::polar(1.0, -theta);
  const double inv_n = 1.0 / p.n_sites;
  const Complex r2 = p.r2();
  return solve_preimage(
      target, [&](Complex b) { return target * std::pow(1.0 - r2 / (b * b), inv_n); },
      [&](Complex b) { return renormalize_f2(p, b); }, [&](Complex b) { return f2_derivative(p, b); },
      opts, theta);
}

}  // namespace

Curve cgbz_curve(const ModelParams& p, int branch, int m, const CgbzOptions& opts) {
  require_samples(m);
  require_delta(p);
  Curve c;
  c.n_sites = p.n_sites;
  c.samples.reserve(m);
  c.theta.reserve(m);
  if (branch == 1) {
    c.label = CurveLabel::CGBZ1;
    for (int j = 0; j < m; ++j) {
      const double th = kTwoPi * j / m;
      c.samples.push_back(cgbz1_point(p, th, opts));
      c.theta.push_back(th);
    }
  } else if (branch == 2) {
    // f2 maps onto rho2 e^{-i theta}; walk theta downwards so the samples
    // still run counterclockwise.
    c.label = CurveLabel::CGBZ2;
    for (int j = 0; j < m; ++j) {
      const double th = j == 0 ? 0.0 : kTwoPi * (m - j) / m;
      c.samples.push_back(cgbz2_point(p, th, opts));
      c.theta.push_back(th);
    }
  } else {
    throw Error(ErrorCode::InvalidArgument, "cGBZ branch must be 1 or 2");
  }
  return c;
}

CurvePair fgbz_points(const SpectrumSet& spectrum) {
  auto make = [&](CurveLabel label, bool first) {
    Curve c;
    c.label = label;
    c.n_sites = spectrum.n_sites;
    c.discrete = true;
    for (const auto& pt : spectrum.points) c.samples.push_back(first ? pt.beta1 : pt.beta2);
    std::sort(c.samples.begin(), c.samples.end(),
              [](Complex a, Complex b) { return std::arg(a) < std::arg(b); });
    for (const auto& s : c.samples) c.theta.push_back(std::arg(s));
    return c;
  };
  return {make(CurveLabel::FGBZ1, true), make(CurveLabel::FGBZ2, false)};
}

Curve make_curve(CurveLabel label, const ModelParams& p, int m) {
  switch (label) {
    case CurveLabel::BZ: return standard_curves(p, m).first;
    case CurveLabel::GBZ: return standard_curves(p, m).second;
    case CurveLabel::RGBZ1: return rgbz_circles(p, m).rgbz1;
    case CurveLabel::RGBZ2: return rgbz_circles(p, m).rgbz2;
    case CurveLabel::CGBZ1: return cgbz_curve(p, 1, m);
    case CurveLabel::CGBZ2: return cgbz_curve(p, 2, m);
    case CurveLabel::FGBZ1:
    case CurveLabel::FGBZ2: break;
  }
  throw Error(ErrorCode::InvalidArgument, "fGBZ point sets cannot be resampled");
}

int polygon_winding(const std::vector<Complex>& loop, Complex z) {
  // Crossing rule: upward crossings with z to the left count +1, downward
  // crossings with z to the right count -1.
  auto is_left = [](Complex a, Complex b, Complex q) {
    return (b.real() - a.real()) * (q.imag() - a.imag()) -
           (q.real() - a.real()) * (b.imag() - a.imag());
  };
  int wn = 0;
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = loop[i];
    const Complex b = loop[(i + 1) % n];
    if (a.imag() <= z.imag()) {
      if (b.imag() > z.imag() && is_left(a, b, z) > 0.0) ++wn;
    } else if (b.imag() <= z.imag() && is_left(a, b, z) < 0.0) {
      --wn;
    }
  }
  return wn;
}

double distance_to_polygon(const std::vector<Complex>& loop, Complex z) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = loop[i];
    const Complex b = loop[(i + 1) % n];
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    double t = len2 > 0.0 ? std::real(std::conj(ab) * (z - a)) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    best = std::min(best, std::abs(z - (a + t * ab)));
  }
  return best;
}

bool point_inside(const Curve& c, Complex z, double boundary_tol) {
  if (distance_to_polygon(c.samples, z) <= boundary_tol) {
    throw Error(ErrorCode::OnBoundary, "point lies on the curve");
  }
  return polygon_winding(c.samples, z) != 0;
}

}  // namespace respond
