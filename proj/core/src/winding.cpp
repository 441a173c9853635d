#include "respond/winding.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "respond/bulk.hpp"
#include "respond/error.hpp"

namespace respond {

namespace {

struct RawWinding {
  double total = 0.0;
  double max_step = 0.0;
};

RawWinding accumulate(const std::vector<Complex>& samples, const ModelParams& p, Complex omega) {
  RawWinding out;
  const std::size_t n = samples.size();
  std::vector<Complex> shifted(n);
  for (std::size_t j = 0; j < n; ++j) {
    shifted[j] = bulk_energy(p, samples[j]) - omega;
    if (std::abs(shifted[j]) <= 1e-9) {
      throw Error(ErrorCode::OmegaOnImage, "omega lies on the energy image of the contour");
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    const double step = std::arg(shifted[(j + 1) % n] / shifted[j]);
    out.total += step;
    out.max_step = std::max(out.max_step, std::abs(step));
  }
  return out;
}

ModelParams params_for(const Curve& c, const ModelParams& p) {
  return c.n_sites ? p.with_sites(*c.n_sites) : p;
}

}  // namespace

WindingResult winding_number(const Curve& c, const ModelParams& p, Complex omega,
                             int max_refinements) {
  const ModelParams q = params_for(c, p);
  Curve current = c;
  for (int attempt = 0;; ++attempt) {
    const RawWinding raw = accumulate(current.samples, q, omega);
    const double w = raw.total / (2.0 * std::numbers::pi);
    const double rounded = std::round(w);
    const bool reliable = raw.max_step < std::numbers::pi / 2.0 && std::abs(w - rounded) < 1e-6;
    if (reliable) {
      return WindingResult{static_cast<int>(rounded), c.label, omega, raw.max_step,
                           static_cast<int>(current.samples.size())};
    }
    if (current.discrete || attempt >= max_refinements) {
      throw Error(ErrorCode::UnresolvedWinding,
                  "argument step " + std::to_string(raw.max_step) + " after refinement");
    }
    current = make_curve(current.label, q, static_cast<int>(current.samples.size()) * 2);
  }
}

int winding_oracle(const Curve& c, const ModelParams& p, Complex omega) {
  const ModelParams q = params_for(c, p);
  int zeros = 0;
  try {
    const BlochRoots roots = bloch_roots(q, omega);
    zeros += point_inside(c, roots.beta_a) ? 1 : 0;
    zeros += point_inside(c, roots.beta_b) ? 1 : 0;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateRoots) throw;
    const Complex double_root = omega / (2.0 * q.t1);
    zeros += point_inside(c, double_root) ? 2 : 0;
  }
  const int poles = point_inside(c, Complex{}) ? 1 : 0;
  return zeros - poles;
}

RegimeBoundary regime_boundary_scan(const ModelParams& p, const FrequencyRay& ray,
                                    int curve_samples, double tolerance) {
  if (ray.steps < 1 || !(ray.t_max > 0.0) || ray.direction == Complex{}) {
    throw Error(ErrorCode::InvalidArgument, "ray needs steps >= 1, t_max > 0, nonzero direction");
  }
  const Curve contour = cgbz_curve(p, 1, curve_samples);
  auto wind_at = [&](double t) { return winding_number(contour, p, ray.at(t)).value; };

  double t_prev = 0.0;
  int w_prev = wind_at(t_prev);
  const int w_origin = w_prev;
  for (int i = 1; i <= ray.steps; ++i) {
    const double t = ray.t_max * i / ray.steps;
    const int w = wind_at(t);
    if (w != w_prev) {
      double lo = t_prev, hi = t;
      const double speed = std::abs(ray.direction);
      while ((hi - lo) * speed >= tolerance) {
        const double mid = 0.5 * (lo + hi);
        int w_mid = 0;
        try {
          w_mid = wind_at(mid);
        } catch (const Error& e) {
          // mid lies on the sampled image of the contour: that is the crossing.
          if (e.code() != ErrorCode::UnresolvedWinding && e.code() != ErrorCode::OmegaOnImage) throw;
          return RegimeBoundary{ray.at(mid), w_origin, w};
        }
        if (w_mid == w_prev) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      return RegimeBoundary{ray.at(0.5 * (lo + hi)), w_origin, w};
    }
    t_prev = t;
    w_prev = w;
  }
  throw Error(ErrorCode::NoTransition, "winding is constant along the ray");
}

}  // namespace respond
