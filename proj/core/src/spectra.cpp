#include "respond/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "respond/curves.hpp"
#include "respond/error.hpp"

namespace respond {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SpectrumPoint analytic_point(const ModelParams& p, Complex energy) {
  SpectrumPoint pt;
  pt.energy = energy;
  try {
    const BlochRoots roots = bloch_roots(p, energy);
    pt.beta1 = roots.beta_a;
    pt.beta2 = roots.beta_b;
  } catch (const Error&) {
    // Branch point: both roots coincide at omega / (2 t1).
    pt.beta1 = pt.beta2 = energy / (2.0 * p.t1);
  }
  return pt;
}

// Corner entries of H for the requested boundary, (H[1][N], H[N][1]).
std::pair<Complex, Complex> corners(const ModelParams& p, BoundaryKind bc) {
  switch (bc) {
    case BoundaryKind::Obc: return {Complex{}, Complex{}};
    case BoundaryKind::Pbc: return {p.t2, p.t1};
    case BoundaryKind::Pobc: return {p.delta, p.delta};
  }
  return {};
}

double critical_length_of(const ModelParams& p) {
  return std::abs(std::log(std::abs(p.t2 / p.delta)) / std::log(std::abs(p.r())));
}

void canonical_sort(std::vector<SpectrumPoint>& pts) {
  std::sort(pts.begin(), pts.end(), [](const SpectrumPoint& a, const SpectrumPoint& b) {
    if (a.energy.real() != b.energy.real()) return a.energy.real() < b.energy.real();
    return a.energy.imag() < b.energy.imag();
  });
}

}  // namespace

SpectrumSet pbc_spectrum(const ModelParams& p, int m) {
  if (m < 8) throw Error(ErrorCode::InvalidArgument, "pbc_spectrum needs m >= 8");
  SpectrumSet set{{}, BoundaryKind::Pbc, p.n_sites};
  set.points.reserve(m);
  for (int j = 0; j < m; ++j) {
    const Complex beta = std::polar(1.0, kTwoPi * j / m);
    set.points.push_back(analytic_point(p, bulk_energy(p, beta)));
  }
  return set;
}

SpectrumSet obc_spectrum(const ModelParams& p, int m) {
  if (m < 8) throw Error(ErrorCode::InvalidArgument, "obc_spectrum needs m >= 8");
  SpectrumSet set{{}, BoundaryKind::Obc, p.n_sites};
  set.points.reserve(m);
  const Complex r = p.r();
  for (int j = 0; j < m; ++j) {
    const Complex beta = r * std::polar(1.0, kTwoPi * j / m);
    set.points.push_back(analytic_point(p, bulk_energy(p, beta)));
  }
  return set;
}

Complex continuant(Complex t1, Complex t2, Complex omega, int n) {
  if (n <= 0) return {1.0, 0.0};
  const Complex prod = t1 * t2;
  Complex prev{1.0, 0.0};
  Complex cur = omega;
  for (int i = 2; i <= n; ++i) {
    const Complex next = omega * cur - prod * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

CharPolyValue char_poly_with_derivative(const ModelParams& p, Complex omega, BoundaryKind bc) {
  validate_params(p);
  const int n = p.n_sites;
  const Complex prod = p.t1 * p.t2;

  // D_k and D_k' for the tridiagonal part; keep D_{n-2} for the corner term.
  Complex d_prev{1.0, 0.0}, d_cur = omega;
  Complex dd_prev{}, dd_cur{1.0, 0.0};
  Complex d_nm2 = d_prev, dd_nm2 = dd_prev;
  for (int k = 2; k <= n; ++k) {
    if (k == n) {
      d_nm2 = d_prev;
      dd_nm2 = dd_prev;
    }
    const Complex d_next = omega * d_cur - prod * d_prev;
    const Complex dd_next = d_cur + omega * dd_cur - prod * dd_prev;
    d_prev = d_cur;
    d_cur = d_next;
    dd_prev = dd_cur;
    dd_cur = dd_next;
  }

  // A = omega I - H: super -t1, sub -t2, corners x = -H[1][N], y = -H[N][1].
  // det A = D_N - x y D_{N-2} + (-1)^{N+1} (x (-t2)^{N-1} + y (-t1)^{N-1}).
  const auto [h_upper, h_lower] = corners(p, bc);
  const Complex x = -h_upper;
  const Complex y = -h_lower;
  const double sign = (n % 2 == 0) ? -1.0 : 1.0;
  const Complex cycle = sign * (x * ipow(-p.t2, n - 1) + y * ipow(-p.t1, n - 1));

  return CharPolyValue{d_cur - x * y * d_nm2 + cycle, dd_cur - x * y * dd_nm2};
}

Complex char_poly(const ModelParams& p, Complex omega, BoundaryKind bc) {
  return char_poly_with_derivative(p, omega, bc).value;
}

Complex dense_determinant(const Matrix& h, Complex omega) {
  const Matrix a = omega * Matrix::Identity(h.rows(), h.cols()) - h;
  return Eigen::PartialPivLU<Matrix>(a).determinant();
}

std::vector<Complex> dense_eigenvalues(const Matrix& h) {
  Eigen::ComplexEigenSolver<Matrix> solver(h, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "dense eigensolver did not converge");
  }
  const Vector& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double count_zeros_in_disk(const ModelParams& p, double radius, int samples, BoundaryKind bc) {
  Complex acc{};
  for (int j = 0; j < samples; ++j) {
    const Complex w = std::polar(radius, kTwoPi * j / samples);
    const CharPolyValue v = char_poly_with_derivative(p, w, bc);
    acc += v.derivative / v.value * w;
  }
  return (acc / static_cast<double>(samples)).real();
}

namespace {

// Diagonal similarity H -> S^{-1} H S with S = diag(rho^n). Eigenvalues are
// unchanged; the skin-effect exponential is removed from the eigenvectors,
// which keeps the QR oracle accurate on these highly non-normal matrices.
Matrix gauge_transform(const Matrix& h, double rho) {
  const auto n = h.rows();
  Matrix g = h;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (g(i, j) != Complex{}) g(i, j) *= std::pow(rho, static_cast<double>(j - i));
    }
  }
  return g;
}

double oracle_gauge(const ModelParams& p) {
  const double r = std::abs(p.r());
  if (std::abs(p.delta) == 0.0 || p.n_sites <= critical_length_of(p)) return r;
  return std::pow(std::abs(p.t2 / p.delta), 1.0 / p.n_sites);
}

struct NewtonOutcome {
  Complex root;
  bool converged = false;
};

// Newton with implicit (Maehly) deflation against roots already found, so
// repeated seeds cannot land on the same zero.
NewtonOutcome deflated_newton(const ModelParams& p, Complex z, const std::vector<Complex>& found,
                              const NewtonOptions& opts) {
  for (int it = 0; it < opts.max_iterations; ++it) {
    const CharPolyValue v = char_poly_with_derivative(p, z, BoundaryKind::Pobc);
    if (v.value == Complex{}) return {z, true};
    Complex logd = v.derivative / v.value;
    for (const Complex& r : found) logd -= Complex{1.0, 0.0} / (z - r);
    const Complex step = Complex{1.0, 0.0} / logd;
    z -= step;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return {z, false};
    if (std::abs(step) <= opts.tolerance * std::max(1.0, std::abs(z))) {
      // Undeflated polish.
      for (int k = 0; k < 3; ++k) {
        const CharPolyValue w = char_poly_with_derivative(p, z, BoundaryKind::Pobc);
        if (w.value == Complex{} || w.derivative == Complex{}) break;
        const Complex s = w.value / w.derivative;
        z -= s;
        if (std::abs(s) <= 1e-16 * std::max(1.0, std::abs(z))) break;
      }
      return {z, true};
    }
  }
  return {z, false};
}

std::vector<Complex> newton_seeds(const ModelParams& p) {
  const int n = p.n_sites;
  std::vector<Complex> seeds;
  seeds.reserve(2 * n);
  const bool above_critical =
      std::abs(p.delta) > 0.0 && static_cast<double>(n) > critical_length_of(p);
  if (above_critical) {
    for (int m = 0; m < n; ++m) {
      try {
        const Complex beta = cgbz1_point(p, kTwoPi * m / n);
        seeds.push_back(bulk_energy(p, beta));
      } catch (const Error&) {
        // fall through to the OBC seeds appended below
      }
    }
  }
  // OBC eigenvalues 2 sqrt(t1 t2) cos(m pi / (N+1)); used as the primary seeds
  // below N_c and as spares above it.
  const Complex amplitude = 2.0 * p.t1 * p.r();
  for (int m = 1; m <= n; ++m) {
    seeds.push_back(amplitude * std::cos(std::numbers::pi * m / (n + 1)));
  }
  return seeds;
}

}  // namespace

double ansatz_residual(const ModelParams& p, Complex energy) {
  const int n = p.n_sites;
  Complex b1, b2;
  try {
    const BlochRoots roots = bloch_roots(p, energy);
    b1 = roots.beta_a;
    b2 = roots.beta_b;
  } catch (const Error&) {
    return std::numeric_limits<double>::infinity();
  }
  // Boundary rows: (-t2 + delta b^N) and (delta b - t1 b^{N+1}); take the row
  // with the larger coefficients for the null vector (c1, c2).
  const Complex r1a = -p.t2 + p.delta * ipow(b1, n);
  const Complex r1b = -p.t2 + p.delta * ipow(b2, n);
  const Complex r2a = p.delta * b1 - p.t1 * ipow(b1, n + 1);
  const Complex r2b = p.delta * b2 - p.t1 * ipow(b2, n + 1);
  Complex c1, c2;
  if (std::abs(r1a) + std::abs(r1b) >= std::abs(r2a) + std::abs(r2b)) {
    c1 = r1b;
    c2 = -r1a;
  } else {
    c1 = r2b;
    c2 = -r2a;
  }
  Vector v(n);
  Complex p1 = b1, p2 = b2;
  for (int i = 0; i < n; ++i) {
    v(i) = c1 * p1 + c2 * p2;
    p1 *= b1;
    p2 *= b2;
  }
  const double norm = v.norm();
  if (norm == 0.0) return std::numeric_limits<double>::infinity();
  const Matrix h = build_hamiltonian(p, BoundaryKind::Pobc);
  return (h * v - energy * v).norm() / norm;
}

SpectrumSet pobc_spectrum(const ModelParams& p, const NewtonOptions& opts) {
  validate_params(p);
  const int n = p.n_sites;

  std::vector<Complex> roots;
  roots.reserve(n);
  for (const Complex& seed : newton_seeds(p)) {
    if (static_cast<int>(roots.size()) == n) break;
    const NewtonOutcome out = deflated_newton(p, seed, roots, opts);
    if (!out.converged) continue;
    const bool duplicate = std::any_of(roots.begin(), roots.end(), [&](const Complex& r) {
      return std::abs(r - out.root) < opts.dedup_radius;
    });
    if (!duplicate) roots.push_back(out.root);
  }
  if (static_cast<int>(roots.size()) != n) {
    throw Error(ErrorCode::ConvergenceFailure, "Newton found " + std::to_string(roots.size()) +
                                                   " of " + std::to_string(n) + " eigenvalues");
  }

  // Cross-check against the dense eigensolver: one-to-one within dedup_radius.
  const Matrix h = build_hamiltonian(p, BoundaryKind::Pobc);
  std::vector<Complex> oracle = dense_eigenvalues(gauge_transform(h, oracle_gauge(p)));
  std::vector<bool> used(oracle.size(), false);
  for (const Complex& r : roots) {
    std::size_t best = oracle.size();
    double best_dist = opts.dedup_radius;
    for (std::size_t j = 0; j < oracle.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(oracle[j] - r);
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best == oracle.size()) {
      throw Error(ErrorCode::RootCountMismatch,
                  "no eigensolver value within matching radius of a Newton root");
    }
    used[best] = true;
  }

  SpectrumSet set{{}, BoundaryKind::Pobc, n};
  set.points.reserve(n);
  for (const Complex& e : roots) {
    SpectrumPoint pt = analytic_point(p, e);
    pt.residual = ansatz_residual(p, e);
    set.points.push_back(pt);
  }
  canonical_sort(set.points);
  return set;
}

Complex boundary_residual(const ModelParams& p, Complex energy) {
  const BlochRoots roots = bloch_roots(p, energy);
  const Complex b1 = roots.beta_a;
  const Complex b2 = roots.beta_b;
  if (std::abs(b1 - b2) <= 1e-14 * std::abs(b2)) {
    throw Error(ErrorCode::DegenerateRoots, "beta1 == beta2");
  }
  const int n = p.n_sites;
  const Complex r2 = p.r2();
  const Complex d = p.delta;
  return p.t1 * p.t2 * (ipow(b2, n + 1) - ipow(b1, n + 1)) +
         d * d * r2 * (ipow(b1, n - 1) - ipow(b2, n - 1)) +
         (p.t2 * d + p.t1 * d * ipow(r2, n)) * (b1 - b2);
}

}  // namespace respond
