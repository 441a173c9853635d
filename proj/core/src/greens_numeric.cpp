#include "respond/greens_numeric.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "respond/error.hpp"
#include "respond/parallel.hpp"

namespace respond {

std::string_view to_string(GreenMethod m) noexcept {
  switch (m) {
    case GreenMethod::Numeric: return "numeric";
    case GreenMethod::ClosedForm: return "closed_form";
    case GreenMethod::ContourQ: return "contour_q";
  }
  return "numeric";
}

std::string_view to_string(Regime r) noexcept {
  return r == Regime::Trivial ? "trivial" : "nontrivial";
}

std::string_view to_string(EndpointRule r) noexcept {
  return r == EndpointRule::NOne ? "N1" : "1N";
}

EndpointRule parse_endpoint_rule(std::string_view s) {
  if (s == "N1" || s == "(N,1)") return EndpointRule::NOne;
  if (s == "1N" || s == "(1,N)") return EndpointRule::OneN;
  throw Error(ErrorCode::InvalidArgument, "unknown endpoint rule '" + std::string(s) + "'");
}

GreenQuery endpoint_query(EndpointRule rule, int n_sites, Complex omega) {
  return rule == EndpointRule::NOne ? GreenQuery{n_sites, 1, omega} : GreenQuery{1, n_sites, omega};
}

double log10_magnitude(const GreenResult& g) {
  if (g.log10_abs) return *g.log10_abs;
  return std::log10(std::abs(g.value));
}

ResolventColumn solve_resolvent(const Matrix& h, Complex omega, int l) {
  const auto n = h.rows();
  if (l < 1 || l > n) throw Error(ErrorCode::InvalidArgument, "excitation site out of range");
  const Matrix a = omega * Matrix::Identity(n, n) - h;
  const Eigen::PartialPivLU<Matrix> lu(a);
  const double rcond = lu.rcond();
  const double cond = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  Vector e = Vector::Zero(n);
  e(l - 1) = 1.0;
  Vector x = lu.solve(e);
  const Vector residual = e - a * x;
  x += lu.solve(residual);
  return ResolventColumn{std::move(x), cond};
}

ResolventColumn resolvent_column(const Matrix& h, Complex omega, int l) {
  ResolventColumn col = solve_resolvent(h, omega, l);
  if (!(col.cond_estimate < kNearSingularCondition)) {
    throw Error(ErrorCode::NearSingular, "condition estimate " + std::to_string(col.cond_estimate));
  }
  return col;
}

namespace {

// Sweep rows keep the solved value and carry the near-singular flag.
SweepRow sweep_row(const Matrix& h, int n_sites, const GreenQuery& q) {
  const ResolventColumn col = solve_resolvent(h, q.omega, q.l);
  SweepRow row;
  row.n_sites = n_sites;
  row.result.query = q;
  row.result.value = col.x(q.k - 1);
  row.result.method = GreenMethod::Numeric;
  row.result.cond_estimate = col.cond_estimate;
  row.near_singular = !(col.cond_estimate < kNearSingularCondition);
  return row;
}

}  // namespace

GreenResult green_entry(const ModelParams& p, BoundaryKind bc, const GreenQuery& q) {
  if (q.k < 1 || q.k > p.n_sites || q.l < 1 || q.l > p.n_sites) {
    throw Error(ErrorCode::InvalidArgument, "site index out of range");
  }
  const ResolventColumn col = resolvent_column(build_hamiltonian(p, bc), q.omega, q.l);
  GreenResult g;
  g.query = q;
  g.value = col.x(q.k - 1);
  g.method = GreenMethod::Numeric;
  g.cond_estimate = col.cond_estimate;
  return g;
}

std::vector<SweepRow> size_sweep(const ModelParams& templ, BoundaryKind bc, Complex omega,
                                 const std::vector<int>& sizes, EndpointRule rule,
                                 unsigned threads) {
  for (int n : sizes) {
    if (n < 3) throw Error(ErrorCode::TooFewSites, "size sweep needs N >= 3");
  }
  std::vector<SweepRow> rows(sizes.size());
  parallel_for(sizes.size(), threads, [&](std::size_t i) {
    const ModelParams p = templ.with_sites(sizes[i]);
    validate_params(p);
    rows[i] = sweep_row(build_hamiltonian(p, bc), sizes[i], endpoint_query(rule, sizes[i], omega));
  });
  return rows;
}

FrequencySweep frequency_sweep(const ModelParams& p, BoundaryKind bc, Complex from, Complex to,
                               int samples, EndpointRule rule, unsigned threads) {
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "frequency sweep needs >= 2 samples");
  validate_params(p);
  const Matrix h = build_hamiltonian(p, bc);
  FrequencySweep sweep;
  sweep.rows.resize(samples);
  parallel_for(static_cast<std::size_t>(samples), threads, [&](std::size_t j) {
    const Complex omega = from + (to - from) * (static_cast<double>(j) / (samples - 1));
    sweep.rows[j] = sweep_row(h, p.n_sites, endpoint_query(rule, p.n_sites, omega));
  });

  double steepest = -1.0;
  const SweepRow* prev = nullptr;
  for (const SweepRow& row : sweep.rows) {
    if (row.near_singular) {
      prev = nullptr;
      continue;
    }
    if (prev != nullptr) {
      const double dlog = std::abs(log10_magnitude(row.result) - log10_magnitude(prev->result));
      const double dw = std::abs(row.result.query.omega - prev->result.query.omega);
      if (dw > 0.0 && dlog / dw > steepest) {
        steepest = dlog / dw;
        sweep.steepest_omega = 0.5 * (row.result.query.omega + prev->result.query.omega);
      }
    }
    prev = &row;
  }
  return sweep;
}

}  // namespace respond
