#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "respond/model.hpp"

namespace respond {

/// Response site k, excitation site l (both 1-based) at frequency omega.
struct GreenQuery {
  int k = 1;
  int l = 1;
  Complex omega;
};

enum class GreenMethod { Numeric, ClosedForm, ContourQ };
enum class Regime { Trivial, Nontrivial };

std::string_view to_string(GreenMethod m) noexcept;
std::string_view to_string(Regime r) noexcept;

struct GreenResult {
  GreenQuery query;
  Complex value;
  GreenMethod method = GreenMethod::Numeric;
  std::optional<Regime> regime;
  double cond_estimate = 0.0;
  std::optional<int> dominant_q;  ///< closed form only
  bool correction_dominant = false;  ///< first-order delta correction outweighs q = 0
  std::optional<double> log10_abs;  ///< set when value itself under/overflows
};

[[nodiscard]] double log10_magnitude(const GreenResult& g);

struct ResolventColumn {
  Vector x;              ///< x_k = G_{k,l}(omega)
  double cond_estimate;  ///< 1-norm condition estimate of omega I - H
};

inline constexpr double kNearSingularCondition = 1e12;

/// Solves (omega I - H) x = e_l with partially pivoted LU and one step of
/// iterative refinement. Throws NearSingular when the condition estimate
/// reaches kNearSingularCondition.
ResolventColumn resolvent_column(const Matrix& h, Complex omega, int l);

/// Same solve without the NearSingular check; the caller inspects cond_estimate.
ResolventColumn solve_resolvent(const Matrix& h, Complex omega, int l);

/// G_{k,l}(omega) of the clean chain with the given boundary.
GreenResult green_entry(const ModelParams& p, BoundaryKind bc, const GreenQuery& q);

/// Which end-to-end entry a sweep records: (N,1) is G_{N,1}, (1,N) is G_{1,N}.
enum class EndpointRule { NOne, OneN };

std::string_view to_string(EndpointRule r) noexcept;
EndpointRule parse_endpoint_rule(std::string_view s);
GreenQuery endpoint_query(EndpointRule rule, int n_sites, Complex omega);

struct SweepRow {
  int n_sites = 0;
  GreenResult result;
  bool near_singular = false;  ///< cond_estimate reached kNearSingularCondition; value kept
};

/// One end-to-end entry per chain length. Parallel over sizes. Rows whose
/// condition estimate reaches the NearSingular threshold are flagged, not
/// dropped: the open chain's condition grows like |G_{N,1}| itself.
std::vector<SweepRow> size_sweep(const ModelParams& templ, BoundaryKind bc, Complex omega,
                                 const std::vector<int>& sizes, EndpointRule rule,
                                 unsigned threads = 1);

struct FrequencySweep {
  std::vector<SweepRow> rows;
  std::optional<Complex> steepest_omega;  ///< midpoint of the steepest log|G| step
};

/// |G| along omega_j = from + j (to - from) / (samples - 1). Near-singular rows
/// are flagged and excluded from the transition detector.
FrequencySweep frequency_sweep(const ModelParams& p, BoundaryKind bc, Complex from, Complex to,
                               int samples, EndpointRule rule, unsigned threads = 1);

}  // namespace respond
