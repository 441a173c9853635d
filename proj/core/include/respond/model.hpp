#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>

#include <Eigen/Dense>

namespace respond {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Hatano-Nelson chain with asymmetric hoppings t1 (rightward, H[n][n+1]) and
/// t2 (leftward, H[n+1][n]) plus a corner coupling delta between sites 1 and N.
struct ModelParams {
  Complex t1{0.5, 0.0};
  Complex t2{1.0, 0.0};
  Complex delta{1e-5, 0.0};
  int n_sites = 60;

  /// r^2 = t2 / t1, recomputed on every call.
  [[nodiscard]] Complex r2() const { return t2 / t1; }
  /// Principal square root of r^2; the GBZ radius for real positive hoppings.
  [[nodiscard]] Complex r() const { return std::sqrt(r2()); }

  [[nodiscard]] ModelParams with_sites(int n) const {
    ModelParams p = *this;
    p.n_sites = n;
    return p;
  }
  [[nodiscard]] ModelParams with_delta(Complex d) const {
    ModelParams p = *this;
    p.delta = d;
    return p;
  }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// The parameter set used throughout the figures: t1 = 0.5, t2 = 1, delta = 1e-5.
ModelParams baseline_params(int n_sites = 60);

enum class BoundaryKind { Obc, Pbc, Pobc };

std::string_view to_string(BoundaryKind bc) noexcept;
/// Accepts "obc", "pbc", "pobc"; throws InvalidArgument otherwise.
BoundaryKind parse_boundary(std::string_view s);

enum class DisorderTarget {
  Hoppings,            ///< every t1 and t2 bond, corners untouched
  Onsite,              ///< diagonal entries
  HoppingsAndCorner,   ///< bonds plus both delta corners
};

std::string_view to_string(DisorderTarget t) noexcept;
DisorderTarget parse_disorder_target(std::string_view s);

/// Uniform disorder U(-half_width, half_width) added independently to every
/// targeted matrix element.
struct DisorderSpec {
  DisorderTarget target = DisorderTarget::Hoppings;
  double half_width = 0.0;
  std::uint64_t seed = 0;
};

void validate_params(const ModelParams& p);

/// Dense N x N Hamiltonian. With disorder, the draws for trial `trial` come
/// from the stream seeded by derive_stream_seed(d.seed, trial).
Matrix build_hamiltonian(const ModelParams& p, BoundaryKind bc,
                         const std::optional<DisorderSpec>& disorder = std::nullopt,
                         std::uint64_t trial = 0);

/// Counter-based seed split: 128-bit product of (seed ^ K1) and (trial ^ K2),
/// high and low halves folded, then the splitmix64 finalizer. Fixed forever;
/// changing it changes every published ensemble.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

}  // namespace respond
