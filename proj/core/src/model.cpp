#include "respond/model.hpp"

#include <random>
#include <string>

#include "respond/error.hpp"

namespace respond {

ModelParams baseline_params(int n_sites) {
  return ModelParams{{0.5, 0.0}, {1.0, 0.0}, {1e-5, 0.0}, n_sites};
}

std::string_view to_string(BoundaryKind bc) noexcept {
  switch (bc) {
    case BoundaryKind::Obc: return "obc";
    case BoundaryKind::Pbc: return "pbc";
    case BoundaryKind::Pobc: return "pobc";
  }
  return "pobc";
}

BoundaryKind parse_boundary(std::string_view s) {
  if (s == "obc") return BoundaryKind::Obc;
  if (s == "pbc") return BoundaryKind::Pbc;
  if (s == "pobc") return BoundaryKind::Pobc;
  throw Error(ErrorCode::InvalidArgument, "unknown boundary '" + std::string(s) + "'");
}

std::string_view to_string(DisorderTarget t) noexcept {
  switch (t) {
    case DisorderTarget::Hoppings: return "hoppings";
    case DisorderTarget::Onsite: return "onsite";
    case DisorderTarget::HoppingsAndCorner: return "hoppings+corner";
  }
  return "hoppings";
}

DisorderTarget parse_disorder_target(std::string_view s) {
  if (s == "hoppings") return DisorderTarget::Hoppings;
  if (s == "onsite") return DisorderTarget::Onsite;
  if (s == "hoppings+corner") return DisorderTarget::HoppingsAndCorner;
  throw Error(ErrorCode::InvalidArgument, "unknown disorder target '" + std::string(s) + "'");
}

void validate_params(const ModelParams& p) {
  const double a1 = std::abs(p.t1);
  const double a2 = std::abs(p.t2);
  if (!(a1 > 0.0) || !(a2 > 0.0)) {
    throw Error(ErrorCode::NonPositiveHopping, "hopping amplitudes must be nonzero");
  }
  if (!(a2 > a1)) {
    throw Error(ErrorCode::OrderingViolated, "expected |t2| > |t1|");
  }
  if (p.n_sites < 3) {
    throw Error(ErrorCode::TooFewSites, "need at least 3 sites, got " + std::to_string(p.n_sites));
  }
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  constexpr std::uint64_t k1 = 0xa0761d6478bd642fULL;
  constexpr std::uint64_t k2 = 0xe7037ed1a0b428dbULL;
  __extension__ using u128 = unsigned __int128;
  const u128 prod = static_cast<u128>(seed ^ k1) * static_cast<u128>(trial ^ k2);
  std::uint64_t z = static_cast<std::uint64_t>(prod >> 64) ^ static_cast<std::uint64_t>(prod);
  // splitmix64 finalizer
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

class UniformStream {
 public:
  UniformStream(std::uint64_t seed, double half_width) : engine_(seed), half_width_(half_width) {}

  // 53-bit mantissa conversion; std::uniform_real_distribution is not
  // specified bit-for-bit across standard libraries.
  double next() {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return (2.0 * u - 1.0) * half_width_;
  }

 private:
  std::mt19937_64 engine_;
  double half_width_;
};

}  // namespace

Matrix build_hamiltonian(const ModelParams& p, BoundaryKind bc,
                         const std::optional<DisorderSpec>& disorder, std::uint64_t trial) {
  validate_params(p);
  if (disorder && !(disorder->half_width >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "disorder half_width must be >= 0");
  }
  const int n = p.n_sites;
  Matrix h = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    h(i, i + 1) = p.t1;
    h(i + 1, i) = p.t2;
  }
  switch (bc) {
    case BoundaryKind::Obc:
      break;
    case BoundaryKind::Pobc:
      h(0, n - 1) = p.delta;
      h(n - 1, 0) = p.delta;
      break;
    case BoundaryKind::Pbc:
      h(0, n - 1) = p.t2;
      h(n - 1, 0) = p.t1;
      break;
  }

  if (!disorder || disorder->half_width == 0.0) return h;

  UniformStream draw(derive_stream_seed(disorder->seed, trial), disorder->half_width);
  switch (disorder->target) {
    case DisorderTarget::Onsite:
      for (int i = 0; i < n; ++i) h(i, i) += draw.next();
      break;
    case DisorderTarget::HoppingsAndCorner:
    case DisorderTarget::Hoppings:
      for (int i = 0; i + 1 < n; ++i) {
        h(i, i + 1) += draw.next();
        h(i + 1, i) += draw.next();
      }
      if (disorder->target == DisorderTarget::HoppingsAndCorner && bc != BoundaryKind::Obc) {
        h(0, n - 1) += draw.next();
        h(n - 1, 0) += draw.next();
      }
      break;
  }
  return h;
}

}  // namespace respond
