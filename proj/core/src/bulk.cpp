#include "respond/bulk.hpp"

#include <cmath>

#include "respond/error.hpp"

namespace respond {

std::pair<Complex, Complex> order_root_pair(Complex u, Complex v) {
  const double au = std::abs(u);
  const double av = std::abs(v);
  const double scale = std::max(au, av);
  if (std::abs(au - av) <= 1e-12 * scale) {
    return std::arg(u) <= std::arg(v) ? std::pair{u, v} : std::pair{v, u};
  }
  return au < av ? std::pair{u, v} : std::pair{v, u};
}

BlochRoots bloch_roots(const ModelParams& p, Complex omega) {
  const Complex disc = omega * omega - 4.0 * p.t1 * p.t2;
  const double scale = std::abs(omega * omega) + std::abs(4.0 * p.t1 * p.t2);
  if (std::abs(disc) <= 1e-14 * scale) {
    throw Error(ErrorCode::DegenerateRoots, "omega at a branch point of the bulk equation");
  }
  const Complex s = std::sqrt(disc);
  // Cancellation-free quadratic: take the root with |omega + sign*s| large,
  // then recover the other from the product t2 / t1.
  const Complex big = std::real(std::conj(omega) * s) >= 0.0 ? omega + s : omega - s;
  const Complex first = big / (2.0 * p.t1);
  const Complex second = p.t2 / (p.t1 * first);
  auto [a, b] = order_root_pair(first, second);
  return BlochRoots{a, b, omega, disc};
}

Complex ipow(Complex z, long long n) {
  if (n < 0) return Complex{1.0, 0.0} / ipow(z, -n);
  Complex result{1.0, 0.0};
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

}  // namespace respond
