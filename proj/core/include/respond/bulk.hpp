#pragma once

#include <utility>

#include "respond/model.hpp"

namespace respond {

/// Bulk dispersion E(beta) = t1 beta + t2 / beta.
inline Complex bulk_energy(const ModelParams& p, Complex beta) {
  return p.t1 * beta + p.t2 / beta;
}

/// The two roots of t1 beta^2 - omega beta + t2 = 0, ordered |beta_a| <= |beta_b|.
struct BlochRoots {
  Complex beta_a;
  Complex beta_b;
  Complex omega;
  Complex discriminant;  ///< omega^2 - 4 t1 t2
};

/// Orders a root pair by modulus, ties (within relative 1e-12) broken by
/// ascending principal argument.
std::pair<Complex, Complex> order_root_pair(Complex u, Complex v);

/// Throws DegenerateRoots at the branch points omega^2 = 4 t1 t2.
BlochRoots bloch_roots(const ModelParams& p, Complex omega);

/// Integer power by repeated squaring; negative exponents allowed.
Complex ipow(Complex z, long long n);

}  // namespace respond
