#pragma once

#include <vector>

#include "respond/bulk.hpp"
#include "respond/model.hpp"

namespace respond {

/// One eigenvalue with the root pair of the bulk equation attached to it.
struct SpectrumPoint {
  Complex energy;
  Complex beta1;  ///< smaller-modulus root
  Complex beta2;  ///< larger-modulus root
  double residual = 0.0;  ///< ||Hv - Ev|| / ||v|| for the reconstructed eigenvector
};

struct SpectrumSet {
  std::vector<SpectrumPoint> points;
  BoundaryKind boundary = BoundaryKind::Pobc;
  int n_sites = 0;
};

/// E(e^{i theta_j}), theta_j = 2 pi j / m. Requires m >= 8.
SpectrumSet pbc_spectrum(const ModelParams& p, int m);
/// E(r e^{i theta_j}); the OBC segment of the thermodynamic limit. Requires m >= 8.
SpectrumSet obc_spectrum(const ModelParams& p, int m);

/// Tridiagonal continuant D_n of omega I - H with constant hoppings:
/// D_n = omega D_{n-1} - t1 t2 D_{n-2}, D_0 = 1, D_1 = omega.
Complex continuant(Complex t1, Complex t2, Complex omega, int n);

struct CharPolyValue {
  Complex value;
  Complex derivative;
};

/// det(omega I - H) for the matrix build_hamiltonian(p, bc) would produce,
/// via the continuant recurrence and the two corner cofactor terms.
Complex char_poly(const ModelParams& p, Complex omega, BoundaryKind bc = BoundaryKind::Pobc);
/// Value and d/d omega, both from the recurrence.
CharPolyValue char_poly_with_derivative(const ModelParams& p, Complex omega,
                                        BoundaryKind bc = BoundaryKind::Pobc);

/// Dense LU determinant of omega I - H. Cross-check oracle for char_poly.
Complex dense_determinant(const Matrix& h, Complex omega);

/// Eigenvalues of a dense complex matrix (Hessenberg + shifted QR).
std::vector<Complex> dense_eigenvalues(const Matrix& h);

/// Number of char_poly zeros inside |omega| < radius, from the argument
/// principle on the logarithmic derivative with `samples` trapezoid nodes.
double count_zeros_in_disk(const ModelParams& p, double radius, int samples = 512,
                           BoundaryKind bc = BoundaryKind::Pobc);

struct NewtonOptions {
  double tolerance = 1e-12;
  int max_iterations = 100;
  double dedup_radius = 1e-8;
};

/// All N pOBC eigenvalues by Newton iteration on char_poly, seeded from the
/// cGBZ1 energies (OBC energies when N is below the critical length), then
/// checked against dense_eigenvalues. Points are sorted by (Re E, Im E).
SpectrumSet pobc_spectrum(const ModelParams& p, const NewtonOptions& opts = {});

/// Left side of the boundary determinant at the root pair of E:
/// t1 t2 (b2^{N+1} - b1^{N+1}) + delta^2 r^2 (b1^{N-1} - b2^{N-1})
///   + (t2 delta + t1 delta r^{2N}) (b1 - b2).
Complex boundary_residual(const ModelParams& p, Complex energy);

/// Eigen-residual of the two-root superposition ansatz for a candidate energy.
double ansatz_residual(const ModelParams& p, Complex energy);

}  // namespace respond
