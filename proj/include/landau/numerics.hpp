#pragma once

#include <functional>
#include <vector>

#include "landau/states.hpp"

namespace landau {

/// Uniform tensor grid on [-L, L]^2 for the brute-force oracles.
struct Grid2D {
  double extent;  // L
  int points;     // N per axis

  Grid2D(double L, int N) : extent(L), points(N) {
    if (!(L > 0.0)) throw std::invalid_argument("Grid2D: extent must be positive");
    if (N < 16) throw std::invalid_argument("Grid2D: need at least 16 points per axis");
    if (spacing() >= 1.0) throw std::invalid_argument("Grid2D: spacing must be below 1");
  }

  double spacing() const { return 2.0 * extent / double(points - 1); }
  double coord(int i) const { return -extent + spacing() * double(i); }
};

/// Composite Simpson integration of f over the grid square. Requires an odd
/// point count; throws on non-finite samples. Summation order is fixed, so
/// results are bit-reproducible.
Complex quad2d(const std::function<Complex(double, double)>& f, const Grid2D& grid);

/// Discrete L2 norm of (H_grid - energy) psi over grid interior points, with
/// the Hamiltonian assembled from the 5-point Laplacian and central first
/// differences. Converges at O(h^2) for smooth eigenfunctions.
double grid_hamiltonian_residual(const QuantumState& psi, double energy, const Grid2D& grid);

/// Dense square complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int n) : n_(n), a_(std::size_t(n) * std::size_t(n)) {}

  static CMatrix identity(int n);

  int size() const { return n_; }
  Complex& operator()(int i, int j) { return a_[std::size_t(i) * n_ + j]; }
  const Complex& operator()(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }

  double frobenius_norm() const;
  double max_abs() const;

 private:
  int n_ = 0;
  std::vector<Complex> a_;
};

struct EigenResult {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // unitary, columns are eigenvectors
};

/// Cyclic-Jacobi eigendecomposition of a Hermitian matrix. Deterministic
/// sweep order; eigenvalues ascending; each eigenvector phase-normalized so
/// its first significant component is real positive. Throws when the input
/// fails the Hermiticity tolerance or the sweeps fail to converge.
EigenResult hermitian_eig(const CMatrix& m);

}  // namespace landau
