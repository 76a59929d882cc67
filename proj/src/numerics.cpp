#include "landau/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace landau {

Complex quad2d(const std::function<Complex(double, double)>& f, const Grid2D& grid) {
  const int n = grid.points;
  if (n % 2 == 0)
    throw std::invalid_argument("quad2d: composite Simpson needs an odd point count");
  const double h = grid.spacing();
  auto w = [n](int i) -> double {
    if (i == 0 || i == n - 1) return 1.0;
    return (i % 2 == 1) ? 4.0 : 2.0;
  };
  Complex total{0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    const double x1 = grid.coord(i);
    Complex row{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
      const Complex v = f(x1, grid.coord(j));
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::runtime_error("quad2d: non-finite sample");
      row += w(j) * v;
    }
    total += w(i) * row;
  }
  return total * (h / 3.0) * (h / 3.0);
}

double grid_hamiltonian_residual(const QuantumState& psi, double energy, const Grid2D& grid) {
  const int n = grid.points;
  const double h = grid.spacing();
  const double b = psi.field().b;
  std::vector<Complex> u(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      u[std::size_t(i) * n + j] = psi.evaluate(grid.coord(i), grid.coord(j));

  auto at = [&](int i, int j) { return u[std::size_t(i) * n + j]; };

  // H = -(1/2) Lap - i (b/2)(x2 d1 - x1 d2) + (b^2/8)|x|^2
  double acc = 0.0;
  for (int i = 1; i + 1 < n; ++i) {
    const double x1 = grid.coord(i);
    for (int j = 1; j + 1 < n; ++j) {
      const double x2 = grid.coord(j);
      const Complex lap =
          (at(i + 1, j) + at(i - 1, j) + at(i, j + 1) + at(i, j - 1) - 4.0 * at(i, j)) / (h * h);
      const Complex d1 = (at(i + 1, j) - at(i - 1, j)) / (2.0 * h);
      const Complex d2 = (at(i, j + 1) - at(i, j - 1)) / (2.0 * h);
      const Complex hval = -0.5 * lap - kI * (b / 2.0) * (x2 * d1 - x1 * d2) +
                           (b * b / 8.0) * (x1 * x1 + x2 * x2) * at(i, j);
      const Complex r = hval - energy * at(i, j);
      acc += std::norm(r);
    }
  }
  return std::sqrt(acc * h * h);
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = Complex{1.0, 0.0};
  return m;
}

double CMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (const auto& v : a_) acc += std::norm(v);
  return std::sqrt(acc);
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, std::abs(v));
  return m;
}

namespace {

double off_diagonal_norm(const CMatrix& a) {
  const int n = a.size();
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) acc += 2.0 * std::norm(a(i, j));
  return std::sqrt(acc);
}

}  // namespace

EigenResult hermitian_eig(const CMatrix& m) {
  const int n = m.size();
  if (n == 0) throw std::invalid_argument("hermitian_eig: empty matrix");
  const double scale = std::max(1.0, m.max_abs());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > 1e-12 * scale)
        throw std::invalid_argument("hermitian_eig: input is not Hermitian to tolerance");

  // Work on the exactly Hermitian average; forces real diagonal.
  CMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  CMatrix v = CMatrix::identity(n);

  const double frob = std::max(a.frobenius_norm(), 1e-300);
  const int max_sweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= 1e-14 * frob) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex w = a(p, q);
        const double aw = std::abs(w);
        if (aw == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const Complex phase = w / aw;
        const double tau = (aqq - app) / (2.0 * aw);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Unitary on the (p,q) plane: U(p,p)=c, U(p,q)=s*phase,
        // U(q,p)=-s*conj(phase), U(q,q)=c; apply A <- U* A U, V <- V U.
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Complex arp = a(r, p);
          const Complex arq = a(r, q);
          a(r, p) = c * arp - s * std::conj(phase) * arq;
          a(r, q) = s * phase * arp + c * arq;
          a(p, r) = std::conj(a(r, p));
          a(q, r) = std::conj(a(r, q));
        }
        a(p, p) = Complex{app - t * aw, 0.0};
        a(q, q) = Complex{aqq + t * aw, 0.0};
        a(p, q) = Complex{0.0, 0.0};
        a(q, p) = Complex{0.0, 0.0};
        for (int r = 0; r < n; ++r) {
          const Complex vrp = v(r, p);
          const Complex vrq = v(r, q);
          v(r, p) = c * vrp - s * std::conj(phase) * vrq;
          v(r, q) = s * phase * vrp + c * vrq;
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(a) > 1e-12 * frob)
    throw std::runtime_error("hermitian_eig: Jacobi sweeps failed to converge");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a(i, i).real();
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return diag[x] < diag[y]; });

  EigenResult res;
  res.values.resize(n);
  res.vectors = CMatrix(n);
  for (int k = 0; k < n; ++k) {
    res.values[k] = diag[order[k]];
    for (int r = 0; r < n; ++r) res.vectors(r, k) = v(r, order[k]);
    // phase convention: first significant component real positive
    for (int r = 0; r < n; ++r) {
      const Complex vk = res.vectors(r, k);
      if (std::abs(vk) > 1e-8) {
        const Complex rot = std::conj(vk) / std::abs(vk);
        for (int rr = 0; rr < n; ++rr) res.vectors(rr, k) *= rot;
        break;
      }
    }
  }
  return res;
}

}  // namespace landau
