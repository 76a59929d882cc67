#pragma once

#include <map>
#include <utility>
#include <vector>

#include "landau/core.hpp"

namespace landau {

/// Sparse complex polynomial in two real variables, keyed by exponent pair
/// (m, n) for the monomial x1^m x2^n.
class Poly2 {
 public:
  using Key = std::pair<int, int>;
  using Map = std::map<Key, Complex>;

  Poly2() = default;

  static Poly2 constant(Complex c);
  static Poly2 monomial(int m, int n, Complex c);

  const Map& monomials() const { return coef_; }
  bool empty() const { return coef_.empty(); }
  int degree() const;           // max m+n over monomials, -1 when empty
  int degree_x1() const;        // max m, -1 when empty
  int degree_x2() const;        // max n, -1 when empty
  double max_abs_coeff() const;

  void add(int m, int n, Complex c);
  Poly2& operator+=(const Poly2& other);
  Poly2& operator*=(Complex c);

  Poly2 times_x(int axis) const;           // multiply by x_axis, axis in {1,2}
  Poly2 derivative(int axis) const;
  Poly2 translated(const Vec2& d) const;   // p(x1 - d1, x2 - d2)
  Complex evaluate(double x1, double x2) const;

  void prune(double abs_tol);

 private:
  Map coef_;
};

/// One polynomial-times-Gaussian term
///
///   p(x1, x2) * exp(-(b/4)(x1^2 + x2^2) + l1 x1 + l2 x2 + kappa).
///
/// The quadratic exponent is fixed by the shared field; it is never stored
/// per term.
struct GaussTerm {
  Poly2 poly;
  Complex l1{0.0, 0.0};
  Complex l2{0.0, 0.0};
  Complex kappa{0.0, 0.0};
};

/// Monomial coefficients below this magnitude are dropped after every
/// algebraic operation (below the double-precision noise floor of the
/// coefficient arithmetic that produces them).
inline constexpr double kCoeffPruneTol = 1e-15;

/// Gaussian-term exponent parameters closer than this are treated as equal
/// when merging terms, so the same state reached along two arithmetic routes
/// cancels at the coefficient level. Distinct translates differ by O(1).
inline constexpr double kExponentMergeTol = 1e-10;

/// Finite sum of Gaussian terms over one magnetic field. The class is closed
/// under every operator of the model; instances are immutable once built.
class QuantumState {
 public:
  explicit QuantumState(MagneticField field) : field_(field) {}
  QuantumState(MagneticField field, std::vector<GaussTerm> terms);

  const MagneticField& field() const { return field_; }
  const std::vector<GaussTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Complex evaluate(double x1, double x2) const;

  QuantumState operator+(const QuantumState& other) const;
  QuantumState operator-(const QuantumState& other) const;
  QuantumState operator*(Complex c) const;

 private:
  MagneticField field_;
  std::vector<GaussTerm> terms_;
};

/// Normalized lowest-level eigenfunction
///   phi0(x) = (b/2pi)^{1/2} exp(-(b/4)|x|^2).
QuantumState make_phi0(MagneticField field);

/// L2 scalar product, conjugate-linear in the first argument. Exact within
/// the state class via the 1D Gaussian moment recursion. Throws when the
/// states carry different fields.
Complex inner(const QuantumState& psi, const QuantumState& phi);

double norm(const QuantumState& psi);

/// ||X_axis psi||^2, axis in {1,2}. Throws on the zero state.
double position_second_moment(const QuantumState& psi, int axis);

/// Moments I_n = integral of t^n exp(-(b/2) t^2 + mu t) dt for n = 0..nmax,
/// computed by the stable upward recursion
///   I_0 = sqrt(2pi/b) exp(mu^2/(2b)),  I_1 = (mu/b) I_0,
///   I_n = ((n-1) I_{n-2} + mu I_{n-1}) / b.
std::vector<Complex> gauss_moments(double b, Complex mu, int nmax);

}  // namespace landau
