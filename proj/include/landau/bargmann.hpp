#pragma once

#include "landau/operators.hpp"
#include "landau/states.hpp"

namespace landau {

/// Degree cap for the polynomial model of the holomorphic representation.
inline constexpr int kBargmannDegreeCap = 24;

/// Polynomial element of the weighted holomorphic space attached to the
/// lowest Landau level: f(z) = sum_k c_k z^k.
///
/// The weight in the scalar product is (b/2pi) exp(-(b/2)|z|^2) dz. This is
/// the normalization forced by unitarity of the level map against
/// |phi0|^2 = (b/2pi) exp(-(b/2)|x|^2); it makes <z^m, z^n> = delta_mn n! (2/b)^n.
class BargmannPoly {
 public:
  BargmannPoly(MagneticField field, std::vector<Complex> coeffs);

  const MagneticField& field() const { return field_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  int degree() const { return int(coeffs_.size()) - 1; }  // -1 for the zero poly
  bool is_zero() const { return coeffs_.empty(); }

  Complex evaluate(Complex z) const;

 private:
  MagneticField field_;
  std::vector<Complex> coeffs_;  // trailing zeros pruned
};

/// Weighted scalar product, conjugate-linear in the first argument:
/// sum_k conj(f_k) g_k k! (2/b)^k, with the factorial weight accumulated in
/// log space. Throws on mismatched fields.
Complex sb_inner(const BargmannPoly& f, const BargmannPoly& g);

/// Level map U restricted to the polynomial span {BDag^m phi0}. The input is
/// projected onto that span; a residual above tol (relative) raises an error
/// reporting the residual norm.
BargmannPoly to_bargmann(const QuantumState& psi, double tol = 1e-10);

/// Inverse of the level map: f goes to f(x1 + i x2) phi0, expanded exactly.
QuantumState from_bargmann(const BargmannPoly& f);

/// Transported ladder action: B acts as sqrt(2/b) d/dz, BDag as sqrt(b/2) z.
/// Only B and BDag are meaningful here; other selectors throw.
BargmannPoly sb_apply(const BargmannPoly& f, Ladder which);

}  // namespace landau
