#include "landau/operators.hpp"

#include <cmath>

namespace landau {

namespace {

// psi(x - d): the Gaussian exponent re-centres into the linear and constant
// parts, the polynomial re-expands binomially.
QuantumState translated(const QuantumState& psi, const Vec2& d) {
  const double b = psi.field().b;
  std::vector<GaussTerm> ts;
  ts.reserve(psi.terms().size());
  for (const auto& t : psi.terms()) {
    GaussTerm r;
    r.poly = t.poly.translated(d);
    r.l1 = t.l1 + (b / 2.0) * d[0];
    r.l2 = t.l2 + (b / 2.0) * d[1];
    r.kappa = t.kappa - t.l1 * d[0] - t.l2 * d[1] - (b / 4.0) * (d[0] * d[0] + d[1] * d[1]);
    ts.push_back(std::move(r));
  }
  return QuantumState(psi.field(), std::move(ts));
}

// exp(i (c1 x1 + c2 x2)) psi
QuantumState with_linear_phase(const QuantumState& psi, double c1, double c2) {
  std::vector<GaussTerm> ts = psi.terms();
  for (auto& t : ts) {
    t.l1 += kI * c1;
    t.l2 += kI * c2;
  }
  return QuantumState(psi.field(), std::move(ts));
}

}  // namespace

QuantumState apply_position(const QuantumState& psi, int axis) {
  if (axis != 1 && axis != 2) throw std::invalid_argument("apply_position: axis must be 1 or 2");
  std::vector<GaussTerm> ts = psi.terms();
  for (auto& t : ts) t.poly = t.poly.times_x(axis);
  return QuantumState(psi.field(), std::move(ts));
}

QuantumState apply_momentum(const QuantumState& psi, int axis) {
  if (axis != 1 && axis != 2) throw std::invalid_argument("apply_momentum: axis must be 1 or 2");
  const double b = psi.field().b;
  std::vector<GaussTerm> ts;
  ts.reserve(psi.terms().size());
  for (const auto& t : psi.terms()) {
    // -i d/dx [p e^E] = -i (p' + p (l_axis - (b/2) x_axis)) e^E
    Poly2 p = t.poly.derivative(axis);
    Poly2 lp = t.poly;
    lp *= (axis == 1 ? t.l1 : t.l2);
    p += lp;
    Poly2 xp = t.poly.times_x(axis);
    xp *= Complex{-b / 2.0, 0.0};
    p += xp;
    p *= -kI;
    GaussTerm r = t;
    r.poly = std::move(p);
    ts.push_back(std::move(r));
  }
  return QuantumState(psi.field(), std::move(ts));
}

QuantumState apply_K(const QuantumState& psi, int index) {
  const double b = psi.field().b;
  if (index == 1)
    return apply_momentum(psi, 1) * Complex{1.0 / b, 0.0} + apply_position(psi, 2) * Complex{0.5, 0.0};
  if (index == 2)
    return apply_momentum(psi, 2) + apply_position(psi, 1) * Complex{-b / 2.0, 0.0};
  throw std::invalid_argument("apply_K: index must be 1 or 2");
}

QuantumState apply_G(const QuantumState& psi, int index) {
  const double b = psi.field().b;
  if (index == 1)
    return apply_momentum(psi, 2) * Complex{1.0 / b, 0.0} + apply_position(psi, 1) * Complex{0.5, 0.0};
  if (index == 2)
    return apply_momentum(psi, 1) * Complex{-1.0 / b, 0.0} + apply_position(psi, 2) * Complex{0.5, 0.0};
  throw std::invalid_argument("apply_G: index must be 1 or 2");
}

QuantumState apply_hamiltonian(const QuantumState& psi) {
  const double b = psi.field().b;
  QuantumState k2 = apply_K(apply_K(psi, 2), 2);
  QuantumState k1 = apply_K(apply_K(psi, 1), 1);
  return k2 * Complex{0.5, 0.0} + k1 * Complex{b * b / 2.0, 0.0};
}

QuantumState apply_ladder(const QuantumState& psi, Ladder which) {
  const double b = psi.field().b;
  switch (which) {
    case Ladder::A:
      return (apply_K(psi, 1) * Complex{b, 0.0} + apply_K(psi, 2) * kI) *
             Complex{1.0 / std::sqrt(2.0 * b), 0.0};
    case Ladder::ADag:
      return (apply_K(psi, 1) * Complex{b, 0.0} - apply_K(psi, 2) * kI) *
             Complex{1.0 / std::sqrt(2.0 * b), 0.0};
    case Ladder::B:
      return (apply_G(psi, 1) - apply_G(psi, 2) * kI) * Complex{std::sqrt(b / 2.0), 0.0};
    case Ladder::BDag:
      return (apply_G(psi, 1) + apply_G(psi, 2) * kI) * Complex{std::sqrt(b / 2.0), 0.0};
  }
  throw std::invalid_argument("apply_ladder: unknown selector");
}

QuantumState landau_state(MagneticField field, int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("landau_state: indices must be >= 0");
  if (n + m > kLadderDegreeCap)
    throw std::invalid_argument("landau_state: n + m exceeds the degree cap " +
                                std::to_string(kLadderDegreeCap));
  QuantumState s = make_phi0(field);
  for (int i = 0; i < m; ++i) s = apply_ladder(s, Ladder::BDag);
  for (int i = 0; i < n; ++i) s = apply_ladder(s, Ladder::ADag);
  const double nn = norm(s);
  return s * Complex{1.0 / nn, 0.0};
}

QuantumState magnetic_translate(const QuantumState& psi, const Vec2& alpha) {
  const double b = psi.field().b;
  QuantumState t = translated(psi, alpha);
  return with_linear_phase(t, -(b / 2.0) * alpha[1], (b / 2.0) * alpha[0]);
}

QuantumState exp_G(const QuantumState& psi, int index, double alpha) {
  const double b = psi.field().b;
  if (index == 1) {
    // e^{i a G1} psi = e^{i a x1 / 2} psi(x1, x2 + a/b)
    QuantumState t = translated(psi, Vec2{0.0, -alpha / b});
    return with_linear_phase(t, alpha / 2.0, 0.0);
  }
  if (index == 2) {
    // e^{i a G2} psi = e^{i a x2 / 2} psi(x1 - a/b, x2)
    QuantumState t = translated(psi, Vec2{alpha / b, 0.0});
    return with_linear_phase(t, 0.0, alpha / 2.0);
  }
  throw std::invalid_argument("exp_G: index must be 1 or 2");
}

QuantumState apply_frak_X(const GaborPair& pair, const QuantumState& psi) {
  return apply_G(psi, 1) * Complex{-pair.field.b, 0.0};
}

QuantumState apply_frak_P(const GaborPair& pair, const QuantumState& psi) {
  (void)pair;
  return apply_G(psi, 2);
}

QuantumState exp_frak_X(const GaborPair& pair, double t, const QuantumState& psi) {
  return exp_G(psi, 1, -pair.field.b * t);
}

QuantumState exp_frak_P(const GaborPair& pair, double s, const QuantumState& psi) {
  (void)pair;
  return exp_G(psi, 2, s);
}

QuantumState weyl_T(const GaborPair& pair, Complex z, const QuantumState& psi) {
  const double t = z.real();
  const double s = z.imag();
  QuantumState r = exp_frak_P(pair, s, psi);
  r = exp_frak_X(pair, t, r);
  return r * std::exp(kI * (t * s / 2.0));
}

}  // namespace landau
