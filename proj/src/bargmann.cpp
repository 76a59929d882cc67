#include "landau/bargmann.hpp"

#include <cmath>
#include <string>

namespace landau {

namespace {

void prune_trailing_zeros(std::vector<Complex>& c) {
  while (!c.empty() && c.back() == Complex{0.0, 0.0}) c.pop_back();
}

// k! (2/b)^k through lgamma, safe for the full degree range
double factorial_weight(double b, int k) {
  return std::exp(std::lgamma(double(k) + 1.0) + double(k) * std::log(2.0 / b));
}

}  // namespace

BargmannPoly::BargmannPoly(MagneticField field, std::vector<Complex> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  prune_trailing_zeros(coeffs_);
  if (int(coeffs_.size()) - 1 > kBargmannDegreeCap)
    throw std::invalid_argument("BargmannPoly: degree exceeds cap " +
                                std::to_string(kBargmannDegreeCap));
}

Complex BargmannPoly::evaluate(Complex z) const {
  Complex v{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * z + *it;
  return v;
}

Complex sb_inner(const BargmannPoly& f, const BargmannPoly& g) {
  if (!same_field(f.field(), g.field()))
    throw std::invalid_argument("sb_inner: polynomials live over different fields");
  const double b = f.field().b;
  const std::size_t n = std::min(f.coeffs().size(), g.coeffs().size());
  Complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k)
    acc += std::conj(f.coeffs()[k]) * g.coeffs()[k] * factorial_weight(b, int(k));
  return acc;
}

BargmannPoly to_bargmann(const QuantumState& psi, double tol) {
  const MagneticField field = psi.field();
  const double b = field.b;
  // Highest monomial degree bounds the possible level-number content.
  int cap = 0;
  for (const auto& t : psi.terms()) cap = std::max(cap, t.poly.degree());
  cap = std::min(cap, kBargmannDegreeCap);

  // Project onto the orthonormal chain e_m = BDag^m phi0 / sqrt(m!).
  std::vector<Complex> gamma(std::size_t(cap) + 1);
  QuantumState chain = make_phi0(field);
  double log_fact = 0.0;
  for (int m = 0; m <= cap; ++m) {
    if (m > 0) {
      chain = apply_ladder(chain, Ladder::BDag);
      log_fact += std::log(double(m));
    }
    // chain = BDag^m phi0, norm sqrt(m!)
    gamma[m] = inner(chain, psi) * std::exp(-0.5 * log_fact);
  }

  const double total = inner(psi, psi).real();
  double captured = 0.0;
  for (const auto& g : gamma) captured += std::norm(g);
  const double residual = std::sqrt(std::max(0.0, total - captured));
  if (residual > tol * std::sqrt(std::max(total, 1e-300)))
    throw std::invalid_argument(
        "to_bargmann: state lies outside the polynomial lowest-level span, residual norm " +
        std::to_string(residual));

  // U e_m = (b/2)^{m/2} z^m / sqrt(m!)
  std::vector<Complex> coeffs(std::size_t(cap) + 1);
  log_fact = 0.0;
  for (int m = 0; m <= cap; ++m) {
    if (m > 0) log_fact += std::log(double(m));
    coeffs[m] = gamma[m] * std::exp(0.5 * double(m) * std::log(b / 2.0) - 0.5 * log_fact);
  }
  return BargmannPoly(field, std::move(coeffs));
}

QuantumState from_bargmann(const BargmannPoly& f) {
  const MagneticField field = f.field();
  // f(x1 + i x2) * phi0, with z^k expanded binomially
  Poly2 poly;
  Poly2 zpow = Poly2::constant(Complex{1.0, 0.0});
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (k > 0) {
      Poly2 a = zpow.times_x(1);
      Poly2 bpart = zpow.times_x(2);
      bpart *= kI;
      a += bpart;
      zpow = std::move(a);
    }
    Poly2 term = zpow;
    term *= f.coeffs()[k];
    poly += term;
  }
  poly *= std::sqrt(field.b / (2.0 * kPi));
  GaussTerm t;
  t.poly = std::move(poly);
  return QuantumState(field, {t});
}

BargmannPoly sb_apply(const BargmannPoly& f, Ladder which) {
  const double b = f.field().b;
  const auto& c = f.coeffs();
  if (which == Ladder::B) {
    if (c.size() <= 1) return BargmannPoly(f.field(), {});
    std::vector<Complex> out(c.size() - 1);
    for (std::size_t k = 0; k + 1 < c.size(); ++k)
      out[k] = std::sqrt(2.0 / b) * double(k + 1) * c[k + 1];
    return BargmannPoly(f.field(), std::move(out));
  }
  if (which == Ladder::BDag) {
    if (c.empty()) return BargmannPoly(f.field(), {});
    std::vector<Complex> out(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) out[k + 1] = std::sqrt(b / 2.0) * c[k];
    return BargmannPoly(f.field(), std::move(out));
  }
  throw std::invalid_argument("sb_apply: only B and BDag act on the holomorphic side");
}

}  // namespace landau
