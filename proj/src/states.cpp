#include "landau/states.hpp"

#include <algorithm>
#include <cstdlib>

namespace landau {

namespace {

double binom(int n, int k) {
  // exact in double for the small orders that arise here
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

double ipow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Poly2 Poly2::constant(Complex c) { return monomial(0, 0, c); }

Poly2 Poly2::monomial(int m, int n, Complex c) {
  if (m < 0 || n < 0) throw std::invalid_argument("Poly2: negative exponent");
  Poly2 p;
  if (c != Complex{0.0, 0.0}) p.coef_[{m, n}] = c;
  return p;
}

int Poly2::degree() const {
  int d = -1;
  for (const auto& [key, c] : coef_) d = std::max(d, key.first + key.second);
  return d;
}

int Poly2::degree_x1() const {
  int d = -1;
  for (const auto& [key, c] : coef_) d = std::max(d, key.first);
  return d;
}

int Poly2::degree_x2() const {
  int d = -1;
  for (const auto& [key, c] : coef_) d = std::max(d, key.second);
  return d;
}

double Poly2::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [key, c] : coef_) m = std::max(m, std::abs(c));
  return m;
}

void Poly2::add(int m, int n, Complex c) {
  if (m < 0 || n < 0) throw std::invalid_argument("Poly2: negative exponent");
  coef_[{m, n}] += c;
}

Poly2& Poly2::operator+=(const Poly2& other) {
  for (const auto& [key, c] : other.coef_) coef_[key] += c;
  return *this;
}

Poly2& Poly2::operator*=(Complex c) {
  for (auto& [key, v] : coef_) v *= c;
  return *this;
}

Poly2 Poly2::times_x(int axis) const {
  if (axis != 1 && axis != 2) throw std::invalid_argument("Poly2: axis must be 1 or 2");
  Poly2 r;
  for (const auto& [key, c] : coef_) {
    auto [m, n] = key;
    if (axis == 1)
      r.coef_[{m + 1, n}] = c;
    else
      r.coef_[{m, n + 1}] = c;
  }
  return r;
}

Poly2 Poly2::derivative(int axis) const {
  if (axis != 1 && axis != 2) throw std::invalid_argument("Poly2: axis must be 1 or 2");
  Poly2 r;
  for (const auto& [key, c] : coef_) {
    auto [m, n] = key;
    if (axis == 1 && m > 0) r.coef_[{m - 1, n}] += double(m) * c;
    if (axis == 2 && n > 0) r.coef_[{m, n - 1}] += double(n) * c;
  }
  return r;
}

Poly2 Poly2::translated(const Vec2& d) const {
  Poly2 r;
  for (const auto& [key, c] : coef_) {
    auto [m, n] = key;
    for (int j = 0; j <= m; ++j)
      for (int k = 0; k <= n; ++k) {
        Complex v = c * binom(m, j) * ipow(-d[0], m - j) * binom(n, k) * ipow(-d[1], n - k);
        if (v != Complex{0.0, 0.0}) r.coef_[{j, k}] += v;
      }
  }
  return r;
}

Complex Poly2::evaluate(double x1, double x2) const {
  Complex v{0.0, 0.0};
  for (const auto& [key, c] : coef_) v += c * ipow(x1, key.first) * ipow(x2, key.second);
  return v;
}

void Poly2::prune(double abs_tol) {
  for (auto it = coef_.begin(); it != coef_.end();) {
    if (std::abs(it->second) < abs_tol)
      it = coef_.erase(it);
    else
      ++it;
  }
}

namespace {

bool exponents_close(const GaussTerm& a, const GaussTerm& b) {
  auto near = [](Complex u, Complex v) {
    return std::abs(u.real() - v.real()) < kExponentMergeTol &&
           std::abs(u.imag() - v.imag()) < kExponentMergeTol;
  };
  return near(a.l1, b.l1) && near(a.l2, b.l2) && near(a.kappa, b.kappa);
}

bool term_key_less(const GaussTerm& a, const GaussTerm& b) {
  auto key = [](const GaussTerm& t) {
    return std::array<double, 6>{t.l1.real(), t.l1.imag(), t.l2.real(),
                                 t.l2.imag(), t.kappa.real(), t.kappa.imag()};
  };
  return key(a) < key(b);
}

// Merge terms whose exponent parameters coincide up to arithmetic noise,
// prune coefficients, drop empty terms, and order deterministically.
std::vector<GaussTerm> canonicalize(std::vector<GaussTerm> terms) {
  std::vector<GaussTerm> merged;
  for (auto& t : terms) {
    bool found = false;
    for (auto& m : merged) {
      if (exponents_close(m, t)) {
        m.poly += t.poly;
        found = true;
        break;
      }
    }
    if (!found) merged.push_back(std::move(t));
  }
  std::vector<GaussTerm> out;
  for (auto& t : merged) {
    t.poly.prune(kCoeffPruneTol);
    if (!t.poly.empty()) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), term_key_less);
  return out;
}

}  // namespace

QuantumState::QuantumState(MagneticField field, std::vector<GaussTerm> terms)
    : field_(field), terms_(canonicalize(std::move(terms))) {}

Complex QuantumState::evaluate(double x1, double x2) const {
  const double b = field_.b;
  Complex v{0.0, 0.0};
  for (const auto& t : terms_) {
    Complex ex = -(b / 4.0) * (x1 * x1 + x2 * x2) + t.l1 * x1 + t.l2 * x2 + t.kappa;
    v += t.poly.evaluate(x1, x2) * std::exp(ex);
  }
  return v;
}

QuantumState QuantumState::operator+(const QuantumState& other) const {
  if (!same_field(field_, other.field_))
    throw std::invalid_argument("QuantumState: cannot add states over different fields");
  std::vector<GaussTerm> ts = terms_;
  ts.insert(ts.end(), other.terms_.begin(), other.terms_.end());
  return QuantumState(field_, std::move(ts));
}

QuantumState QuantumState::operator-(const QuantumState& other) const {
  return *this + other * Complex{-1.0, 0.0};
}

QuantumState QuantumState::operator*(Complex c) const {
  std::vector<GaussTerm> ts = terms_;
  for (auto& t : ts) t.poly *= c;
  return QuantumState(field_, std::move(ts));
}

QuantumState make_phi0(MagneticField field) {
  GaussTerm t;
  t.poly = Poly2::constant(std::sqrt(field.b / (2.0 * kPi)));
  return QuantumState(field, {t});
}

namespace {

// Moments normalized by I_0: J_0 = 1, J_1 = mu/b, J_n = ((n-1)J_{n-2} + mu J_{n-1})/b.
// Working with J keeps every factor representable; the single exp(...) of the
// combined exponent is applied once per term pair.
std::vector<Complex> normalized_moments(double b, Complex mu, int nmax) {
  std::vector<Complex> j(std::size_t(nmax) + 1);
  j[0] = Complex{1.0, 0.0};
  if (nmax >= 1) j[1] = mu / b;
  for (int n = 2; n <= nmax; ++n) j[n] = (double(n - 1) * j[n - 2] + mu * j[n - 1]) / b;
  return j;
}

}  // namespace

std::vector<Complex> gauss_moments(double b, Complex mu, int nmax) {
  if (!(b > 0.0)) throw std::invalid_argument("gauss_moments: b must be positive");
  if (nmax < 0) throw std::invalid_argument("gauss_moments: nmax must be >= 0");
  auto j = normalized_moments(b, mu, nmax);
  Complex i0 = std::sqrt(2.0 * kPi / b) * std::exp(mu * mu / (2.0 * b));
  for (auto& v : j) v *= i0;
  return j;
}

Complex inner(const QuantumState& psi, const QuantumState& phi) {
  if (!same_field(psi.field(), phi.field()))
    throw std::invalid_argument("inner: states live over different magnetic fields");
  const double b = psi.field().b;
  Complex total{0.0, 0.0};
  for (const auto& s : psi.terms()) {
    for (const auto& t : phi.terms()) {
      const Complex mu1 = std::conj(s.l1) + t.l1;
      const Complex mu2 = std::conj(s.l2) + t.l2;
      const int n1 = std::max(0, s.poly.degree_x1() + t.poly.degree_x1());
      const int n2 = std::max(0, s.poly.degree_x2() + t.poly.degree_x2());
      const auto j1 = normalized_moments(b, mu1, n1);
      const auto j2 = normalized_moments(b, mu2, n2);
      // I_0(mu1) I_0(mu2) e^{conj(kappa_s) + kappa_t}, assembled as one exp
      const Complex ex = (mu1 * mu1 + mu2 * mu2) / (2.0 * b) + std::conj(s.kappa) + t.kappa;
      const Complex weight = (2.0 * kPi / b) * std::exp(ex);
      Complex acc{0.0, 0.0};
      for (const auto& [ks, cs] : s.poly.monomials())
        for (const auto& [kt, ct] : t.poly.monomials())
          acc += std::conj(cs) * ct * j1[ks.first + kt.first] * j2[ks.second + kt.second];
      total += weight * acc;
    }
  }
  return total;
}

double norm(const QuantumState& psi) {
  const double n2 = inner(psi, psi).real();
  return std::sqrt(std::max(0.0, n2));
}

double position_second_moment(const QuantumState& psi, int axis) {
  if (axis != 1 && axis != 2)
    throw std::invalid_argument("position_second_moment: axis must be 1 or 2");
  if (psi.is_zero())
    throw std::invalid_argument("position_second_moment: state is zero");
  std::vector<GaussTerm> ts = psi.terms();
  for (auto& t : ts) t.poly = t.poly.times_x(axis);
  QuantumState xpsi(psi.field(), std::move(ts));
  return inner(xpsi, xpsi).real();
}

}  // namespace landau
