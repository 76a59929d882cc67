#include "landau/classical.hpp"

#include <cmath>

namespace landau {

Vec2 vector_potential(const MagneticField& field, const Vec2& q) {
  return Vec2{-(field.b / 2.0) * q[1], (field.b / 2.0) * q[0]};
}

double classical_energy(const ClassicalState& s) {
  const Vec2 a = vector_potential(s.field, s.q);
  const double v1 = s.p[0] - a[0];
  const double v2 = s.p[1] - a[1];
  return 0.5 * (v1 * v1 + v2 * v2);
}

Vec2 orbit_center(const ClassicalState& s) {
  const double b = s.field.b;
  return Vec2{(s.p[1] + (b / 2.0) * s.q[0]) / b, (-s.p[0] + (b / 2.0) * s.q[1]) / b};
}

namespace {

struct Deriv {
  double q1, q2, p1, p2;
};

// Hamilton's equations in the symmetric gauge:
//   q1' = p1 + (b/2) q2,        q2' = p2 - (b/2) q1,
//   p1' = (b/2)(p2 - (b/2) q1), p2' = -(b/2)(p1 + (b/2) q2).
Deriv rhs(double b, const double y[4]) {
  const double v1 = y[2] + (b / 2.0) * y[1];
  const double v2 = y[3] - (b / 2.0) * y[0];
  return Deriv{v1, v2, (b / 2.0) * v2, -(b / 2.0) * v1};
}

}  // namespace

Trajectory simulate_orbit(const ClassicalState& s0, double dt, int steps) {
  if (!(dt > 0.0)) throw std::invalid_argument("simulate_orbit: dt must be positive");
  if (steps < 1) throw std::invalid_argument("simulate_orbit: steps must be >= 1");
  const double b = s0.field.b;

  Trajectory tr;
  tr.times.reserve(std::size_t(steps) + 1);
  tr.states.reserve(std::size_t(steps) + 1);
  tr.energy.reserve(std::size_t(steps) + 1);

  double y[4] = {s0.q[0], s0.q[1], s0.p[0], s0.p[1]};
  auto record = [&](double t) {
    ClassicalState s(Vec2{y[0], y[1]}, Vec2{y[2], y[3]}, s0.field);
    tr.times.push_back(t);
    tr.energy.push_back(classical_energy(s));
    tr.states.push_back(std::move(s));
  };
  record(0.0);

  for (int n = 1; n <= steps; ++n) {
    const Deriv k1 = rhs(b, y);
    double y2[4] = {y[0] + 0.5 * dt * k1.q1, y[1] + 0.5 * dt * k1.q2,
                    y[2] + 0.5 * dt * k1.p1, y[3] + 0.5 * dt * k1.p2};
    const Deriv k2 = rhs(b, y2);
    double y3[4] = {y[0] + 0.5 * dt * k2.q1, y[1] + 0.5 * dt * k2.q2,
                    y[2] + 0.5 * dt * k2.p1, y[3] + 0.5 * dt * k2.p2};
    const Deriv k3 = rhs(b, y3);
    double y4[4] = {y[0] + dt * k3.q1, y[1] + dt * k3.q2, y[2] + dt * k3.p1, y[3] + dt * k3.p2};
    const Deriv k4 = rhs(b, y4);

    y[0] += dt / 6.0 * (k1.q1 + 2.0 * k2.q1 + 2.0 * k3.q1 + k4.q1);
    y[1] += dt / 6.0 * (k1.q2 + 2.0 * k2.q2 + 2.0 * k3.q2 + k4.q2);
    y[2] += dt / 6.0 * (k1.p1 + 2.0 * k2.p1 + 2.0 * k3.p1 + k4.p1);
    y[3] += dt / 6.0 * (k1.p2 + 2.0 * k2.p2 + 2.0 * k3.p2 + k4.p2);

    for (double v : y)
      if (!std::isfinite(v)) throw std::runtime_error("simulate_orbit: non-finite state");
    record(dt * double(n));
  }
  return tr;
}

ClassicalState closed_form_orbit(const ClassicalState& s0, double t) {
  const double b = s0.field.b;
  const Vec2 c = orbit_center(s0);
  // kinetic momentum v = p - A(q) rotates clockwise at frequency b
  const Vec2 a0 = vector_potential(s0.field, s0.q);
  const double v10 = s0.p[0] - a0[0];
  const double v20 = s0.p[1] - a0[1];
  const double cs = std::cos(b * t);
  const double sn = std::sin(b * t);
  const double v1 = v10 * cs + v20 * sn;
  const double v2 = -v10 * sn + v20 * cs;
  const Vec2 q{c[0] - v2 / b, c[1] + v1 / b};
  const Vec2 p{v1 - (b / 2.0) * q[1], v2 + (b / 2.0) * q[0]};
  return ClassicalState(q, p, s0.field);
}

double poisson_bracket_fd(const PhaseSpaceFn& f, const PhaseSpaceFn& g,
                          const ClassicalState& s, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("poisson_bracket_fd: h must be positive");
  auto shifted = [&](int comp, double d) {
    ClassicalState r = s;
    if (comp < 2)
      r.q[comp] += d;
    else
      r.p[comp - 2] += d;
    return r;
  };
  auto partial = [&](const PhaseSpaceFn& fn, int comp) {
    return (fn(shifted(comp, h)) - fn(shifted(comp, -h))) / (2.0 * h);
  };
  double acc = 0.0;
  for (int i = 0; i < 2; ++i)
    acc += partial(f, i) * partial(g, i + 2) - partial(f, i + 2) * partial(g, i);
  return acc;
}

}  // namespace landau
