#pragma once

#include <functional>
#include <vector>

#include "landau/core.hpp"

namespace landau {

/// Phase-space point of the planar charge.
struct ClassicalState {
  Vec2 q{0.0, 0.0};
  Vec2 p{0.0, 0.0};
  MagneticField field;

  ClassicalState(Vec2 q_, Vec2 p_, MagneticField f) : q(q_), p(p_), field(f) {
    for (double v : {q[0], q[1], p[0], p[1]})
      if (!std::isfinite(v)) throw std::invalid_argument("ClassicalState: non-finite component");
  }
};

struct Trajectory {
  std::vector<double> times;
  std::vector<ClassicalState> states;
  std::vector<double> energy;
};

/// Symmetric-gauge vector potential A(q) = (b/2)(-q2, q1).
Vec2 vector_potential(const MagneticField& field, const Vec2& q);

/// H = (1/2)|p - A(q)|^2.
double classical_energy(const ClassicalState& s);

/// Conserved centre of the cyclotron orbit,
///   (1/b)(p2 + (b/2) q1), (1/b)(-p1 + (b/2) q2).
Vec2 orbit_center(const ClassicalState& s);

/// Classical RK4 integration of the canonical equations of motion. Not
/// symplectic; the runs here are short enough that RK4's smaller local error
/// makes the conservation diagnostics sharper. Throws if the state leaves
/// the finite range.
Trajectory simulate_orbit(const ClassicalState& s0, double dt, int steps);

/// Exact cyclotron solution: kinetic momentum rotates at frequency b around
/// the conserved centre.
ClassicalState closed_form_orbit(const ClassicalState& s0, double t);

using PhaseSpaceFn = std::function<double(const ClassicalState&)>;

/// Central-difference estimate of {f,g} = sum_i df/dq_i dg/dp_i - df/dp_i dg/dq_i.
double poisson_bracket_fd(const PhaseSpaceFn& f, const PhaseSpaceFn& g,
                          const ClassicalState& s, double h = 1e-4);

}  // namespace landau
