#pragma once

#include "landau/states.hpp"

namespace landau {

/// Ladder operator selector. A/ADag move between Landau levels, B/BDag move
/// within a level (they shift the orbit-centre quantum number).
enum class Ladder { A, ADag, B, BDag };

/// Multiplication by x_axis.
QuantumState apply_position(const QuantumState& psi, int axis);

/// -i d/dx_axis, applied term-wise to the polynomial and the exponent.
QuantumState apply_momentum(const QuantumState& psi, int axis);

/// Dynamical coordinates: K1 = (1/b)(P1 + (b/2)X2), K2 = P2 - (b/2)X1.
QuantumState apply_K(const QuantumState& psi, int index);

/// Orbit-centre coordinates: G1 = (1/b)(P2 + (b/2)X1), G2 = (1/b)(-P1 + (b/2)X2).
QuantumState apply_G(const QuantumState& psi, int index);

/// H = (1/2)(K2^2 + b^2 K1^2).
QuantumState apply_hamiltonian(const QuantumState& psi);

QuantumState apply_ladder(const QuantumState& psi, Ladder which);

/// Maximum n + m accepted by landau_state; beyond this the moment recursion
/// degrades in double precision.
inline constexpr int kLadderDegreeCap = 12;

/// Unit-norm joint eigenstate (ADag^n BDag^m phi0, normalized): eigenvalue
/// b(n + 1/2) for the Hamiltonian and m for BDag B.
QuantumState landau_state(MagneticField field, int n, int m);

/// Magnetic translation tau_alpha = exp(i b (alpha1 G2 - alpha2 G1)), in the
/// exact closed form
///   (tau_alpha psi)(x) = exp(i(b/2)(alpha1 x2 - alpha2 x1)) psi(x - alpha).
/// The X/P split of the generator commutes, so no extra constant phase
/// appears and tau_{-alpha} inverts tau_alpha exactly.
QuantumState magnetic_translate(const QuantumState& psi, const Vec2& alpha);

/// One-parameter unitary groups exp(i alpha G_index), index in {1,2}.
QuantumState exp_G(const QuantumState& psi, int index, double alpha);

/// The canonical pair carried by a Landau level: (frakX, frakP) = (-b G1, G2),
/// which satisfies exp(it frakX) exp(is frakP) = exp(-ist) exp(is frakP) exp(it frakX).
struct GaborPair {
  enum class Kind { LandauLevelPair };
  Kind kind = Kind::LandauLevelPair;
  MagneticField field;

  explicit GaborPair(MagneticField f) : field(f) {}
};

QuantumState apply_frak_X(const GaborPair& pair, const QuantumState& psi);
QuantumState apply_frak_P(const GaborPair& pair, const QuantumState& psi);

QuantumState exp_frak_X(const GaborPair& pair, double t, const QuantumState& psi);
QuantumState exp_frak_P(const GaborPair& pair, double s, const QuantumState& psi);

/// Projective representation T(z) = e^{i Re(z) Im(z) / 2} e^{i Re(z) frakX} e^{i Im(z) frakP},
/// satisfying T(z)T(z') = e^{-i (Re z Im z' - Re z' Im z)/2} T(z + z').
QuantumState weyl_T(const GaborPair& pair, Complex z, const QuantumState& psi);

}  // namespace landau
