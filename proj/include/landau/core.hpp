#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace landau {

using Complex = std::complex<double>;
using Vec2 = std::array<double, 2>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/// Uniform magnetic field perpendicular to the plane. Units absorb mass and
/// charge, so the single strength b > 0 fixes the whole model.
struct MagneticField {
  double b;

  explicit MagneticField(double strength) : b(strength) {
    if (!std::isfinite(strength) || strength <= 0.0)
      throw std::invalid_argument("MagneticField: strength must be finite and positive");
  }
};

inline bool same_field(const MagneticField& lhs, const MagneticField& rhs) {
  return lhs.b == rhs.b;
}

}  // namespace landau
