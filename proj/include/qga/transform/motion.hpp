#pragma once

#include "qga/transform/versor.hpp"

namespace qga {

// Unit direction (cos, sin). Rational directions come from the rational
// parametrization of the unit circle.
template <class S>
struct Direction {
  S cos;
  S sin;

  static Direction from_angle(double radians);
  // ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)), the direction at angle 2 atan t.
  static Direction from_slope_parameter(const S& t);
};

// Line through the origin along `dir`, unit norm: sin e2 - cos e5.
template <class S>
Multivector<S> origin_line(const Direction<S>& dir, const QgaContext<S>& ctx);

// Reflection in the line at psi followed by the line at phi:
// cos(phi - psi) + sin(phi - psi) e25. Acting on pair blades it maps
// (x, y) to (cos 2t x + sin 2t y, cos 2t y - sin 2t x) with t = phi - psi.
template <class S>
Versor<S> rotor_from_lines(const Direction<S>& phi, const Direction<S>& psi, const QgaContext<S>& ctx);
Versor<double> rotor_from_lines(double phi, double psi, const QgaContext<double>& ctx);

// Line with normal angle phi at signed distance t: -sin x + cos y = t.
// 2 sin e2 - t e3 - 2 cos e5 - t e6
template <class S>
Multivector<S> parallel_line(const Direction<S>& phi, const S& t, const QgaContext<S>& ctx);

// Half the product of the two parallel lines:
// 2 + (t1 - t2) sin (e23 + e26) + (t1 - t2) cos (e35 - e56).
// Translates by 2 (t1 - t2) (-sin, cos).
template <class S>
Versor<S> translator_from_lines(const Direction<S>& phi, const S& t1, const S& t2, const QgaContext<S>& ctx);
Versor<double> translator_from_lines(double phi, double t1, double t2, const QgaContext<double>& ctx);

// s + a i + eps (b j + c k), the image of s + a e25 + b (e23 + e26) + c (e35 - e56).
template <class S>
struct PlanarDualQuaternion {
  S real{0};
  S i{0};
  S ej{0};
  S ek{0};

  PlanarDualQuaternion operator*(const PlanarDualQuaternion& rhs) const {
    return {real * rhs.real - i * rhs.i, real * rhs.i + i * rhs.real,
            real * rhs.ej + ej * rhs.real - i * rhs.ek + ek * rhs.i,
            real * rhs.ek + ek * rhs.real + i * rhs.ej - ej * rhs.i};
  }
  bool operator==(const PlanarDualQuaternion&) const = default;
};

// Throws NotInSubalgebra when g has parts outside span{1, e25, e23 + e26, e35 - e56}.
template <class S>
PlanarDualQuaternion<S> se2_to_dual_quaternion(const Multivector<S>& g);
template <class S>
PlanarDualQuaternion<S> se2_to_dual_quaternion(const Versor<S>& g) {
  return se2_to_dual_quaternion(g.value());
}

template <class S>
Multivector<S> dual_quaternion_to_element(const PlanarDualQuaternion<S>& q, const QgaContext<S>& ctx);

}  // namespace qga
