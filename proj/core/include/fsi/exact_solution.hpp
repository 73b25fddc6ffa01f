#pragma once

#include "fsi/common.hpp"

namespace fsi {

/// Closed-form fields of the verification problems on the fluid box [-2,2]^2:
///
///   u = curl psi, psi = (4 - x^2)^2 (4 - y^2)^2, i.e. u = (d psi/dy, -d psi/dx)
///   p = 150 sin x + offset, the offset depending on the side of the solid
///   X(s) = u(s), lambda(s) = (e^sx, e^sy)
///
/// Gradients are returned as matrices whose row c is the gradient of component c.
struct ManufacturedSolution {
  double u_scale = 1.0;
  double p_scale = 1.0;
  double lambda_scale = 1.0;

  /// Pressure offsets outside and inside `solid_region`; both zero means a
  /// continuous pressure.
  double fluid_offset = 0.0;
  double solid_offset = 0.0;
  bool pressure_jump = false;
  Box solid_region;

  static ManufacturedSolution standard();
  /// Piecewise pressure 150 sin x + fluid_offset outside, + solid_offset inside the box.
  static ManufacturedSolution with_jump(double fluid_offset, double solid_offset, const Box& solid_region);
  /// Every field identically zero.
  static ManufacturedSolution zero();

  [[nodiscard]] Point u(const Point& x) const;
  [[nodiscard]] Mat2 grad_u(const Point& x) const;
  [[nodiscard]] Point laplacian_u(const Point& x) const;

  /// Closed box membership; only meaningful for jump problems.
  [[nodiscard]] bool in_solid(const Point& x) const;
  [[nodiscard]] double p(const Point& x) const;
  [[nodiscard]] double p_fluid(const Point& x) const;
  [[nodiscard]] double p_solid(const Point& x) const;
  /// Gradient of the smooth part; identical on both sides.
  [[nodiscard]] Point grad_p(const Point& x) const;

  [[nodiscard]] Point X(const Point& s) const { return u(s); }
  [[nodiscard]] Mat2 grad_X(const Point& s) const { return grad_u(s); }
  [[nodiscard]] Point laplacian_X(const Point& s) const { return laplacian_u(s); }

  [[nodiscard]] Point lambda(const Point& s) const;
  [[nodiscard]] Mat2 grad_lambda(const Point& s) const;
};

}  // namespace fsi
