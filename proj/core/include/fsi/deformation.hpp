#pragma once

#include "fsi/common.hpp"
#include "fsi/mesh.hpp"

namespace fsi {

/// Map from the solid reference domain to its current position in the fluid
/// domain, with its jacobian F = grad_s X.
class DeformationMap {
 public:
  enum class Kind { Identity, Affine, Disk };

  static DeformationMap identity();
  static DeformationMap affine(const Mat2& a, const Point& b);
  /// (x, y) -> (x sqrt(1 - y^2/2), y sqrt(1 - x^2/2)): [-1,1]^2 onto the unit disk.
  static DeformationMap disk();

  /// Same map followed by a translation.
  [[nodiscard]] DeformationMap translated(const Point& t) const;

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] Point operator()(const Point& s) const;
  [[nodiscard]] Mat2 jacobian(const Point& s) const;

 private:
  DeformationMap(Kind kind, const Mat2& a, const Point& b) : kind_(kind), a_(a), b_(b) {}
  Kind kind_;
  Mat2 a_;
  Point b_;
};

/// Restriction to one solid triangle of the map's straight-edge interpolant:
/// x = jacobian * s + offset, exact for identity and affine maps.
struct ElementMap {
  Mat2 jacobian;
  Point offset;
  Mat2 inverse;

  [[nodiscard]] Point forward(const Point& s) const { return jacobian * s + offset; }
  [[nodiscard]] Point pullback(const Point& x) const { return inverse * (x - offset); }
};

ElementMap element_map(const mesh::TriMesh& solid, const DeformationMap& xbar, int t);

}  // namespace fsi
