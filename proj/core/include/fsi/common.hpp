#pragma once

#include <Eigen/Core>
#include <Eigen/LU>
#include <Eigen/SparseCore>

#include <array>
#include <stdexcept>
#include <string>

namespace fsi {

using Point = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using Vector = Eigen::VectorXd;
using SparseMatrix = Eigen::SparseMatrix<double>;

/// Three corner points, counter-clockwise when produced by this library.
using Triangle = std::array<Point, 3>;

/// Barycentric coordinates (l0, l1, l2), summing to one.
using Barycentric = std::array<double, 3>;

/// Axis-aligned rectangle.
struct Box {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;

  [[nodiscard]] double width() const { return xmax - xmin; }
  [[nodiscard]] double height() const { return ymax - ymin; }
  [[nodiscard]] double area() const { return width() * height(); }
  [[nodiscard]] bool degenerate() const { return !(width() > 0.0) || !(height() > 0.0); }
  [[nodiscard]] bool overlaps(const Box& o) const {
    return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
  }
  [[nodiscard]] bool contains(const Point& p) const {
    return p.x() >= xmin && p.x() <= xmax && p.y() >= ymin && p.y() <= ymax;
  }
  [[nodiscard]] Box inflated(double margin) const {
    return {xmin - margin, ymin - margin, xmax + margin, ymax + margin};
  }
  static Box of(const Triangle& t);
};

/// Base of every error raised by the library. Domain and configuration
/// problems (bad input, unsupported files, uncovered solids) derive from it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A check on an internal invariant failed; indicates a bug rather than bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Twice the signed area of (a, b, c); positive when counter-clockwise.
inline double cross(const Point& a, const Point& b, const Point& c) {
  return (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
}

inline double signed_area(const Triangle& t) { return 0.5 * cross(t[0], t[1], t[2]); }

inline Point barycentric_to_point(const Triangle& t, const Barycentric& l) {
  return l[0] * t[0] + l[1] * t[1] + l[2] * t[2];
}

/// Barycentric coordinates of p with respect to t (t must be non-degenerate).
Barycentric point_to_barycentric(const Triangle& t, const Point& p);

}  // namespace fsi
