#include "fsi/deformation.hpp"

#include <cmath>

namespace fsi {

DeformationMap DeformationMap::identity() { return {Kind::Identity, Mat2::Identity(), Point::Zero()}; }

DeformationMap DeformationMap::affine(const Mat2& a, const Point& b) {
  if (a.determinant() == 0.0) throw Error("DeformationMap::affine: singular matrix");
  return {Kind::Affine, a, b};
}

DeformationMap DeformationMap::disk() { return {Kind::Disk, Mat2::Identity(), Point::Zero()}; }

DeformationMap DeformationMap::translated(const Point& t) const {
  const Kind kind = kind_ == Kind::Identity ? Kind::Affine : kind_;
  return {kind, a_, b_ + t};
}

Point DeformationMap::operator()(const Point& s) const {
  switch (kind_) {
    case Kind::Identity: return s;
    case Kind::Affine: return a_ * s + b_;
    case Kind::Disk: {
      const double x = s.x();
      const double y = s.y();
      return Point(x * std::sqrt(1.0 - 0.5 * y * y), y * std::sqrt(1.0 - 0.5 * x * x)) + b_;
    }
  }
  return s;
}

Mat2 DeformationMap::jacobian(const Point& s) const {
  switch (kind_) {
    case Kind::Identity: return Mat2::Identity();
    case Kind::Affine: return a_;
    case Kind::Disk: {
      const double x = s.x();
      const double y = s.y();
      const double ry = std::sqrt(1.0 - 0.5 * y * y);
      const double rx = std::sqrt(1.0 - 0.5 * x * x);
      Mat2 f;
      f << ry, -0.5 * x * y / ry,  //
          -0.5 * x * y / rx, rx;
      return f;
    }
  }
  return Mat2::Identity();
}

ElementMap element_map(const mesh::TriMesh& solid, const DeformationMap& xbar, int t) {
  const Triangle ref = solid.triangle(t);
  Mat2 ds;
  ds.col(0) = ref[1] - ref[0];
  ds.col(1) = ref[2] - ref[0];
  ElementMap m;
  if (xbar.kind() == DeformationMap::Kind::Disk) {
    const Point x0 = xbar(ref[0]);
    Mat2 dx;
    dx.col(0) = xbar(ref[1]) - x0;
    dx.col(1) = xbar(ref[2]) - x0;
    m.jacobian = dx * ds.inverse();
    m.offset = x0 - m.jacobian * ref[0];
  } else {
    m.jacobian = xbar.jacobian(ref[0]);
    m.offset = xbar(Point::Zero());
  }
  if (m.jacobian.determinant() <= 0.0) {
    throw Error("element_map: map folds or degenerates solid triangle " + std::to_string(t));
  }
  m.inverse = m.jacobian.inverse();
  return m;
}

}  // namespace fsi
