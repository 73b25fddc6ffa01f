#include "fsi/spaces.hpp"

#include <algorithm>

namespace fsi::spaces {

FESpace::FESpace(SpaceKind kind, std::shared_ptr<const mesh::TriMesh> mesh,
                 std::shared_ptr<const mesh::MacroMeshPair> pair)
    : kind_(kind), mesh_(std::move(mesh)), pair_(std::move(pair)) {
  if (!mesh_) throw Error("FESpace: null mesh");
  switch (kind_) {
    case SpaceKind::P1Scalar: dof_count_ = mesh_->num_vertices(); break;
    case SpaceKind::P1Vector:
    case SpaceKind::P1isoP2Vector: dof_count_ = 2 * mesh_->num_vertices(); break;
    case SpaceKind::P1plusP0Scalar: dof_count_ = mesh_->num_vertices() + mesh_->num_triangles(); break;
  }
  if (kind_ == SpaceKind::P1isoP2Vector) {
    for (int v = 0; v < mesh_->num_vertices(); ++v) {
      if (mesh_->is_boundary_vertex(v)) {
        dirichlet_.push_back(vector_dof(v, 0));
        dirichlet_.push_back(vector_dof(v, 1));
      }
    }
  }
}

FESpace FESpace::p1_scalar(std::shared_ptr<const mesh::TriMesh> mesh) {
  return {SpaceKind::P1Scalar, std::move(mesh), nullptr};
}

FESpace FESpace::p1_vector(std::shared_ptr<const mesh::TriMesh> mesh) {
  return {SpaceKind::P1Vector, std::move(mesh), nullptr};
}

namespace {

// Aliasing constructor: the member mesh shares ownership with its pair.
std::shared_ptr<const mesh::TriMesh> fine_of(const std::shared_ptr<const mesh::MacroMeshPair>& pair) {
  if (!pair) throw Error("FESpace: null mesh pair");
  return {pair, &pair->fine};
}

std::shared_ptr<const mesh::TriMesh> coarse_of(const std::shared_ptr<const mesh::MacroMeshPair>& pair) {
  if (!pair) throw Error("FESpace: null mesh pair");
  return {pair, &pair->coarse};
}

}  // namespace

FESpace FESpace::p1_iso_p2(std::shared_ptr<const mesh::MacroMeshPair> pair) {
  auto fine = fine_of(pair);
  return {SpaceKind::P1isoP2Vector, std::move(fine), std::move(pair)};
}

FESpace FESpace::p1_pressure(std::shared_ptr<const mesh::MacroMeshPair> pair) {
  auto coarse = coarse_of(pair);
  return {SpaceKind::P1Scalar, std::move(coarse), std::move(pair)};
}

FESpace FESpace::p1_plus_p0(std::shared_ptr<const mesh::MacroMeshPair> pair) {
  auto coarse = coarse_of(pair);
  return {SpaceKind::P1plusP0Scalar, std::move(coarse), std::move(pair)};
}

std::array<Point, 3> p1_gradients(const Triangle& tri) {
  const double two_area = cross(tri[0], tri[1], tri[2]);
  std::array<Point, 3> g;
  for (int i = 0; i < 3; ++i) {
    const Point& a = tri[(i + 1) % 3];
    const Point& b = tri[(i + 2) % 3];
    g[i] = Point(a.y() - b.y(), b.x() - a.x()) / two_area;
  }
  return g;
}

LocalBasis eval_basis(const FESpace& space, int tri, const Barycentric& at) {
  if (tri < 0 || tri >= space.mesh().num_triangles()) {
    throw Error("eval_basis: triangle index " + std::to_string(tri) + " out of range");
  }
  const auto& conn = space.mesh().triangles()[tri];
  const auto grads = p1_gradients(space.mesh().triangle(tri));
  LocalBasis b;
  for (int i = 0; i < 3; ++i) {
    b.dofs[i] = conn[i];
    b.values[i] = at[i];
    b.grads[i] = grads[i];
  }
  if (space.kind() == SpaceKind::P1plusP0Scalar) {
    b.count = 4;
    b.dofs[3] = space.p1_count() + tri;
    b.values[3] = 1.0;
    b.grads[3] = Point::Zero();
  }
  return b;
}

Vector interpolate(const FESpace& space, const ScalarField& field) {
  if (space.is_vector()) throw Error("interpolate: scalar field into a vector space");
  Vector c = Vector::Zero(space.dof_count());
  for (int v = 0; v < space.p1_count(); ++v) c[v] = field(space.mesh().vertex(v));
  return c;
}

Vector interpolate(const FESpace& space, const VectorField& field) {
  if (!space.is_vector()) throw Error("interpolate: vector field into a scalar space");
  Vector c = Vector::Zero(space.dof_count());
  for (int v = 0; v < space.p1_count(); ++v) {
    const Point val = field(space.mesh().vertex(v));
    c[vector_dof(v, 0)] = val.x();
    c[vector_dof(v, 1)] = val.y();
  }
  return c;
}

double evaluate(const FESpace& space, const Vector& coeffs, int tri, const Barycentric& at) {
  const LocalBasis b = eval_basis(space, tri, at);
  double s = 0.0;
  for (int i = 0; i < b.count; ++i) s += coeffs[b.dofs[i]] * b.values[i];
  return s;
}

Point evaluate_vector(const FESpace& space, const Vector& coeffs, int tri, const Barycentric& at, Mat2* grad) {
  const LocalBasis b = eval_basis(space, tri, at);
  Point val = Point::Zero();
  Mat2 g = Mat2::Zero();
  for (int i = 0; i < 3; ++i) {
    for (int c = 0; c < 2; ++c) {
      const double coef = coeffs[vector_dof(b.dofs[i], c)];
      val[c] += coef * b.values[i];
      g.row(c) += coef * b.grads[i].transpose();
    }
  }
  if (grad) *grad = g;
  return val;
}

Vector basis_integrals(const FESpace& space) {
  Vector m = Vector::Zero(space.is_vector() ? space.p1_count() : space.dof_count());
  const auto& mesh = space.mesh();
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const double a = mesh.area(t);
    for (int v : mesh.triangles()[t]) m[v] += a / 3.0;
    if (space.kind() == SpaceKind::P1plusP0Scalar) m[space.p1_count() + t] = a;
  }
  return m;
}

}  // namespace fsi::spaces
