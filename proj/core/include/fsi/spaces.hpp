#pragma once

#include "fsi/common.hpp"
#include "fsi/mesh.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace fsi::spaces {

enum class SpaceKind { P1Scalar, P1Vector, P1isoP2Vector, P1plusP0Scalar };

using ScalarField = std::function<double(const Point&)>;
using VectorField = std::function<Point(const Point&)>;

/// Degree-of-freedom layout for the four spaces of the coupled problem.
///
/// Vector spaces interleave components per vertex: dof 2 v + c is component c
/// of vertex v. The enriched pressure space stores the continuous part first
/// (one dof per coarse vertex) followed by one piecewise-constant dof per
/// coarse triangle.
class FESpace {
 public:
  static FESpace p1_scalar(std::shared_ptr<const mesh::TriMesh> mesh);
  static FESpace p1_vector(std::shared_ptr<const mesh::TriMesh> mesh);
  /// Velocity: vector P1 on the fine mesh of the pair, zero on its boundary.
  static FESpace p1_iso_p2(std::shared_ptr<const mesh::MacroMeshPair> pair);
  /// Pressure: P1 on the coarse mesh of the pair.
  static FESpace p1_pressure(std::shared_ptr<const mesh::MacroMeshPair> pair);
  /// Pressure: P1 + P0 on the coarse mesh of the pair.
  static FESpace p1_plus_p0(std::shared_ptr<const mesh::MacroMeshPair> pair);

  [[nodiscard]] SpaceKind kind() const { return kind_; }
  /// Mesh carrying the basis functions (fine mesh for velocity, coarse for pressure).
  [[nodiscard]] const mesh::TriMesh& mesh() const { return *mesh_; }
  [[nodiscard]] const std::shared_ptr<const mesh::TriMesh>& mesh_ptr() const { return mesh_; }
  /// Macro pair, when the space was built from one.
  [[nodiscard]] const mesh::MacroMeshPair* macro() const { return pair_.get(); }

  [[nodiscard]] int components() const { return is_vector() ? 2 : 1; }
  [[nodiscard]] bool is_vector() const { return kind_ == SpaceKind::P1Vector || kind_ == SpaceKind::P1isoP2Vector; }
  [[nodiscard]] int dof_count() const { return dof_count_; }
  [[nodiscard]] int p1_count() const { return mesh_->num_vertices(); }
  [[nodiscard]] int p0_count() const { return kind_ == SpaceKind::P1plusP0Scalar ? mesh_->num_triangles() : 0; }

  /// Sorted constrained dofs (both components of every boundary vertex);
  /// empty for spaces without essential boundary conditions.
  [[nodiscard]] const std::vector<int>& dirichlet_dofs() const { return dirichlet_; }

 private:
  FESpace(SpaceKind kind, std::shared_ptr<const mesh::TriMesh> mesh, std::shared_ptr<const mesh::MacroMeshPair> pair);

  SpaceKind kind_;
  std::shared_ptr<const mesh::TriMesh> mesh_;
  std::shared_ptr<const mesh::MacroMeshPair> pair_;
  int dof_count_ = 0;
  std::vector<int> dirichlet_;
};

inline int vector_dof(int vertex, int component) { return 2 * vertex + component; }

/// Scalar shape functions of one triangle at a point. For the enriched
/// pressure the fourth entry is the element indicator.
struct LocalBasis {
  int count = 3;
  std::array<int, 4> dofs{};  ///< scalar dof index (vertex, or p1_count + triangle)
  std::array<double, 4> values{};
  std::array<Point, 4> grads{Point::Zero(), Point::Zero(), Point::Zero(), Point::Zero()};
};

/// Gradients of the three barycentric coordinates of a triangle.
std::array<Point, 3> p1_gradients(const Triangle& tri);

LocalBasis eval_basis(const FESpace& space, int tri, const Barycentric& at);

/// Nodal interpolation; the P0 part of an enriched space is set to zero.
Vector interpolate(const FESpace& space, const ScalarField& field);
Vector interpolate(const FESpace& space, const VectorField& field);

/// Value of a discrete scalar field (scalar spaces only).
double evaluate(const FESpace& space, const Vector& coeffs, int tri, const Barycentric& at);
/// Value and gradient (row c = grad of component c) of a discrete vector field.
Point evaluate_vector(const FESpace& space, const Vector& coeffs, int tri, const Barycentric& at, Mat2* grad = nullptr);

/// Integral of each scalar basis function over the domain.
Vector basis_integrals(const FESpace& space);

}  // namespace fsi::spaces
