#include "fsi/assembly.hpp"

#include <algorithm>

namespace fsi::assembly {

using spaces::FESpace;
using spaces::SpaceKind;
using spaces::vector_dof;
using Triplets = std::vector<Eigen::Triplet<double>>;

namespace {

SparseMatrix from_triplets(int rows, int cols, const Triplets& t) {
  SparseMatrix m(rows, cols);
  m.setFromTriplets(t.begin(), t.end());
  m.makeCompressed();
  return m;
}

// Stiffness (grad, grad) of a vector P1 space, identical for both components.
SparseMatrix vector_stiffness(const FESpace& space) {
  const auto& mesh = space.mesh();
  Triplets t;
  t.reserve(mesh.triangles().size() * 18);
  for (int e = 0; e < mesh.num_triangles(); ++e) {
    const Triangle tri = mesh.triangle(e);
    const double area = signed_area(tri);
    const auto grads = spaces::p1_gradients(tri);
    const auto& conn = mesh.triangles()[e];
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double k = area * grads[i].dot(grads[j]);
        for (int c = 0; c < 2; ++c) t.emplace_back(vector_dof(conn[i], c), vector_dof(conn[j], c), k);
      }
    }
  }
  return from_triplets(space.dof_count(), space.dof_count(), t);
}

}  // namespace

SparseMatrix assemble_Af(const FESpace& velocity) {
  if (velocity.kind() != SpaceKind::P1isoP2Vector) throw Error("assemble_Af: expected a P1-iso-P2 velocity space");
  return vector_stiffness(velocity);
}

SparseMatrix assemble_As(const FESpace& solid) {
  if (solid.kind() != SpaceKind::P1Vector) throw Error("assemble_As: expected a vector P1 space");
  return vector_stiffness(solid);
}

SparseMatrix assemble_B(const FESpace& velocity, const FESpace& pressure) {
  const auto* pair = velocity.macro();
  if (velocity.kind() != SpaceKind::P1isoP2Vector || pair == nullptr || pressure.macro() != pair) {
    throw Error("assemble_B: velocity and pressure spaces must come from the same macro mesh pair");
  }
  const auto& fine = pair->fine;
  const auto& coarse = pair->coarse;
  Triplets t;
  t.reserve(fine.triangles().size() * 24);
  for (int e = 0; e < fine.num_triangles(); ++e) {
    const Triangle child = fine.triangle(e);
    const double area = signed_area(child);
    const auto grads = spaces::p1_gradients(child);
    const auto& conn = fine.triangles()[e];
    const int parent = pair->parent[e];
    // Pressure is linear on the child: exact integral = area * value at centroid.
    const Point centroid = (child[0] + child[1] + child[2]) / 3.0;
    const Barycentric at = point_to_barycentric(coarse.triangle(parent), centroid);
    const spaces::LocalBasis psi = spaces::eval_basis(pressure, parent, at);
    for (int k = 0; k < psi.count; ++k) {
      for (int i = 0; i < 3; ++i) {
        for (int c = 0; c < 2; ++c) {
          t.emplace_back(psi.dofs[k], vector_dof(conn[i], c), -area * psi.values[k] * grads[i][c]);
        }
      }
    }
  }
  return from_triplets(pressure.dof_count(), velocity.dof_count(), t);
}

SparseMatrix assemble_Cs(const FESpace& solid, const FESpace& multiplier, CouplingKind form) {
  if (solid.kind() != SpaceKind::P1Vector || multiplier.kind() != SpaceKind::P1Vector ||
      &solid.mesh() != &multiplier.mesh()) {
    throw Error("assemble_Cs: solid and multiplier spaces must be vector P1 on the same mesh");
  }
  const auto& mesh = solid.mesh();
  Triplets t;
  t.reserve(mesh.triangles().size() * 18);
  for (int e = 0; e < mesh.num_triangles(); ++e) {
    const Triangle tri = mesh.triangle(e);
    const double area = signed_area(tri);
    const auto grads = spaces::p1_gradients(tri);
    const auto& conn = mesh.triangles()[e];
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        double k = area * (i == j ? 2.0 : 1.0) / 12.0;
        if (form == CouplingKind::H1) k += area * grads[i].dot(grads[j]);
        for (int c = 0; c < 2; ++c) t.emplace_back(vector_dof(conn[i], c), vector_dof(conn[j], c), k);
      }
    }
  }
  return from_triplets(multiplier.dof_count(), solid.dof_count(), t);
}

SparseMatrix CoupledSystem::matrix() const {
  const int ou = 0;
  const int op = offset_p();
  const int ox = offset_x();
  const int ol = offset_lambda();
  Triplets t;
  t.reserve(static_cast<std::size_t>(Af.nonZeros() + 2 * B.nonZeros() + As.nonZeros() + 2 * Cf.nonZeros() +
                                     2 * Cs.nonZeros()));
  auto add = [&](const SparseMatrix& m, int r0, int c0, double scale, bool transpose) {
    for (int k = 0; k < m.outerSize(); ++k) {
      for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
        const int r = static_cast<int>(it.row());
        const int c = static_cast<int>(it.col());
        if (transpose) {
          t.emplace_back(r0 + c, c0 + r, scale * it.value());
        } else {
          t.emplace_back(r0 + r, c0 + c, scale * it.value());
        }
      }
    }
  };
  add(Af, ou, ou, 1.0, false);
  add(B, ou, op, 1.0, true);
  add(Cf, ou, ol, 1.0, true);
  add(B, op, ou, 1.0, false);
  add(As, ox, ox, 1.0, false);
  add(Cs, ox, ol, -1.0, true);
  add(Cf, ol, ou, 1.0, false);
  add(Cs, ol, ox, -1.0, false);
  return from_triplets(size(), size(), t);
}

Vector CoupledSystem::rhs() const {
  Vector b = Vector::Zero(size());
  b.segment(0, n_u()) = f;
  b.segment(offset_x(), n_x()) = g;
  b.segment(offset_lambda(), n_lambda()) = d;
  return b;
}

void apply_dirichlet(CoupledSystem& system, const std::vector<int>& dofs) {
  std::vector<char> fixed(static_cast<std::size_t>(system.n_u()), 0);
  for (int k : dofs) fixed[k] = 1;

  auto drop_columns = [&](SparseMatrix& m, bool rows_too) {
    m.prune([&](const Eigen::Index& r, const Eigen::Index& c, const double&) {
      return !fixed[c] && !(rows_too && fixed[r]);
    });
  };
  drop_columns(system.Af, true);
  Triplets diag;
  diag.reserve(dofs.size());
  for (int k : dofs) diag.emplace_back(k, k, 1.0);
  system.Af += from_triplets(system.n_u(), system.n_u(), diag);
  drop_columns(system.B, false);
  drop_columns(system.Cf, false);
  for (int k : dofs) system.f[k] = 0.0;
  system.dirichlet = dofs;
}

}  // namespace fsi::assembly
