#include "fsi/assembly.hpp"

#include <algorithm>

namespace fsi::assembly {

using spaces::FESpace;
using spaces::SpaceKind;
using spaces::vector_dof;
using Triplets = std::vector<Eigen::Triplet<double>>;

namespace {

void check_spaces(const FESpace& multiplier, const FESpace& velocity, const char* who) {
  if (multiplier.kind() != SpaceKind::P1Vector) throw Error(std::string(who) + ": multiplier must be vector P1");
  if (velocity.kind() != SpaceKind::P1isoP2Vector) throw Error(std::string(who) + ": velocity must be P1-iso-P2");
}

// 3 x 3 scalar block of c(zeta_l, phi_j(X)) for one solid / fluid element pair.
struct LocalBlock {
  std::array<std::array<double, 3>, 3> k{};

  // weight already includes the reference-domain area factor.
  void add(double weight, const Barycentric& zeta, const std::array<Point, 3>& grad_zeta, const Barycentric& phi,
           const std::array<Point, 3>& grad_phi_s, CouplingKind form) {
    for (int l = 0; l < 3; ++l) {
      for (int j = 0; j < 3; ++j) {
        double v = zeta[l] * phi[j];
        if (form == CouplingKind::H1) v += grad_zeta[l].dot(grad_phi_s[j]);
        k[l][j] += weight * v;
      }
    }
  }

  void flush(const std::array<int, 3>& rows, const std::array<int, 3>& cols, Triplets& t) const {
    for (int l = 0; l < 3; ++l) {
      for (int j = 0; j < 3; ++j) {
        for (int c = 0; c < 2; ++c) t.emplace_back(vector_dof(rows[l], c), vector_dof(cols[j], c), k[l][j]);
      }
    }
  }
};

// grad_s (phi o X) = F^T grad_x phi.
std::array<Point, 3> pull_gradients(const std::array<Point, 3>& grad_x, const Mat2& jacobian) {
  std::array<Point, 3> g;
  for (int j = 0; j < 3; ++j) g[j] = jacobian.transpose() * grad_x[j];
  return g;
}

}  // namespace

SparseMatrix assemble_Cf_intersection(const geometry::Overlay& overlay, const FESpace& multiplier,
                                      const FESpace& velocity, const DeformationMap& xbar, CouplingKind form,
                                      int order) {
  check_spaces(multiplier, velocity, "assemble_Cf_intersection");
  const auto& solid = multiplier.mesh();
  const auto& fluid = velocity.mesh();
  if (overlay.cells.size() != solid.triangles().size()) {
    throw Error("assemble_Cf_intersection: overlay does not match the solid mesh");
  }
  const quad::QuadratureRule& rule = quad::gauss_rule(order);

  Triplets t;
  t.reserve(overlay.cell_count() * 18);
  for (int s = 0; s < solid.num_triangles(); ++s) {
    const ElementMap em = element_map(solid, xbar, s);
    const double det = em.jacobian.determinant();
    const Triangle ref = solid.triangle(s);
    const auto grad_zeta = spaces::p1_gradients(ref);
    for (const auto& cell : overlay.cells[s]) {
      const Triangle ftri = fluid.triangle(cell.fluid_tri);
      const auto grad_phi = pull_gradients(spaces::p1_gradients(ftri), em.jacobian);
      LocalBlock block;
      for (const Triangle& sub : cell.sub_tris) {
        const double ref_area = signed_area(sub) / det;
        for (std::size_t q = 0; q < rule.size(); ++q) {
          const Point x = barycentric_to_point(sub, rule.nodes[q]);
          const Barycentric phi = point_to_barycentric(ftri, x);
          if (std::min({phi[0], phi[1], phi[2]}) < -geometry::kBarycentricTolerance) {
            throw InvariantError("assemble_Cf_intersection: quadrature node outside its fluid element");
          }
          const Barycentric zeta = point_to_barycentric(ref, em.pullback(x));
          block.add(ref_area * rule.weights[q], zeta, grad_zeta, phi, grad_phi, form);
        }
      }
      block.flush(solid.triangles()[s], fluid.triangles()[cell.fluid_tri], t);
    }
  }
  SparseMatrix m(multiplier.dof_count(), velocity.dof_count());
  m.setFromTriplets(t.begin(), t.end());
  m.makeCompressed();
  return m;
}

SparseMatrix assemble_Cf_nointersection(const FESpace& multiplier, const FESpace& velocity,
                                        const geometry::BoxIndex& fluid_index, const DeformationMap& xbar,
                                        CouplingKind form, int order) {
  check_spaces(multiplier, velocity, "assemble_Cf_nointersection");
  const auto& solid = multiplier.mesh();
  const auto& fluid = velocity.mesh();
  const quad::QuadratureRule& rule = quad::gauss_rule(order);

  Triplets t;
  t.reserve(solid.triangles().size() * rule.size() * 18);
  for (int s = 0; s < solid.num_triangles(); ++s) {
    const ElementMap em = element_map(solid, xbar, s);
    const Triangle ref = solid.triangle(s);
    const double area = signed_area(ref);
    const auto grad_zeta = spaces::p1_gradients(ref);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const Point x = em.forward(barycentric_to_point(ref, rule.nodes[q]));
      const geometry::Location loc = geometry::locate_point(fluid, fluid_index, x);
      const auto grad_phi = pull_gradients(spaces::p1_gradients(fluid.triangle(loc.triangle)), em.jacobian);
      LocalBlock block;
      block.add(area * rule.weights[q], rule.nodes[q], grad_zeta, loc.bary, grad_phi, form);
      block.flush(solid.triangles()[s], fluid.triangles()[loc.triangle], t);
    }
  }
  SparseMatrix m(multiplier.dof_count(), velocity.dof_count());
  m.setFromTriplets(t.begin(), t.end());
  m.makeCompressed();
  return m;
}

}  // namespace fsi::assembly
