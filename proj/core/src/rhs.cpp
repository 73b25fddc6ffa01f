#include "fsi/assembly.hpp"
#include "fsi/exact_solution.hpp"

#include <algorithm>
#include <cmath>

namespace fsi::assembly {

using spaces::FESpace;
using spaces::vector_dof;

namespace {

// Parameter interval of the segment a + t (b - a), t in [0, 1], inside `tri`.
bool segment_interval(const Triangle& tri, const Point& a, const Point& b, double& t0, double& t1) {
  const Barycentric la = point_to_barycentric(tri, a);
  const Barycentric lb = point_to_barycentric(tri, b);
  t0 = 0.0;
  t1 = 1.0;
  for (int i = 0; i < 3; ++i) {
    const double slope = lb[i] - la[i];
    if (std::abs(slope) < 1e-15) {
      if (la[i] < -geometry::kBarycentricTolerance) return false;
      continue;
    }
    const double root = -la[i] / slope;
    if (slope > 0.0) {
      t0 = std::max(t0, root);
    } else {
      t1 = std::min(t1, root);
    }
  }
  return t1 > t0;
}

// -([p], v . n_s) along the mapped solid boundary. The boundary is split at
// every fluid edge crossing so each piece sees a single linear basis.
void add_pressure_jump(const ManufacturedSolution& exact, const DeformationMap& xbar, const mesh::TriMesh& solid,
                       const FESpace& velocity, const geometry::BoxIndex& index, int edge_points, Vector& f) {
  const auto& fluid = velocity.mesh();
  const quad::LineRule& line = quad::gauss_legendre(edge_points);
  for (const auto& edge : solid.boundary_edges()) {
    const Point a = xbar(solid.vertex(edge.a));
    const Point b = xbar(solid.vertex(edge.b));
    const Point dir = b - a;
    const double len = dir.norm();
    const Point normal(dir.y() / len, -dir.x() / len);  // boundary runs counter-clockwise

    Box box{std::min(a.x(), b.x()), std::min(a.y(), b.y()), std::max(a.x(), b.x()), std::max(a.y(), b.y())};
    std::vector<double> cuts{0.0, 1.0};
    for (int t : index.query(box)) {
      double t0 = 0.0;
      double t1 = 0.0;
      if (segment_interval(fluid.triangle(t), a, b, t0, t1)) {
        cuts.push_back(t0);
        cuts.push_back(t1);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const double lo = cuts[k];
      const double hi = cuts[k + 1];
      if (hi - lo < 1e-12) continue;
      const geometry::Location loc = geometry::locate_point(fluid, index, a + 0.5 * (lo + hi) * dir);
      const Triangle tri = fluid.triangle(loc.triangle);
      const auto& conn = fluid.triangles()[loc.triangle];
      for (std::size_t q = 0; q < line.nodes.size(); ++q) {
        const Point x = a + (lo + line.nodes[q] * (hi - lo)) * dir;
        const double w = line.weights[q] * (hi - lo) * len;
        const double jump = exact.p_solid(x) - exact.p_fluid(x);
        const Barycentric phi = point_to_barycentric(tri, x);
        for (int j = 0; j < 3; ++j) {
          for (int c = 0; c < 2; ++c) f[vector_dof(conn[j], c)] -= w * jump * phi[j] * normal[c];
        }
      }
    }
  }
}

// (data, v) on one element, for vector data and an interleaved vector P1 space.
template <class F>
void add_volume_data(const mesh::TriMesh& m, int e, const quad::QuadratureRule& rule, VolumeData mode, F&& data,
                     Vector& out) {
  const Triangle tri = m.triangle(e);
  const double area = signed_area(tri);
  const auto& conn = m.triangles()[e];
  if (mode == VolumeData::Interpolated) {
    const std::array<Point, 3> nodal{data(tri[0]), data(tri[1]), data(tri[2])};
    const Point sum = nodal[0] + nodal[1] + nodal[2];
    for (int j = 0; j < 3; ++j) {
      const Point v = area / 12.0 * (nodal[j] + sum);
      for (int c = 0; c < 2; ++c) out[vector_dof(conn[j], c)] += v[c];
    }
    return;
  }
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const Point val = data(barycentric_to_point(tri, rule.nodes[q]));
    for (int j = 0; j < 3; ++j) {
      for (int c = 0; c < 2; ++c) out[vector_dof(conn[j], c)] += area * rule.weights[q] * rule.nodes[q][j] * val[c];
    }
  }
}

}  // namespace

RhsVectors assemble_rhs(const ManufacturedSolution& exact, const DeformationMap& xbar, const FESpace& velocity,
                        const FESpace& solid_space, const geometry::Overlay& overlay,
                        const geometry::BoxIndex& fluid_index, const RhsOptions& options) {
  const quad::QuadratureRule& rule = options.volume_rule ? *options.volume_rule : quad::high_order_rule();
  const bool h1 = options.form == CouplingKind::H1;
  const auto& fluid = velocity.mesh();
  const auto& solid = solid_space.mesh();
  if (overlay.cells.size() != solid.triangles().size()) throw Error("assemble_rhs: overlay does not match the solid mesh");

  RhsVectors r;
  r.f = Vector::Zero(velocity.dof_count());
  r.g = Vector::Zero(solid_space.dof_count());
  r.d = Vector::Zero(solid_space.dof_count());

  // (-lap u + grad p, v) on the velocity mesh.
  for (int e = 0; e < fluid.num_triangles(); ++e) {
    add_volume_data(fluid, e, rule, options.volume_data,
                    [&](const Point& x) { return Point(exact.grad_p(x) - exact.laplacian_u(x)); }, r.f);
  }
  if (exact.pressure_jump) add_pressure_jump(exact, xbar, solid, velocity, fluid_index, options.edge_points, r.f);

  // Integrals over the mapped solid, pulled back to the reference domain.
  for (int s = 0; s < solid.num_triangles(); ++s) {
    const ElementMap em = element_map(solid, xbar, s);
    const double det = em.jacobian.determinant();
    const Triangle ref = solid.triangle(s);
    const auto& sconn = solid.triangles()[s];
    const auto grad_zeta = spaces::p1_gradients(ref);
    for (const auto& cell : overlay.cells[s]) {
      const Triangle ftri = fluid.triangle(cell.fluid_tri);
      const auto& fconn = fluid.triangles()[cell.fluid_tri];
      std::array<Point, 3> grad_phi = spaces::p1_gradients(ftri);
      for (auto& g : grad_phi) g = em.jacobian.transpose() * g;
      for (const Triangle& sub : cell.sub_tris) {
        const double ref_area = signed_area(sub) / det;
        for (std::size_t q = 0; q < rule.size(); ++q) {
          const Point x = barycentric_to_point(sub, rule.nodes[q]);
          const Point sref = em.pullback(x);
          const double w = ref_area * rule.weights[q];
          const Barycentric phi = point_to_barycentric(ftri, x);
          const Point lam = exact.lambda(sref);
          const Mat2 glam = exact.grad_lambda(sref);
          // c(lambda, v(X))
          for (int j = 0; j < 3; ++j) {
            for (int c = 0; c < 2; ++c) {
              double v = lam[c] * phi[j];
              if (h1) v += glam.row(c).dot(grad_phi[j]);
              r.f[vector_dof(fconn[j], c)] += w * v;
            }
          }
          if (options.d_via_overlay) {
            const Barycentric zeta = point_to_barycentric(ref, sref);
            const Point diff = exact.u(x) - exact.X(sref);
            const Mat2 gdiff = exact.grad_u(x) * em.jacobian - exact.grad_X(sref);
            for (int l = 0; l < 3; ++l) {
              for (int c = 0; c < 2; ++c) {
                double v = zeta[l] * diff[c];
                if (h1) v += gdiff.row(c).dot(grad_zeta[l]);
                r.d[vector_dof(sconn[l], c)] += w * v;
              }
            }
          }
        }
      }
    }
  }

  // Solid volume terms: (-lap X, Y) - c(lambda, Y) and, on the direct route, c(mu, u(X) - X).
  for (int s = 0; s < solid.num_triangles(); ++s) {
    add_volume_data(solid, s, rule, options.volume_data, [&](const Point& sp) { return Point(-exact.laplacian_X(sp)); },
                    r.g);
    const Triangle ref = solid.triangle(s);
    const double area = signed_area(ref);
    const auto& conn = solid.triangles()[s];
    const auto grads = spaces::p1_gradients(ref);
    const ElementMap em = element_map(solid, xbar, s);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const Point sp = barycentric_to_point(ref, rule.nodes[q]);
      const double w = area * rule.weights[q];
      const Point lam = exact.lambda(sp);
      const Mat2 glam = exact.grad_lambda(sp);
      for (int j = 0; j < 3; ++j) {
        for (int c = 0; c < 2; ++c) {
          double v = -lam[c] * rule.nodes[q][j];
          if (h1) v -= glam.row(c).dot(grads[j]);
          r.g[vector_dof(conn[j], c)] += w * v;
        }
      }
      if (!options.d_via_overlay) {
        const Point x = em.forward(sp);
        const Point diff = exact.u(x) - exact.X(sp);
        const Mat2 gdiff = exact.grad_u(x) * em.jacobian - exact.grad_X(sp);
        for (int l = 0; l < 3; ++l) {
          for (int c = 0; c < 2; ++c) {
            double v = rule.nodes[q][l] * diff[c];
            if (h1) v += gdiff.row(c).dot(grads[l]);
            r.d[vector_dof(conn[l], c)] += w * v;
          }
        }
      }
    }
  }

  // (grad X n, Y) on the boundary of the reference domain.
  const quad::LineRule& line = quad::gauss_legendre(options.edge_points);
  for (const auto& edge : solid.boundary_edges()) {
    const Point a = solid.vertex(edge.a);
    const Point b = solid.vertex(edge.b);
    const Point dir = b - a;
    const double len = dir.norm();
    const Point normal(dir.y() / len, -dir.x() / len);
    for (std::size_t q = 0; q < line.nodes.size(); ++q) {
      const double t = line.nodes[q];
      const Point flux = exact.grad_X(a + t * dir) * normal;
      const double w = line.weights[q] * len;
      for (int c = 0; c < 2; ++c) {
        r.g[vector_dof(edge.a, c)] += w * (1.0 - t) * flux[c];
        r.g[vector_dof(edge.b, c)] += w * t * flux[c];
      }
    }
  }
  return r;
}

}  // namespace fsi::assembly
