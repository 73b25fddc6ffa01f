#include "fsi/assembly.hpp"
#include "fsi/exact_solution.hpp"
#include "fsi/verification.hpp"

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include <random>

namespace fsi::assembly {
namespace {

using geometry::BoxIndex;
using mesh::Diagonal;
using spaces::FESpace;
using verification::Element;

using Dense = Eigen::MatrixXd;

std::shared_ptr<const mesh::MacroMeshPair> pair_of(int n, Diagonal d, const Box& box) {
  return std::make_shared<const mesh::MacroMeshPair>(mesh::refine_red(mesh::build_uniform(n, d, box)));
}

std::shared_ptr<const mesh::TriMesh> uniform(int n, Diagonal d, const Box& box) {
  return std::make_shared<const mesh::TriMesh>(mesh::build_uniform(n, d, box));
}

// Spaces, index and overlay of one test case at one level, without boundary conditions.
struct Level {
  verification::TestCase test;
  std::shared_ptr<const mesh::MacroMeshPair> pair;
  std::shared_ptr<const mesh::TriMesh> solid;
  FESpace velocity;
  FESpace multiplier;
  std::unique_ptr<BoxIndex> index;
  geometry::Overlay overlay;

  Level(int id, int level)
      : test(verification::make_test(id)),
        pair(verification::build_fluid_pair(test, verification::level_sizes(level).pressure_n, Element::BP)),
        solid(verification::build_solid_mesh(test, verification::level_sizes(level).solid_n)),
        velocity(FESpace::p1_iso_p2(pair)),
        multiplier(FESpace::p1_vector(solid)),
        index(std::make_unique<BoxIndex>(pair->fine)),
        overlay(geometry::build_overlay(*solid, test.xbar, pair->fine, *index)) {}

  SparseMatrix intersect(CouplingKind form, int order = 2) const {
    return assemble_Cf_intersection(overlay, multiplier, velocity, test.xbar, form, order);
  }
  SparseMatrix noint(CouplingKind form, int order) const {
    return assemble_Cf_nointersection(multiplier, velocity, *index, test.xbar, form, order);
  }
};

double max_abs(const SparseMatrix& m) {
  double v = 0.0;
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) v = std::max(v, std::abs(it.value()));
  }
  return v;
}

double asymmetry(const SparseMatrix& m) { return max_abs(SparseMatrix(m - SparseMatrix(m.transpose()))); }

// Sum over all entries coupling component c of the rows with component c of the columns.
double component_sum(const SparseMatrix& m, int c) {
  double s = 0.0;
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
      if (it.row() % 2 == c && it.col() % 2 == c) s += it.value();
    }
  }
  return s;
}

// m x m red subdivision of a triangle in barycentric lattice coordinates.
std::vector<Triangle> lattice(const Triangle& t, int m) {
  auto at = [&](int i, int j) {
    return barycentric_to_point(t, {1.0 - double(i + j) / m, double(i) / m, double(j) / m});
  };
  std::vector<Triangle> out;
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i + j < m; ++i) {
      out.push_back({at(i, j), at(i + 1, j), at(i, j + 1)});
      if (i + j + 1 < m) out.push_back({at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)});
    }
  }
  return out;
}

int containing_triangle(const mesh::TriMesh& m, const Point& p) {
  for (int t = 0; t < m.num_triangles(); ++t) {
    const Barycentric l = point_to_barycentric(m.triangle(t), p);
    if (std::min({l[0], l[1], l[2]}) > 1e-12) return t;
  }
  return -1;
}

// Velocity mesh on [-1,2]^2 whose edges lie on the lines x, y, x + y in
// (3 / 2n) Z. A fine enough lattice subdivision of solid triangles with
// vertices on that grid never straddles a fluid edge.
std::shared_ptr<const mesh::MacroMeshPair> aligned_pair(int n) { return pair_of(n, Diagonal::Left, {-1, -1, 2, 2}); }

TEST(Stiffness, SymmetricWithConstantKernel) {
  const FESpace v = FESpace::p1_iso_p2(pair_of(3, Diagonal::Right, {-2, -2, 2, 2}));
  const SparseMatrix af = assemble_Af(v);
  EXPECT_LT(asymmetry(af), 1e-14);
  for (int c = 0; c < 2; ++c) {
    const Vector ones = spaces::interpolate(v, spaces::VectorField([&](const Point&) { return Point(c == 0, c == 1); }));
    EXPECT_LT((af * ones).lpNorm<Eigen::Infinity>(), 1e-13);
  }

  const FESpace s = FESpace::p1_vector(uniform(4, Diagonal::Left, {-1, -1, 1, 1}));
  const SparseMatrix as = assemble_As(s);
  EXPECT_LT(asymmetry(as), 1e-14);
  const Vector c = spaces::interpolate(s, spaces::VectorField([](const Point&) { return Point(0.3, -1.7); }));
  EXPECT_LT((as * c).lpNorm<Eigen::Infinity>(), 1e-13);
}

TEST(Stiffness, EnergyOfLinearField) {
  const FESpace v = FESpace::p1_iso_p2(pair_of(4, Diagonal::Left, {-2, -2, 2, 2}));
  Mat2 g;
  g << 0.5, -1.25, 2.0, 0.75;
  const Vector lin = spaces::interpolate(v, spaces::VectorField([&](const Point& x) { return Point(g * x); }));
  EXPECT_NEAR(lin.dot(assemble_Af(v) * lin), 16.0 * g.squaredNorm(), 1e-11);
}

TEST(Divergence, SolenoidalFieldInKernel) {
  const auto pair = pair_of(4, Diagonal::Right, {-2, -2, 2, 2});
  const FESpace v = FESpace::p1_iso_p2(pair);
  for (const FESpace& p : {FESpace::p1_pressure(pair), FESpace::p1_plus_p0(pair)}) {
    const SparseMatrix b = assemble_B(v, p);
    EXPECT_EQ(b.rows(), p.dof_count());
    EXPECT_EQ(b.cols(), v.dof_count());
    const Vector rot = spaces::interpolate(v, spaces::VectorField([](const Point& x) { return Point(x.y(), -x.x()); }));
    EXPECT_LT((b * rot).lpNorm<Eigen::Infinity>(), 1e-14);
  }
}

TEST(Divergence, UnitDivergenceGivesBasisIntegrals) {
  const auto pair = pair_of(3, Diagonal::Left, {-2, -2, 2, 2});
  const FESpace v = FESpace::p1_iso_p2(pair);
  const FESpace p = FESpace::p1_plus_p0(pair);
  const Vector stretch = spaces::interpolate(v, spaces::VectorField([](const Point& x) { return Point(x.x(), 0.0); }));
  const Vector bu = assemble_B(v, p) * stretch;
  EXPECT_LT((bu + spaces::basis_integrals(p)).lpNorm<Eigen::Infinity>(), 1e-13);
}

TEST(Divergence, ElementRowsMatchBoundaryFlux) {
  const auto pair = pair_of(2, Diagonal::Right, {-2, -2, 2, 2});
  const FESpace v = FESpace::p1_iso_p2(pair);
  const FESpace p = FESpace::p1_plus_p0(pair);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector coeffs(v.dof_count());
  for (int i = 0; i < coeffs.size(); ++i) coeffs[i] = u(rng);
  const Vector bu = assemble_B(v, p) * coeffs;

  auto fine_vertex = [&](const Point& x) {
    for (int i = 0; i < pair->fine.num_vertices(); ++i) {
      if ((pair->fine.vertex(i) - x).norm() < 1e-12) return i;
    }
    return -1;
  };
  auto value = [&](int vtx) { return Point(coeffs[2 * vtx], coeffs[2 * vtx + 1]); };
  for (int t = 0; t < pair->coarse.num_triangles(); ++t) {
    const Triangle tri = pair->coarse.triangle(t);
    double flux = 0.0;
    for (int e = 0; e < 3; ++e) {
      const Point a = tri[e];
      const Point b = tri[(e + 1) % 3];
      const Point m = 0.5 * (a + b);
      const Point n(b.y() - a.y(), a.x() - b.x());  // outward, scaled by the edge length
      const Point ua = value(fine_vertex(a));
      const Point um = value(fine_vertex(m));
      const Point ub = value(fine_vertex(b));
      flux += 0.5 * (0.5 * (ua + um) + 0.5 * (um + ub)).dot(n);
    }
    EXPECT_NEAR(bu[p.p1_count() + t], -flux, 1e-13) << t;
  }
}

TEST(SolidCoupling, MassRowSumsAndH1Split) {
  const FESpace s = FESpace::p1_vector(uniform(4, Diagonal::Left, {-1, -1, 1, 1}));
  const SparseMatrix l2 = assemble_Cs(s, s, CouplingKind::L2);
  const SparseMatrix h1 = assemble_Cs(s, s, CouplingKind::H1);
  for (int c = 0; c < 2; ++c) EXPECT_NEAR(component_sum(l2, c), 4.0, 1e-13);
  EXPECT_LT(max_abs(SparseMatrix(h1 - l2 - assemble_As(s))), 1e-14);
  EXPECT_LT(asymmetry(h1), 1e-14);

  const Eigen::SelfAdjointEigenSolver<Dense> eig{Dense(h1)};
  EXPECT_GT(eig.eigenvalues().minCoeff(), 0.0);
}

TEST(FluidCoupling, MethodsAgreeOnMatchingMeshes) {
  const Level s(1, 2);
  for (CouplingKind form : {CouplingKind::L2, CouplingKind::H1}) {
    const SparseMatrix a = s.intersect(form);
    const SparseMatrix b = s.noint(form, 2);
    EXPECT_LT(max_abs(SparseMatrix(a - b)), 1e-13);
  }
}

TEST(FluidCoupling, IntersectionIndependentOfOrder) {
  const Level s(3, 2);
  EXPECT_LT(max_abs(SparseMatrix(s.intersect(CouplingKind::H1, 2) - s.intersect(CouplingKind::H1, 3))), 1e-13);
}

TEST(FluidCoupling, NoIntersectionDependsOnOrder) {
  const Level s(3, 2);
  EXPECT_GT(max_abs(SparseMatrix(s.noint(CouplingKind::H1, 2) - s.noint(CouplingKind::H1, 3))), 0.0);
}

TEST(FluidCoupling, ConstantsIntegrateToSolidArea) {
  const Level s(3, 2);
  for (CouplingKind form : {CouplingKind::L2, CouplingKind::H1}) {
    for (const SparseMatrix& m : {s.intersect(form), s.noint(form, 2), s.noint(form, 3)}) {
      for (int c = 0; c < 2; ++c) EXPECT_NEAR(component_sum(m, c), 4.0, 1e-12);
    }
  }
}

TEST(FluidCoupling, StraddlingTriangleMatchesSubdivision) {
  const auto pair = aligned_pair(6);
  const FESpace v = FESpace::p1_iso_p2(pair);
  const auto solid = std::make_shared<const mesh::TriMesh>(
      mesh::TriMesh({Point(0, 0), Point(1, 0), Point(0, 1)}, {{0, 1, 2}}));
  const FESpace mult = FESpace::p1_vector(solid);
  const BoxIndex index(pair->fine);
  const auto xbar = DeformationMap::identity();
  const auto overlay = geometry::build_overlay(*solid, xbar, pair->fine, index);
  ASSERT_GT(overlay.cells[0].size(), 2u);

  for (CouplingKind form : {CouplingKind::L2, CouplingKind::H1}) {
    Dense oracle = Dense::Zero(mult.dof_count(), v.dof_count());
    const Triangle ref = solid->triangle(0);
    const auto grad_zeta = spaces::p1_gradients(ref);
    for (const Triangle& sub : lattice(ref, 8)) {
      const int t = containing_triangle(pair->fine, (sub[0] + sub[1] + sub[2]) / 3.0);
      ASSERT_GE(t, 0);
      const Triangle ftri = pair->fine.triangle(t);
      const auto grad_phi = spaces::p1_gradients(ftri);
      const auto& conn = pair->fine.triangles()[t];
      const auto& rule = quad::high_order_rule();
      for (std::size_t q = 0; q < rule.size(); ++q) {
        const Point x = barycentric_to_point(sub, rule.nodes[q]);
        const double w = signed_area(sub) * rule.weights[q];
        const Barycentric zeta = point_to_barycentric(ref, x);
        const Barycentric phi = point_to_barycentric(ftri, x);
        for (int l = 0; l < 3; ++l) {
          for (int j = 0; j < 3; ++j) {
            double val = zeta[l] * phi[j];
            if (form == CouplingKind::H1) val += grad_zeta[l].dot(grad_phi[j]);
            for (int c = 0; c < 2; ++c) oracle(2 * l + c, 2 * conn[j] + c) += w * val;
          }
        }
      }
    }
    const Dense got(assemble_Cf_intersection(overlay, mult, v, xbar, form));
    EXPECT_LT((got - oracle).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(FluidCoupling, InteriorTriangleGivesSameMatrixForBothMethods) {
  const auto pair = aligned_pair(3);
  const FESpace v = FESpace::p1_iso_p2(pair);
  const auto solid = std::make_shared<const mesh::TriMesh>(
      mesh::TriMesh({Point(0.05, 0.05), Point(0.3, 0.1), Point(0.1, 0.25)}, {{0, 1, 2}}));
  const FESpace mult = FESpace::p1_vector(solid);
  const BoxIndex index(pair->fine);
  const auto xbar = DeformationMap::identity();
  const auto overlay = geometry::build_overlay(*solid, xbar, pair->fine, index);
  ASSERT_EQ(overlay.cell_count(), 1u);
  const SparseMatrix a = assemble_Cf_intersection(overlay, mult, v, xbar, CouplingKind::H1);
  const SparseMatrix b = assemble_Cf_nointersection(mult, v, index, xbar, CouplingKind::H1, 2);
  EXPECT_LT(max_abs(SparseMatrix(a - b)), 1e-15);
}

TEST(FluidCoupling, ChainRuleUnderAffineMap) {
  Mat2 a;
  a << 0.9, 0.2, -0.1, 1.1;
  const Point b(0.1, -0.05);
  const auto xbar = DeformationMap::affine(a, b);
  const auto pair = pair_of(4, Diagonal::Right, {-2, -2, 2, 2});
  const FESpace v = FESpace::p1_iso_p2(pair);
  const auto solid = uniform(4, Diagonal::Left, {-1, -1, 1, 1});
  const FESpace mult = FESpace::p1_vector(solid);
  const BoxIndex index(pair->fine);
  const auto overlay = geometry::build_overlay(*solid, xbar, pair->fine, index);

  Mat2 g;
  g << 1.5, -0.25, 0.5, 2.0;
  const Point c0(0.3, -0.7);
  auto field = [&](const Point& x) { return Point(g * x + c0); };
  const Vector vh = spaces::interpolate(v, spaces::VectorField(field));

  // grad_s of v(X(s)) by central differences.
  const double h = 1e-5;
  auto composed = [&](const Point& s) { return field(xbar(s)); };
  const Point s0(0.2, 0.4);
  Mat2 fd;
  fd.col(0) = (composed(s0 + Point(h, 0)) - composed(s0 - Point(h, 0))) / (2 * h);
  fd.col(1) = (composed(s0 + Point(0, h)) - composed(s0 - Point(0, h))) / (2 * h);

  Vector oracle = Vector::Zero(mult.dof_count());
  for (int t = 0; t < solid->num_triangles(); ++t) {
    const auto grads = spaces::p1_gradients(solid->triangle(t));
    for (int l = 0; l < 3; ++l) {
      for (int c = 0; c < 2; ++c) oracle[2 * solid->triangles()[t][l] + c] += solid->area(t) * fd.row(c).dot(grads[l]);
    }
  }
  for (const auto& [h1, l2] : {std::pair{assemble_Cf_intersection(overlay, mult, v, xbar, CouplingKind::H1),
                                         assemble_Cf_intersection(overlay, mult, v, xbar, CouplingKind::L2)},
                               std::pair{assemble_Cf_nointersection(mult, v, index, xbar, CouplingKind::H1, 3),
                                         assemble_Cf_nointersection(mult, v, index, xbar, CouplingKind::L2, 3)}}) {
    EXPECT_LT(((h1 - l2) * vh - oracle).lpNorm<Eigen::Infinity>(), 1e-9);
  }
}

TEST(FluidCoupling, Deterministic) {
  const Level s(7, 2);
  const SparseMatrix a = s.intersect(CouplingKind::H1);
  const SparseMatrix b = s.intersect(CouplingKind::H1);
  ASSERT_EQ(a.nonZeros(), b.nonZeros());
  EXPECT_TRUE(std::equal(a.valuePtr(), a.valuePtr() + a.nonZeros(), b.valuePtr()));
  EXPECT_TRUE(std::equal(a.innerIndexPtr(), a.innerIndexPtr() + a.nonZeros(), b.innerIndexPtr()));
}

TEST(RightHandSide, ZeroFieldsGiveZeroVectors) {
  const Level s(5, 1);
  const auto r = assemble_rhs(ManufacturedSolution::zero(), s.test.xbar, s.velocity, s.multiplier, s.overlay, *s.index);
  EXPECT_EQ(r.f.lpNorm<Eigen::Infinity>(), 0.0);
  EXPECT_EQ(r.g.lpNorm<Eigen::Infinity>(), 0.0);
  EXPECT_EQ(r.d.lpNorm<Eigen::Infinity>(), 0.0);
}

TEST(RightHandSide, NoConstraintDefectWhenTheSolidFollowsTheFluid) {
  const Level s(1, 2);
  const auto r = assemble_rhs(s.test.exact, s.test.xbar, s.velocity, s.multiplier, s.overlay, *s.index);
  EXPECT_LT(r.d.lpNorm<Eigen::Infinity>(), 1e-12);
}

TEST(RightHandSide, ConstraintRoutesAgreeWithExactRule) {
  for (int id : {7, 8}) {
    const Level s(id, 1);
    RhsOptions direct;
    direct.volume_rule = &quad::collapsed_rule(5);
    RhsOptions via = direct;
    via.d_via_overlay = true;
    const Vector a = assemble_rhs(s.test.exact, s.test.xbar, s.velocity, s.multiplier, s.overlay, *s.index, direct).d;
    const Vector b = assemble_rhs(s.test.exact, s.test.xbar, s.velocity, s.multiplier, s.overlay, *s.index, via).d;
    EXPECT_GT(a.lpNorm<Eigen::Infinity>(), 1e-3) << id;
    EXPECT_LT((a - b).lpNorm<Eigen::Infinity>(), 1e-9) << id;
  }
}

TEST(RightHandSide, InterpolantSatisfiesConstraintOnMatchingMeshes) {
  const Level s(1, 2);
  const Vector ui = spaces::interpolate(s.velocity, spaces::VectorField([&](const Point& x) { return s.test.exact.u(x); }));
  const Vector xi = spaces::interpolate(s.multiplier, spaces::VectorField([&](const Point& p) { return s.test.exact.X(p); }));
  const SparseMatrix cs = assemble_Cs(s.multiplier, s.multiplier, CouplingKind::H1);
  EXPECT_LT((s.intersect(CouplingKind::H1) * ui - cs * xi).lpNorm<Eigen::Infinity>(), 1e-12);
}

TEST(RightHandSide, MultiplierLoadMatchesSubdivision) {
  const auto pair = aligned_pair(12);
  const FESpace v = FESpace::p1_iso_p2(pair);
  const auto solid = uniform(2, Diagonal::Left, {0, 0, 1, 1});
  const FESpace mult = FESpace::p1_vector(solid);
  const BoxIndex index(pair->fine);
  const auto xbar = DeformationMap::identity();
  const auto overlay = geometry::build_overlay(*solid, xbar, pair->fine, index);
  ManufacturedSolution ex;
  ex.u_scale = 0.0;
  ex.p_scale = 0.0;

  Vector oracle = Vector::Zero(v.dof_count());
  const auto& rule = quad::collapsed_rule(8);
  for (int s = 0; s < solid->num_triangles(); ++s) {
    for (const Triangle& sub : lattice(solid->triangle(s), 8)) {
      const int t = containing_triangle(pair->fine, (sub[0] + sub[1] + sub[2]) / 3.0);
      ASSERT_GE(t, 0);
      const Triangle ftri = pair->fine.triangle(t);
      const auto grads = spaces::p1_gradients(ftri);
      for (std::size_t q = 0; q < rule.size(); ++q) {
        const Point x = barycentric_to_point(sub, rule.nodes[q]);
        const double w = signed_area(sub) * rule.weights[q];
        const Barycentric phi = point_to_barycentric(ftri, x);
        for (int j = 0; j < 3; ++j) {
          for (int c = 0; c < 2; ++c) {
            oracle[2 * pair->fine.triangles()[t][j] + c] +=
                w * (ex.lambda(x)[c] * phi[j] + ex.grad_lambda(x).row(c).dot(grads[j]));
          }
        }
      }
    }
  }
  const Vector f = assemble_rhs(ex, xbar, v, mult, overlay, index).f;
  EXPECT_GT(oracle.lpNorm<Eigen::Infinity>(), 1e-3);
  EXPECT_LT((f - oracle).lpNorm<Eigen::Infinity>(), 1e-9);
}

TEST(CoupledSystem, BlockLayout) {
  const auto problem = verification::build_problem(verification::make_test(1), 1, verification::Method::Intersect,
                                                   Element::BPP0);
  const auto& sys = problem.system;
  const Dense m(sys.matrix());
  ASSERT_EQ(m.rows(), sys.size());
  const int nu = sys.n_u(), np = sys.n_p(), nx = sys.n_x(), nl = sys.n_lambda();
  const int op = sys.offset_p(), ox = sys.offset_x(), ol = sys.offset_lambda();
  EXPECT_EQ((m.block(0, 0, nu, nu) - Dense(sys.Af)).norm(), 0.0);
  EXPECT_EQ((m.block(0, op, nu, np) - Dense(sys.B.transpose())).norm(), 0.0);
  EXPECT_EQ((m.block(op, 0, np, nu) - Dense(sys.B)).norm(), 0.0);
  EXPECT_EQ((m.block(0, ol, nu, nl) - Dense(sys.Cf.transpose())).norm(), 0.0);
  EXPECT_EQ((m.block(ox, ox, nx, nx) - Dense(sys.As)).norm(), 0.0);
  EXPECT_EQ((m.block(ox, ol, nx, nl) + Dense(sys.Cs.transpose())).norm(), 0.0);
  EXPECT_EQ((m.block(ol, 0, nl, nu) - Dense(sys.Cf)).norm(), 0.0);
  EXPECT_EQ((m.block(ol, ox, nl, nx) + Dense(sys.Cs)).norm(), 0.0);
  EXPECT_EQ(m.block(op, op, np, np).norm(), 0.0);
  EXPECT_EQ(m.block(ol, ol, nl, nl).norm(), 0.0);
  EXPECT_EQ(m.block(op, ox, np, nx).norm(), 0.0);

  const Vector b = sys.rhs();
  EXPECT_EQ((b.segment(0, nu) - sys.f).norm(), 0.0);
  EXPECT_EQ(b.segment(op, np).norm(), 0.0);
  EXPECT_EQ((b.segment(ox, nx) - sys.g).norm(), 0.0);
  EXPECT_EQ((b.segment(ol, nl) - sys.d).norm(), 0.0);
}

TEST(CoupledSystem, DirichletRowsAndColumns) {
  const auto problem =
      verification::build_problem(verification::make_test(3), 1, verification::Method::Intersect, Element::BP);
  const auto& sys = problem.system;
  const Dense af(sys.Af);
  const Dense b(sys.B);
  const Dense cf(sys.Cf);
  ASSERT_FALSE(sys.dirichlet.empty());
  std::vector<char> fixed(sys.n_u(), 0);
  for (int k : sys.dirichlet) fixed[k] = 1;
  for (int k : sys.dirichlet) {
    for (int j = 0; j < sys.n_u(); ++j) {
      EXPECT_EQ(af(k, j), k == j ? 1.0 : 0.0);
      EXPECT_EQ(af(j, k), k == j ? 1.0 : 0.0);
    }
    EXPECT_EQ(b.col(k).norm(), 0.0);
    EXPECT_EQ(cf.col(k).norm(), 0.0);
    EXPECT_EQ(sys.f[k], 0.0);
  }
  // Free rows keep their couplings.
  int free_with_entries = 0;
  for (int j = 0; j < sys.n_u(); ++j) free_with_entries += !fixed[j] && b.col(j).norm() > 0.0;
  EXPECT_GT(free_with_entries, 0);
}

}  // namespace
}  // namespace fsi::assembly
