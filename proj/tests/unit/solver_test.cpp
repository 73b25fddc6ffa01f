#include "fsi/solver.hpp"
#include "fsi/verification.hpp"

#include <gtest/gtest.h>

namespace fsi::solver {
namespace {

using verification::Element;
using verification::Method;

double pressure_mean(const spaces::FESpace& p, const Vector& coeffs) {
  const auto& rule = quad::high_order_rule();
  double integral = 0.0;
  for (int t = 0; t < p.mesh().num_triangles(); ++t) {
    for (std::size_t q = 0; q < rule.size(); ++q) {
      integral += p.mesh().area(t) * rule.weights[q] * spaces::evaluate(p, coeffs, t, rule.nodes[q]);
    }
  }
  return integral / p.mesh().total_area();
}

double max_diff(const Solution& a, const Solution& b) {
  return std::max({(a.u - b.u).lpNorm<Eigen::Infinity>(), (a.p - b.p).lpNorm<Eigen::Infinity>(),
                   (a.X - b.X).lpNorm<Eigen::Infinity>(), (a.lambda - b.lambda).lpNorm<Eigen::Infinity>()});
}

class SolverContract : public ::testing::TestWithParam<Element> {};

// Level 4: 16 x 16 pressure mesh.
TEST_P(SolverContract, ResidualMeanAndPinInvariance) {
  const auto problem = verification::build_problem(verification::make_test(1), 4, Method::Intersect, GetParam());
  const Solution a = solve(problem.system);
  EXPECT_LE(a.report.relative_residual, 1e-10);
  EXPECT_LE(std::abs(pressure_mean(problem.pressure, a.p)), 1e-12);
  EXPECT_GT(a.report.factor_nonzeros, a.report.matrix_nonzeros);

  SolveOptions other;
  other.pin_vertex = problem.pressure.p1_count() / 2 + 3;
  if (GetParam() == Element::BPP0) other.pin_element = problem.pressure.p0_count() - 7;
  const Solution b = solve(problem.system, other);
  EXPECT_LE(b.report.relative_residual, 1e-10);
  EXPECT_LE(max_diff(a, b), 1e-9);
}

INSTANTIATE_TEST_SUITE_P(Elements, SolverContract, ::testing::Values(Element::BP, Element::BPP0),
                         [](const auto& info) { return info.param == Element::BP ? "BP" : "BPP0"; });

TEST(Solver, ZeroDataGivesZeroSolution) {
  auto test = verification::make_test(3);
  test.exact = ManufacturedSolution::zero();
  const auto problem = verification::build_problem(test, 2, Method::Intersect, Element::BP);
  const Solution s = solve(problem.system);
  EXPECT_EQ(s.u.lpNorm<Eigen::Infinity>(), 0.0);
  EXPECT_EQ(s.p.lpNorm<Eigen::Infinity>(), 0.0);
  EXPECT_EQ(s.X.lpNorm<Eigen::Infinity>(), 0.0);
  EXPECT_EQ(s.lambda.lpNorm<Eigen::Infinity>(), 0.0);
}

TEST(Solver, BlockSizesOfSolution) {
  const auto problem = verification::build_problem(verification::make_test(2), 1, Method::Intersect, Element::BPP0);
  const Solution s = solve(problem.system);
  EXPECT_EQ(s.u.size(), problem.velocity.dof_count());
  EXPECT_EQ(s.p.size(), problem.pressure.dof_count());
  EXPECT_EQ(s.X.size(), problem.solid_space.dof_count());
  EXPECT_EQ(s.lambda.size(), problem.solid_space.dof_count());
}

TEST(Solver, RejectsPinsOutOfRange) {
  const auto problem = verification::build_problem(verification::make_test(1), 1, Method::Intersect, Element::BPP0);
  SolveOptions bad_vertex;
  bad_vertex.pin_vertex = problem.pressure.p1_count();
  EXPECT_THROW(solve(problem.system, bad_vertex), Error);
  SolveOptions bad_element;
  bad_element.pin_element = -1;
  EXPECT_THROW(solve(problem.system, bad_element), Error);
}

TEST(Solver, ReportsSingularSystem) {
  auto problem = verification::build_problem(verification::make_test(1), 1, Method::Intersect, Element::BP);
  // Displacements then appear in no equation.
  problem.system.As.setZero();
  problem.system.Cs.setZero();
  try {
    (void)solve(problem.system);
    FAIL() << "expected a singular-system error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("singular"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace fsi::solver
