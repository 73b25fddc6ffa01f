#include "fsi/verification.hpp"

#include <cmath>

namespace fsi::verification {

namespace {

struct Accum {
  double err = 0.0;
  double ref = 0.0;
};

// Pieces of `tri` inside the closed box.
std::vector<Triangle> inside_box(const Triangle& tri, const Box& box) {
  const Point sw(box.xmin, box.ymin);
  const Point se(box.xmax, box.ymin);
  const Point ne(box.xmax, box.ymax);
  const Point nw(box.xmin, box.ymax);
  const double eps = 1e-14 * signed_area(tri);
  std::vector<Triangle> pieces;
  for (const Triangle& half : {Triangle{sw, se, ne}, Triangle{sw, ne, nw}}) {
    const auto poly = geometry::clip_triangle_triangle(tri, half, eps);
    if (poly.empty()) continue;
    for (const auto& t : geometry::fan_triangulate(poly)) pieces.push_back(t);
  }
  return pieces;
}

const quad::QuadratureRule* g_rule = nullptr;

template <class F>
double integrate(const Triangle& tri, F&& f) {
  return quad::integrate_on_triangle(g_rule ? *g_rule : quad::high_order_rule(), tri, f);
}

}  // namespace

Errors ErrorDetail::relative() const {
  Errors e;
  for (std::size_t i = 0; i < e.values.size(); ++i) e[i] = exact_norm[i] > 0.0 ? absolute[i] / exact_norm[i] : absolute[i];
  return e;
}

ErrorDetail compute_error_detail(const TestCase& test, const Problem& problem, const solver::Solution& sol,
                                 const quad::QuadratureRule* rule) {
  g_rule = rule;
  const ManufacturedSolution& ex = test.exact;
  ErrorDetail out;

  // Pressure, both sides shifted to zero mean.
  {
    const auto& pmesh = problem.pressure.mesh();
    const double area = test.omega.area();
    double exact_int = 0.0;
    for (int t = 0; t < pmesh.num_triangles(); ++t) {
      const Triangle tri = pmesh.triangle(t);
      exact_int += integrate(tri, [&](const Point& x) { return ex.p_fluid(x); });
      if (ex.pressure_jump) {
        for (const auto& piece : inside_box(tri, ex.solid_region)) {
          exact_int += integrate(piece, [&](const Point& x) { return ex.p_solid(x) - ex.p_fluid(x); });
        }
      }
    }
    const double exact_mean = exact_int / area;
    const double discrete_mean = problem.system.pressure_integrals.dot(sol.p) / area;

    Accum acc;
    for (int t = 0; t < pmesh.num_triangles(); ++t) {
      const Triangle tri = pmesh.triangle(t);
      auto ph = [&](const Point& x) {
        return spaces::evaluate(problem.pressure, sol.p, t, point_to_barycentric(tri, x)) - discrete_mean;
      };
      auto sq = [](double v) { return v * v; };
      acc.err += integrate(tri, [&](const Point& x) { return sq(ex.p_fluid(x) - exact_mean - ph(x)); });
      acc.ref += integrate(tri, [&](const Point& x) { return sq(ex.p_fluid(x) - exact_mean); });
      if (ex.pressure_jump) {
        for (const auto& piece : inside_box(tri, ex.solid_region)) {
          acc.err += integrate(piece, [&](const Point& x) {
            return sq(ex.p_solid(x) - exact_mean - ph(x)) - sq(ex.p_fluid(x) - exact_mean - ph(x));
          });
          acc.ref += integrate(piece, [&](const Point& x) {
            return sq(ex.p_solid(x) - exact_mean) - sq(ex.p_fluid(x) - exact_mean);
          });
        }
      }
    }
    out.absolute[0] = std::sqrt(std::max(acc.err, 0.0));
    out.exact_norm[0] = std::sqrt(std::max(acc.ref, 0.0));
  }

  // Vector P1 fields: L2 and full H1 norms of exact minus discrete.
  auto vector_norms = [](const spaces::FESpace& space, const Vector& coeffs, auto&& value, auto&& gradient,
                         double* err_l2, double* err_h1, double* ref_l2, double* ref_h1) {
    const auto& m = space.mesh();
    Accum l2;
    Accum semi;
    for (int t = 0; t < m.num_triangles(); ++t) {
      const Triangle tri = m.triangle(t);
      Mat2 gh;
      spaces::evaluate_vector(space, coeffs, t, {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, &gh);
      l2.err += integrate(tri, [&](const Point& x) {
        return (value(x) - spaces::evaluate_vector(space, coeffs, t, point_to_barycentric(tri, x))).squaredNorm();
      });
      l2.ref += integrate(tri, [&](const Point& x) { return value(x).squaredNorm(); });
      semi.err += integrate(tri, [&](const Point& x) { return (gradient(x) - gh).squaredNorm(); });
      semi.ref += integrate(tri, [&](const Point& x) { return gradient(x).squaredNorm(); });
    }
    *err_l2 = std::sqrt(l2.err);
    *ref_l2 = std::sqrt(l2.ref);
    *err_h1 = std::sqrt(l2.err + semi.err);
    *ref_h1 = std::sqrt(l2.ref + semi.ref);
  };

  vector_norms(
      problem.velocity, sol.u, [&](const Point& x) { return ex.u(x); }, [&](const Point& x) { return ex.grad_u(x); },
      &out.absolute[1], &out.absolute[2], &out.exact_norm[1], &out.exact_norm[2]);
  vector_norms(
      problem.solid_space, sol.X, [&](const Point& s) { return ex.X(s); },
      [&](const Point& s) { return ex.grad_X(s); }, &out.absolute[3], &out.absolute[4], &out.exact_norm[3],
      &out.exact_norm[4]);
  vector_norms(
      problem.solid_space, sol.lambda, [&](const Point& s) { return ex.lambda(s); },
      [&](const Point& s) { return ex.grad_lambda(s); }, &out.absolute[5], &out.absolute[6], &out.exact_norm[5],
      &out.exact_norm[6]);
  return out;
}

Errors compute_errors(const TestCase& test, const Problem& problem, const solver::Solution& solution) {
  return compute_error_detail(test, problem, solution).relative();
}

std::vector<std::optional<double>> convergence_rates(const std::vector<double>& errors) {
  if (errors.size() < 2) throw Error("convergence_rates: need at least two levels");
  std::vector<std::optional<double>> r;
  for (std::size_t i = 1; i < errors.size(); ++i) {
    if (errors[i - 1] > 0.0 && errors[i] > 0.0) {
      r.emplace_back(std::log2(errors[i - 1] / errors[i]));
    } else {
      r.emplace_back(std::nullopt);
    }
  }
  return r;
}

}  // namespace fsi::verification
