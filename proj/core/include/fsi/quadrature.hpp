#pragma once

#include "fsi/common.hpp"

#include <vector>

namespace fsi::quad {

/// Triangle rule in barycentric form; weights are fractions of the triangle
/// area and sum to one.
struct QuadratureRule {
  std::vector<Barycentric> nodes;
  std::vector<double> weights;
  int degree = 0;

  [[nodiscard]] std::size_t size() const { return nodes.size(); }
};

/// Gauss rules of order 1 (barycenter), 2 (three points) and 3 (four points,
/// one negative weight).
const QuadratureRule& gauss_rule(int order);

/// Symmetric 12-point rule exact to degree 6; used for right-hand sides and
/// error norms of the transcendental manufactured fields.
const QuadratureRule& high_order_rule();

/// Collapsed (Duffy) tensor Gauss-Legendre rule with `n` points per
/// direction, exact to degree 2n - 2. Supported n: 2..10.
const QuadratureRule& collapsed_rule(int n);

/// Gauss-Legendre points and weights on [0, 1]; supported n: 1..10.
struct LineRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const LineRule& gauss_legendre(int n);

/// |T| * sum_k w_k f(x_k).
template <class F>
double integrate_on_triangle(const QuadratureRule& rule, const Triangle& tri, F&& f) {
  const double area = signed_area(tri);
  if (!(area > 0.0)) throw Error("integrate_on_triangle: degenerate triangle");
  double s = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) s += rule.weights[k] * f(barycentric_to_point(tri, rule.nodes[k]));
  return area * s;
}

}  // namespace fsi::quad
