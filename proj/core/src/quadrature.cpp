#include "fsi/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <array>

namespace fsi::quad {

namespace {

QuadratureRule make_order1() { return {{{1.0 / 3, 1.0 / 3, 1.0 / 3}}, {1.0}, 1}; }

QuadratureRule make_order2() {
  const double a = 2.0 / 3;
  const double b = 1.0 / 6;
  return {{{a, b, b}, {b, a, b}, {b, b, a}}, {1.0 / 3, 1.0 / 3, 1.0 / 3}, 2};
}

QuadratureRule make_order3() {
  const double a = 3.0 / 5;
  const double b = 1.0 / 5;
  const double c = 1.0 / 3;
  return {{{a, b, b}, {b, a, b}, {b, b, a}, {c, c, c}}, {25.0 / 48, 25.0 / 48, 25.0 / 48, -9.0 / 16}, 3};
}

// Dunavant's degree-6 rule.
QuadratureRule make_degree6() {
  QuadratureRule r;
  r.degree = 6;
  auto orbit3 = [&](double a, double b, double w) {
    r.nodes.push_back({b, a, a});
    r.nodes.push_back({a, b, a});
    r.nodes.push_back({a, a, b});
    r.weights.insert(r.weights.end(), 3, w);
  };
  auto orbit6 = [&](double a, double b, double c, double w) {
    for (const auto& n : std::array<Barycentric, 6>{{{a, b, c}, {a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}}}) {
      r.nodes.push_back(n);
    }
    r.weights.insert(r.weights.end(), 6, w);
  };
  orbit3(0.24928674517091042129, 0.50142650965817915742, 0.11678627572637936603);
  orbit3(0.06308901449150222834, 0.87382197101699554332, 0.05084490637020681692);
  orbit6(0.05314504984481694735, 0.31035245103378440542, 0.63650249912139864723, 0.08285107561837357519);
  return r;
}

template <std::size_t N>
LineRule make_line() {
  using GL = boost::math::quadrature::gauss<double, N>;
  const auto& x = GL::abscissa();
  const auto& w = GL::weights();
  LineRule r;
  // boost stores the non-negative half of the symmetric rule.
  for (std::size_t i = 0; i < x.size(); ++i) {
    const bool zero = (x[i] == 0.0);
    r.nodes.push_back(0.5 * (1.0 + x[i]));
    r.weights.push_back(0.5 * w[i]);
    if (!zero) {
      r.nodes.push_back(0.5 * (1.0 - x[i]));
      r.weights.push_back(0.5 * w[i]);
    }
  }
  return r;
}

const std::array<LineRule, 11>& line_rules() {
  static const std::array<LineRule, 11> rules = {LineRule{},       make_line<1>(), make_line<2>(), make_line<3>(),
                                                 make_line<4>(),   make_line<5>(), make_line<6>(), make_line<7>(),
                                                 make_line<8>(),   make_line<9>(), make_line<10>()};
  return rules;
}

QuadratureRule make_collapsed(int n) {
  const LineRule& gl = gauss_legendre(n);
  QuadratureRule r;
  r.degree = 2 * n - 2;
  for (int i = 0; i < n; ++i) {
    const double u = gl.nodes[i];
    for (int j = 0; j < n; ++j) {
      const double v = gl.nodes[j];
      // (u, v) in the unit square -> (x, y) = (u, v (1 - u)) in the reference
      // triangle, jacobian (1 - u); the reference triangle has area 1/2.
      const double x = u;
      const double y = v * (1.0 - u);
      r.nodes.push_back({1.0 - x - y, x, y});
      r.weights.push_back(2.0 * gl.weights[i] * gl.weights[j] * (1.0 - u));
    }
  }
  return r;
}

}  // namespace

const QuadratureRule& gauss_rule(int order) {
  static const QuadratureRule r1 = make_order1();
  static const QuadratureRule r2 = make_order2();
  static const QuadratureRule r3 = make_order3();
  switch (order) {
    case 1: return r1;
    case 2: return r2;
    case 3: return r3;
    default: throw Error("gauss_rule: unsupported order " + std::to_string(order));
  }
}

const QuadratureRule& high_order_rule() {
  static const QuadratureRule r = make_degree6();
  return r;
}

const QuadratureRule& collapsed_rule(int n) {
  if (n < 2 || n > 10) throw Error("collapsed_rule: unsupported point count " + std::to_string(n));
  static const auto rules = [] {
    std::array<QuadratureRule, 11> all;
    for (int k = 2; k <= 10; ++k) all[k] = make_collapsed(k);
    return all;
  }();
  return rules[n];
}

const LineRule& gauss_legendre(int n) {
  if (n < 1 || n > 10) throw Error("gauss_legendre: unsupported point count " + std::to_string(n));
  return line_rules()[n];
}

}  // namespace fsi::quad
