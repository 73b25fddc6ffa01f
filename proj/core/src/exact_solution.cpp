#include "fsi/exact_solution.hpp"

#include <cmath>

namespace fsi {

namespace {

// a(t) = (4 - t^2)^2 and its derivatives.
struct Profile {
  double v, d1, d2, d3;
  explicit Profile(double t) {
    const double q = 4.0 - t * t;
    v = q * q;
    d1 = -4.0 * t * q;
    d2 = 12.0 * t * t - 16.0;
    d3 = 24.0 * t;
  }
};

}  // namespace

ManufacturedSolution ManufacturedSolution::standard() { return {}; }

ManufacturedSolution ManufacturedSolution::with_jump(double fluid_offset, double solid_offset,
                                                     const Box& solid_region) {
  ManufacturedSolution m;
  m.fluid_offset = fluid_offset;
  m.solid_offset = solid_offset;
  m.pressure_jump = true;
  m.solid_region = solid_region;
  return m;
}

ManufacturedSolution ManufacturedSolution::zero() {
  ManufacturedSolution m;
  m.u_scale = 0.0;
  m.p_scale = 0.0;
  m.lambda_scale = 0.0;
  return m;
}

Point ManufacturedSolution::u(const Point& x) const {
  const Profile a(x.x());
  const Profile b(x.y());
  return u_scale * Point(a.v * b.d1, -a.d1 * b.v);
}

Mat2 ManufacturedSolution::grad_u(const Point& x) const {
  const Profile a(x.x());
  const Profile b(x.y());
  Mat2 g;
  g << a.d1 * b.d1, a.v * b.d2, -a.d2 * b.v, -a.d1 * b.d1;
  return u_scale * g;
}

Point ManufacturedSolution::laplacian_u(const Point& x) const {
  const Profile a(x.x());
  const Profile b(x.y());
  return u_scale * Point(a.d2 * b.d1 + a.v * b.d3, -a.d3 * b.v - a.d1 * b.d2);
}

bool ManufacturedSolution::in_solid(const Point& x) const { return pressure_jump && solid_region.contains(x); }

double ManufacturedSolution::p_fluid(const Point& x) const { return p_scale * (150.0 * std::sin(x.x()) + fluid_offset); }

double ManufacturedSolution::p_solid(const Point& x) const { return p_scale * (150.0 * std::sin(x.x()) + solid_offset); }

double ManufacturedSolution::p(const Point& x) const { return in_solid(x) ? p_solid(x) : p_fluid(x); }

Point ManufacturedSolution::grad_p(const Point& x) const { return p_scale * Point(150.0 * std::cos(x.x()), 0.0); }

Point ManufacturedSolution::lambda(const Point& s) const {
  return lambda_scale * Point(std::exp(s.x()), std::exp(s.y()));
}

Mat2 ManufacturedSolution::grad_lambda(const Point& s) const {
  Mat2 g;
  g << std::exp(s.x()), 0.0, 0.0, std::exp(s.y());
  return lambda_scale * g;
}

}  // namespace fsi
