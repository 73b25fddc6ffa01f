#include "fsi/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace fsi::geometry {

double polygon_area(const std::vector<Point>& loop) {
  const std::size_t n = loop.size();
  if (n < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = loop[i];
    const Point& b = loop[(i + 1) % n];
    s += a.x() * b.y() - b.x() * a.y();
  }
  return 0.5 * s;
}

double ConvexPolygon::area() const { return polygon_area(vertices); }

namespace {

double max_edge_length(const Triangle& t) {
  return std::max({(t[1] - t[0]).norm(), (t[2] - t[1]).norm(), (t[0] - t[2]).norm()});
}

// Drops repeated points and vertices lying on the segment joining their
// neighbours, so a clipped triangle comes back with exactly three vertices.
void simplify(std::vector<Point>& loop, double len_tol) {
  bool changed = true;
  while (changed && loop.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < loop.size() && loop.size() >= 3; ++i) {
      const std::size_t n = loop.size();
      const Point& prev = loop[(i + n - 1) % n];
      const Point& cur = loop[i];
      const Point& next = loop[(i + 1) % n];
      const double span = (next - prev).norm();
      const bool duplicate = (cur - prev).norm() <= len_tol;
      const bool collinear = span > len_tol && std::abs(cross(prev, cur, next)) <= len_tol * span;
      if (duplicate || collinear) {
        loop.erase(loop.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
}

}  // namespace

ConvexPolygon clip_triangle_triangle(const Triangle& subject, const Triangle& clip, double eps_area) {
  if (!(signed_area(subject) > eps_area) || !(signed_area(clip) > eps_area)) {
    throw Error("clip_triangle_triangle: degenerate or clockwise input triangle");
  }
  const double scale = std::max(max_edge_length(subject), max_edge_length(clip));
  const double len_tol = 1e-13 * scale;

  std::vector<Point> poly(subject.begin(), subject.end());
  std::vector<Point> next;
  next.reserve(9);
  for (int e = 0; e < 3 && !poly.empty(); ++e) {
    const Point& a = clip[e];
    const Point& b = clip[(e + 1) % 3];
    const double len = (b - a).norm();
    // Signed distance to the clip edge line, positive on the inner side.
    auto side = [&](const Point& p) { return cross(a, b, p) / len; };

    next.clear();
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& p = poly[i];
      const Point& q = poly[(i + 1) % n];
      const double dp = side(p);
      const double dq = side(q);
      if (dp >= -len_tol) next.push_back(p);
      if ((dp > len_tol && dq < -len_tol) || (dp < -len_tol && dq > len_tol)) {
        const double t = dp / (dp - dq);
        next.push_back(p + t * (q - p));
      }
    }
    poly.swap(next);
    if (poly.size() < 3) poly.clear();
  }

  simplify(poly, len_tol);
  ConvexPolygon out;
  if (poly.size() >= 3 && polygon_area(poly) >= eps_area) out.vertices = std::move(poly);
  return out;
}

std::vector<Triangle> fan_triangulate(const ConvexPolygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) throw Error("fan_triangulate: polygon needs at least three vertices");
  if (n == 3) return {Triangle{poly.vertices[0], poly.vertices[1], poly.vertices[2]}};

  Point apex = Point::Zero();
  for (const auto& p : poly.vertices) apex += p;
  apex /= static_cast<double>(n);

  std::vector<Triangle> tris;
  tris.reserve(n);
  for (std::size_t i = 0; i < n; ++i) tris.push_back({apex, poly.vertices[i], poly.vertices[(i + 1) % n]});
  return tris;
}

Location locate_point(const mesh::TriMesh& fluid, const BoxIndex& index, const Point& p) {
  const double margin = 1e-12 * std::max(fluid.bbox().width(), fluid.bbox().height());
  const Box probe{p.x() - margin, p.y() - margin, p.x() + margin, p.y() + margin};
  Location best;
  for (int t : index.query(probe)) {
    const Barycentric l = point_to_barycentric(fluid.triangle(t), p);
    if (std::min({l[0], l[1], l[2]}) >= -kBarycentricTolerance) {
      best = {t, l};
      break;  // query() is ascending, so the first hit has the lowest index
    }
  }
  if (best.triangle < 0) {
    throw Error("locate_point: point (" + std::to_string(p.x()) + ", " + std::to_string(p.y()) +
                ") is outside the fluid mesh");
  }
  double sum = 0.0;
  for (double& c : best.bary) {
    c = std::clamp(c, 0.0, 1.0);
    sum += c;
  }
  for (double& c : best.bary) c /= sum;
  return best;
}

}  // namespace fsi::geometry
