#include "fsi/mesh.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

namespace fsi {

Box Box::of(const Triangle& t) {
  Box b{t[0].x(), t[0].y(), t[0].x(), t[0].y()};
  for (int k = 1; k < 3; ++k) {
    b.xmin = std::min(b.xmin, t[k].x());
    b.xmax = std::max(b.xmax, t[k].x());
    b.ymin = std::min(b.ymin, t[k].y());
    b.ymax = std::max(b.ymax, t[k].y());
  }
  return b;
}

Barycentric point_to_barycentric(const Triangle& t, const Point& p) {
  const double det = cross(t[0], t[1], t[2]);
  const double l1 = cross(t[0], p, t[2]) / det;
  const double l2 = cross(t[0], t[1], p) / det;
  return {1.0 - l1 - l2, l1, l2};
}

}  // namespace fsi

namespace fsi::mesh {

namespace {

std::uint64_t edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

TriMesh::TriMesh(std::vector<Point> vertices, std::vector<std::array<int, 3>> triangles)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
  if (vertices_.empty() || triangles_.empty()) throw Error("mesh: empty vertex or triangle list");

  const int nv = num_vertices();
  for (auto& tri : triangles_) {
    for (int v : tri) {
      if (v < 0 || v >= nv) throw Error("mesh: triangle references vertex " + std::to_string(v) + " out of range");
    }
    const double a2 = cross(vertices_[tri[0]], vertices_[tri[1]], vertices_[tri[2]]);
    if (a2 == 0.0) throw Error("mesh: degenerate triangle");
    if (a2 < 0.0) std::swap(tri[1], tri[2]);
  }

  bbox_ = {vertices_[0].x(), vertices_[0].y(), vertices_[0].x(), vertices_[0].y()};
  for (const auto& p : vertices_) {
    bbox_.xmin = std::min(bbox_.xmin, p.x());
    bbox_.xmax = std::max(bbox_.xmax, p.x());
    bbox_.ymin = std::min(bbox_.ymin, p.y());
    bbox_.ymax = std::max(bbox_.ymax, p.y());
  }

  // Directed half-edges: a conforming, consistently oriented mesh traverses
  // every interior edge once in each direction.
  struct Incidence {
    int count = 0;
    int a = 0;
    int b = 0;
  };
  std::unordered_map<std::uint64_t, Incidence> edges;
  edges.reserve(triangles_.size() * 2);
  for (const auto& tri : triangles_) {
    for (int k = 0; k < 3; ++k) {
      const int a = tri[k];
      const int b = tri[(k + 1) % 3];
      auto& inc = edges[edge_key(a, b)];
      if (inc.count == 1 && inc.a == a) throw Error("mesh: non-conforming connectivity (overlapping neighbours)");
      if (++inc.count > 2) throw Error("mesh: non-conforming connectivity (edge shared by more than two triangles)");
      if (inc.count == 1) {
        inc.a = a;
        inc.b = b;
      }
    }
  }

  boundary_vertex_.assign(vertices_.size(), 0);
  // Deterministic ordering: walk triangles in order.
  for (const auto& tri : triangles_) {
    for (int k = 0; k < 3; ++k) {
      const int a = tri[k];
      const int b = tri[(k + 1) % 3];
      if (edges.at(edge_key(a, b)).count == 1) {
        boundary_edges_.push_back({a, b, 1});
        boundary_vertex_[a] = boundary_vertex_[b] = 1;
      }
    }
  }
}

Triangle TriMesh::triangle(int t) const {
  const auto& tri = triangles_[t];
  return {vertices_[tri[0]], vertices_[tri[1]], vertices_[tri[2]]};
}

double TriMesh::area(int t) const { return signed_area(triangle(t)); }

double TriMesh::total_area() const {
  double s = 0.0;
  for (int t = 0; t < num_triangles(); ++t) s += area(t);
  return s;
}

int TriMesh::boundary_edge_count(int t) const {
  // Boundary edges are few; a per-call scan keeps the class free of adjacency
  // tables that only corner_swap needs.
  const auto& tri = triangles_[t];
  int count = 0;
  for (int k = 0; k < 3; ++k) {
    const int a = tri[k];
    const int b = tri[(k + 1) % 3];
    if (!is_boundary_vertex(a) || !is_boundary_vertex(b)) continue;
    for (const auto& e : boundary_edges_) {
      if (e.a == a && e.b == b) {
        ++count;
        break;
      }
    }
  }
  return count;
}

TriMesh build_uniform(int n, Diagonal orientation, const Box& box) {
  if (n < 1) throw Error("build_uniform: n must be at least 1");
  if (box.degenerate()) throw Error("build_uniform: degenerate box");

  std::vector<Point> vertices;
  vertices.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      // Endpoints hit the box exactly.
      const double x = (i == n) ? box.xmax : box.xmin + box.width() * i / n;
      const double y = (j == n) ? box.ymax : box.ymin + box.height() * j / n;
      vertices.emplace_back(x, y);
    }
  }
  std::vector<std::array<int, 3>> triangles;
  triangles.reserve(2 * static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int sw = j * (n + 1) + i;
      const int se = sw + 1;
      const int nw = sw + n + 1;
      const int ne = nw + 1;
      if (orientation == Diagonal::Right) {
        triangles.push_back({sw, se, ne});
        triangles.push_back({sw, ne, nw});
      } else {
        triangles.push_back({sw, se, nw});
        triangles.push_back({se, ne, nw});
      }
    }
  }
  return {std::move(vertices), std::move(triangles)};
}

MacroMeshPair refine_red(const TriMesh& coarse) {
  std::vector<Point> vertices = coarse.vertices();
  std::unordered_map<std::uint64_t, int> midpoint;
  midpoint.reserve(coarse.num_triangles() * 2);
  auto mid = [&](int a, int b) {
    const auto [it, inserted] = midpoint.try_emplace(edge_key(a, b), static_cast<int>(vertices.size()));
    if (inserted) vertices.push_back(0.5 * (coarse.vertex(a) + coarse.vertex(b)));
    return it->second;
  };

  std::vector<std::array<int, 3>> triangles;
  triangles.reserve(4 * coarse.triangles().size());
  std::vector<int> parent;
  parent.reserve(4 * coarse.triangles().size());
  for (int t = 0; t < coarse.num_triangles(); ++t) {
    const auto [a, b, c] = coarse.triangles()[t];
    const int ab = mid(a, b);
    const int bc = mid(b, c);
    const int ca = mid(c, a);
    triangles.push_back({a, ab, ca});
    triangles.push_back({ab, b, bc});
    triangles.push_back({ca, bc, c});
    triangles.push_back({ab, bc, ca});
    parent.insert(parent.end(), 4, t);
  }
  return {coarse, TriMesh(std::move(vertices), std::move(triangles)), std::move(parent)};
}

MacroMeshPair corner_swap(const MacroMeshPair& pair) {
  const TriMesh& coarse = pair.coarse;
  auto triangles = coarse.triangles();

  std::map<std::uint64_t, std::vector<int>> edge_tris;
  for (int t = 0; t < coarse.num_triangles(); ++t) {
    for (int k = 0; k < 3; ++k) edge_tris[edge_key(triangles[t][k], triangles[t][(k + 1) % 3])].push_back(t);
  }

  std::vector<int> corners;
  for (int t = 0; t < coarse.num_triangles(); ++t) {
    const int nb = coarse.boundary_edge_count(t);
    if (nb >= 3) throw Error("corner_swap: triangle " + std::to_string(t) + " has three boundary edges");
    if (nb == 2) corners.push_back(t);
  }

  std::vector<char> touched(triangles.size(), 0);
  for (int t : corners) {
    const auto tri = coarse.triangles()[t];
    // The single interior edge of a corner triangle.
    int k_int = -1;
    for (int k = 0; k < 3; ++k) {
      if (edge_tris.at(edge_key(tri[k], tri[(k + 1) % 3])).size() == 2) k_int = k;
    }
    if (k_int < 0) throw Error("corner_swap: corner triangle " + std::to_string(t) + " has no interior edge");
    const int a = tri[k_int];
    const int c = tri[(k_int + 1) % 3];
    const int b = tri[(k_int + 2) % 3];
    const auto& owners = edge_tris.at(edge_key(a, c));
    const int nbr = owners[0] == t ? owners[1] : owners[0];
    if (coarse.boundary_edge_count(nbr) >= 2) {
      throw Error("corner_swap: degenerate mesh, neighbour of corner triangle " + std::to_string(t) +
                  " is itself a corner triangle");
    }
    if (touched[t] || touched[nbr]) throw Error("corner_swap: mesh is not recognizably structured");
    const auto ntri = coarse.triangles()[nbr];
    int d = -1;
    for (int v : ntri) {
      if (v != a && v != c) d = v;
    }
    // Quad a-b-c-d (b across from the old diagonal a-c). New diagonal b-d.
    const std::array<int, 3> first{a, d, b};
    const std::array<int, 3> second{b, d, c};
    auto ccw_area = [&](const std::array<int, 3>& q) {
      return cross(coarse.vertex(q[0]), coarse.vertex(q[1]), coarse.vertex(q[2]));
    };
    const double s1 = ccw_area(first);
    const double s2 = ccw_area(second);
    if (s1 <= 0.0 || s2 <= 0.0) throw Error("corner_swap: non-convex quadrilateral around triangle " + std::to_string(t));
    triangles[t] = first;
    triangles[nbr] = second;
    touched[t] = touched[nbr] = 1;
  }

  return refine_red(TriMesh(coarse.vertices(), std::move(triangles)));
}

TriMesh affine_map_mesh(const TriMesh& mesh, const Mat2& a, const Point& b) {
  if (a.determinant() == 0.0) throw Error("affine_map_mesh: singular matrix");
  std::vector<Point> vertices;
  vertices.reserve(mesh.vertices().size());
  for (const auto& p : mesh.vertices()) vertices.push_back(a * p + b);
  return {std::move(vertices), mesh.triangles()};
}

}  // namespace fsi::mesh
