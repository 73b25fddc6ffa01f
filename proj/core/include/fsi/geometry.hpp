#pragma once

#include "fsi/common.hpp"
#include "fsi/mesh.hpp"

#include <memory>
#include <vector>

namespace fsi {
class DeformationMap;
}

namespace fsi::geometry {

/// Counter-clockwise convex polygon; either empty or with at least three vertices.
struct ConvexPolygon {
  std::vector<Point> vertices;

  [[nodiscard]] bool empty() const { return vertices.empty(); }
  [[nodiscard]] std::size_t size() const { return vertices.size(); }
  [[nodiscard]] double area() const;
};

/// Shoelace area of a closed vertex loop (signed, positive for CCW).
double polygon_area(const std::vector<Point>& loop);

/// Intersection of two triangles by Sutherland-Hodgman clipping of `subject`
/// against the edges of `clip`. Results with area below `eps_area` come back
/// empty. Both inputs must have area above `eps_area`.
ConvexPolygon clip_triangle_triangle(const Triangle& subject, const Triangle& clip, double eps_area);

/// Triangles are returned as-is; larger polygons are fanned around the mean of
/// their vertices, one triangle per edge.
std::vector<Triangle> fan_triangulate(const ConvexPolygon& poly);

/// Broad-phase index over the bounding boxes of a triangle mesh.
class BoxIndex {
 public:
  explicit BoxIndex(const mesh::TriMesh& mesh);
  ~BoxIndex();
  BoxIndex(BoxIndex&&) noexcept;
  BoxIndex& operator=(BoxIndex&&) noexcept;
  BoxIndex(const BoxIndex&) = delete;
  BoxIndex& operator=(const BoxIndex&) = delete;

  /// Indices (ascending) of every triangle whose bounding box meets `box`.
  [[nodiscard]] std::vector<int> query(const Box& box) const;
  [[nodiscard]] const mesh::TriMesh& mesh() const { return *mesh_; }

 private:
  struct Tree;
  const mesh::TriMesh* mesh_;
  std::unique_ptr<Tree> tree_;
};

inline constexpr double kBarycentricTolerance = 1e-12;

struct Location {
  int triangle = -1;
  Barycentric bary{};
};

/// Finds the lowest-index triangle whose barycentric coordinates of p are all
/// >= -kBarycentricTolerance. Coordinates are clamped to [0, 1] and
/// renormalized. Throws Error when no triangle qualifies.
Location locate_point(const mesh::TriMesh& fluid, const BoxIndex& index, const Point& p);

/// One fluid element's share of a mapped solid triangle.
struct OverlayCell {
  int fluid_tri = -1;
  std::vector<Triangle> sub_tris;
};

struct Overlay {
  /// cells[s] partitions the image of solid triangle s.
  std::vector<std::vector<OverlayCell>> cells;

  [[nodiscard]] std::size_t sub_triangle_count() const;
  [[nodiscard]] std::size_t cell_count() const;
  [[nodiscard]] double total_area() const;
  [[nodiscard]] double area_of(int solid_tri) const;
};

/// Raised when a mapped solid triangle is not covered by the fluid mesh.
class CoverageError : public Error {
 public:
  CoverageError(int solid_tri, double deficit);
  [[nodiscard]] int solid_triangle() const { return solid_tri_; }

 private:
  int solid_tri_;
};

/// Image of solid triangle t under the straight-edge interpolant of the map.
Triangle mapped_triangle(const mesh::TriMesh& solid, const DeformationMap& xbar, int t);

/// Intersects every mapped solid triangle with the fluid triangles found by
/// the broad phase. Relative area conservation per solid triangle must hold
/// to `coverage_tol`, otherwise CoverageError.
Overlay build_overlay(const mesh::TriMesh& solid, const DeformationMap& xbar, const mesh::TriMesh& fluid,
                      const BoxIndex& index, double coverage_tol = 1e-10);

}  // namespace fsi::geometry
