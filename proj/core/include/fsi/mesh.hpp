#pragma once

#include "fsi/common.hpp"

#include <filesystem>
#include <vector>

namespace fsi::mesh {

struct BoundaryEdge {
  int a = 0;
  int b = 0;
  int tag = 1;
};

/// Conforming 2D triangulation.
///
/// Construction normalizes every triangle to counter-clockwise order, derives
/// the boundary from edge incidence and rejects meshes where an edge is shared
/// by more than two triangles or two neighbours overlap. The object is
/// immutable afterwards.
class TriMesh {
 public:
  TriMesh() = default;
  TriMesh(std::vector<Point> vertices, std::vector<std::array<int, 3>> triangles);

  [[nodiscard]] const std::vector<Point>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  [[nodiscard]] const std::vector<BoundaryEdge>& boundary_edges() const { return boundary_edges_; }
  [[nodiscard]] const Box& bbox() const { return bbox_; }

  [[nodiscard]] int num_vertices() const { return static_cast<int>(vertices_.size()); }
  [[nodiscard]] int num_triangles() const { return static_cast<int>(triangles_.size()); }

  [[nodiscard]] const Point& vertex(int v) const { return vertices_[v]; }
  [[nodiscard]] Triangle triangle(int t) const;
  [[nodiscard]] double area(int t) const;
  [[nodiscard]] double total_area() const;

  [[nodiscard]] bool is_boundary_vertex(int v) const { return boundary_vertex_[v] != 0; }
  /// Number of boundary edges of triangle t (0..3).
  [[nodiscard]] int boundary_edge_count(int t) const;

 private:
  std::vector<Point> vertices_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<BoundaryEdge> boundary_edges_;
  std::vector<char> boundary_vertex_;
  Box bbox_;
};

enum class Diagonal {
  Right,  ///< cells split along the SW-NE diagonal
  Left,   ///< cells split along the NW-SE diagonal
};

/// Structured n x n grid of `box`, two triangles per cell. Vertex (i, j) has
/// index j * (n + 1) + i; cell (i, j) yields triangles 2 * (j * n + i) + {0, 1}.
TriMesh build_uniform(int n, Diagonal orientation, const Box& box);

/// Pressure (coarse) mesh and velocity (fine) mesh of a Bercovier-Pironneau
/// discretization. Fine triangle 4 * t + k is the k-th child of coarse
/// triangle t; child 3 is the central one.
struct MacroMeshPair {
  TriMesh coarse;
  TriMesh fine;
  std::vector<int> parent;
};

MacroMeshPair refine_red(const TriMesh& coarse);

/// Exchanges the interior diagonal of every coarse triangle having two
/// boundary edges and regenerates the fine mesh.
MacroMeshPair corner_swap(const MacroMeshPair& pair);

/// Applies x -> a x + b to every vertex.
TriMesh affine_map_mesh(const TriMesh& mesh, const Mat2& a, const Point& b);

/// Reads an ASCII Gmsh MSH 2.2 file made of 3-node triangles and 2-node lines.
TriMesh import_msh(const std::filesystem::path& path);

/// Writes the mesh as ASCII MSH 2.2 (boundary lines with physical tag, then triangles).
void export_msh(const TriMesh& mesh, const std::filesystem::path& path);

}  // namespace fsi::mesh
