#include "fsi/deformation.hpp"
#include "fsi/geometry.hpp"

#include <cmath>
#include <sstream>

namespace fsi::geometry {

std::size_t Overlay::sub_triangle_count() const {
  std::size_t n = 0;
  for (const auto& per_solid : cells) {
    for (const auto& c : per_solid) n += c.sub_tris.size();
  }
  return n;
}

std::size_t Overlay::cell_count() const {
  std::size_t n = 0;
  for (const auto& per_solid : cells) n += per_solid.size();
  return n;
}

double Overlay::area_of(int solid_tri) const {
  double a = 0.0;
  for (const auto& c : cells[solid_tri]) {
    for (const auto& t : c.sub_tris) a += signed_area(t);
  }
  return a;
}

double Overlay::total_area() const {
  double a = 0.0;
  for (int s = 0; s < static_cast<int>(cells.size()); ++s) a += area_of(s);
  return a;
}

namespace {

std::string coverage_message(int solid_tri, double deficit) {
  std::ostringstream os;
  os << "build_overlay: solid triangle " << solid_tri << " is not covered by the fluid mesh (relative area deficit "
     << deficit << ")";
  return os.str();
}

}  // namespace

CoverageError::CoverageError(int solid_tri, double deficit)
    : Error(coverage_message(solid_tri, deficit)), solid_tri_(solid_tri) {}

Triangle mapped_triangle(const mesh::TriMesh& solid, const DeformationMap& xbar, int t) {
  const auto& tri = solid.triangles()[t];
  return {xbar(solid.vertex(tri[0])), xbar(solid.vertex(tri[1])), xbar(solid.vertex(tri[2]))};
}

Overlay build_overlay(const mesh::TriMesh& solid, const DeformationMap& xbar, const mesh::TriMesh& fluid,
                      const BoxIndex& index, double coverage_tol) {
  const double eps_area = 1e-14 * fluid.bbox().area();
  Overlay overlay;
  overlay.cells.resize(solid.triangles().size());

  for (int s = 0; s < solid.num_triangles(); ++s) {
    const Triangle image = mapped_triangle(solid, xbar, s);
    const double image_area = signed_area(image);
    if (!(image_area > eps_area)) throw Error("build_overlay: map degenerates solid triangle " + std::to_string(s));

    auto& cells = overlay.cells[s];
    double covered = 0.0;
    for (int f : index.query(Box::of(image))) {
      const ConvexPolygon piece = clip_triangle_triangle(image, fluid.triangle(f), eps_area);
      if (piece.empty()) continue;
      OverlayCell cell{f, fan_triangulate(piece)};
      for (const auto& t : cell.sub_tris) covered += signed_area(t);
      cells.push_back(std::move(cell));
    }
    const double deficit = std::abs(covered - image_area) / image_area;
    if (deficit > coverage_tol) throw CoverageError(s, deficit);
  }
  return overlay;
}

}  // namespace fsi::geometry
