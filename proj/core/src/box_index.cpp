#include "fsi/geometry.hpp"

#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>

#include <algorithm>
#include <iterator>

namespace fsi::geometry {

namespace bg = boost::geometry;
namespace bgi = boost::geometry::index;

struct BoxIndex::Tree {
  using BPoint = bg::model::point<double, 2, bg::cs::cartesian>;
  using BBox = bg::model::box<BPoint>;
  using Value = std::pair<BBox, int>;

  bgi::rtree<Value, bgi::rstar<16>> rtree;

  static BBox to_bbox(const Box& b) { return {BPoint(b.xmin, b.ymin), BPoint(b.xmax, b.ymax)}; }
};

BoxIndex::BoxIndex(const mesh::TriMesh& mesh) : mesh_(&mesh), tree_(std::make_unique<Tree>()) {
  std::vector<Tree::Value> values;
  values.reserve(mesh.triangles().size());
  for (int t = 0; t < mesh.num_triangles(); ++t) values.emplace_back(Tree::to_bbox(Box::of(mesh.triangle(t))), t);
  // Packing constructor: bulk loading is faster and gives a better tree.
  tree_->rtree = bgi::rtree<Tree::Value, bgi::rstar<16>>(values.begin(), values.end());
}

BoxIndex::~BoxIndex() = default;
BoxIndex::BoxIndex(BoxIndex&&) noexcept = default;
BoxIndex& BoxIndex::operator=(BoxIndex&&) noexcept = default;

std::vector<int> BoxIndex::query(const Box& box) const {
  std::vector<Tree::Value> hits;
  tree_->rtree.query(bgi::intersects(Tree::to_bbox(box)), std::back_inserter(hits));
  std::vector<int> ids;
  ids.reserve(hits.size());
  for (const auto& h : hits) ids.push_back(h.second);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace fsi::geometry
