#include "fsi/mesh.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace fsi::mesh {

namespace {

constexpr int kMshLine = 1;
constexpr int kMshTriangle = 2;
constexpr int kMshPoint = 15;

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
  throw Error("import_msh(" + path.string() + "): " + what);
}

void expect_token(std::istream& in, const std::string& token, const std::filesystem::path& path) {
  std::string s;
  if (!(in >> s) || s != token) fail(path, "expected " + token);
}

}  // namespace

TriMesh import_msh(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open file");

  std::unordered_map<long, Point> nodes;
  std::vector<long> node_order;
  std::vector<std::array<long, 3>> raw_triangles;
  bool have_format = false;

  std::string section;
  while (in >> section) {
    if (section == "$MeshFormat") {
      std::string version;
      int file_type = -1;
      int data_size = 0;
      in >> version >> file_type >> data_size;
      if (!in) fail(path, "malformed $MeshFormat");
      if (version.rfind("2.", 0) != 0) fail(path, "unsupported version " + version);
      if (file_type != 0) fail(path, "binary MSH is not supported");
      expect_token(in, "$EndMeshFormat", path);
      have_format = true;
    } else if (section == "$Nodes") {
      long count = 0;
      in >> count;
      for (long i = 0; i < count; ++i) {
        long id = 0;
        double x = 0;
        double y = 0;
        double z = 0;
        if (!(in >> id >> x >> y >> z)) fail(path, "malformed node record");
        if (!nodes.emplace(id, Point(x, y)).second) fail(path, "duplicate node id " + std::to_string(id));
        node_order.push_back(id);
      }
      expect_token(in, "$EndNodes", path);
    } else if (section == "$Elements") {
      long count = 0;
      in >> count;
      for (long i = 0; i < count; ++i) {
        long id = 0;
        int type = 0;
        int ntags = 0;
        if (!(in >> id >> type >> ntags)) fail(path, "malformed element record");
        for (int k = 0; k < ntags; ++k) {
          long tag = 0;
          in >> tag;
        }
        int nnodes = 0;
        switch (type) {
          case kMshLine: nnodes = 2; break;
          case kMshTriangle: nnodes = 3; break;
          case kMshPoint: nnodes = 1; break;
          default: fail(path, "unsupported element type " + std::to_string(type));
        }
        std::array<long, 3> conn{};
        for (int k = 0; k < nnodes; ++k) in >> conn[k];
        if (!in) fail(path, "malformed element record");
        if (type == kMshTriangle) raw_triangles.push_back(conn);
      }
      expect_token(in, "$EndElements", path);
    } else if (!section.empty() && section[0] == '$' && section.rfind("$End", 0) != 0) {
      // Unknown section ($PhysicalNames, ...): skip to its end marker.
      const std::string end = "$End" + section.substr(1);
      std::string tok;
      while (in >> tok && tok != end) {
      }
    } else {
      fail(path, "unexpected token " + section);
    }
  }
  if (!have_format) fail(path, "missing $MeshFormat");
  if (raw_triangles.empty()) fail(path, "no triangles");

  // Keep only vertices referenced by triangles, numbered in file order.
  std::unordered_map<long, int> index;
  std::unordered_map<long, char> used;
  for (const auto& t : raw_triangles) {
    for (long id : t) {
      if (!nodes.count(id)) fail(path, "element references unknown node " + std::to_string(id));
      used[id] = 1;
    }
  }
  std::vector<Point> vertices;
  for (long id : node_order) {
    if (used.count(id)) {
      index[id] = static_cast<int>(vertices.size());
      vertices.push_back(nodes.at(id));
    }
  }
  std::vector<std::array<int, 3>> triangles;
  triangles.reserve(raw_triangles.size());
  for (const auto& t : raw_triangles) triangles.push_back({index.at(t[0]), index.at(t[1]), index.at(t[2])});

  try {
    return {std::move(vertices), std::move(triangles)};
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

void export_msh(const TriMesh& mesh, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("export_msh: cannot open " + path.string());
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  out << "$MeshFormat\n2.2 0 8\n$EndMeshFormat\n";
  out << "$Nodes\n" << mesh.num_vertices() << "\n";
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    out << v + 1 << ' ' << mesh.vertex(v).x() << ' ' << mesh.vertex(v).y() << " 0\n";
  }
  out << "$EndNodes\n";
  const auto& be = mesh.boundary_edges();
  out << "$Elements\n" << be.size() + mesh.triangles().size() << "\n";
  long id = 1;
  for (const auto& e : be) out << id++ << ' ' << kMshLine << " 2 " << e.tag << ' ' << e.tag << ' ' << e.a + 1 << ' ' << e.b + 1 << "\n";
  for (const auto& t : mesh.triangles()) {
    out << id++ << ' ' << kMshTriangle << " 2 1 1 " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << "\n";
  }
  out << "$EndElements\n";
}

}  // namespace fsi::mesh
