// Command-line driver: convergence studies and overlay inspection.

#include "fsi/verification.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

namespace fs = std::filesystem;
using namespace fsi;
using namespace fsi::verification;

namespace {

// "4:64" doubles from 4 up to 64; "4,8,16" is taken literally.
std::vector<int> parse_levels(const std::string& spec) {
  std::vector<int> out;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || v < 1) throw Error("invalid level '" + s + "' in --levels " + spec);
    return v;
  };
  if (const auto colon = spec.find(':'); colon != std::string::npos) {
    const int lo = to_int(spec.substr(0, colon));
    const int hi = to_int(spec.substr(colon + 1));
    if (hi < lo) throw Error("--levels: upper bound below lower bound");
    for (int k = lo; k <= hi; k *= 2) out.push_back(k);
  } else {
    std::size_t start = 0;
    while (start <= spec.size()) {
      const auto comma = spec.find(',', start);
      out.push_back(to_int(spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

void print_table(const StudyResult& r, std::ostream& os) {
  os << "test " << r.test_id << ", " << to_string(r.element) << ", " << to_string(r.method) << '\n';
  char buf[64];
  os << "  h_T     ";
  for (const char* n : kErrorNames) {
    std::snprintf(buf, sizeof buf, " %-10s %5s", n, "rate");
    os << buf;
  }
  os << "   residual\n";
  const auto rates = r.rates();
  for (std::size_t i = 0; i < r.levels.size(); ++i) {
    const auto& l = r.levels[i];
    std::snprintf(buf, sizeof buf, "  1/%-6d", l.level);
    os << buf;
    for (std::size_t j = 0; j < 7; ++j) {
      if (rates[i][j]) {
        std::snprintf(buf, sizeof buf, " %.3e %5.2f", l.errors[j], *rates[i][j]);
      } else {
        std::snprintf(buf, sizeof buf, " %.3e %5s", l.errors[j], "-");
      }
      os << buf;
    }
    std::snprintf(buf, sizeof buf, "   %.1e\n", l.report.relative_residual);
    os << buf;
  }
}

struct RunArgs {
  int test = 1;
  std::string method = "intersect";
  std::string element = "bp";
  std::string levels = "4:32";
  std::string out = ".";
  std::string form = "h1";
  std::string corner_swap = "auto";
  int rule_order = 0;
};

int cmd_run(const RunArgs& a) {
  static const std::map<std::string, Method> methods{
      {"intersect", Method::Intersect}, {"noint-q2", Method::NoIntersectQ2}, {"noint-q3", Method::NoIntersectQ3}};
  static const std::map<std::string, Element> elements{{"bp", Element::BP}, {"bp-p0", Element::BPP0}};
  StudyOptions options;
  options.form = a.form == "l2" ? assembly::CouplingKind::L2 : assembly::CouplingKind::H1;
  if (a.corner_swap != "auto") options.corner_swap = a.corner_swap == "on";
  if (a.rule_order > 0) options.rule_order = a.rule_order;

  make_test(a.test);  // reject unknown ids before any work
  const auto result = run_test(a.test, methods.at(a.method), elements.at(a.element), parse_levels(a.levels), options);
  print_table(result, std::cout);

  fs::create_directories(a.out);
  const fs::path path = fs::path(a.out) / result.csv_name();
  std::ofstream csv(path, std::ios::binary);
  if (!csv) throw Error("cannot write " + path.string());
  result.write_csv(csv);
  std::cout << "wrote " << path.string() << '\n';
  return 0;
}

struct OverlayArgs {
  int test = 1;
  int level = 4;
  std::vector<double> offset;
  bool per_triangle = false;
  std::string dump;
};

int cmd_overlay_stats(const OverlayArgs& a) {
  TestCase test = make_test(a.test);
  if (a.offset.size() == 2) test.xbar = test.xbar.translated(Point(a.offset[0], a.offset[1]));
  const LevelSizes sizes = level_sizes(a.level);
  const auto pair = build_fluid_pair(test, sizes.pressure_n, Element::BP);
  const auto solid = build_solid_mesh(test, sizes.solid_n);
  const geometry::BoxIndex index(pair->fine);

  geometry::Overlay overlay;
  try {
    overlay = geometry::build_overlay(*solid, test.xbar, pair->fine, index);
  } catch (const geometry::CoverageError& e) {
    std::cerr << "coverage error at solid triangle " << e.solid_triangle() << ": " << e.what() << '\n';
    return 1;
  }

  double mapped_area = 0.0;
  std::size_t min_cells = SIZE_MAX;
  std::size_t max_cells = 0;
  for (int s = 0; s < solid->num_triangles(); ++s) {
    const double a_s = signed_area(geometry::mapped_triangle(*solid, test.xbar, s));
    mapped_area += a_s;
    min_cells = std::min(min_cells, overlay.cells[s].size());
    max_cells = std::max(max_cells, overlay.cells[s].size());
    if (a.per_triangle) {
      std::printf("triangle %d: %zu cells, area %.15e, defect %.3e\n", s, overlay.cells[s].size(), a_s,
                  std::abs(overlay.area_of(s) - a_s) / a_s);
    }
  }
  const double total = overlay.total_area();
  std::printf("solid triangles:        %d\n", solid->num_triangles());
  std::printf("fluid triangles:        %d\n", pair->fine.num_triangles());
  std::printf("cells:                  %zu (per solid triangle %zu..%zu)\n", overlay.cell_count(), min_cells,
              max_cells);
  std::printf("sub-triangles:          %zu\n", overlay.sub_triangle_count());
  std::printf("mapped solid area:      %.15e\n", mapped_area);
  std::printf("overlay area:           %.15e\n", total);
  std::printf("relative area defect:   %.3e\n", std::abs(total - mapped_area) / mapped_area);

  if (!a.dump.empty()) {
    std::ofstream os(a.dump, std::ios::binary);
    if (!os) throw Error("cannot write " + a.dump);
    os << "solid_tri,fluid_tri,sub_tri,vertex,x,y\n";
    os.precision(17);
    for (int s = 0; s < solid->num_triangles(); ++s) {
      for (const auto& cell : overlay.cells[s]) {
        for (std::size_t k = 0; k < cell.sub_tris.size(); ++k) {
          for (int v = 0; v < 3; ++v) {
            os << s << ',' << cell.fluid_tri << ',' << k << ',' << v << ',' << cell.sub_tris[k][v].x() << ','
               << cell.sub_tris[k][v].y() << '\n';
          }
        }
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fluid-structure coupling verification driver"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Convergence study of one test configuration");
  run_cmd->add_option("--test", run.test, "Test id (1..8)")->required();
  run_cmd->add_option("--method", run.method, "Coupling matrix assembly")
      ->check(CLI::IsMember({"intersect", "noint-q2", "noint-q3"}));
  run_cmd->add_option("--element", run.element, "Stokes pair")->check(CLI::IsMember({"bp", "bp-p0"}));
  run_cmd->add_option("--levels", run.levels, "Fluid levels k (h = 1/k): 'lo:hi' doubling, or a comma list");
  run_cmd->add_option("--out", run.out, "Output directory for the CSV table");
  run_cmd->add_option("--form", run.form, "Coupling form")->check(CLI::IsMember({"h1", "l2"}));
  run_cmd->add_option("--corner-swap", run.corner_swap, "Diagonal exchange of corner macro triangles")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  run_cmd->add_option("--rule-order", run.rule_order, "Override the coupling quadrature order")
      ->check(CLI::Range(1, 3));

  OverlayArgs ov;
  auto* ov_cmd = app.add_subcommand("overlay-stats", "Intersect the mapped solid mesh with the velocity mesh");
  ov_cmd->add_option("--test", ov.test, "Test id (1..8)")->required();
  ov_cmd->add_option("--level", ov.level, "Fluid level k (h = 1/k)");
  ov_cmd->add_option("--offset", ov.offset, "Translate the mapped solid by (dx, dy)")->expected(2);
  ov_cmd->add_flag("--per-triangle", ov.per_triangle, "Print one line per solid triangle");
  ov_cmd->add_option("--dump", ov.dump, "Write the sub-triangles as CSV vertex loops");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*ov_cmd) return cmd_overlay_stats(ov);
  } catch (const geometry::CoverageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
