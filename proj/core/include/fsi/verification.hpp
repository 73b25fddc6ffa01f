#pragma once

#include "fsi/assembly.hpp"
#include "fsi/deformation.hpp"
#include "fsi/exact_solution.hpp"
#include "fsi/geometry.hpp"
#include "fsi/mesh.hpp"
#include "fsi/solver.hpp"
#include "fsi/spaces.hpp"

#include <array>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fsi::verification {

enum class SolidMeshKind { Right, Left, Unstructured };
enum class Method { Intersect, NoIntersectQ2, NoIntersectQ3 };
enum class Element { BP, BPP0 };

std::string to_string(Method m);
std::string to_string(Element e);

/// One of the eight verification configurations.
struct TestCase {
  int id = 0;
  Box omega;
  /// Reference domain of the solid.
  Box body;
  DeformationMap xbar = DeformationMap::identity();
  mesh::Diagonal fluid_orientation = mesh::Diagonal::Right;
  SolidMeshKind solid_mesh = SolidMeshKind::Right;
  ManufacturedSolution exact;
};

/// Throws Error("unknown test ...") outside 1..8.
TestCase make_test(int id);

/// Level k has fluid spacing 1/k: a 4k x 4k pressure mesh of [-2,2]^2, its
/// red refinement for the velocity, and a 4k x 4k solid mesh (same number of
/// cells per side as the pressure mesh, i.e. matching the velocity spacing
/// on [-1,1]^2).
struct LevelSizes {
  int pressure_n = 0;
  int solid_n = 0;
};
LevelSizes level_sizes(int k);

struct StudyOptions {
  assembly::CouplingKind form = assembly::CouplingKind::H1;
  /// Diagonal exchange of corner macro triangles; by default only for P1 + P0.
  std::optional<bool> corner_swap;
  /// Replaces the rule order implied by the method (intersection: 2, no-intersection: 2 or 3).
  std::optional<int> rule_order;
  assembly::VolumeData volume_data = assembly::VolumeData::Interpolated;
  /// Rule for the right-hand side integrals; null selects quad::high_order_rule().
  const quad::QuadratureRule* rhs_rule = nullptr;
  std::filesystem::path fixture_dir;  ///< empty: FSI_FIXTURES or the build-time default
  solver::SolveOptions solve;
};

std::filesystem::path default_fixture_dir();
/// Unit-square Gmsh mesh with n boundary segments per side, named by h = 1/n.
std::filesystem::path unstructured_fixture(const std::filesystem::path& dir, int n);

/// Meshes, spaces, overlay and assembled system of one test at one level.
struct Problem {
  std::shared_ptr<const mesh::MacroMeshPair> pair;
  std::shared_ptr<const mesh::TriMesh> solid;
  spaces::FESpace velocity;
  spaces::FESpace pressure;
  spaces::FESpace solid_space;
  std::unique_ptr<geometry::BoxIndex> index;
  geometry::Overlay overlay;
  assembly::CoupledSystem system;
};

std::shared_ptr<const mesh::TriMesh> build_solid_mesh(const TestCase& test, int n, const StudyOptions& options = {});
std::shared_ptr<const mesh::MacroMeshPair> build_fluid_pair(const TestCase& test, int n, Element element,
                                                            const StudyOptions& options = {});

Problem build_problem(const TestCase& test, int level, Method method, Element element,
                      const StudyOptions& options = {});

inline constexpr std::array<const char*, 7> kErrorNames{"p_L2", "u_L2", "u_H1", "X_L2", "X_H1", "lam_L2", "lam_H1"};

/// Relative errors: each norm of (exact - discrete) divided by the same norm
/// of the exact field. H1 norms are full norms (L2 part included). Pressures
/// are compared after both are shifted to zero mean.
struct Errors {
  std::array<double, 7> values{};
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
};

/// Absolute norms alongside the exact-field norms used for normalization.
struct ErrorDetail {
  std::array<double, 7> absolute{};
  std::array<double, 7> exact_norm{};
  [[nodiscard]] Errors relative() const;
};

ErrorDetail compute_error_detail(const TestCase& test, const Problem& problem, const solver::Solution& solution,
                                 const quad::QuadratureRule* rule = nullptr);
Errors compute_errors(const TestCase& test, const Problem& problem, const solver::Solution& solution);

/// log2(e_h / e_{h/2}); absent where either error is zero.
std::vector<std::optional<double>> convergence_rates(const std::vector<double>& errors);

struct LevelResult {
  int level = 0;
  double h_fluid = 0.0;
  double h_solid = 0.0;
  Errors errors;
  solver::SolveReport report;
};

struct StudyResult {
  int test_id = 0;
  Method method = Method::Intersect;
  Element element = Element::BP;
  std::vector<LevelResult> levels;

  /// rates()[i][j]: rate of error j between levels i-1 and i (absent for i = 0).
  [[nodiscard]] std::vector<std::array<std::optional<double>, 7>> rates() const;
  void write_csv(std::ostream& os) const;
  [[nodiscard]] std::string csv_name() const;
};

StudyResult run_test(int id, Method method, Element element, const std::vector<int>& levels,
                     const StudyOptions& options = {});

}  // namespace fsi::verification
