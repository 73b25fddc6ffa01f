#include "fsi/verification.hpp"

#include <cstdio>
#include <ostream>

namespace fsi::verification {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

}  // namespace

std::vector<std::array<std::optional<double>, 7>> StudyResult::rates() const {
  std::vector<std::array<std::optional<double>, 7>> out(levels.size());
  if (levels.size() < 2) return out;
  for (std::size_t j = 0; j < 7; ++j) {
    std::vector<double> column;
    for (const auto& l : levels) column.push_back(l.errors[j]);
    const auto r = convergence_rates(column);
    for (std::size_t i = 0; i < r.size(); ++i) out[i + 1][j] = r[i];
  }
  return out;
}

void StudyResult::write_csv(std::ostream& os) const {
  os << "level,h_fluid,h_solid";
  for (const char* n : kErrorNames) os << ",err_" << n;
  for (const char* n : kErrorNames) os << ",rate_" << n;
  os << '\n';
  const auto r = rates();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& l = levels[i];
    os << l.level << ',' << sci(l.h_fluid) << ',' << sci(l.h_solid);
    for (double e : l.errors.values) os << ',' << sci(e);
    for (const auto& rate : r[i]) {
      os << ',';
      if (rate) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%.4f", *rate);
        os << buf;
      }
    }
    os << '\n';
  }
}

std::string StudyResult::csv_name() const {
  return "test" + std::to_string(test_id) + "_" + to_string(element) + "_" + to_string(method) + ".csv";
}

StudyResult run_test(int id, Method method, Element element, const std::vector<int>& levels,
                     const StudyOptions& options) {
  const TestCase test = make_test(id);
  StudyResult result;
  result.test_id = id;
  result.method = method;
  result.element = element;
  for (int k : levels) {
    const Problem problem = build_problem(test, k, method, element, options);
    const solver::Solution sol = solver::solve(problem.system, options.solve);
    LevelResult row;
    row.level = k;
    row.h_fluid = 1.0 / k;
    row.h_solid = test.body.width() / level_sizes(k).solid_n;
    row.errors = compute_errors(test, problem, sol);
    row.report = sol.report;
    result.levels.push_back(row);
  }
  return result;
}

}  // namespace fsi::verification
