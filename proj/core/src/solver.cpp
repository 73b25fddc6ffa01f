#include "fsi/solver.hpp"

#include <umfpack.h>

#include <array>
#include <sstream>

namespace fsi::solver {

using assembly::CoupledSystem;

namespace {

// 64-bit index interface: the 32-bit one runs out of workspace on the finest levels.
class Umfpack {
 public:
  Umfpack(const SparseMatrix& a, bool symmetric_strategy)
      : a_(a),
        outer_(a.outerIndexPtr(), a.outerIndexPtr() + a.outerSize() + 1),
        inner_(a.innerIndexPtr(), a.innerIndexPtr() + a.nonZeros()) {
    umfpack_dl_defaults(control_.data());
    if (symmetric_strategy) {
      control_[UMFPACK_STRATEGY] = UMFPACK_STRATEGY_SYMMETRIC;
      control_[UMFPACK_ORDERING] = UMFPACK_ORDERING_METIS;
    }
    const auto n = static_cast<SuiteSparse_long>(a_.rows());
    status_ = static_cast<int>(
        umfpack_dl_symbolic(n, n, outer_.data(), inner_.data(), a_.valuePtr(), &symbolic_, control_.data(), info_.data()));
    if (status_ != UMFPACK_OK) return;
    status_ = static_cast<int>(
        umfpack_dl_numeric(outer_.data(), inner_.data(), a_.valuePtr(), symbolic_, &numeric_, control_.data(), info_.data()));
  }
  ~Umfpack() {
    if (numeric_) umfpack_dl_free_numeric(&numeric_);
    if (symbolic_) umfpack_dl_free_symbolic(&symbolic_);
  }
  Umfpack(const Umfpack&) = delete;
  Umfpack& operator=(const Umfpack&) = delete;

  [[nodiscard]] int status() const { return status_; }
  [[nodiscard]] double info(int k) const { return info_[k]; }

  Vector solve(const Vector& b) const {
    Vector x(b.size());
    std::array<double, UMFPACK_INFO> info{};
    const auto st = umfpack_dl_solve(UMFPACK_A, outer_.data(), inner_.data(), a_.valuePtr(), x.data(), b.data(),
                                     numeric_, control_.data(), info.data());
    if (st != UMFPACK_OK) throw Error("solve: UMFPACK solve failed with status " + std::to_string(st));
    return x;
  }

 private:
  const SparseMatrix& a_;
  std::vector<SuiteSparse_long> outer_;
  std::vector<SuiteSparse_long> inner_;
  std::array<double, UMFPACK_CONTROL> control_{};
  std::array<double, UMFPACK_INFO> info_{};
  void* symbolic_ = nullptr;
  void* numeric_ = nullptr;
  int status_ = UMFPACK_OK;
};

std::string block_diagnostics(const CoupledSystem& sys, const SparseMatrix& a, const Umfpack& lu) {
  std::vector<int> row_nnz(static_cast<std::size_t>(a.rows()), 0);
  for (int k = 0; k < a.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(a, k); it; ++it) {
      if (it.value() != 0.0) ++row_nnz[it.row()];
    }
  }
  const std::array<const char*, 4> names{"u", "p", "X", "lambda"};
  const std::array<int, 5> offsets{0, sys.offset_p(), sys.offset_x(), sys.offset_lambda(), sys.size()};
  std::ostringstream os;
  os << "status " << lu.status() << ", rcond " << lu.info(UMFPACK_RCOND) << "; empty rows per block:";
  for (int b = 0; b < 4; ++b) {
    int empty = 0;
    for (int r = offsets[b]; r < offsets[b + 1]; ++r) empty += row_nnz[r] == 0 ? 1 : 0;
    os << ' ' << names[b] << '=' << empty << '/' << (offsets[b + 1] - offsets[b]);
  }
  return os.str();
}

}  // namespace

Solution solve(const CoupledSystem& system, const SolveOptions& options) {
  const int np1 = system.pressure_p1_count;
  const int np0 = system.n_p() - np1;
  if (options.pin_vertex < 0 || options.pin_vertex >= np1) throw Error("solve: pinned pressure vertex out of range");
  if (np0 > 0 && (options.pin_element < 0 || options.pin_element >= np0)) {
    throw Error("solve: pinned pressure element out of range");
  }
  std::vector<int> pinned{system.offset_p() + options.pin_vertex};
  if (np0 > 0) pinned.push_back(system.offset_p() + np1 + options.pin_element);

  const SparseMatrix full = system.matrix();
  const Vector b = system.rhs();

  SparseMatrix a = full;
  std::vector<char> is_pinned(static_cast<std::size_t>(a.rows()), 0);
  for (int k : pinned) is_pinned[k] = 1;
  a.prune([&](const Eigen::Index& r, const Eigen::Index& c, const double&) { return !is_pinned[r] && !is_pinned[c]; });
  std::vector<Eigen::Triplet<double>> diag;
  for (int k : pinned) diag.emplace_back(k, k, 1.0);
  SparseMatrix id(a.rows(), a.cols());
  id.setFromTriplets(diag.begin(), diag.end());
  a += id;
  a.makeCompressed();
  Vector rhs = b;
  for (int k : pinned) rhs[k] = 0.0;

  // A symmetric ordering roughly halves the fill for the P1 pressure. With
  // element constants the zero pressure block forces off-diagonal pivots, and
  // the default column ordering does far better.
  Umfpack lu(a, np0 == 0);
  if (lu.status() != UMFPACK_OK) throw Error("solve: singular saddle-point system (" + block_diagnostics(system, a, lu) + ")");
  Vector x = lu.solve(rhs);

  Solution sol;
  sol.report.matrix_nonzeros = static_cast<long>(full.nonZeros());
  sol.report.factor_nonzeros = static_cast<long>(lu.info(UMFPACK_LNZ) + lu.info(UMFPACK_UNZ));
  const double bnorm = b.norm();
  const double rnorm = (full * x - b).norm();
  sol.report.relative_residual = bnorm > 0.0 ? rnorm / bnorm : rnorm;

  sol.u = x.segment(0, system.n_u());
  sol.p = x.segment(system.offset_p(), system.n_p());
  sol.X = x.segment(system.offset_x(), system.n_x());
  sol.lambda = x.segment(system.offset_lambda(), system.n_lambda());

  // A constant is representable by either part of an enriched pressure. Move
  // the area-weighted mean of the element constants into the continuous part
  // so the coefficients do not depend on the pins.
  if (np0 > 0) {
    const auto cell_areas = system.pressure_integrals.tail(np0);
    const double shift = cell_areas.dot(sol.p.tail(np0)) / cell_areas.sum();
    sol.p.tail(np0).array() -= shift;
    sol.p.head(np1).array() += shift;
  }
  // The continuous part's basis sums to one, so shifting it moves the mean by the same amount.
  const double mean = system.pressure_integrals.dot(sol.p) / system.domain_area;
  sol.p.head(np1).array() -= mean;
  sol.report.pressure_mean_removed = mean;
  return sol;
}

}  // namespace fsi::solver
