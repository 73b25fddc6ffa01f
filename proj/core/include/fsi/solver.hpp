#pragma once

#include "fsi/assembly.hpp"

namespace fsi::solver {

struct SolveOptions {
  /// Continuous pressure dof fixed to zero during the factorization.
  int pin_vertex = 0;
  /// Element constant fixed to zero for the enriched pressure (index among the P0 dofs).
  int pin_element = 0;
};

struct SolveReport {
  /// ||A x - b|| / ||b|| against the unpinned system (absolute when b = 0).
  double relative_residual = 0.0;
  /// Mean pressure subtracted after the solve.
  double pressure_mean_removed = 0.0;
  long matrix_nonzeros = 0;
  long factor_nonzeros = 0;
};

struct Solution {
  Vector u, p, X, lambda;
  SolveReport report;
};

/// Sparse LU of the full block system. The constant pressure mode (and for
/// P1 + P0 the second constant mode) is removed by pinning, after which the
/// pressure is shifted to zero mean over the fluid domain.
Solution solve(const assembly::CoupledSystem& system, const SolveOptions& options = {});

}  // namespace fsi::solver
