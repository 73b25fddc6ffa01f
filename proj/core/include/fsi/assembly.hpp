#pragma once

#include "fsi/common.hpp"
#include "fsi/deformation.hpp"
#include "fsi/geometry.hpp"
#include "fsi/quadrature.hpp"
#include "fsi/spaces.hpp"

#include <vector>

namespace fsi {
struct ManufacturedSolution;
}

namespace fsi::assembly {

/// Bilinear form pairing the multiplier with velocity traces and displacements.
enum class CouplingKind {
  L2,  ///< (mu, Y)_B
  H1,  ///< (mu, Y)_B + (grad mu, grad Y)_B
};

/// Vector Laplacian stiffness (grad u, grad v) on the velocity mesh; no boundary conditions.
SparseMatrix assemble_Af(const spaces::FESpace& velocity);

/// B_ki = -(div phi_i, psi_k), integrated child by child against the parent's pressure basis.
SparseMatrix assemble_B(const spaces::FESpace& velocity, const spaces::FESpace& pressure);

/// (grad_s X, grad_s Y)_B on the solid reference mesh.
SparseMatrix assemble_As(const spaces::FESpace& solid);

/// c(zeta_l, chi_j); rows are multiplier dofs.
SparseMatrix assemble_Cs(const spaces::FESpace& solid, const spaces::FESpace& multiplier, CouplingKind form);

/// c(zeta_l, phi_j(X)) by composite quadrature over the mesh intersection.
/// Rows are multiplier dofs, columns velocity dofs.
SparseMatrix assemble_Cf_intersection(const geometry::Overlay& overlay, const spaces::FESpace& multiplier,
                                      const spaces::FESpace& velocity, const DeformationMap& xbar, CouplingKind form,
                                      int order = 2);

/// c(zeta_l, phi_j(X)) by quadrature on each solid element, evaluating the
/// fluid basis of whichever element contains each mapped node.
SparseMatrix assemble_Cf_nointersection(const spaces::FESpace& multiplier, const spaces::FESpace& velocity,
                                        const geometry::BoxIndex& fluid_index, const DeformationMap& xbar,
                                        CouplingKind form, int order);

/// How the volume data -lap u + grad p and -lap X enter the right-hand side.
enum class VolumeData {
  Interpolated,  ///< mass matrix times the nodal interpolant
  Quadrature,    ///< integrated against the basis with `volume_rule`
};

struct RhsOptions {
  CouplingKind form = CouplingKind::H1;
  VolumeData volume_data = VolumeData::Interpolated;
  /// Integrate u(X) in d over the overlay instead of directly on solid elements.
  bool d_via_overlay = false;
  /// Rule for quadrature volume data and for every multiplier term; defaults to quad::high_order_rule().
  const quad::QuadratureRule* volume_rule = nullptr;
  int edge_points = 5;
};

struct RhsVectors {
  Vector f;  ///< velocity dofs
  Vector g;  ///< displacement dofs
  Vector d;  ///< multiplier dofs
};

/// Right-hand sides reproducing a manufactured solution:
///   (f, v) = (-lap u + grad p, v) - ([p], v.n)_{boundary of solid} + c(lambda, v(X))
///   (g, Y) = (-lap X, Y)_B + (grad X n, Y)_{boundary of B} - c(lambda, Y)
///   (d, mu) = c(mu, u(X) - X)
RhsVectors assemble_rhs(const ManufacturedSolution& exact, const DeformationMap& xbar,
                        const spaces::FESpace& velocity, const spaces::FESpace& solid,
                        const geometry::Overlay& overlay, const geometry::BoxIndex& fluid_index,
                        const RhsOptions& options = {});

/// Sparse blocks and right-hand sides of the saddle-point system
///
///   [ Af  B^T  0    Cf^T ] [u]   [f]
///   [ B   0    0    0    ] [p] = [0]
///   [ 0   0    As  -Cs^T ] [X]   [g]
///   [ Cf  0   -Cs   0    ] [l]   [d]
struct CoupledSystem {
  SparseMatrix Af, B, As, Cf, Cs;
  Vector f, g, d;

  /// Integral of each pressure basis function, for the zero-mean shift.
  Vector pressure_integrals;
  /// Number of continuous pressure dofs; the remainder are element constants.
  int pressure_p1_count = 0;
  double domain_area = 0.0;
  std::vector<int> dirichlet;

  [[nodiscard]] int n_u() const { return static_cast<int>(Af.rows()); }
  [[nodiscard]] int n_p() const { return static_cast<int>(B.rows()); }
  [[nodiscard]] int n_x() const { return static_cast<int>(As.rows()); }
  [[nodiscard]] int n_lambda() const { return static_cast<int>(Cs.rows()); }
  [[nodiscard]] int offset_p() const { return n_u(); }
  [[nodiscard]] int offset_x() const { return n_u() + n_p(); }
  [[nodiscard]] int offset_lambda() const { return n_u() + n_p() + n_x(); }
  [[nodiscard]] int size() const { return offset_lambda() + n_lambda(); }

  [[nodiscard]] SparseMatrix matrix() const;
  [[nodiscard]] Vector rhs() const;
};

/// Identity rows and columns for constrained velocity dofs in Af, zero
/// columns in B and Cf, zero right-hand side entries.
void apply_dirichlet(CoupledSystem& system, const std::vector<int>& dofs);

}  // namespace fsi::assembly
