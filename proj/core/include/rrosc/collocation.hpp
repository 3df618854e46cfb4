#pragma once

#include "rrosc/hamiltonian2d.hpp"
#include "rrosc/precision.hpp"

#include <vector>

namespace rrosc {

/// Collocation nodes for the even cosine set on [0, L]: the M positive zeros
/// x_j = (2j + 1) L / (2M + 1) of cos((M + 1/2) pi x / L), the first basis
/// function left out of the expansion.
struct CollocationGrid {
  int M = 0;
  Real L;
  std::vector<Real> nodes;

  static CollocationGrid make(int M, const Real& L, const PrecisionContext& ctx);
};

/// Working precision used by the collocation baseline (34 digits), fixed
/// independently of the caller's context.
PrecisionContext collocation_context();

/// Nodal second-derivative operator -d^2/dx^2 restricted to the even cosine
/// span, D = C K C^{-1} with C_jn = cos(k_n x_j), K = diag(k_n^2). Row-major,
/// M x M, generally not symmetric.
std::vector<Real> collocation_kinetic(const CollocationGrid& grid,
                                      const PrecisionContext& ctx);

/// Ground-energy estimate of the pseudospectral discretisation on the
/// tensor grid: H = D (x) I + I (x) D + diag V(x_i, y_j). The matrix is
/// solved as-is (no symmetrisation) and the real eigenvalue with the smallest
/// real part is returned. Only the trigonometric basis is supported; the
/// caller's context is ignored in favour of collocation_context().
Real collocation_ground_energy(const HamiltonianSpec& spec, const Real& L,
                               const PrecisionContext& ctx);

}  // namespace rrosc
