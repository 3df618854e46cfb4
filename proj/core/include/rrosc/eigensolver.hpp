#pragma once

#include "rrosc/precision.hpp"
#include "rrosc/symmetric_matrix.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rrosc {

/// Raised when an iterative eigensolver exhausts its iteration budget.
/// Carries the residual measure reached at that point.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual,
                   std::size_t iterations)
      : std::runtime_error(what), residual_(residual), iterations_(iterations) {}

  double residual() const noexcept { return residual_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  std::size_t iterations_;
};

struct JacobiOptions {
  /// 0 selects the default cap of 100 * dim sweeps.
  std::size_t max_sweeps = 0;
};

/// All eigenvalues in ascending order by cyclic Jacobi rotations at the
/// context's working precision. Sweeps stop once the largest off-diagonal
/// magnitude drops below 10^-working * max |a_ii|.
std::vector<Real> eigenvalues_symmetric(const SymmetricMatrix& a,
                                        const PrecisionContext& ctx,
                                        JacobiOptions options = {});

/// Ground eigenvalue through the mixed-precision refinement path; agrees
/// with eigenvalues_symmetric(a)[0] to the target digits.
Real smallest_eigenvalue(const SymmetricMatrix& a, const PrecisionContext& ctx);

/// Matrix-free operator for the refinement driver. `apply` computes
/// out = A * in at working precision; `dense_double` is the row-major double
/// rounding of A used to seed the eigenpair and factor the correction system.
struct LinearOperator {
  std::size_t dim = 0;
  std::function<void(std::span<const Real>, std::span<Real>)> apply;
  std::vector<double> dense_double;
  bool symmetric = true;
};

struct EigenPair {
  Real value;
  std::vector<Real> vector;
  std::size_t iterations = 0;
  /// max |A x - value x| / max |x| after the last correction.
  double residual = 0.0;
};

/// Lowest eigenpair (smallest real part for non-symmetric operators).
///
/// A double-precision LAPACK eigenpair seeds Newton's method on
///   A x - mu x = 0,  x0^T x = 1
/// whose Jacobian is factored once in double. Each step forms the residual
/// at working precision, so the iteration converges linearly to working
/// precision as long as the double Jacobian is not too ill-conditioned. For
/// symmetric operators the final value is the Rayleigh quotient of the
/// refined vector.
EigenPair refine_lowest_eigenpair(const LinearOperator& op,
                                  const PrecisionContext& ctx);

}  // namespace rrosc
