#pragma once

#include "rrosc/basis1d.hpp"
#include "rrosc/eigensolver.hpp"
#include "rrosc/precision.hpp"
#include "rrosc/stationary.hpp"
#include "rrosc/symmetric_matrix.hpp"

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace rrosc {

/// Original:  H = -d2x - d2y + x^2 + y^2 + lambda x^2 y^2
/// Rotated:   H = -d2x - d2y + x^2 + y^2 + (lambda/4)(x^2 - y^2)^2
/// The two are related by a pi/4 rotation and share a spectrum.
enum class HamiltonianForm { Original, Rotated };

std::string_view to_string(HamiltonianForm form);
HamiltonianForm parse_form(std::string_view text);

struct HamiltonianSpec {
  Rational lambda = 0;
  HamiltonianForm form = HamiltonianForm::Original;
  BasisKind basis = BasisKind::HarmonicOscillator;
  int M = 1;

  void validate() const;
  std::size_t dimension() const { return static_cast<std::size_t>(M) * M; }
};

/// Tr H(alpha) as an explicit power series in the basis parameter.
using TraceForm = SignedPowerForm;

/// Dense M^2 x M^2 Rayleigh-Ritz matrix. Basis state (n, m) = phi_n(x) phi_m(y)
/// sits at flat index n * M + m. Both forms are built as
///   H = A (x) I + I (x) A + c X2 (x) X2
/// with A = T + X2, c = lambda (Original) and A = T + X2 + (lambda/4) X4,
/// c = -lambda/2 (Rotated, from the expansion x^4 - 2 x^2 y^2 + y^4).
SymmetricMatrix assemble(const HamiltonianSpec& spec, const Real& alpha,
                         const PrecisionContext& ctx);

/// Closed-form trace from the 1D diagonal sums t = sum T_nn, s2 = sum X2_nn,
/// s4 = sum X4_nn at unit parameter:
///   Original: 2M t a^{k_T} + 2M s2 a^{k_2} + lambda s2^2 a^{2 k_2}
///   Rotated:  2M t a^{k_T} + 2M s2 a^{k_2} + (lambda/4)(2M s4 - 2 s2^2) a^{k_4}
TraceForm trace_form(const HamiltonianSpec& spec, const PrecisionContext& ctx);

/// Matrix-free form of assemble(): applies H to a flat vector in O(M^3) by
/// treating it as an M x M array V, H v = A V + V A + c X2 V X2.
class KroneckerHamiltonian {
 public:
  KroneckerHamiltonian(const HamiltonianSpec& spec, const Real& alpha,
                       const PrecisionContext& ctx);

  std::size_t dimension() const { return M_ * M_; }
  void apply(std::span<const Real> in, std::span<Real> out) const;
  /// Row-major double rounding of the full matrix.
  std::vector<double> dense_double() const;
  LinearOperator as_operator() const;

 private:
  struct SparseRows {
    // Row i lists (column, value) for nonzero entries.
    std::vector<std::vector<std::pair<std::size_t, Real>>> rows;
  };
  static SparseRows sparse(const SymmetricMatrix& m);

  std::size_t M_;
  SparseRows a_;
  SparseRows x2_;
  Real coupling_;
  std::vector<double> a_d_, x2_d_;
  double coupling_d_;
  PrecisionContext ctx_;
};

/// Lowest Rayleigh-Ritz eigenvalue at the given basis parameter.
Real ground_energy(const HamiltonianSpec& spec, const Real& alpha,
                   const PrecisionContext& ctx);

/// Plain-text dump of the upper triangle (i <= j), one "i j value" line per
/// entry with values in scientific notation at working precision.
void write_matrix_dump(std::ostream& os, const SymmetricMatrix& m,
                       const PrecisionContext& ctx);

}  // namespace rrosc
