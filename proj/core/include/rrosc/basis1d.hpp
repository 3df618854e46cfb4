#pragma once

#include "rrosc/precision.hpp"
#include "rrosc/symmetric_matrix.hpp"

#include <string_view>

namespace rrosc {

/// One-dimensional even-parity basis families.
///
///   Trigonometric:      phi_n(x) = cos((n + 1/2) pi x / L) / sqrt(L),
///                       x in [-L, L], n = 0..M-1, parameter L (half-width).
///   HarmonicOscillator: phi_n(x) = (W/pi)^{1/4} H_n(sqrt(W) x) e^{-W x^2/2}
///                       / sqrt(2^n n!), quantum numbers n = 0, 2, ..., 2(M-1),
///                       parameter W (frequency).
enum class BasisKind { Trigonometric, HarmonicOscillator };

std::string_view to_string(BasisKind kind);
BasisKind parse_basis_kind(std::string_view text);

struct Basis1DSpec {
  BasisKind kind = BasisKind::HarmonicOscillator;
  int M = 1;
  Real alpha;

  /// Throws std::invalid_argument unless M >= 1 and alpha > 0.
  void validate() const;
};

/// Quantum number of the i-th even-sector function: i for the trigonometric
/// set (every member is even), 2i for the oscillator set.
int quantum_number(BasisKind kind, int index);

/// Power of the basis parameter each operator scales with:
/// trig {-2, +2, +4}, oscillator {+1, -1, -2} for (-d^2/dx^2, x^2, x^4).
int kinetic_scaling(BasisKind kind);
int x2_scaling(BasisKind kind);
int x4_scaling(BasisKind kind);

/// <phi_i| -d^2/dx^2 |phi_j>
///   trig: diag(((n + 1/2) pi / L)^2)
///   HO:   W (2n+1)/2 on the diagonal, -W sqrt((n+1)(n+2))/2 for n' = n+2
SymmetricMatrix kinetic_matrix(const Basis1DSpec& spec, const PrecisionContext& ctx);

/// <phi_i| x^2 |phi_j>
///   trig, with u = x/L, a = (n+1/2) pi, b = (m+1/2) pi:
///     L^2/2 [I2(a-b) + I2(a+b)],  I2(c) = int_{-1}^{1} u^2 cos(cu) du
///     I2(0) = 2/3,  I2(j pi) = 4 (-1)^j / (j pi)^2
///   HO:   (2n+1)/(2W) diagonal, sqrt((n+1)(n+2))/(2W) for n' = n+2
SymmetricMatrix x2_matrix(const Basis1DSpec& spec, const PrecisionContext& ctx);

/// <phi_i| x^4 |phi_j>
///   trig: L^4/2 [I4(a-b) + I4(a+b)],
///     I4(0) = 2/5,  I4(j pi) = (-1)^j (8/(j pi)^2 - 48/(j pi)^4)
///   HO:   (6n^2+6n+3)/(4W^2) diagonal,
///         (4n+6) sqrt((n+1)(n+2))/(4W^2) for n' = n+2,
///         sqrt((n+1)(n+2)(n+3)(n+4))/(4W^2) for n' = n+4
SymmetricMatrix x4_matrix(const Basis1DSpec& spec, const PrecisionContext& ctx);

}  // namespace rrosc
