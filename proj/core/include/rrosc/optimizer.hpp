#pragma once

#include "rrosc/hamiltonian2d.hpp"
#include "rrosc/precision.hpp"

#include <cstddef>
#include <span>

namespace rrosc {

struct OptimizedBasisResult {
  HamiltonianSpec spec;
  Real alpha_opt;
  Real trace_at_opt;
  /// Number of positive stationary points of the trace.
  std::size_t n_candidates = 0;
};

/// Index of the stationary point with the smallest trace; traces equal to
/// working precision resolve to the smaller root. `roots` are ascending.
std::size_t select_stationary_point(std::span<const Real> roots,
                                    std::span<const Real> traces,
                                    const PrecisionContext& ctx);

/// Chooses the basis parameter that makes Tr H(alpha) stationary. Among
/// several stationary points the one with the smallest trace wins, then the
/// smallest alpha.
OptimizedBasisResult optimize_parameter(const HamiltonianSpec& spec,
                                        const PrecisionContext& ctx);

}  // namespace rrosc
