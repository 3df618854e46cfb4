#include "rrosc/optimizer.hpp"

#include <stdexcept>

namespace rrosc {

std::size_t select_stationary_point(std::span<const Real> roots,
                                    std::span<const Real> traces,
                                    const PrecisionContext& ctx) {
  if (roots.empty() || roots.size() != traces.size()) {
    throw std::invalid_argument("stationary points and traces must match");
  }
  PrecisionScope scope(ctx);
  const Real tie = ctx.working_epsilon();
  std::size_t best = 0;
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (traces[i] < traces[best] - tie * abs(traces[best])) best = i;
  }
  return best;
}

OptimizedBasisResult optimize_parameter(const HamiltonianSpec& spec,
                                        const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const TraceForm form = trace_form(spec, ctx);
  const std::vector<Real> roots = stationary_points_signed_power_form(form, ctx);
  std::vector<Real> traces;
  traces.reserve(roots.size());
  for (const Real& r : roots) traces.push_back(form.evaluate(r));
  const std::size_t best = select_stationary_point(roots, traces, ctx);
  return {spec, roots[best], traces[best], roots.size()};
}

}  // namespace rrosc
