#include "rrosc/stationary.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

namespace rrosc {

Real SignedPowerForm::evaluate(const Real& a) const {
  Real sum = a;
  sum = 0;
  for (const PowerTerm& t : terms) sum += t.coefficient * pow(a, t.exponent);
  return sum;
}

Real SignedPowerForm::derivative(const Real& a) const {
  Real sum = a;
  sum = 0;
  for (const PowerTerm& t : terms) {
    if (t.exponent == 0) continue;
    sum += t.exponent * t.coefficient * pow(a, t.exponent - 1);
  }
  return sum;
}

namespace {

// P(a) = a^{1 - kmin} f'(a) as dense coefficients in ascending powers.
struct ClearedDerivative {
  std::vector<Real> coeffs;

  Real value(const Real& a) const {
    Real acc = a;
    acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * a + *it;
    return acc;
  }
  Real slope(const Real& a) const {
    Real acc = a;
    acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 1;) acc = acc * a + k * coeffs[k];
    return acc;
  }
};

int sign_of(const Real& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

Real polish(const ClearedDerivative& p, Real lo, Real hi,
            const PrecisionContext& ctx) {
  const Real eps = ctx.working_epsilon();
  int sign_lo = sign_of(p.value(lo));
  Real mid = lo;
  // Bisect to roughly double accuracy; Newton converges quadratically from
  // there.
  for (int i = 0; i < 200 && (hi - lo) > 1e-15 * hi; ++i) {
    mid = (lo + hi) / 2;
    const int s = sign_of(p.value(mid));
    if (s == 0) return mid;
    if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Real x = (lo + hi) / 2;
  const Real lo_guard = lo - (hi - lo), hi_guard = hi + (hi - lo);
  for (int i = 0; i < 100; ++i) {
    const Real slope = p.slope(x);
    if (slope == 0) break;
    const Real step = p.value(x) / slope;
    x -= step;
    if (x < lo_guard || x > hi_guard) break;
    if (abs(step) <= eps * abs(x)) return x;
  }
  // Newton misbehaved; fall back to bisection at full precision.
  for (int i = 0; i < 4 * ctx.working_digits() + 64 && (hi - lo) > eps * hi; ++i) {
    mid = (lo + hi) / 2;
    const int s = sign_of(p.value(mid));
    if (s == 0) return mid;
    if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace

std::vector<Real> stationary_points_signed_power_form(const SignedPowerForm& form,
                                                      const PrecisionContext& ctx,
                                                      StationaryScan scan) {
  PrecisionScope scope(ctx);
  if (scan.points < 2 || !(scan.lower > 0) || !(scan.upper > scan.lower)) {
    throw std::invalid_argument("invalid stationary-point scan range");
  }
  bool any_nonzero = false, has_negative = false, has_positive = false;
  int kmin = INT_MAX, kmax = INT_MIN;
  for (const PowerTerm& t : form.terms) {
    if (t.coefficient == 0 || t.exponent == 0) {
      any_nonzero = any_nonzero || t.coefficient != 0;
      continue;
    }
    any_nonzero = true;
    has_negative = has_negative || t.exponent < 0;
    has_positive = has_positive || t.exponent > 0;
    kmin = std::min(kmin, t.exponent);
    kmax = std::max(kmax, t.exponent);
  }
  if (!any_nonzero) throw std::invalid_argument("degenerate form: all coefficients zero");
  if (!has_negative || !has_positive) {
    throw NoStationaryPoint(
        "no stationary point: form needs both negative and positive powers");
  }

  ClearedDerivative p;
  p.coeffs.assign(static_cast<std::size_t>(kmax - kmin + 1), ctx.real(0L));
  for (const PowerTerm& t : form.terms) {
    if (t.exponent == 0 || t.coefficient == 0) continue;
    p.coeffs[static_cast<std::size_t>(t.exponent - kmin)] +=
        t.exponent * ctx.real(t.coefficient);
  }

  const Real lower = ctx.real(Real(scan.lower));
  const Real ratio = pow(ctx.real(Real(scan.upper)) / lower,
                         ctx.real(1L) / (scan.points - 1));
  std::vector<Real> grid;
  grid.reserve(static_cast<std::size_t>(scan.points));
  grid.push_back(lower);
  for (int i = 1; i < scan.points; ++i) grid.push_back(grid.back() * ratio);

  std::vector<Real> roots;
  Real prev_value = p.value(grid[0]);
  if (prev_value == 0) roots.push_back(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const Real value = p.value(grid[i]);
    if (value == 0) {
      roots.push_back(grid[i]);
    } else if (prev_value != 0 && sign_of(value) != sign_of(prev_value)) {
      roots.push_back(polish(p, grid[i - 1], grid[i], ctx));
    }
    prev_value = value;
  }
  if (roots.empty()) throw NoStationaryPoint("no stationary point");
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace rrosc
