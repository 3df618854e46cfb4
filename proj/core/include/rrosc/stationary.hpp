#pragma once

#include "rrosc/precision.hpp"

#include <stdexcept>
#include <vector>

namespace rrosc {

struct PowerTerm {
  int exponent = 0;
  Real coefficient;
};

/// f(a) = sum_k c_k a^{e_k} for a > 0 with integer (possibly negative)
/// exponents.
struct SignedPowerForm {
  std::vector<PowerTerm> terms;

  Real evaluate(const Real& a) const;
  Real derivative(const Real& a) const;
};

class NoStationaryPoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StationaryScan {
  double lower = 1e-3;
  double upper = 1e3;
  int points = 240;
};

/// Positive roots of f'(a) = 0, ascending.
///
/// Multiplying f'(a) by a^{1 - min exponent} clears the negative powers and
/// leaves a polynomial with the same positive roots. Sign changes of that
/// polynomial on a geometric grid are bracketed, narrowed by bisection to
/// double accuracy, and polished by Newton's method at working precision.
std::vector<Real> stationary_points_signed_power_form(
    const SignedPowerForm& form, const PrecisionContext& ctx,
    StationaryScan scan = {});

}  // namespace rrosc
