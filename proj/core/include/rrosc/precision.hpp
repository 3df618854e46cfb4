#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>

namespace rrosc {

/// Arbitrary-precision real. Precision is carried per value; results of
/// arithmetic take the widest operand precision, so every input entering a
/// computation is widened through PrecisionContext::real().
using Real = boost::multiprecision::mpfr_float;
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline constexpr int kDefaultGuardDigits = 15;

/// Requested result accuracy plus guard digits. All scalar arithmetic inside
/// an operation runs at working_digits() = target + guard.
class PrecisionContext {
 public:
  static constexpr int kMinTargetDigits = 16;
  static constexpr int kMinGuardDigits = 10;
  static constexpr int kMaxWorkingDigits = 5000;

  explicit PrecisionContext(int target_digits,
                            int guard_digits = kDefaultGuardDigits);

  int target_digits() const noexcept { return target_digits_; }
  int guard_digits() const noexcept { return guard_digits_; }
  int working_digits() const noexcept { return target_digits_ + guard_digits_; }

  Real real(const Real& x) const;
  Real real(const Rational& q) const;
  Real real(long value) const;
  /// Parses a decimal literal ("3.0191777", "1e-30") at working precision.
  Real parse(std::string_view text) const;

  Real pi() const;
  /// 10^-target_digits
  Real target_epsilon() const;
  /// 10^-working_digits
  Real working_epsilon() const;

  bool operator==(const PrecisionContext&) const = default;

 private:
  int target_digits_;
  int guard_digits_;
};

PrecisionContext make_precision_context(int target_digits, int guard_digits);

/// Installs the context's working precision as the process-wide default for
/// freshly constructed Reals and restores the previous value on exit.
/// The default is a process global in Boost.Multiprecision, so concurrent
/// scopes must agree on the precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(const PrecisionContext& ctx);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned previous_;
};

/// Scientific notation with `significant` digits, e.g. "3.0191777147e+00".
std::string to_scientific(const Real& x, int significant);
/// Plain positional notation rounded to `significant` significant digits,
/// e.g. "3.0191777147"; used for energies and parameters in reports.
std::string to_fixed_significant(const Real& x, int significant);

/// Exact parse of a decimal literal ("10", "2.5", "-0.125") into a rational.
Rational parse_rational(std::string_view text);
/// Shortest exact decimal rendering of a rational whose denominator divides a
/// power of ten; other rationals render as "p/q".
std::string rational_to_string(const Rational& q);

}  // namespace rrosc
