#include "rrosc/precision.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace rrosc {

PrecisionContext::PrecisionContext(int target_digits, int guard_digits)
    : target_digits_(target_digits), guard_digits_(guard_digits) {
  if (target_digits < kMinTargetDigits) {
    throw std::invalid_argument("target_digits below minimum of " +
                                std::to_string(kMinTargetDigits) + ": " +
                                std::to_string(target_digits));
  }
  if (guard_digits < kMinGuardDigits) {
    throw std::invalid_argument("guard_digits below minimum of " +
                                std::to_string(kMinGuardDigits) + ": " +
                                std::to_string(guard_digits));
  }
  if (target_digits + guard_digits > kMaxWorkingDigits) {
    throw std::invalid_argument("working precision exceeds " +
                                std::to_string(kMaxWorkingDigits) + " digits");
  }
}

PrecisionContext make_precision_context(int target_digits, int guard_digits) {
  return PrecisionContext(target_digits, guard_digits);
}

Real PrecisionContext::real(const Real& x) const {
  return Real(x, static_cast<unsigned>(working_digits()));
}

Real PrecisionContext::real(const Rational& q) const {
  Real r(0, static_cast<unsigned>(working_digits()));
  mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
  return r;
}

Real PrecisionContext::real(long value) const {
  Real r(0, static_cast<unsigned>(working_digits()));
  mpfr_set_si(r.backend().data(), value, MPFR_RNDN);
  return r;
}

Real PrecisionContext::parse(std::string_view text) const {
  Real r(0, static_cast<unsigned>(working_digits()));
  const std::string s(text);
  char* end = nullptr;
  if (!s.empty()) {
    mpfr_strtofr(r.backend().data(), s.c_str(), &end, 10, MPFR_RNDN);
  }
  if (end == nullptr || *end != '\0' || end == s.c_str()) {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  return r;
}

Real PrecisionContext::pi() const {
  Real r(0, static_cast<unsigned>(working_digits()));
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real PrecisionContext::target_epsilon() const {
  Real r = real(10);
  return pow(r, -target_digits_);
}

Real PrecisionContext::working_epsilon() const {
  Real r = real(10);
  return pow(r, -working_digits());
}

PrecisionScope::PrecisionScope(const PrecisionContext& ctx)
    : previous_(Real::default_precision()) {
  Real::default_precision(static_cast<unsigned>(ctx.working_digits()));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(previous_); }

namespace {

// Significant digits and decimal exponent: value = 0.d1d2d3... * 10^exp.
std::pair<std::string, long> decimal_digits(const Real& x, int significant) {
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(significant),
                           x.backend().data(), MPFR_RNDN);
  if (raw == nullptr) throw std::runtime_error("mpfr_get_str failed");
  std::string digits(raw);
  mpfr_free_str(raw);
  return {digits, static_cast<long>(exp)};
}

}  // namespace

std::string to_scientific(const Real& x, int significant) {
  if (significant < 1) significant = 1;
  if (!isfinite(x)) return isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  if (x == 0) {
    return significant > 1 ? "0." + std::string(significant - 1, '0') + "e+00"
                           : "0e+00";
  }
  auto [digits, exp] = decimal_digits(x, significant);
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  std::string mantissa = digits.substr(0, 1);
  if (digits.size() > 1) mantissa += "." + digits.substr(1);
  const long e = exp - 1;
  std::string es = std::to_string(e < 0 ? -e : e);
  if (es.size() < 2) es = "0" + es;
  return sign + mantissa + "e" + (e < 0 ? "-" : "+") + es;
}

std::string to_fixed_significant(const Real& x, int significant) {
  if (significant < 1) significant = 1;
  if (!isfinite(x)) return isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  if (x == 0) return "0";
  auto [digits, exp] = decimal_digits(x, significant);
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  std::string out;
  if (exp <= 0) {
    out = "0." + std::string(static_cast<size_t>(-exp), '0') + digits;
  } else if (static_cast<size_t>(exp) >= digits.size()) {
    out = digits + std::string(static_cast<size_t>(exp) - digits.size(), '0');
  } else {
    out = digits.substr(0, static_cast<size_t>(exp)) + "." +
          digits.substr(static_cast<size_t>(exp));
  }
  return sign + out;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string int_part, frac_part;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    int_part += s[pos++];
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      frac_part += s[pos++];
  }
  long exponent = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    size_t used = 0;
    try {
      exponent = std::stol(s.substr(pos), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0) throw std::invalid_argument("bad exponent in '" + s + "'");
    pos += used;
  }
  if (pos != s.size() || (int_part.empty() && frac_part.empty())) {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  std::string digits = int_part + frac_part;
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  Integer numerator(digits);
  exponent -= static_cast<long>(frac_part.size());
  Integer scale = 1;
  for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) scale *= 10;
  Rational q = exponent >= 0 ? Rational(numerator * scale)
                             : Rational(numerator, scale);
  return negative ? Rational(-q) : q;
}

std::string rational_to_string(const Rational& q) {
  Integer num = numerator(q);
  Integer den = denominator(q);
  if (den == 1) return num.str();
  Integer d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return num.str() + "/" + den.str();
  const int places = std::max(twos, fives);
  Integer scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  Integer scaled = num * (scale / den);
  const bool negative = scaled < 0;
  std::string digits = (negative ? Integer(-scaled) : scaled).str();
  if (digits.size() <= static_cast<size_t>(places)) {
    digits = std::string(places + 1 - digits.size(), '0') + digits;
  }
  std::string out = digits.substr(0, digits.size() - places) + "." +
                    digits.substr(digits.size() - places);
  return negative ? "-" + out : out;
}

}  // namespace rrosc
