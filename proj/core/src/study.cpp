#include "rrosc/study.hpp"

#include "rrosc/collocation.hpp"
#include "rrosc/detail/mpfr_kernels.hpp"
#include "rrosc/optimizer.hpp"

#include <algorithm>
#include <ctime>
#include <stdexcept>
#include <tuple>

namespace rrosc {

std::string_view to_string(Method method) {
  return method == Method::RayleighRitz ? "rr" : "collocation";
}

Method parse_method(std::string_view text) {
  if (text == "rr") return Method::RayleighRitz;
  if (text == "collocation" || text == "coll") return Method::Collocation;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

std::string_view to_string(Provenance provenance) {
  return provenance == Provenance::Paper ? "paper" : "self-computed";
}

ReferenceTable paper_references() {
  return {
      {"5", {"2.65390977795321535349056980617", Provenance::Paper, 29}},
      {"10", {"3.01917771477196738691167893635", Provenance::Paper, 25}},
      {"100", {"5.46097039792335524182772613188", Provenance::Paper, 18}},
      {"1000", {"11.2324392672098516856244029369", Provenance::Paper, 17}},
      {"10000", {"23.9459896278189396640103254023", Provenance::Paper, 16}},
  };
}

namespace {

double process_cpu_seconds() {
  timespec ts{};
  clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

// Sign, decimal exponent and significant digits rounded to `count`.
struct Digits {
  bool negative = false;
  long exponent = 0;
  std::string digits;
};

Digits decimal_digits(const Real& x, int count) {
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(count),
                           detail::raw(x), MPFR_RNDN);
  Digits d;
  d.digits = raw;
  mpfr_free_str(raw);
  if (!d.digits.empty() && d.digits[0] == '-') {
    d.negative = true;
    d.digits.erase(0, 1);
  }
  d.exponent = static_cast<long>(exp);
  return d;
}

Real row_energy(Method method, const HamiltonianSpec& spec, const Real& alpha,
                const PrecisionContext& ctx) {
  if (method == Method::RayleighRitz) return ground_energy(spec, alpha, ctx);
  return collocation_ground_energy(spec, alpha, ctx);
}

}  // namespace

int count_correct_digits(const Real& value, const ReferenceEnergy& reference,
                         const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real ref = ctx.parse(reference.value);
  const int trusted = std::max(reference.trusted_digits, 1);
  if (value == 0 || ref == 0) return 0;
  // Round at target precision first so binary noise such as 3.0199999...
  // for 3.02 does not leak into the truncated comparison.
  const int shown = std::max(trusted + 2, ctx.target_digits());
  const Digits a = decimal_digits(value, shown);
  const Digits b = decimal_digits(ref, shown);
  if (a.negative != b.negative || a.exponent != b.exponent) return 0;
  int same = 0;
  while (same < trusted && a.digits[static_cast<size_t>(same)] ==
                               b.digits[static_cast<size_t>(same)]) {
    ++same;
  }
  return same;
}

ReferenceEnergy self_computed_reference(const Rational& lambda, int target_digits,
                                        int m_high) {
  const PrecisionContext ctx(target_digits);
  PrecisionScope scope(ctx);
  auto energy_at = [&](int M) {
    const HamiltonianSpec spec{lambda, HamiltonianForm::Rotated,
                               BasisKind::HarmonicOscillator, M};
    return ground_energy(spec, optimize_parameter(spec, ctx).alpha_opt, ctx);
  };
  const Real high = energy_at(m_high);
  const Real low = energy_at(std::max(1, m_high - 5));
  ReferenceEnergy ref{to_fixed_significant(high, target_digits),
                      Provenance::SelfComputed, target_digits};
  ref.trusted_digits = count_correct_digits(low, ref, ctx);
  return ref;
}

void StudyConfig::validate() const {
  if (lambdas.empty() || forms.empty() || bases.empty() || m_values.empty() ||
      methods.empty()) {
    throw std::invalid_argument("study configuration has an empty list");
  }
  for (const Rational& l : lambdas) {
    if (l < 0) throw std::invalid_argument("coupling lambda must be >= 0");
  }
  for (int m : m_values) {
    if (m < 1) throw std::invalid_argument("basis sizes must be >= 1");
  }
  if (collocation_l_scales.empty()) {
    throw std::invalid_argument("study configuration has an empty list");
  }
  for (const Rational& s : collocation_l_scales) {
    if (s <= 0) throw std::invalid_argument("collocation L scales must be > 0");
  }
  PrecisionContext(target_digits, guard_digits);  // range checks
  for (const auto& [key, ref] : references) {
    if (ref.value.empty()) throw std::invalid_argument("empty reference for lambda " + key);
  }
}

namespace {

ConvergenceRecord run_row(Method method, HamiltonianForm form, BasisKind basis,
                          const Rational& lambda, int M, const Rational& scale,
                          const ReferenceEnergy* ref, const PrecisionContext& ctx) {
  ConvergenceRecord rec;
  rec.method = method;
  rec.form = form;
  rec.basis = basis;
  rec.lambda = lambda;
  rec.M = M;
  const HamiltonianSpec spec{lambda, form, basis, M};
  const int shown = method == Method::Collocation
                        ? std::min(ctx.target_digits(), collocation_context().target_digits())
                        : ctx.target_digits();
  try {
    const double start = process_cpu_seconds();
    const OptimizedBasisResult opt = optimize_parameter(spec, ctx);
    const Real alpha = opt.alpha_opt * ctx.real(scale);
    const Real energy = row_energy(method, spec, alpha, ctx);
    rec.cpu_seconds = process_cpu_seconds() - start;
    rec.alpha_opt = to_fixed_significant(alpha, ctx.target_digits());
    rec.n_candidates = opt.n_candidates;
    rec.energy = to_fixed_significant(energy, shown);
    if (ref != nullptr) {
      rec.correct_digits = count_correct_digits(energy, *ref, ctx);
      const Real exact = ctx.parse(ref->value);
      const Real floor = abs(exact) * pow(ctx.real(10L), -ref->trusted_digits);
      Real err = abs(energy - exact);
      if (err < floor) err = floor;
      rec.abs_error = to_scientific(err, 6);
    }
  } catch (const std::exception& e) {
    rec.error = e.what();
    if (rec.error.empty()) rec.error = "unknown failure";
  }
  return rec;
}

}  // namespace

std::vector<ConvergenceRecord> run_study(const StudyConfig& config) {
  config.validate();
  const PrecisionContext ctx(config.target_digits, config.guard_digits);
  PrecisionScope scope(ctx);

  std::vector<ConvergenceRecord> records;
  for (HamiltonianForm form : config.forms) {
    for (BasisKind basis : config.bases) {
      for (const Rational& lambda : config.lambdas) {
        const auto ref_it = config.references.find(rational_to_string(lambda));
        for (int M : config.m_values) {
          for (Method method : config.methods) {
            if (method == Method::Collocation && basis != BasisKind::Trigonometric) {
              continue;
            }
            const std::vector<Rational> unit_scale{1};
            const auto& scales =
                method == Method::Collocation ? config.collocation_l_scales : unit_scale;
            for (const Rational& scale : scales) {
              records.push_back(run_row(method, form, basis, lambda, M, scale,
                                        ref_it == config.references.end()
                                            ? nullptr
                                            : &ref_it->second,
                                        ctx));
            }
          }
        }
      }
    }
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const ConvergenceRecord& a, const ConvergenceRecord& b) {
                     return std::tie(a.form, a.basis, a.lambda, a.M, a.method) <
                            std::tie(b.form, b.basis, b.lambda, b.M, b.method);
                   });
  return records;
}

}  // namespace rrosc
