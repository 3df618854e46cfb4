#pragma once

#include "rrosc/basis1d.hpp"
#include "rrosc/hamiltonian2d.hpp"
#include "rrosc/precision.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rrosc {

enum class Method { RayleighRitz, Collocation };

std::string_view to_string(Method method);
Method parse_method(std::string_view text);

enum class Provenance { Paper, SelfComputed };

std::string_view to_string(Provenance provenance);

struct ReferenceEnergy {
  std::string value;  // decimal literal
  Provenance provenance = Provenance::Paper;
  /// Leading significant digits believed exact; caps correct_digits.
  int trusted_digits = 0;
};

/// Keyed by rational_to_string(lambda).
using ReferenceTable = std::map<std::string, ReferenceEnergy>;

/// Best published ground-state energies (rotated form, 35 oscillator
/// functions) for lambda in {5, 10, 100, 1000, 10000}, trusted to the digits
/// that agree with the converged value.
ReferenceTable paper_references();

/// Reference from this solver: rotated form, oscillator basis, M = m_high at
/// target_digits. Trusted digits are the leading digits shared with the
/// M = m_high - 5 result.
ReferenceEnergy self_computed_reference(const Rational& lambda, int target_digits = 40,
                                        int m_high = 50);

struct StudyConfig {
  std::vector<Rational> lambdas;
  std::vector<HamiltonianForm> forms;
  std::vector<BasisKind> bases;
  std::vector<int> m_values;
  std::vector<Method> methods{Method::RayleighRitz};
  /// Collocation rows are run at L = scale * L_opt(RR) for each scale.
  std::vector<Rational> collocation_l_scales{1};
  int target_digits = 30;
  int guard_digits = kDefaultGuardDigits;
  ReferenceTable references;

  /// Throws std::invalid_argument on empty lists or invalid entries.
  void validate() const;
};

struct ConvergenceRecord {
  Method method = Method::RayleighRitz;
  HamiltonianForm form = HamiltonianForm::Original;
  BasisKind basis = BasisKind::HarmonicOscillator;
  Rational lambda = 0;
  int M = 0;
  std::string alpha_opt;  // basis parameter used, target_digits significant digits
  std::string energy;     // target_digits significant digits
  std::optional<int> correct_digits;
  std::optional<double> cpu_seconds;
  /// |energy - reference| in scientific notation, floored at the reference's
  /// trusted resolution.
  std::optional<std::string> abs_error;
  std::size_t n_candidates = 0;
  std::string error;  // non-empty when the row failed

  bool ok() const { return error.empty(); }
};

/// Leading significant digits of `value` that coincide with the reference
/// (both truncated, not rounded), capped at the reference's trusted digits.
int count_correct_digits(const Real& value, const ReferenceEnergy& reference,
                         const PrecisionContext& ctx);

/// Runs every (form, basis, lambda, M, method) combination: optimise the basis
/// parameter, assemble, solve, and time that pipeline on the process CPU
/// clock. Collocation rows exist only for the trigonometric basis and use the
/// Rayleigh-Ritz optimal L times each collocation scale. Failures are
/// recorded per row. Output is sorted by form, basis, lambda, M, method.
std::vector<ConvergenceRecord> run_study(const StudyConfig& config);

}  // namespace rrosc
