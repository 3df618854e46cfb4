// Command-line driver: convergence studies, reference tables, plot scripts and
// raw matrix dumps.

#include "rrosc/hamiltonian2d.hpp"
#include "rrosc/report.hpp"
#include "rrosc/study.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace rrosc;

constexpr int kConfigError = 1;
constexpr int kPartialFailure = 2;

std::vector<HamiltonianForm> expand_forms(const std::string& s) {
  if (s == "both") return {HamiltonianForm::Original, HamiltonianForm::Rotated};
  return {parse_form(s)};
}

std::vector<BasisKind> expand_bases(const std::string& s) {
  if (s == "both") return {BasisKind::Trigonometric, BasisKind::HarmonicOscillator};
  return {parse_basis_kind(s)};
}

std::vector<Method> expand_methods(const std::string& s) {
  if (s == "both") return {Method::RayleighRitz, Method::Collocation};
  return {parse_method(s)};
}

// Accepts plain sizes ("10") and inclusive ranges "start:stop:step".
std::vector<int> expand_m_values(const std::vector<std::string>& items) {
  std::vector<int> out;
  for (const std::string& item : items) {
    const auto first = item.find(':');
    if (first == std::string::npos) {
      out.push_back(std::stoi(item));
      continue;
    }
    const auto second = item.find(':', first + 1);
    const int start = std::stoi(item.substr(0, first));
    const int stop = std::stoi(item.substr(first + 1, second - first - 1));
    const int step = second == std::string::npos ? 1 : std::stoi(item.substr(second + 1));
    if (step <= 0 || stop < start) throw std::invalid_argument("bad M range '" + item + "'");
    for (int m = start; m <= stop; m += step) out.push_back(m);
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const std::string& s : items) out.push_back(parse_rational(s));
  return out;
}

struct StudyArgs {
  std::vector<std::string> lambdas{"10"};
  std::string form = "both";
  std::string basis = "both";
  std::vector<std::string> m_list{"5:35:5"};
  int digits = 30;
  int guard = kDefaultGuardDigits;
  std::string method = "rr";
  std::vector<std::string> coll_scales{"1"};
  std::string out = "table";
  std::string plot_prefix;
  std::string reference = "paper";
};

struct DumpArgs {
  std::string lambda = "10";
  std::string form = "rotated";
  std::string basis = "ho";
  int m = 2;
  std::string alpha = "1";
  int digits = 30;
};

int run_study_command(const StudyArgs& a) {
  StudyConfig config;
  config.lambdas = parse_rationals(a.lambdas);
  config.forms = expand_forms(a.form);
  config.bases = expand_bases(a.basis);
  config.m_values = expand_m_values(a.m_list);
  config.methods = expand_methods(a.method);
  config.collocation_l_scales = parse_rationals(a.coll_scales);
  config.target_digits = a.digits;
  config.guard_digits = a.guard;
  if (a.reference == "paper") {
    config.references = paper_references();
  } else {
    for (const Rational& l : config.lambdas) {
      config.references[rational_to_string(l)] = self_computed_reference(l);
    }
  }
  config.validate();

  const std::vector<ConvergenceRecord> records = run_study(config);
  std::cout << emit_table(records, parse_table_style(a.out));

  if (!a.plot_prefix.empty()) {
    const std::string image = a.plot_prefix + ".png";
    const FigureScript fig = emit_figure_script(records, image);
    std::ofstream(a.plot_prefix + ".gp") << fig.script;
    std::ofstream(a.plot_prefix + ".csv") << fig.csv;
    for (const std::string& w : fig.warnings) std::cerr << "warning: " << w << '\n';
  }

  bool failed = false;
  for (const ConvergenceRecord& r : records) {
    if (!r.ok()) {
      failed = true;
      std::cerr << "row failed: " << to_string(r.form) << ' ' << to_string(r.basis)
                << " lambda=" << rational_to_string(r.lambda) << " M=" << r.M << ": "
                << r.error << '\n';
    }
  }
  return failed ? kPartialFailure : 0;
}

int run_dump_command(const DumpArgs& a) {
  const PrecisionContext ctx(a.digits, a.digits < 26 ? PrecisionContext::kMinGuardDigits
                                                      : kDefaultGuardDigits);
  const HamiltonianSpec spec{parse_rational(a.lambda), parse_form(a.form),
                             parse_basis_kind(a.basis), a.m};
  const Real alpha = ctx.parse(a.alpha);
  if (!(alpha > 0)) throw std::invalid_argument("--alpha must be > 0");
  write_matrix_dump(std::cout, assemble(spec, alpha, ctx), ctx);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimized Rayleigh-Ritz ground energies of coupled anharmonic oscillators"};
  app.set_config("--config", "", "Flat key=value file; command-line flags take precedence");

  StudyArgs study;
  app.add_option("--lambda", study.lambdas, "Coupling constants (decimal)")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--form", study.form, "Hamiltonian form")
      ->check(CLI::IsMember({"original", "rotated", "both"}))
      ->capture_default_str();
  app.add_option("--basis", study.basis, "Basis family")
      ->check(CLI::IsMember({"trig", "ho", "both"}))
      ->capture_default_str();
  app.add_option("--m-list", study.m_list, "Basis sizes per axis, e.g. 5,10 or 5:35:5")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--digits", study.digits, "Target significant digits")
      ->envname("RROSC_DIGITS")
      ->capture_default_str();
  app.add_option("--guard-digits", study.guard, "Extra working digits")->capture_default_str();
  app.add_option("--method", study.method, "Solver")
      ->check(CLI::IsMember({"rr", "collocation", "both"}))
      ->capture_default_str();
  app.add_option("--coll-l-scale", study.coll_scales,
                 "Collocation runs at L = scale * L_opt for each scale")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--out", study.out, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--emit-plot", study.plot_prefix,
                 "Write <prefix>.gp and <prefix>.csv for a precision-vs-CPU plot");
  app.add_option("--reference", study.reference, "Reference energies")
      ->check(CLI::IsMember({"paper", "self"}))
      ->capture_default_str();

  DumpArgs dump;
  CLI::App* dump_cmd = app.add_subcommand("dump-matrix", "Print the upper triangle of H");
  dump_cmd->add_option("--lambda", dump.lambda)->capture_default_str();
  dump_cmd->add_option("--form", dump.form)
      ->check(CLI::IsMember({"original", "rotated"}))
      ->capture_default_str();
  dump_cmd->add_option("--basis", dump.basis)
      ->check(CLI::IsMember({"trig", "ho"}))
      ->capture_default_str();
  dump_cmd->add_option("--m", dump.m)->check(CLI::PositiveNumber)->capture_default_str();
  dump_cmd->add_option("--alpha", dump.alpha, "Basis parameter L or W")->required();
  dump_cmd->add_option("--digits", dump.digits)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (dump_cmd->parsed()) return run_dump_command(dump);
    return run_study_command(study);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPartialFailure;
  }
}
