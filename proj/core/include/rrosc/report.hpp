#pragma once

#include "rrosc/study.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rrosc {

enum class TableStyle { PaperTable, Csv, Json };

TableStyle parse_table_style(std::string_view text);

/// CSV and JSON columns, in order.
inline constexpr std::string_view kRecordColumns[] = {
    "form",   "basis",          "lambda",      "M",     "alpha_opt",
    "energy", "correct_digits", "cpu_seconds", "method"};

/// Renders records. The side-by-side layout puts both Hamiltonian forms side by
/// side per (method, basis, lambda, M) row, shows alpha_opt to 4 significant
/// digits, and brackets the energy digits that agree with the reference.
/// CSV/JSON carry the full decimal strings. Throws on empty input.
std::string emit_table(std::span<const ConvergenceRecord> records, TableStyle style);

/// Inverse of the CSV emitter; used for round-trip checks and to re-plot
/// saved studies.
std::vector<ConvergenceRecord> parse_csv(std::string_view text);

struct FigureScript {
  std::string script;  // gnuplot, self-contained (inline data blocks)
  std::string csv;     // method,basis,form,lambda,M,cpu_seconds,abs_error
  std::vector<std::string> warnings;
  std::size_t series = 0;
};

/// Log-log precision-vs-CPU-time plot, one series per (method, basis, form).
/// Failed rows are skipped. Records without a reference are left out with a
/// warning; any other record without a CPU time is an error.
FigureScript emit_figure_script(std::span<const ConvergenceRecord> records,
                                std::string_view image_name = "precision_vs_cpu.png");

}  // namespace rrosc
