#include "rrosc/report.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace rrosc {

TableStyle parse_table_style(std::string_view text) {
  if (text == "table") return TableStyle::PaperTable;
  if (text == "csv") return TableStyle::Csv;
  if (text == "json") return TableStyle::Json;
  throw std::invalid_argument("unknown output style '" + std::string(text) + "'");
}

namespace {

std::string format_cpu(double seconds) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", seconds);
  return buf;
}

std::string four_digits(const std::string& decimal) {
  if (decimal.empty()) return "-";
  const PrecisionContext ctx(16);
  return to_fixed_significant(ctx.parse(decimal), 4);
}

// Wraps the first `count` significant digits in brackets: 3.01970464 with 4
// becomes [3.019]70464.
std::string mark_digits(const std::string& energy, int count) {
  if (count <= 0) return energy;
  std::string out;
  int seen = 0;
  bool started = false, closed = false;
  for (char ch : energy) {
    const bool digit = std::isdigit(static_cast<unsigned char>(ch)) != 0;
    if (!started && digit && ch != '0') {
      started = true;
      out += '[';
    }
    out += ch;
    if (started && digit && !closed && ++seen == count) {
      out += ']';
      closed = true;
    }
  }
  if (started && !closed) out += ']';
  return out;
}

std::string label(const ConvergenceRecord& r) {
  if (r.method == Method::Collocation) return "COLL";
  return r.basis == BasisKind::Trigonometric ? "TRIG" : "HO";
}

std::string form_tag(HamiltonianForm f) {
  return f == HamiltonianForm::Original ? "1" : "2";
}

std::string paper_table(std::span<const ConvergenceRecord> records) {
  using GroupKey = std::tuple<Method, BasisKind>;
  // The third key separates repeated (lambda, M) rows, e.g. collocation at
  // several L.
  using RowKey = std::tuple<Rational, int, int>;
  std::map<GroupKey, std::map<RowKey, std::array<const ConvergenceRecord*, 2>>> groups;
  std::map<std::tuple<Method, BasisKind, Rational, int, HamiltonianForm>, int> seen;
  for (const ConvergenceRecord& r : records) {
    const int repeat = seen[{r.method, r.basis, r.lambda, r.M, r.form}]++;
    auto& slot = groups[{r.method, r.basis}][{r.lambda, r.M, repeat}];
    slot[r.form == HamiltonianForm::Original ? 0 : 1] = &r;
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, rows] : groups) {
    if (!first) os << '\n';
    first = false;
    os << "method=" << to_string(std::get<0>(key))
       << " basis=" << to_string(std::get<1>(key)) << '\n';
    os << std::left << std::setw(8) << "lambda" << std::setw(5) << "M"
       << std::setw(10) << "alpha(1)" << std::setw(36) << "e0(1)"
       << std::setw(10) << "alpha(2)" << "e0(2)" << '\n';
    for (const auto& [rk, pair] : rows) {
      os << std::left << std::setw(8) << rational_to_string(std::get<0>(rk))
         << std::setw(5) << std::get<1>(rk);
      for (int side = 0; side < 2; ++side) {
        const ConvergenceRecord* r = pair[static_cast<size_t>(side)];
        std::string alpha = "-", energy = "-";
        if (r != nullptr && r->ok()) {
          alpha = four_digits(r->alpha_opt);
          energy = mark_digits(r->energy, r->correct_digits.value_or(0));
        } else if (r != nullptr) {
          energy = "error: " + r->error;
        }
        os << std::setw(10) << alpha;
        if (side == 0) {
          os << std::setw(36) << energy;
        } else {
          os << energy;
        }
      }
      os << '\n';
    }
  }
  return os.str();
}

std::string csv_table(std::span<const ConvergenceRecord> records) {
  std::ostringstream os;
  for (std::size_t i = 0; i < std::size(kRecordColumns); ++i) {
    os << (i ? "," : "") << kRecordColumns[i];
  }
  os << '\n';
  for (const ConvergenceRecord& r : records) {
    os << to_string(r.form) << ',' << to_string(r.basis) << ','
       << rational_to_string(r.lambda) << ',' << r.M << ',' << r.alpha_opt << ','
       << r.energy << ',';
    if (r.correct_digits) os << *r.correct_digits;
    os << ',';
    if (r.cpu_seconds) os << format_cpu(*r.cpu_seconds);
    os << ',' << to_string(r.method) << '\n';
  }
  return os.str();
}

std::string json_table(std::span<const ConvergenceRecord> records) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const ConvergenceRecord& r : records) {
    nlohmann::ordered_json row;
    row["form"] = to_string(r.form);
    row["basis"] = to_string(r.basis);
    row["lambda"] = rational_to_string(r.lambda);
    row["M"] = r.M;
    row["alpha_opt"] = r.alpha_opt;
    row["energy"] = r.energy;
    row["correct_digits"] =
        r.correct_digits ? nlohmann::ordered_json(*r.correct_digits) : nullptr;
    row["cpu_seconds"] =
        r.cpu_seconds ? nlohmann::ordered_json(*r.cpu_seconds) : nullptr;
    row["method"] = to_string(r.method);
    if (!r.ok()) row["error"] = r.error;
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + "\n";
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string emit_table(std::span<const ConvergenceRecord> records, TableStyle style) {
  if (records.empty()) throw std::invalid_argument("empty study");
  switch (style) {
    case TableStyle::PaperTable:
      return paper_table(records);
    case TableStyle::Csv:
      return csv_table(records);
    case TableStyle::Json:
      return json_table(records);
  }
  throw std::invalid_argument("unknown table style");
}

std::vector<ConvergenceRecord> parse_csv(std::string_view text) {
  std::vector<ConvergenceRecord> out;
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("empty CSV");
  const auto header = split(line, ',');
  if (header.size() != std::size(kRecordColumns)) {
    throw std::invalid_argument("unexpected CSV header");
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] != kRecordColumns[i]) throw std::invalid_argument("unexpected CSV header");
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != header.size()) throw std::invalid_argument("malformed CSV row: " + line);
    ConvergenceRecord r;
    r.form = parse_form(f[0]);
    r.basis = parse_basis_kind(f[1]);
    r.lambda = parse_rational(f[2]);
    r.M = std::stoi(f[3]);
    r.alpha_opt = f[4];
    r.energy = f[5];
    if (!f[6].empty()) r.correct_digits = std::stoi(f[6]);
    if (!f[7].empty()) r.cpu_seconds = std::stod(f[7]);
    r.method = parse_method(f[8]);
    if (r.energy.empty()) r.error = "failed";
    out.push_back(std::move(r));
  }
  return out;
}

FigureScript emit_figure_script(std::span<const ConvergenceRecord> records,
                                std::string_view image_name) {
  if (records.empty()) throw std::invalid_argument("empty study");
  using SeriesKey = std::tuple<Method, BasisKind, HamiltonianForm>;
  std::map<SeriesKey, std::vector<const ConvergenceRecord*>> series;
  FigureScript fig;
  for (const ConvergenceRecord& r : records) {
    if (!r.ok()) continue;
    if (!r.cpu_seconds) {
      throw std::invalid_argument("record without CPU time cannot be plotted");
    }
    if (!r.abs_error) {
      fig.warnings.push_back("no reference for " + label(r) + "(" +
                             form_tag(r.form) + ") lambda=" +
                             rational_to_string(r.lambda) + " M=" +
                             std::to_string(r.M) + "; omitted");
      continue;
    }
    series[{r.method, r.basis, r.form}].push_back(&r);
  }

  std::ostringstream csv;
  csv << "method,basis,form,lambda,M,cpu_seconds,abs_error\n";
  std::ostringstream gp;
  gp << "# precision versus CPU time, log-log\n";
  for (const std::string& w : fig.warnings) gp << "# warning: " << w << '\n';
  gp << "set terminal pngcairo size 900,600\n"
     << "set output '" << image_name << "'\n"
     << "set logscale xy\n"
     << "set format y '10^{%L}'\n"
     << "set xlabel 'CPU time [s]'\n"
     << "set ylabel '|E - E_{ref}|'\n"
     << "set key outside right\n";
  std::vector<std::string> plots;
  int index = 0;
  for (const auto& [key, rows] : series) {
    const std::string name = "$s" + std::to_string(index++);
    const ConvergenceRecord& head = *rows.front();
    const std::string title = label(head) + "(" + form_tag(head.form) + ")";
    gp << name << " << EOD\n";
    for (const ConvergenceRecord* r : rows) {
      gp << format_cpu(*r->cpu_seconds) << ' ' << *r->abs_error << '\n';
      csv << to_string(r->method) << ',' << to_string(r->basis) << ','
          << to_string(r->form) << ',' << rational_to_string(r->lambda) << ','
          << r->M << ',' << format_cpu(*r->cpu_seconds) << ',' << *r->abs_error
          << '\n';
    }
    gp << "EOD\n";
    plots.push_back(name + " using 1:2 with linespoints title '" + title + "'");
  }
  if (!plots.empty()) {
    gp << "plot ";
    for (std::size_t i = 0; i < plots.size(); ++i) {
      gp << (i ? ", \\\n     " : "") << plots[i];
    }
    gp << '\n';
  }
  fig.series = plots.size();
  fig.script = gp.str();
  fig.csv = csv.str();
  return fig;
}

}  // namespace rrosc
