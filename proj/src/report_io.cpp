#include "dirinv/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dirinv {
namespace {

using nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

ordered_json cell(const std::string& text, bool numeric) {
  if (!numeric) return text;
  ordered_json parsed = ordered_json::parse(text, nullptr, false);
  if (parsed.is_number() || parsed.is_boolean()) return parsed;
  return text;
}

std::string summary_line(const SweepResult& r) {
  const auto& s = r.summary;
  std::ostringstream out;
  out << s.checked << " checked, " << s.failures << " failures, max ratio " << format_ratio(s.max_ratio) << " at n="
      << s.argmax;
  if (s.first_failure) out << ", first failure at n=" << *s.first_failure;
  if (s.fitted_constant) out << ", fitted A~=" << format_real(*s.fitted_constant);
  return out.str();
}

}  // namespace

OutputFormat parse_output_format(const std::string& text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format '" + text + "'");
}

std::string format_ratio(double ratio) {
  if (std::isinf(ratio)) return "inf";
  std::ostringstream out;
  out << std::setprecision(12) << ratio;
  return out.str();
}

void write_table(std::ostream& out, const Table& table, OutputFormat format) {
  const auto is_numeric = [&](std::size_t i) { return i < table.numeric.size() && table.numeric[i]; };
  switch (format) {
    case OutputFormat::Table: {
      if (table.columns.size() == 1) {
        for (const auto& row : table.rows) out << row.front() << '\n';
        return;
      }
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t i = 0; i < width.size(); ++i) width[i] = table.columns[i].size();
      for (const auto& row : table.rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i) out << "  ";
          if (i + 1 == cells.size()) {
            out << cells[i];
          } else {
            out << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
          }
        }
        out << '\n';
      };
      line(table.columns);
      for (const auto& row : table.rows) line(row);
      return;
    }
    case OutputFormat::Csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_escape(cells[i]);
        out << '\n';
      };
      line(table.columns);
      for (const auto& row : table.rows) line(row);
      return;
    }
    case OutputFormat::Json: {
      ordered_json rows = ordered_json::array();
      for (const auto& row : table.rows) {
        ordered_json obj = ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = cell(row[i], is_numeric(i));
        rows.push_back(std::move(obj));
      }
      out << rows.dump(2) << '\n';
      return;
    }
  }
}

void write_sweep(std::ostream& out, const SweepResult& result, OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json reports = ordered_json::array();
    for (const auto& r : result.reports) {
      ordered_json row;
      row["n"] = r.n;
      row["inv_abs_num"] = r.inverse_abs.get_num().get_str();
      row["inv_abs_den"] = r.inverse_abs.get_den().get_str();
      row["bound"] = format_real(r.bound.upper);
      if (std::isinf(r.ratio)) {
        row["ratio"] = "inf";
      } else {
        row["ratio"] = r.ratio;
      }
      row["verdict"] = r.pass ? "pass" : "fail";
      reports.push_back(std::move(row));
    }
    const auto& s = result.summary;
    ordered_json summary;
    summary["checked"] = s.checked;
    summary["failures"] = s.failures;
    summary["max_ratio"] = std::isinf(s.max_ratio) ? ordered_json("inf") : ordered_json(s.max_ratio);
    summary["argmax"] = s.argmax;
    summary["first_failure"] = s.first_failure ? ordered_json(*s.first_failure) : ordered_json(nullptr);
    if (s.fitted_constant) summary["fitted_constant"] = format_real(*s.fitted_constant);
    ordered_json doc;
    doc["spec"] = result.spec;
    doc["function"] = result.function;
    doc["reports"] = std::move(reports);
    doc["summary"] = std::move(summary);
    out << doc.dump(2) << '\n';
    return;
  }

  Table t{{"n", "inv_abs_num", "inv_abs_den", "bound", "ratio", "verdict"}, {}, {}};
  t.rows.reserve(result.reports.size());
  for (const auto& r : result.reports) {
    t.rows.push_back({std::to_string(r.n), r.inverse_abs.get_num().get_str(), r.inverse_abs.get_den().get_str(),
                      format_real(r.bound.upper), format_ratio(r.ratio), r.pass ? "pass" : "fail"});
  }
  if (format == OutputFormat::Csv) {
    write_table(out, t, OutputFormat::Csv);
    out << "# spec " << result.spec << "\n# function " << result.function << "\n# " << summary_line(result) << '\n';
  } else {
    out << "spec " << result.spec << ", function " << result.function << '\n';
    write_table(out, t, OutputFormat::Table);
    out << summary_line(result) << '\n';
  }
}

}  // namespace dirinv
