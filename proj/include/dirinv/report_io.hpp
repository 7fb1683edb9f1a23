#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "dirinv/sweep.hpp"

namespace dirinv {

enum class OutputFormat { Table, Csv, Json };

OutputFormat parse_output_format(const std::string& text);

/// A row-oriented result; cells are strings or numbers already formatted.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// Columns rendered as JSON numbers instead of strings.
  std::vector<bool> numeric;
};

void write_table(std::ostream& out, const Table& table, OutputFormat format);

/// CSV columns n,inv_abs_num,inv_abs_den,bound,ratio,verdict; the summary
/// follows as '#' lines. JSON carries the same fields plus a summary object.
void write_sweep(std::ostream& out, const SweepResult& result, OutputFormat format);

/// 12 significant digits, "inf" for infinity.
std::string format_ratio(double ratio);

}  // namespace dirinv
