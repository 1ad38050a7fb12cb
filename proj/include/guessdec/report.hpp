#ifndef GUESSDEC_REPORT_HPP
#define GUESSDEC_REPORT_HPP

#include <string>
#include <vector>

namespace guessdec {

/// A plot-ready table: one named column set, one row per operating point.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  bool operator==(const Table&) const = default;
};

enum class ReportFormat { csv, json };

std::string render_report(const Table& table, ReportFormat format);
void emit_report(const Table& table, ReportFormat format, const std::string& path);

/// Parses a JSON report back into a Table (round-trip inverse of the json
/// rendering; column order follows the original header).
Table parse_json_report(const std::string& text, const std::vector<std::string>& header);

}  // namespace guessdec

#endif
