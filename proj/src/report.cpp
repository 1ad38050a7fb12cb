#include "guessdec/report.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace guessdec {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(std::numeric_limits<double>::max_digits10);
  os << v;
  return os.str();
}

}  // namespace

std::string render_report(const Table& table, ReportFormat format) {
  for (const auto& row : table.rows)
    if (row.size() != table.header.size())
      throw std::invalid_argument("render_report: row width does not match header");

  if (format == ReportFormat::csv) {
    std::ostringstream os;
    for (std::size_t c = 0; c < table.header.size(); ++c)
      os << (c ? "," : "") << table.header[c];
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << fmt(row[c]);
      os << '\n';
    }
    return os.str();
  }

  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[table.header[c]] = row[c];
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

void emit_report(const Table& table, ReportFormat format, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_report: cannot open " + path);
  out << render_report(table, format);
  if (!out) throw std::runtime_error("emit_report: write failure on " + path);
}

Table parse_json_report(const std::string& text, const std::vector<std::string>& header) {
  const auto arr = nlohmann::json::parse(text);
  Table t;
  t.header = header;
  for (const auto& obj : arr) {
    std::vector<double> row;
    row.reserve(header.size());
    for (const auto& name : header) row.push_back(obj.at(name).get<double>());
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace guessdec
