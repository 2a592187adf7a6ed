#include "output.hpp"

#include <cstdio>

namespace qsum_cli {

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\r\n";
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string latex_table(const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows) {
  std::string out = "\\begin{tabular}{" + std::string(header.size(), 'l') + "}\n\\hline\n";
  for (std::size_t i = 0; i < header.size(); ++i) {
    out += (i > 0 ? " & " : "") + header[i];
  }
  out += " \\\\\n\\hline\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += " & ";
      if (!row[i].empty()) out += "$" + row[i] + "$";
    }
    out += " \\\\\n";
  }
  return out + "\\hline\n\\end{tabular}\n";
}

}  // namespace qsum_cli
