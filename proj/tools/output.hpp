#ifndef QSUM_TOOLS_OUTPUT_HPP
#define QSUM_TOOLS_OUTPUT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace qsum_cli {

enum class Format { Text, Csv, Json, Latex };

constexpr int kSchemaVersion = 1;

/// RFC 4180 quoting: only fields containing a comma, quote, CR or LF are
/// quoted, with embedded quotes doubled.
std::string csv_field(std::string_view field);
std::string csv_row(const std::vector<std::string>& fields);

/// Shortest round-tripping decimal for a double ("%.17g").
std::string format_double(double value);

/// A tabular LaTeX environment; cells are inserted verbatim in math mode.
std::string latex_table(const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows);

}  // namespace qsum_cli

#endif  // QSUM_TOOLS_OUTPUT_HPP
