#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "treecount/bounds.hpp"

namespace treecount {

enum class OutputFormat { Csv, Json, Text };

OutputFormat parse_format(std::string_view name);

// Fixed column order of the CSV report.
inline constexpr std::string_view kCsvHeader =
    "graph_id,n,m,edges,degrees_left,degrees_right,is_ferrers,regularity,tau,ehrenborg,bozkurt,"
    "grimmett,intermediate,min_tightness,violations";

std::string csv_row(const BoundReport& r);

// Exact rationals become {"num": "...", "den": "..."}; big integers are strings.
std::string to_json(const BoundReport& r);

std::string to_text(const BoundReport& r);

void write_reports(std::ostream& out, std::span<const BoundReport> reports, OutputFormat format);

// Shortest round-trip decimal for a double.
std::string format_double(double x);

}  // namespace treecount
