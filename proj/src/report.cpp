#include "treecount/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace treecount {

namespace {

using nlohmann::ordered_json;

std::string join(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(values[k]);
  }
  return out;
}

std::string join(const std::vector<std::string>& values, char sep) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += sep;
    out += values[k];
  }
  return out;
}

std::string bound_cell(const BoundReport& r, const std::string& name) {
  const BoundValue* b = r.find(name);
  if (b == nullptr || !b->applicable()) return "NA";
  if (const auto* q = std::get_if<mpq_class>(&b->value)) return q->get_str();
  return format_double(std::get<double>(b->value));
}

ordered_json rational_json(const mpq_class& q) {
  return ordered_json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

ordered_json report_json(const BoundReport& r) {
  const GraphDescriptor& g = r.graph;
  ordered_json graph{
      {"graph_id", g.graph_id},
      {"n", g.n},
      {"m", g.m},
      {"edges", g.edges},
      {"degrees_left", g.left_degrees},
      {"degrees_right", g.right_degrees},
      {"regularity", std::string(to_string(g.regularity.kind))},
      {"is_ferrers", g.ferrers.has_value()},
  };
  if (g.ferrers) graph["partition"] = g.ferrers->parts();
  if (g.regularity.left_degree) graph["left_degree"] = *g.regularity.left_degree;
  if (g.regularity.right_degree) graph["right_degree"] = *g.regularity.right_degree;

  ordered_json bounds = ordered_json::array();
  for (const auto& b : r.bounds) {
    ordered_json entry{{"name", b.name}, {"applicable", b.applicable()}};
    if (const auto* q = std::get_if<mpq_class>(&b.value)) {
      entry["value"] = rational_json(*q);
    } else if (const auto* d = std::get_if<double>(&b.value)) {
      entry["value"] = *d;
    } else {
      entry["reason"] = b.reason;
    }
    bounds.push_back(std::move(entry));
  }
  ordered_json tightness = ordered_json::object();
  for (const auto& [name, t] : r.tightness) tightness[name] = t;

  return ordered_json{
      {"graph", std::move(graph)},
      {"tau", r.tau.get_str()},
      {"bounds", std::move(bounds)},
      {"tightness", std::move(tightness)},
      {"violations", r.violations},
      {"near_misses", r.near_misses},
      {"counterexample_candidate", r.counterexample_candidate},
  };
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "text") return OutputFormat::Text;
  throw Error(ErrorCode::ParseError, "unknown format \"" + std::string(name) + "\"");
}

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string csv_row(const BoundReport& r) {
  const GraphDescriptor& g = r.graph;
  std::ostringstream row;
  row << g.graph_id << ',' << g.n << ',' << g.m << ',' << g.edges << ',' << join(g.left_degrees, ';') << ','
      << join(g.right_degrees, ';') << ',' << (g.ferrers ? "true" : "false") << ','
      << to_string(g.regularity.kind) << ',' << r.tau.get_str() << ',' << bound_cell(r, "ehrenborg") << ','
      << bound_cell(r, "bozkurt") << ',' << bound_cell(r, "grimmett") << ',' << bound_cell(r, "intermediate")
      << ',' << format_double(r.min_tightness()) << ',' << join(r.violations, ';');
  return row.str();
}

std::string to_json(const BoundReport& r) { return report_json(r).dump(); }

std::string to_text(const BoundReport& r) {
  const GraphDescriptor& g = r.graph;
  std::ostringstream out;
  out << "graph " << g.graph_id << ": n = " << g.n << ", m = " << g.m << ", |E| = " << g.edges << '\n';
  out << "  degrees: left [" << join(g.left_degrees, ' ') << "], right [" << join(g.right_degrees, ' ') << "]\n";
  out << "  regularity: " << to_string(g.regularity.kind);
  if (g.ferrers) out << ", ferrers partition " << g.ferrers->to_string();
  out << '\n';
  out << "  tau = " << r.tau.get_str() << '\n';
  for (const auto& b : r.bounds) {
    out << "  " << b.name << " = ";
    if (!b.applicable()) {
      out << "n/a (" << b.reason << ")\n";
      continue;
    }
    if (const auto* q = std::get_if<mpq_class>(&b.value)) {
      out << q->get_str();
      if (q->get_den() != 1) out << " (" << format_double(q->get_d()) << ")";
    } else {
      out << format_double(std::get<double>(b.value));
    }
    for (const auto& [name, t] : r.tightness) {
      if (name == b.name) out << ", tightness " << format_double(t);
    }
    out << '\n';
  }
  out << "  violations: " << (r.violations.empty() ? "none" : join(r.violations, ' ')) << '\n';
  if (r.counterexample_candidate) out << "  COUNTEREXAMPLE CANDIDATE\n";
  return out.str();
}

void write_reports(std::ostream& out, std::span<const BoundReport> reports, OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv:
      out << kCsvHeader << '\n';
      for (const auto& r : reports) out << csv_row(r) << '\n';
      break;
    case OutputFormat::Json: {
      ordered_json all = ordered_json::array();
      for (const auto& r : reports) all.push_back(report_json(r));
      out << all.dump(2) << '\n';
      break;
    }
    case OutputFormat::Text:
      for (const auto& r : reports) out << to_text(r);
      break;
  }
}

}  // namespace treecount
