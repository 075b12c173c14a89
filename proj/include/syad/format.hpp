#pragma once

#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include "syad/dsl/eval.hpp"
#include "syad/fuzzy.hpp"
#include "syad/relation.hpp"
#include "syad/saptabhangi.hpp"

namespace syad {

enum class OutputFormat { Plain, Tsv };

/// Fixed four-decimal rendering, round-half-to-even, locale-independent.
inline std::string format_grade(double grade) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", grade);
  return buf;
}

namespace detail {

// Plain output pads every column but the last so grades line up; TSV joins
// fields with tabs and never pads.
inline std::string render_rows(const std::vector<std::vector<std::string>>& rows,
                               OutputFormat format) {
  std::string out;
  if (rows.empty()) return out;
  std::vector<std::size_t> widths(rows.front().size(), 0);
  if (format == OutputFormat::Plain) {
    for (const auto& row : rows) {
      for (std::size_t c = 0; c + 1 < row.size(); ++c) {
        widths[c] = std::max(widths[c], row[c].size());
      }
    }
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += format == OutputFormat::Plain ? " " : "\t";
      out += row[c];
      if (format == OutputFormat::Plain && c + 1 < row.size()) {
        out.append(widths[c] - row[c].size(), ' ');
      }
    }
    out += '\n';
  }
  return out;
}

inline std::vector<std::vector<std::string>> rows_of(const FuzzySet& set) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    rows.push_back({set.universe()->elements()[i], format_grade(set[i].value())});
  }
  return rows;
}

inline std::vector<std::vector<std::string>> rows_of(const FuzzyRelation& rel) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(rel.rows() * rel.cols());
  for (std::size_t x = 0; x < rel.rows(); ++x) {
    for (std::size_t y = 0; y < rel.cols(); ++y) {
      rows.push_back({rel.domain()->elements()[x], rel.codomain()->elements()[y],
                      format_grade(rel.at(x, y).value())});
    }
  }
  return rows;
}

inline std::vector<std::vector<std::string>> rows_of(const SevenValuation& val) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(7);
  for (std::size_t i = 0; i < 7; ++i) {
    rows.push_back({"v" + std::to_string(i + 1), std::string(SevenValuation::names[i]),
                    format_grade(val.get(i + 1).value())});
  }
  return rows;
}

}  // namespace detail

/// Renders one element-grade row per member, no header line.
inline std::string format_set(const FuzzySet& set, OutputFormat format) {
  return detail::render_rows(detail::rows_of(set), format);
}

/// Renders one row per pair, row-major, no header line.
inline std::string format_relation(const FuzzyRelation& rel, OutputFormat format) {
  return detail::render_rows(detail::rows_of(rel), format);
}

/// Renders the seven grades of predication, one labelled row each.
inline std::string format_valuation(const SevenValuation& val, OutputFormat format) {
  return detail::render_rows(detail::rows_of(val), format);
}

/// Renders a query result as a header line naming the query followed by one
/// row per value.
inline std::string format_result(const dsl::QueryResult& result, OutputFormat format) {
  std::string out = result.header;
  out += '\n';
  out += std::visit([&](const auto& payload) { return detail::render_rows(detail::rows_of(payload), format); },
                    result.payload);
  return out;
}

/// Renders one `--trace` intermediate as its own block.
inline std::string format_trace_item(const dsl::TraceItem& item, OutputFormat format) {
  std::string out = "trace: " + item.label;
  out += '\n';
  out += std::visit([&](const auto& value) { return detail::render_rows(detail::rows_of(value), format); },
                    item.value);
  return out;
}

}  // namespace syad
