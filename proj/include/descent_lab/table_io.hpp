#pragma once

// Documents emitted by the CLI: basis multiplication tables and the character /
// marks tables, with JSON and CSV emitters and parsers.
//
// JSON: integers are numbers, non-integral rationals are "p/q" strings.
// CSV (tables): rank,left,right,result with result = "coeff*label" terms joined by "+".

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "descent_lab/class_algebra.hpp"
#include "descent_lab/errors.hpp"
#include "descent_lab/rational.hpp"
#include "descent_lab/solomon.hpp"
#include "descent_lab/weyl.hpp"

namespace descent_lab {

inline constexpr const char* kToolVersion = "0.1.0";

enum class AlgebraKind { solomon, class_algebra };

inline std::string to_string(AlgebraKind a) { return a == AlgebraKind::solomon ? "solomon" : "class"; }

inline AlgebraKind parse_algebra(std::string_view text) {
  if (text == "solomon") return AlgebraKind::solomon;
  if (text == "class") return AlgebraKind::class_algebra;
  throw FormatError("unknown algebra '" + std::string(text) + "'");
}

struct DocumentMetadata {
  std::string tool_version = kToolVersion;
  std::string strategy;
  friend bool operator==(const DocumentMetadata&, const DocumentMetadata&) = default;
};

struct Term {
  std::string label;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// One product, terms in basis order.
using Cell = std::vector<Term>;

struct TableDocument {
  int rank = 0;
  AlgebraKind algebra = AlgebraKind::class_algebra;
  std::vector<std::string> labels;
  std::vector<std::vector<Cell>> cells;
  DocumentMetadata metadata;

  const Cell& cell(std::size_t i, std::size_t j) const { return cells.at(i).at(j); }

  /// Everything except metadata.
  bool same_payload(const TableDocument& o) const {
    return rank == o.rank && algebra == o.algebra && labels == o.labels && cells == o.cells;
  }
  friend bool operator==(const TableDocument&, const TableDocument&) = default;
};

/// A rectangular table of numbers with labelled axes (character table, table of marks).
struct MatrixDocument {
  std::string kind;
  int rank = 0;
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  std::vector<std::vector<Rational>> values;
  DocumentMetadata metadata;

  bool same_payload(const MatrixDocument& o) const {
    return kind == o.kind && rank == o.rank && row_labels == o.row_labels &&
           column_labels == o.column_labels && values == o.values;
  }
  friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

// ---------------------------------------------------------------------------
// Building documents

inline TableDocument make_class_table(const ClassAlgebra& algebra) {
  TableDocument doc;
  doc.rank = algebra.rank().n();
  doc.algebra = AlgebraKind::class_algebra;
  doc.metadata.strategy = to_string(algebra.strategy());
  for (const auto& p : algebra.basis()) doc.labels.push_back(to_string(p));
  const std::size_t dim = algebra.dimension();
  doc.cells.assign(dim, std::vector<Cell>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (const auto& [p, c] : algebra.product(i, j).terms()) {
        doc.cells[i][j].push_back({to_string(p), c});
      }
    }
  }
  return doc;
}

inline TableDocument make_solomon_table(const StructureTable& table) {
  TableDocument doc;
  doc.rank = table.rank().n();
  doc.algebra = AlgebraKind::solomon;
  doc.metadata.strategy = to_string(table.strategy());
  const auto subsets = enumerate_subsets(table.rank());
  for (const auto& s : subsets) doc.labels.push_back(to_string(s));
  doc.cells.assign(subsets.size(), std::vector<Cell>(subsets.size()));
  for (const auto& j : subsets) {
    for (const auto& k : subsets) {
      for (const auto& e : table.row(j, k)) {
        doc.cells[j.mask()][k.mask()].push_back({to_string(e.subset), Rational(e.count)});
      }
    }
  }
  return doc;
}

// ---------------------------------------------------------------------------
// JSON

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json rational_to_json(const Rational& q) {
  if (is_integer(q)) {
    const BigInt& num = numerator(q);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max()) {
      return ordered_json(static_cast<std::int64_t>(num));
    }
  }
  return ordered_json(to_string(q));
}

inline Rational rational_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw FormatError("expected an integer or a \"p/q\" string, got " + j.dump());
}

inline ordered_json metadata_to_json(const DocumentMetadata& m) {
  ordered_json j = ordered_json::object();
  j["tool_version"] = m.tool_version;
  j["strategy"] = m.strategy;
  return j;
}

inline DocumentMetadata metadata_from_json(const ordered_json& j) {
  DocumentMetadata m;
  m.tool_version = j.at("tool_version").get<std::string>();
  m.strategy = j.at("strategy").get<std::string>();
  return m;
}

template <class F>
auto guard_json(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed document: ") + e.what());
  }
}

}  // namespace detail

inline std::string to_json(const TableDocument& doc) {
  ordered_json j = ordered_json::object();
  j["rank"] = doc.rank;
  j["algebra"] = to_string(doc.algebra);
  j["labels"] = doc.labels;
  ordered_json rows = ordered_json::array();
  for (const auto& row : doc.cells) {
    ordered_json out_row = ordered_json::array();
    for (const auto& cell : row) {
      ordered_json terms = ordered_json::object();
      for (const auto& t : cell) terms[t.label] = detail::rational_to_json(t.coeff);
      out_row.push_back(std::move(terms));
    }
    rows.push_back(std::move(out_row));
  }
  j["cells"] = std::move(rows);
  j["metadata"] = detail::metadata_to_json(doc.metadata);
  return j.dump(2) + "\n";
}

inline TableDocument table_from_json(std::string_view text) {
  return detail::guard_json([&] {
    const ordered_json j = ordered_json::parse(text);
    TableDocument doc;
    doc.rank = j.at("rank").get<int>();
    doc.algebra = parse_algebra(j.at("algebra").get<std::string>());
    doc.labels = j.at("labels").get<std::vector<std::string>>();
    for (const auto& row : j.at("cells")) {
      std::vector<Cell> out_row;
      for (const auto& cell : row) {
        Cell c;
        for (const auto& [label, coeff] : cell.items()) {
          c.push_back({label, detail::rational_from_json(coeff)});
        }
        out_row.push_back(std::move(c));
      }
      doc.cells.push_back(std::move(out_row));
    }
    doc.metadata = detail::metadata_from_json(j.at("metadata"));
    return doc;
  });
}

inline std::string to_json(const MatrixDocument& doc) {
  ordered_json j = ordered_json::object();
  j["kind"] = doc.kind;
  j["rank"] = doc.rank;
  j["rows"] = doc.row_labels;
  j["columns"] = doc.column_labels;
  ordered_json values = ordered_json::array();
  for (const auto& row : doc.values) {
    ordered_json out_row = ordered_json::array();
    for (const auto& v : row) out_row.push_back(detail::rational_to_json(v));
    values.push_back(std::move(out_row));
  }
  j["values"] = std::move(values);
  j["metadata"] = detail::metadata_to_json(doc.metadata);
  return j.dump(2) + "\n";
}

inline MatrixDocument matrix_from_json(std::string_view text) {
  return detail::guard_json([&] {
    const ordered_json j = ordered_json::parse(text);
    MatrixDocument doc;
    doc.kind = j.at("kind").get<std::string>();
    doc.rank = j.at("rank").get<int>();
    doc.row_labels = j.at("rows").get<std::vector<std::string>>();
    doc.column_labels = j.at("columns").get<std::vector<std::string>>();
    for (const auto& row : j.at("values")) {
      std::vector<Rational> out_row;
      for (const auto& v : row) out_row.push_back(detail::rational_from_json(v));
      doc.values.push_back(std::move(out_row));
    }
    doc.metadata = detail::metadata_from_json(j.at("metadata"));
    return doc;
  });
}

// ---------------------------------------------------------------------------
// CSV

namespace detail {

inline std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (quoted) throw FormatError("unterminated quote in CSV line");
  fields.push_back(std::move(current));
  return fields;
}

inline std::vector<std::string> csv_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

inline int parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw FormatError("expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace detail

inline std::string format_cell(const Cell& cell) {
  if (cell.empty()) return "0";
  std::string out;
  for (const auto& t : cell) {
    if (!out.empty()) out += '+';
    out += to_string(t.coeff) + "*" + t.label;
  }
  return out;
}

inline Cell parse_cell(std::string_view text) {
  Cell cell;
  if (text == "0") return cell;
  while (!text.empty()) {
    const auto plus = text.find('+');
    const auto term = text.substr(0, plus);
    const auto star = term.find('*');
    if (star == std::string_view::npos) throw FormatError("bad term '" + std::string(term) + "'");
    cell.push_back({std::string(term.substr(star + 1)), parse_rational(term.substr(0, star))});
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  return cell;
}

inline std::string to_csv(const TableDocument& doc) {
  std::string out = "rank,left,right,result\n";
  for (std::size_t i = 0; i < doc.labels.size(); ++i) {
    for (std::size_t j = 0; j < doc.labels.size(); ++j) {
      out += std::to_string(doc.rank) + "," + detail::csv_field(doc.labels[i]) + "," +
             detail::csv_field(doc.labels[j]) + "," + detail::csv_field(format_cell(doc.cells[i][j])) +
             "\n";
    }
  }
  return out;
}

/// The algebra is inferred from the label syntax ("[..]" partitions, "{..}" subsets);
/// CSV carries no metadata.
inline TableDocument table_from_csv(std::string_view text) {
  const auto lines = detail::csv_lines(text);
  if (lines.empty() || lines.front() != "rank,left,right,result") {
    throw FormatError("missing CSV header 'rank,left,right,result'");
  }
  TableDocument doc;
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = detail::split_csv_line(lines[i]);
    if (fields.size() != 4) throw FormatError("expected 4 CSV fields in line " + std::to_string(i + 1));
    rows.push_back(std::move(fields));
  }
  std::size_t dim = 0;
  while (dim * dim < rows.size()) ++dim;
  if (dim == 0 || dim * dim != rows.size()) throw FormatError("CSV table is not square");
  doc.rank = detail::parse_int(rows[0][0]);
  for (std::size_t j = 0; j < dim; ++j) doc.labels.push_back(rows[j][2]);
  doc.algebra = doc.labels[0].starts_with("{") ? AlgebraKind::solomon : AlgebraKind::class_algebra;
  doc.cells.assign(dim, std::vector<Cell>(dim));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::size_t i = r / dim;
    const std::size_t j = r % dim;
    if (detail::parse_int(rows[r][0]) != doc.rank || rows[r][1] != doc.labels[i] ||
        rows[r][2] != doc.labels[j]) {
      throw FormatError("CSV rows are not in basis order at line " + std::to_string(r + 2));
    }
    doc.cells[i][j] = parse_cell(rows[r][3]);
  }
  doc.metadata = {};
  return doc;
}

/// Header row: kind, then the column labels; one row per row label.
inline std::string to_csv(const MatrixDocument& doc) {
  std::string out = detail::csv_field(doc.kind);
  for (const auto& c : doc.column_labels) out += "," + detail::csv_field(c);
  out += "\n";
  for (std::size_t i = 0; i < doc.row_labels.size(); ++i) {
    out += detail::csv_field(doc.row_labels[i]);
    for (const auto& v : doc.values[i]) out += "," + to_string(v);
    out += "\n";
  }
  return out;
}

/// Rank is recovered from the labels (partitions of n+1).
inline MatrixDocument matrix_from_csv(std::string_view text) {
  const auto lines = detail::csv_lines(text);
  if (lines.empty()) throw FormatError("empty CSV document");
  MatrixDocument doc;
  auto header = detail::split_csv_line(lines[0]);
  doc.kind = header[0];
  doc.column_labels.assign(header.begin() + 1, header.end());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = detail::split_csv_line(lines[i]);
    if (fields.size() != header.size()) {
      throw FormatError("ragged CSV row at line " + std::to_string(i + 1));
    }
    doc.row_labels.push_back(fields[0]);
    std::vector<Rational> row;
    for (std::size_t c = 1; c < fields.size(); ++c) row.push_back(parse_rational(fields[c]));
    doc.values.push_back(std::move(row));
  }
  if (doc.row_labels.empty()) throw FormatError("CSV matrix has no rows");
  doc.rank = parse_partition(doc.row_labels[0]).total() - 1;
  doc.metadata = {};
  return doc;
}

}  // namespace descent_lab
