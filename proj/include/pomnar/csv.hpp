#pragma once

// RFC-4180 style CSV reading and dataset construction from named columns.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pomnar/data_model.hpp"
#include "pomnar/errors.hpp"

namespace pomnar {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a header column; DataError naming the column when absent.
  std::size_t column(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw DataError("column '" + name + "' not found in CSV header");
    return static_cast<std::size_t>(it - header.begin());
  }
};

/// Parses quoted fields, doubled quotes, embedded separators and newlines,
/// and LF or CRLF line ends. The first record is the header.
inline CsvTable parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false, field_started = false;
  std::size_t line = 1;
  std::size_t i = text.compare(0, 3, "\xEF\xBB\xBF") == 0 ? 3 : 0;  // UTF-8 BOM
  auto end_record = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
    if (!(record.size() == 1 && record[0].empty())) records.push_back(std::move(record));
    record.clear();
  };
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started)
          throw DataError("CSV line " + std::to_string(line) + ": quote inside an unquoted field");
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        record.push_back(std::move(field));
        field.clear();
        field_started = false;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        [[fallthrough]];
      case '\n':
        end_record();
        ++line;
        break;
      default:
        field.push_back(c);
        field_started = true;
    }
  }
  if (in_quotes) throw DataError("CSV: unterminated quoted field");
  if (field_started || !record.empty()) end_record();
  if (records.empty()) throw DataError("CSV: no header row");

  CsvTable t;
  t.header = std::move(records.front());
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != t.header.size())
      throw DataError("CSV record " + std::to_string(r + 1) + " has " + std::to_string(records[r].size()) +
                      " fields, header has " + std::to_string(t.header.size()));
    t.rows.push_back(std::move(records[r]));
  }
  return t;
}

inline CsvTable read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str());
}

inline bool is_missing_token(const std::string& s) { return s.empty() || s == "NA"; }

inline std::optional<double> parse_number(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  while (first < last && *first == ' ') ++first;
  while (last > first && last[-1] == ' ') --last;
  if (first == last) return std::nullopt;
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

/// Ordered response levels: every observed label, sorted numerically when all
/// labels are numbers and lexicographically otherwise.
inline std::vector<std::string> infer_levels(const std::vector<std::string>& labels) {
  std::vector<std::string> levels;
  for (const auto& s : labels)
    if (!is_missing_token(s) && std::find(levels.begin(), levels.end(), s) == levels.end()) levels.push_back(s);
  const bool numeric = std::all_of(levels.begin(), levels.end(), [](const auto& s) { return parse_number(s).has_value(); });
  if (numeric)
    std::sort(levels.begin(), levels.end(), [](const auto& a, const auto& b) { return *parse_number(a) < *parse_number(b); });
  else
    std::sort(levels.begin(), levels.end());
  return levels;
}

struct CsvDatasetSpec {
  std::string response;
  std::vector<std::string> covariates;
  std::vector<std::string> missingness_covariates;  // empty: same as covariates
  std::vector<std::string> levels;                   // empty: inferred
  std::string id_column;                             // empty: row numbers
};

struct CsvDataset {
  OrdinalDataset data;
  std::vector<std::string> levels;  // category k is levels[k - 1]
};

inline CsvDataset dataset_from_csv(const CsvTable& t, const CsvDatasetSpec& spec) {
  if (spec.covariates.empty()) throw DataError("at least one covariate column is required");
  const std::size_t ycol = t.column(spec.response);
  std::vector<std::size_t> xcols, wcols;
  for (const auto& c : spec.covariates) xcols.push_back(t.column(c));
  for (const auto& c : spec.missingness_covariates) wcols.push_back(t.column(c));
  const std::optional<std::size_t> idcol =
      spec.id_column.empty() ? std::nullopt : std::optional<std::size_t>(t.column(spec.id_column));

  std::vector<std::string> labels;
  for (const auto& row : t.rows) labels.push_back(row[ycol]);
  std::vector<std::string> levels = spec.levels.empty() ? infer_levels(labels) : spec.levels;
  std::map<std::string, int> code;
  for (std::size_t k = 0; k < levels.size(); ++k)
    if (!code.emplace(levels[k], static_cast<int>(k) + 1).second)
      throw DataError("level '" + levels[k] + "' listed twice");

  auto numeric = [&](std::size_t r, std::size_t c) {
    const auto v = parse_number(t.rows[r][c]);
    if (!v)
      throw DataError("row " + std::to_string(r + 1) + ", column '" + t.header[c] + "': '" + t.rows[r][c] +
                      "' is not a number (missing covariates are not supported)");
    return *v;
  };
  std::vector<RawRow> rows;
  rows.reserve(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    RawRow raw;
    raw.id = idcol ? t.rows[r][*idcol] : std::to_string(r + 1);
    const auto& label = t.rows[r][ycol];
    if (!is_missing_token(label)) {
      const auto it = code.find(label);
      if (it == code.end())
        throw DataError("row " + std::to_string(r + 1) + ": response '" + label + "' is not one of the levels");
      raw.y = it->second;
    }
    for (auto c : xcols) raw.x.push_back(numeric(r, c));
    for (auto c : wcols) raw.w.push_back(numeric(r, c));
    rows.push_back(std::move(raw));
  }
  return {validate_dataset(rows, static_cast<int>(levels.size())), std::move(levels)};
}

}  // namespace pomnar
