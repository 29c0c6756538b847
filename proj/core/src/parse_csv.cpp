// Copyright 2026 The hetsearch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <regex>
#include <vector>

#include "hetsearch/error.hpp"
#include "parsers.hpp"

namespace hetsearch::detail {

namespace {

struct Row {
  std::vector<std::string> cells;
  std::size_t line;
};

// RFC 4180 records; quoted fields may span lines. Blank lines are skipped.
std::vector<Row> read_rows(std::string_view in) {
  std::vector<Row> rows;
  std::size_t i = 0;
  std::size_t line = 1;
  if (in.substr(0, 3) == "\xEF\xBB\xBF") i = 3;
  while (i < in.size()) {
    Row row{{}, line};
    std::string cell;
    bool row_done = false;
    bool any = false;
    while (!row_done) {
      if (i < in.size() && in[i] == '"') {
        const std::size_t quote_line = line;
        ++i;
        while (true) {
          if (i >= in.size()) throw ParseError("unterminated quoted field", quote_line);
          const char c = in[i];
          if (c == '"') {
            if (i + 1 < in.size() && in[i + 1] == '"') {
              cell += '"';
              i += 2;
              continue;
            }
            ++i;
            break;
          }
          if (c == '\n') ++line;
          cell += c;
          ++i;
        }
        if (i < in.size() && in[i] != ',' && in[i] != '\n' && in[i] != '\r') {
          throw ParseError("unexpected character after closing quote", line);
        }
        any = true;
      }
      while (i < in.size() && in[i] != ',' && in[i] != '\n' && in[i] != '\r') {
        if (in[i] == '"') throw ParseError("quote inside an unquoted field", line);
        cell += in[i++];
        any = true;
      }
      if (i >= in.size()) {
        row_done = true;
      } else if (in[i] == ',') {
        ++i;
        any = true;
        row.cells.push_back(std::move(cell));
        cell.clear();
        continue;
      } else {
        if (in[i] == '\r') ++i;
        if (i < in.size() && in[i] == '\n') ++i;
        ++line;
        row_done = true;
      }
      row.cells.push_back(std::move(cell));
      cell.clear();
    }
    if (any) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

bool looks_numeric(std::string_view s) {
  static const std::regex number(R"([+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?)");
  return !s.empty() && std::regex_match(s.begin(), s.end(), number);
}

Traversal traverse_csv(std::string_view input) {
  const std::vector<Row> rows = read_rows(input);
  Traversal t = with_root();
  if (rows.empty()) return t;
  const std::vector<std::string>& header = rows.front().cells;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const Row& row = rows[r];
    if (row.cells.size() != header.size()) {
      throw ParseError("row has " + std::to_string(row.cells.size()) + " fields, header has " +
                           std::to_string(header.size()),
                       row.line);
    }
    const std::size_t tuple = add_spec(t, NodeKind::Internal, "", "");
    t.edges.push_back({0, tuple, ""});
    for (std::size_t c = 0; c < header.size(); ++c) {
      const std::string& cell = row.cells[c];
      if (cell.empty()) continue;
      const NodeKind kind = looks_numeric(cell) ? NodeKind::Number : NodeKind::Value;
      const std::size_t value = add_spec(t, kind, cell, "." + header[c]);
      t.edges.push_back({tuple, value, header[c]});
    }
  }
  return t;
}

}  // namespace hetsearch::detail
