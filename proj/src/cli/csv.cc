// Copyright 2026 The rankgame Authors. All rights reserved.
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

#include "rankgame/csv.h"

#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "rankgame/numfmt.h"

namespace rankgame {
namespace {

std::vector<std::string> SplitCommas(const std::string& line) {
  std::vector<std::string> cells;
  size_t start = 0;
  while (true) {
    const size_t pos = line.find(',', start);
    cells.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return cells;
}

double ParseCell(const std::string& cell, int line_no) {
  char* end = nullptr;
  const double x = std::strtod(cell.c_str(), &end);
  if (cell.empty() || *end != '\0') {
    throw Error(fmt::format("csv line {}: '{}' is not a number", line_no, cell));
  }
  return x;
}

}  // namespace

void WriteSweepCsv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  const std::string nan = "nan";
  for (const SweepRow& row : rows) {
    out << ParamName(row.axis) << ',' << FormatNumber(row.value) << ',';
    if (!row.ok) {
      out << "nan,nan,nan,nan,nan,invalid\n";
      continue;
    }
    out << FormatNumber(row.p_cheat) << ',' << FormatNumber(row.p_ban) << ','
        << (row.posterior ? FormatNumber(*row.posterior) : nan) << ','
        << FormatNumber(row.eu_app) << ',' << FormatNumber(row.eu_platform)
        << ',' << RegimeName(row.regime) << '\n';
  }
}

std::vector<CsvRow> ReadSweepCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader) {
    throw Error(fmt::format("csv header must be '{}'", kSweepHeader));
  }
  std::vector<CsvRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = SplitCommas(line);
    if (cells.size() != 8) {
      throw Error(fmt::format("csv line {}: expected 8 columns, got {}",
                              line_no, cells.size()));
    }
    CsvRow row;
    row.axis = cells[0];
    row.value = ParseCell(cells[1], line_no);
    row.p_cheat = ParseCell(cells[2], line_no);
    row.p_ban = ParseCell(cells[3], line_no);
    row.posterior = ParseCell(cells[4], line_no);
    row.eu_app = ParseCell(cells[5], line_no);
    row.eu_platform = ParseCell(cells[6], line_no);
    row.regime = cells[7];
    rows.push_back(std::move(row));
  }
  return rows;
}

void WriteFeeCsv(std::ostream& out, const std::vector<FeeSweepRow>& rows) {
  out << "axis,value,f_star,eu_star,regime,refined\n";
  for (const FeeSweepRow& row : rows) {
    out << ParamName(row.axis) << ',' << FormatNumber(row.value) << ',';
    if (!row.ok) {
      out << "nan,nan,invalid,false\n";
      continue;
    }
    out << FormatNumber(row.optimum.f_star) << ','
        << FormatNumber(row.optimum.eu_star) << ','
        << RegimeName(row.optimum.regime_at_star) << ','
        << (row.optimum.refined ? "true" : "false") << '\n';
  }
}

}  // namespace rankgame
