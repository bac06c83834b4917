// Copyright 2026 The robustcnot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "robustcnot/exchange.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "robustcnot/csv.hpp"
#include "robustcnot/errors.hpp"

namespace robustcnot::xchg {

void ExchangeTable::validate(const std::string &source) const {
  if (rows.size() < 2) throw FormatError(source, 0, "exchange table needs at least 2 rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!(rows[i].j_ueV > 0.0) || !std::isfinite(rows[i].j_ueV))
      throw FormatError(source, 0, "row " + std::to_string(i + 1) + ": J must be positive");
    if (!std::isfinite(rows[i].separation_nm))
      throw FormatError(source, 0, "row " + std::to_string(i + 1) + ": separation must be finite");
    if (i > 0 && !(rows[i].separation_nm > rows[i - 1].separation_nm))
      throw FormatError(source, 0,
                        "row " + std::to_string(i + 1) + ": separations must be strictly increasing");
  }
  for (const auto &r : rows)
    if (r.separation_nm == target_separation_nm) return;
  throw FormatError(source, 0, "target separation " + csv::format_exact(target_separation_nm) + " nm matches no row");
}

std::size_t ExchangeTable::target_index() const {
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].separation_nm == target_separation_nm) return i;
  throw std::out_of_range("target separation matches no row");
}

ExchangeTable parse_table(std::istream &in, const std::string &source, std::optional<double> target_separation_nm) {
  ExchangeTable table;
  std::optional<double> target_from_file;
  std::optional<double> target_from_tag;
  bool have_header = false;
  bool have_tag_column = false;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const auto text = csv::trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      const auto body = csv::trim(text.substr(1));
      const auto eq = body.find('=');
      if (eq == std::string_view::npos) continue;
      const auto key = csv::trim(body.substr(0, eq));
      const auto value = csv::trim(body.substr(eq + 1));
      if (key == "direction") {
        table.direction = std::string(value);
      } else if (key == "bias") {
        table.bias = std::string(value);
      } else if (key == "target_separation_nm") {
        target_from_file = csv::parse_real(value);
        if (!target_from_file) throw FormatError(source, line_no, "bad target_separation_nm");
      }
      continue;
    }

    const auto fields = csv::split(text, ',');
    if (!have_header) {
      if (fields.size() < 2 || csv::trim(fields[0]) != "separation_nm" || csv::trim(fields[1]) != "J_ueV" ||
          fields.size() > 3 || (fields.size() == 3 && csv::trim(fields[2]) != "tag"))
        throw FormatError(source, line_no, "expected header 'separation_nm,J_ueV[,tag]'");
      have_header = true;
      have_tag_column = fields.size() == 3;
      continue;
    }

    if (fields.size() < 2 || fields.size() > (have_tag_column ? 3u : 2u))
      throw FormatError(source, line_no, "wrong number of fields");
    ExchangeRow row;
    auto sep = csv::parse_real(fields[0]);
    auto j = csv::parse_real(fields[1]);
    if (!sep) throw FormatError(source, line_no, "bad separation '" + std::string(fields[0]) + "'");
    if (!j) throw FormatError(source, line_no, "bad J '" + std::string(fields[1]) + "'");
    if (!std::isfinite(*sep)) throw FormatError(source, line_no, "separation must be finite");
    if (!(*j > 0.0) || !std::isfinite(*j)) throw FormatError(source, line_no, "J must be positive");
    if (!table.rows.empty() && !(*sep > table.rows.back().separation_nm))
      throw FormatError(source, line_no, "separations must be strictly increasing (unsorted or duplicate row)");
    row.separation_nm = *sep;
    row.j_ueV = *j;
    if (fields.size() == 3) row.tag = std::string(csv::trim(fields[2]));
    if (row.tag == "target") {
      if (target_from_tag) throw FormatError(source, line_no, "more than one row tagged 'target'");
      target_from_tag = row.separation_nm;
    }
    table.rows.push_back(std::move(row));
  }

  if (!have_header) throw FormatError(source, 0, "missing header 'separation_nm,J_ueV[,tag]'");
  if (target_separation_nm)
    table.target_separation_nm = *target_separation_nm;
  else if (target_from_file)
    table.target_separation_nm = *target_from_file;
  else if (target_from_tag)
    table.target_separation_nm = *target_from_tag;
  else
    throw FormatError(source, 0, "no target row (tag a row 'target' or pass a target separation)");
  table.validate(source);
  return table;
}

ExchangeTable load_table(const std::filesystem::path &path, std::optional<double> target_separation_nm) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string(), 0, "cannot open exchange table");
  return parse_table(in, path.string(), target_separation_nm);
}

void write_table(std::ostream &out, const ExchangeTable &table) {
  if (!table.direction.empty()) out << "# direction=" << table.direction << '\n';
  if (!table.bias.empty()) out << "# bias=" << table.bias << '\n';
  out << "# target_separation_nm=" << csv::format_exact(table.target_separation_nm) << '\n';
  out << "separation_nm,J_ueV,tag\n";
  for (const auto &r : table.rows)
    out << csv::format_exact(r.separation_nm) << ',' << csv::format_exact(r.j_ueV) << ',' << r.tag << '\n';
}

ExchangeTable sample_table() {
  ExchangeTable t;
  t.direction = "[100]";
  t.bias = "V=0";
  t.target_separation_nm = 20.634;
  t.rows = {
      {18.462, 0.3102, "fixture"}, {19.548, 0.264, "fixture"},  {20.634, 0.132, "target"},
      {21.720, 0.0673, "anchor"},  {22.806, 0.0455, "fixture"}, {23.892, 0.0521, "fixture"},
      {24.978, 0.0318, "fixture"}, {26.064, 0.0247, "fixture"}, {27.150, 0.0139, "fixture"},
  };
  return t;
}

double delta0(double j_ueV, double j0_ueV) {
  if (!(j0_ueV > 0.0)) throw std::invalid_argument("J0 must be positive");
  return j_ueV / j0_ueV - 1.0;
}

std::vector<SeparationPoint> fidelity_vs_separation(const ExchangeTable &table, int level, int slices) {
  const double j0 = table.j0();
  const pulse::PulseSeq seq = pulse::build_cnot(level, slices);
  std::vector<SeparationPoint> out;
  out.reserve(table.rows.size());
  for (const auto &row : table.rows) {
    const double d = delta0(row.j_ueV, j0);
    out.push_back({row.separation_nm, row.j_ueV, d, level, pulse::cnot_error(seq, pulse::ErrorModel(d))});
  }
  return out;
}

}  // namespace robustcnot::xchg
