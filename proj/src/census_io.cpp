// Copyright 2026 The Matroid Census Authors.
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

#include <istream>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>

#include "mcensus/enumeration.hpp"
#include "mcensus/errors.hpp"

namespace mcensus {

void write_census(const Census& census, std::ostream& out) {
  out << "matroid-census v1 n=" << census.n() << " r=" << census.r()
      << " order=colex count=" << census.size() << '\n';
  for (const BasisFamily& f : census.families()) out << f.to_hex() << '\n';
}

std::string census_to_string(const Census& census) {
  std::ostringstream out;
  write_census(census, out);
  return out.str();
}

CensusFile parse_census_file(std::istream& in) {
  static const std::regex kHeader(
      R"(matroid-census v1 n=(0|[1-9][0-9]{0,2}) r=(0|[1-9][0-9]{0,2}) order=colex count=(0|[1-9][0-9]{0,17}))");
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  std::smatch m;
  if (!std::regex_match(line, m, kHeader)) throw ParseError(1, "malformed header");

  CensusFile file;
  file.n = std::stoi(m[1].str());
  file.r = std::stoi(m[2].str());
  const std::uint64_t count = std::stoull(m[3].str());
  if (file.n >= kMaxGroundSet) throw ParseError(1, "n out of range");
  try {
    (void)BasisFamily::hex_digits(file.n, file.r);
  } catch (const std::exception& e) {
    throw ParseError(1, e.what());
  }

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (file.rows.size() == count) throw ParseError(line_no, "more rows than the declared count");
    try {
      file.rows.push_back({line_no, BasisFamily::from_hex(file.n, file.r, line)});
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (file.rows.size() > 1 &&
        !value_less(file.rows[file.rows.size() - 2].family, file.rows.back().family)) {
      throw ParseError(line_no, "rows are not strictly ascending");
    }
  }
  if (file.rows.size() != count) {
    throw ParseError(0, "declared count=" + std::to_string(count) + " but found " +
                            std::to_string(file.rows.size()) + " rows");
  }
  return file;
}

Census read_census(std::istream& in) {
  CensusFile file = parse_census_file(in);
  if (file.rows.empty() || !file.rows.front().family.empty()) {
    throw ParseError(file.rows.empty() ? 0 : file.rows.front().line, "census lacks the empty family");
  }
  std::vector<BasisFamily> families;
  families.reserve(file.rows.size());
  for (CensusFileRow& row : file.rows) {
    if (auto v = exchange_witness(row.family)) {
      throw NotAMatroidError("line " + std::to_string(row.line) +
                             ": family violates the exchange axiom at element " +
                             std::to_string(v->element));
    }
    families.push_back(std::move(row.family));
  }
  return Census(file.n, file.r, std::nullopt, std::move(families));
}

}  // namespace mcensus
