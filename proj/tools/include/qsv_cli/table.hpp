// Copyright 2026 The qsv Authors
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

#ifndef QSV_CLI_TABLE_HPP_
#define QSV_CLI_TABLE_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace qsv::cli {

// Empty cells print as nothing in CSV and null in JSON.
using Cell = std::variant<std::monostate, double, std::uint64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

// %.12g; nan and inf print as "nan", "inf", "-inf".
std::string format_number(double x);

void write_csv(const Table& table, std::ostream& os);

// Array of row objects keyed by column name.
nlohmann::ordered_json to_json(const Table& table);

}  // namespace qsv::cli

#endif  // QSV_CLI_TABLE_HPP_
