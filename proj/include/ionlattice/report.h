// Copyright 2026 The ionlattice Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ionlattice {

// Locale-independent formatting. precision == 0 gives the shortest string that
// parses back to the same double; otherwise `precision` significant digits.
std::string format_number(double value, int precision = 0);

using Cell = std::variant<double, std::int64_t, bool, std::string>;

// A named-column table; every CSV emission starts with the header row.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

void write_csv(std::ostream &out, const Table &table, int precision = 0);

// Everything a subcommand emits besides its payload. The timestamp lives only
// here so payload files stay byte-identical between runs.
struct ReportMetadata {
    std::string tool_version;
    std::optional<std::uint64_t> seed;
    std::string timestamp;
};

struct ReportRecord {
    std::string subcommand;
    std::vector<std::pair<std::string, std::string>> inputs;
    Table payload;
    ReportMetadata metadata;
};

// JSON sidecar with subcommand, input echo and metadata.
std::string metadata_json(const ReportRecord &record);

// Current UTC time as ISO-8601.
std::string utc_timestamp();

}  // namespace ionlattice
