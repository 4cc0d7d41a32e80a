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

#include "ionlattice/report.h"

#include <array>
#include <charconv>
#include <chrono>
#include <ctime>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace ionlattice {

std::string format_number(double value, int precision) {
    std::array<char, 64> buf{};
    std::to_chars_result r;
    if (precision <= 0) {
        r = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    } else {
        r = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, precision);
    }
    if (r.ec != std::errc()) {
        throw std::runtime_error("number formatting failed");
    }
    return std::string(buf.data(), r.ptr);
}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::invalid_argument("row has " + std::to_string(row.size()) + " cells, table has " +
                                    std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

namespace {

struct CellWriter {
    std::ostream &out;
    int precision;
    void operator()(double v) const { out << format_number(v, precision); }
    void operator()(std::int64_t v) const { out << v; }
    void operator()(bool v) const { out << (v ? 1 : 0); }
    void operator()(const std::string &v) const { out << v; }
};

}  // namespace

void write_csv(std::ostream &out, const Table &table, int precision) {
    for (size_t k = 0; k < table.columns.size(); ++k) {
        out << (k ? "," : "") << table.columns[k];
    }
    out << "\n";
    for (const auto &row : table.rows) {
        for (size_t k = 0; k < row.size(); ++k) {
            if (k) {
                out << ",";
            }
            std::visit(CellWriter{out, precision}, row[k]);
        }
        out << "\n";
    }
}

std::string metadata_json(const ReportRecord &record) {
    nlohmann::ordered_json j;
    j["subcommand"] = record.subcommand;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto &[k, v] : record.inputs) {
        inputs[k] = v;
    }
    j["inputs"] = inputs;
    j["columns"] = record.payload.columns;
    j["rows"] = record.payload.rows.size();
    j["tool_version"] = record.metadata.tool_version;
    if (record.metadata.seed) {
        j["seed"] = *record.metadata.seed;
    }
    j["timestamp"] = record.metadata.timestamp;
    return j.dump(2) + "\n";
}

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::array<char, 32> buf{};
    std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf.data();
}

}  // namespace ionlattice
