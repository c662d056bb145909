// Copyright 2026 The qdeco Authors
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
#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qdeco::cli {

const char *const kVersion = "0.1.0";

void Report::add_row(std::vector<Json> row) {
    if (row.size() != columns.size()) throw std::logic_error("report row width does not match its columns");
    rows.push_back(std::move(row));
}

Json number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

namespace {

std::string cell_text(const Json &v) {
    if (v.is_null()) return "";
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
    if (v.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
        return buf;
    }
    return v.dump();
}

}  // namespace

void write_csv(const Report &r, std::ostream &os) {
    os << "# qdeco " << kVersion << "\n";
    os << "# config " << r.config.dump() << "\n";
    for (const auto &[key, value] : r.summary.items()) os << "# summary " << key << "=" << cell_text(value) << "\n";
    for (const auto &w : r.warnings) os << "# warning " << w << "\n";
    for (std::size_t i = 0; i < r.columns.size(); i++) os << (i ? "," : "") << r.columns[i];
    os << "\n";
    for (const auto &row : r.rows) {
        for (std::size_t i = 0; i < row.size(); i++) os << (i ? "," : "") << cell_text(row[i]);
        os << "\n";
    }
}

void write_json(const Report &r, std::ostream &os) {
    Json doc;
    doc["config"] = r.config;
    Json results = Json::array();
    for (const auto &row : r.rows) {
        Json obj = Json::object();
        for (std::size_t i = 0; i < row.size(); i++) obj[r.columns[i]] = row[i];
        results.push_back(std::move(obj));
    }
    doc["results"] = std::move(results);
    doc["summary"] = r.summary;
    doc["warnings"] = r.warnings;
    os << doc.dump(2) << "\n";
}

}  // namespace qdeco::cli
