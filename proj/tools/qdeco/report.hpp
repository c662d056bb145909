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
#ifndef QDECO_TOOLS_REPORT_HPP
#define QDECO_TOOLS_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace qdeco::cli {

using Json = nlohmann::ordered_json;

/// Tabular result of one subcommand. Every row has one cell per column.
struct Report {
    Json config = Json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;
    Json summary = Json::object();
    std::vector<std::string> warnings;

    void add_row(std::vector<Json> row);
};

enum class Format { csv, json };

/// Non-finite numbers become strings so both formats stay lossless.
Json number(double x);

void write_csv(const Report &r, std::ostream &os);
void write_json(const Report &r, std::ostream &os);

extern const char *const kVersion;

}  // namespace qdeco::cli

#endif
