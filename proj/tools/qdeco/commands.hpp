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
#ifndef QDECO_TOOLS_COMMANDS_HPP
#define QDECO_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdeco/numeric.hpp"
#include "report.hpp"

namespace qdeco::cli {

/// Inclusive range start:stop:step on the p or the kt axis.
struct Axis {
    bool kt = false;
    double start = 0, stop = 0, step = 1;
};

/// One sample of an axis, carrying both coordinates.
struct Point {
    double p;
    double kt;
};

Axis parse_axis(const std::string &text, bool kt_axis);
std::vector<Point> axis_points(const Axis &a);
double parse_real(const std::string &text);

struct RunConfig {
    std::string command;
    std::string graph;
    std::string channel = "depolarizing";
    std::optional<Axis> sweep;
    std::size_t jobs = 1;
    numeric::Tolerance tol;

    // ghz
    std::size_t n = 0;
    std::string crit = "k=1";
    double t_max = 50;
    // upper
    std::string method = "eb";
    // weighted
    std::optional<Axis> sweep_phi;
    std::string degrees = "2,3,4,5,6,7,8,9,10";
    // encode
    double kt = 0.01;
    std::size_t levels = 6;
    std::optional<double> blocks;
    // oracle-check
    std::uint64_t seed = 1;
    std::size_t trials = 20;
    std::size_t max_n = 6;

    Json to_json() const;
};

Report run_ghz(const RunConfig &c);
Report run_lower(const RunConfig &c);
Report run_upper(const RunConfig &c);
Report run_scan(const RunConfig &c);
Report run_weighted(const RunConfig &c);
Report run_encode(const RunConfig &c);
/// Sets all_passed to false when some deviation exceeds its tolerance.
Report run_oracle_check(const RunConfig &c, bool &all_passed);

}  // namespace qdeco::cli

#endif
