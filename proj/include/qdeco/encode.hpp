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

#ifndef QDECO_ENCODE_HPP
#define QDECO_ENCODE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qdeco/numeric.hpp"

// Concatenated five-qubit encoding of GHZ blocks under depolarizing noise.
// A level-j logical qubit sees depolarizing noise with effective kt_j.
namespace qdeco::encode {

constexpr std::size_t kMaxLevels = 12;

/// Logical depolarizing parameter after one level of encoding.
double logical_p(double p);

struct Level {
    std::size_t j = 0;
    /// q_j = (3 p_j + 1) / 4 and its complement 1 - q_j, kept separately
    /// because q_j rounds to 1 after two levels.
    double q = 1;
    double eps = 0;
    double log_eps = 0;
    /// From the exact recursion q_j = q^5 + 5 q^4 (1 - q).
    double kt_exact = 0;
    double log10_kt_exact = 0;
    /// From kt_j ~ (7.5 kt)^(2^j) / 7.5.
    double kt_approx = 0;
    double log10_kt_approx = 0;
    std::uint64_t physical_qubits = 1;
};

/// Levels 0..levels for physical kt > 0. Throws CapacityError above 12.
std::vector<Level> level_recursion(double kt, std::size_t levels);

struct Breakeven {
    double p;
    double kt;
};
/// Fixed point of logical_p in (0.5, 1).
Breakeven breakeven(const numeric::Tolerance &tol = {});

/// blockwise M bound for survival 1 - delta, stable for tiny delta.
double block_bound_from_delta(double delta);
/// blockwise M bound at depolarizing time kt.
double block_bound_from_kt(double kt);

enum class Pipeline { approx, exact };

/// Block bound for level-j encoded qubits at physical time kt.
double encoded_block_bound(double kt, std::size_t j, Pipeline pipeline);

/// Physical kt at which a level-j encoded GHZ state of M blocks reaches
/// its PPT bound, using the exact recursion.
numeric::ThresholdResult encoded_lifetime(double M, std::size_t j, const numeric::Tolerance &tol = {});

}  // namespace qdeco::encode

#endif
