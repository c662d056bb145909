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

#ifndef QDECO_GF2_HPP
#define QDECO_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace qdeco::gf2 {

constexpr std::size_t kMaxBits = 64;

/// Bit i set means coordinate i is 1. Bits at or above len are always clear.
struct Gf2Vector {
    std::uint64_t bits = 0;
    std::size_t len = 0;

    bool operator==(const Gf2Vector &) const = default;
    bool get(std::size_t i) const { return (bits >> i) & 1; }
};

/// Row r is a mask over the n_cols column coordinates.
struct Gf2Matrix {
    std::vector<std::uint64_t> rows;
    std::size_t n_cols = 0;

    Gf2Matrix() = default;
    Gf2Matrix(std::size_t n_rows, std::size_t n_cols);
    std::size_t n_rows() const { return rows.size(); }
    void set(std::size_t r, std::size_t c, bool v);
    bool get(std::size_t r, std::size_t c) const { return (rows[r] >> c) & 1; }
};

struct ImageEntry {
    Gf2Vector image;
    /// Numerically smallest x with m * x == image.
    Gf2Vector preimage;
};

Gf2Vector make_vector(std::uint64_t bits, std::size_t len);

std::size_t rank(const Gf2Matrix &m);
/// n_cols - rank(m) vectors of length n_cols spanning {x : m x = 0}.
std::vector<Gf2Vector> kernel_basis(const Gf2Matrix &m);
/// All 2^rank distinct images, sorted by image bits.
std::vector<ImageEntry> image_with_preimages(const Gf2Matrix &m);
/// Every x of length len with dot(x, v) = 0 for all v, ascending.
/// The count is 2^(len - dim span(vs)).
std::vector<Gf2Vector> orthocomplement(const std::vector<Gf2Vector> &vs, std::size_t len);
/// Every element of span(basis), ascending.
std::vector<Gf2Vector> span(const std::vector<Gf2Vector> &basis, std::size_t len);

Gf2Vector matvec(const Gf2Matrix &m, const Gf2Vector &x);
bool dot(const Gf2Vector &a, const Gf2Vector &b);
Gf2Vector symmetric_difference(const Gf2Vector &a, const Gf2Vector &b);

/// Scatter the low popcount(mask) bits of packed onto the set bits of mask.
std::uint64_t deposit(std::uint64_t packed, std::uint64_t mask);
/// Gather the bits of x at the set bits of mask into the low bits.
std::uint64_t extract(std::uint64_t x, std::uint64_t mask);

}  // namespace qdeco::gf2

#endif
