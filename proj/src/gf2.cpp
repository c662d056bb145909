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

#include "qdeco/gf2.hpp"

#include <algorithm>
#include <bit>

#include "qdeco/errors.hpp"

namespace qdeco::gf2 {

namespace {

std::uint64_t low_mask(std::size_t len) { return len >= 64 ? ~0ULL : (1ULL << len) - 1; }

void check_len(std::size_t len) {
    if (len > kMaxBits) {
        throw CapacityError("gf2: vectors are limited to 64 coordinates");
    }
}

/// Basis with distinct leading (highest) bits, each leading bit cleared from all
/// other members. Reducing x greedily against it from the top yields the
/// smallest element of x + span.
std::vector<std::uint64_t> reduced_basis(std::vector<std::uint64_t> vs) {
    std::vector<std::uint64_t> basis;
    for (std::uint64_t v : vs) {
        for (std::uint64_t b : basis) {
            if (v & (1ULL << (63 - std::countl_zero(b)))) {
                v ^= b;
            }
        }
        if (v == 0) {
            continue;
        }
        const std::uint64_t lead = 1ULL << (63 - std::countl_zero(v));
        for (auto &b : basis) {
            if (b & lead) {
                b ^= v;
            }
        }
        basis.push_back(v);
    }
    std::sort(basis.begin(), basis.end(), std::greater<>());
    return basis;
}

std::uint64_t reduce_min(std::uint64_t x, const std::vector<std::uint64_t> &basis) {
    for (std::uint64_t b : basis) {
        if (x & (1ULL << (63 - std::countl_zero(b)))) {
            x ^= b;
        }
    }
    return x;
}

std::vector<std::uint64_t> enumerate_span(const std::vector<std::uint64_t> &basis) {
    std::vector<std::uint64_t> out{0};
    out.reserve(std::size_t{1} << basis.size());
    for (std::uint64_t b : basis) {
        const std::size_t n = out.size();
        for (std::size_t i = 0; i < n; i++) {
            out.push_back(out[i] ^ b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Columns of m as masks over the rows.
std::vector<std::uint64_t> columns(const Gf2Matrix &m) {
    std::vector<std::uint64_t> cols(m.n_cols, 0);
    for (std::size_t r = 0; r < m.n_rows(); r++) {
        for (std::size_t c = 0; c < m.n_cols; c++) {
            if (m.get(r, c)) {
                cols[c] |= 1ULL << r;
            }
        }
    }
    return cols;
}

}  // namespace

Gf2Matrix::Gf2Matrix(std::size_t n_rows, std::size_t n_cols_) : rows(n_rows, 0), n_cols(n_cols_) {
    check_len(n_cols_);
    check_len(n_rows);
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
    if (r >= rows.size() || c >= n_cols) {
        throw ValidationError("gf2: index out of range");
    }
    rows[r] = v ? rows[r] | (1ULL << c) : rows[r] & ~(1ULL << c);
}

Gf2Vector make_vector(std::uint64_t bits, std::size_t len) {
    check_len(len);
    if (bits & ~low_mask(len)) {
        throw ValidationError("gf2: bits set beyond vector length");
    }
    return {bits, len};
}

std::size_t rank(const Gf2Matrix &m) { return reduced_basis(m.rows).size(); }

std::vector<Gf2Vector> kernel_basis(const Gf2Matrix &m) {
    // Row-reduce to RREF keyed on the lowest set bit, then read one kernel
    // vector per free column.
    std::vector<std::uint64_t> rows = m.rows;
    std::vector<int> pivot_of_col(m.n_cols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.n_cols && r < rows.size(); c++) {
        std::size_t p = r;
        while (p < rows.size() && !((rows[p] >> c) & 1)) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); i++) {
            if (i != r && ((rows[i] >> c) & 1)) {
                rows[i] ^= rows[r];
            }
        }
        pivot_of_col[c] = static_cast<int>(r);
        r++;
    }
    std::vector<Gf2Vector> out;
    for (std::size_t f = 0; f < m.n_cols; f++) {
        if (pivot_of_col[f] >= 0) {
            continue;
        }
        std::uint64_t v = 1ULL << f;
        for (std::size_t c = 0; c < m.n_cols; c++) {
            if (pivot_of_col[c] >= 0 && ((rows[pivot_of_col[c]] >> f) & 1)) {
                v |= 1ULL << c;
            }
        }
        out.push_back({v, m.n_cols});
    }
    return out;
}

std::vector<ImageEntry> image_with_preimages(const Gf2Matrix &m) {
    const std::vector<std::uint64_t> cols = columns(m);
    // Track (image, preimage) pairs through elimination on the images.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> basis;
    for (std::size_t c = 0; c < cols.size(); c++) {
        std::uint64_t img = cols[c];
        std::uint64_t pre = 1ULL << c;
        for (const auto &[bi, bp] : basis) {
            if (img & (1ULL << (63 - std::countl_zero(bi)))) {
                img ^= bi;
                pre ^= bp;
            }
        }
        if (img != 0) {
            basis.emplace_back(img, pre);
        }
    }
    std::vector<std::uint64_t> ker;
    for (const auto &k : kernel_basis(m)) {
        ker.push_back(k.bits);
    }
    ker = reduced_basis(ker);

    std::vector<ImageEntry> out;
    out.reserve(std::size_t{1} << basis.size());
    for (std::uint64_t sel = 0; sel < (1ULL << basis.size()); sel++) {
        std::uint64_t img = 0, pre = 0;
        for (std::size_t i = 0; i < basis.size(); i++) {
            if ((sel >> i) & 1) {
                img ^= basis[i].first;
                pre ^= basis[i].second;
            }
        }
        out.push_back({{img, m.n_rows()}, {reduce_min(pre, ker), m.n_cols}});
    }
    std::sort(out.begin(), out.end(),
              [](const ImageEntry &a, const ImageEntry &b) { return a.image.bits < b.image.bits; });
    return out;
}

std::vector<Gf2Vector> orthocomplement(const std::vector<Gf2Vector> &vs, std::size_t len) {
    check_len(len);
    Gf2Matrix m(0, len);
    for (const auto &v : vs) {
        if (v.len != len) {
            throw ValidationError("orthocomplement: vector length mismatch");
        }
        m.rows.push_back(v.bits);
    }
    return span(kernel_basis(m), len);
}

std::vector<Gf2Vector> span(const std::vector<Gf2Vector> &basis, std::size_t len) {
    check_len(len);
    std::vector<std::uint64_t> raw;
    for (const auto &b : basis) {
        if (b.len != len) {
            throw ValidationError("span: vector length mismatch");
        }
        raw.push_back(b.bits);
    }
    std::vector<Gf2Vector> out;
    for (std::uint64_t x : enumerate_span(reduced_basis(raw))) {
        out.push_back({x, len});
    }
    return out;
}

Gf2Vector matvec(const Gf2Matrix &m, const Gf2Vector &x) {
    if (x.len != m.n_cols) {
        throw ValidationError("matvec: vector length does not match column count");
    }
    std::uint64_t y = 0;
    for (std::size_t r = 0; r < m.n_rows(); r++) {
        y |= static_cast<std::uint64_t>(std::popcount(m.rows[r] & x.bits) & 1) << r;
    }
    return {y, m.n_rows()};
}

bool dot(const Gf2Vector &a, const Gf2Vector &b) {
    if (a.len != b.len) {
        throw ValidationError("dot: length mismatch");
    }
    return std::popcount(a.bits & b.bits) & 1;
}

Gf2Vector symmetric_difference(const Gf2Vector &a, const Gf2Vector &b) {
    if (a.len != b.len) {
        throw ValidationError("symmetric_difference: length mismatch");
    }
    return {a.bits ^ b.bits, a.len};
}

std::uint64_t deposit(std::uint64_t packed, std::uint64_t mask) {
    std::uint64_t out = 0;
    for (std::uint64_t bit = 1; mask; bit <<= 1) {
        const std::uint64_t low = mask & -mask;
        if (packed & bit) {
            out |= low;
        }
        mask ^= low;
    }
    return out;
}

std::uint64_t extract(std::uint64_t x, std::uint64_t mask) {
    std::uint64_t out = 0;
    for (std::uint64_t bit = 1; mask; bit <<= 1) {
        const std::uint64_t low = mask & -mask;
        if (x & low) {
            out |= bit;
        }
        mask ^= low;
    }
    return out;
}

}  // namespace qdeco::gf2
