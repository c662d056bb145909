// Copyright 2026 The qdeco Authors
// SPDX-License-Identifier: Apache-2.0

#include <bit>
#include <doctest.h>
#include <map>
#include <set>

#include "qdeco/errors.hpp"
#include "qdeco/gf2.hpp"
#include "qdeco/graphs.hpp"
#include "test_util.hpp"

using namespace qdeco;
using gf2::Gf2Matrix;
using gf2::Gf2Vector;

namespace {

/// Gamma' restricted to columns in A and rows in A^c; row r is vertex r of A^c
/// in ascending order.
Gf2Matrix cut_matrix(const graphs::Graph &g, graphs::Mask a) {
    std::vector<int> cols, rows;
    for (std::size_t v = 0; v < g.n; v++) ((a >> v) & 1 ? cols : rows).push_back(int(v));
    Gf2Matrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); r++)
        for (std::size_t c = 0; c < cols.size(); c++) m.set(r, c, g.has_edge(rows[r], cols[c]));
    return m;
}

std::uint64_t brute_apply(const Gf2Matrix &m, std::uint64_t x) {
    std::uint64_t y = 0;
    for (std::size_t r = 0; r < m.n_rows(); r++) {
        int parity = 0;
        for (std::size_t c = 0; c < m.n_cols; c++) parity ^= m.get(r, c) && ((x >> c) & 1);
        y |= std::uint64_t(parity) << r;
    }
    return y;
}

Gf2Matrix random_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols) {
    Gf2Matrix m(rows, cols);
    std::bernoulli_distribution coin(0.4);
    for (std::size_t r = 0; r < rows; r++)
        for (std::size_t c = 0; c < cols; c++) m.set(r, c, coin(rng));
    return m;
}

}  // namespace

TEST_SUITE("gf2") {
    TEST_CASE("ring-6 cut between {0,1} and the rest") {
        const auto g = graphs::make_lattice(graphs::Lattice::ring, {6});
        const Gf2Matrix m = cut_matrix(g, 0b000011);
        CHECK(m.n_rows() == 4);
        CHECK(m.n_cols == 2);
        CHECK(gf2::rank(m) == 2);
        CHECK(gf2::image_with_preimages(m).size() == 4);
        CHECK(gf2::kernel_basis(m).empty());
    }

    TEST_CASE("star with all leaves on one side") {
        for (std::size_t n : {3, 5, 8}) {
            const auto g = graphs::make_lattice(graphs::Lattice::star, {n});
            const Gf2Matrix m = cut_matrix(g, g.all() & ~graphs::Mask{1});
            CHECK(gf2::rank(m) == 1);
            CHECK(gf2::kernel_basis(m).size() == n - 2);
        }
    }

    TEST_CASE("orthocomplement of {101}") {
        const auto perp = gf2::orthocomplement({gf2::make_vector(0b101, 3)}, 3);
        std::vector<std::uint64_t> bits;
        for (const auto &v : perp) bits.push_back(v.bits);
        CHECK(bits == std::vector<std::uint64_t>{0b000, 0b010, 0b101, 0b111});
    }

    TEST_CASE("matvec with a ring-4 adjacency") {
        const auto g = graphs::make_lattice(graphs::Lattice::ring, {4});
        Gf2Matrix m(4, 4);
        m.rows = g.adj;
        CHECK(gf2::matvec(m, gf2::make_vector(0b0001, 4)).bits == 0b1010);
    }

    TEST_CASE("length mismatches and overflow are rejected") {
        CHECK_THROWS_AS(gf2::symmetric_difference({1, 3}, {1, 4}), ValidationError);
        CHECK_THROWS_AS(gf2::dot({1, 3}, {1, 4}), ValidationError);
        CHECK_THROWS_AS(gf2::make_vector(0b1000, 3), ValidationError);
        CHECK_THROWS_AS(gf2::make_vector(0, 65), CapacityError);
        CHECK(gf2::symmetric_difference({0b110, 3}, {0b011, 3}).bits == 0b101);
    }

    TEST_CASE("rank, kernel and image agree with brute force") {
        std::mt19937_64 rng(testing::test_seed(21));
        for (int trial = 0; trial < 300; trial++) {
            const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 10;
            const Gf2Matrix m = random_matrix(rng, rows, cols);

            std::map<std::uint64_t, std::uint64_t> first_preimage;
            std::set<std::uint64_t> kernel;
            for (std::uint64_t x = 0; x < (1ULL << cols); x++) {
                const std::uint64_t y = brute_apply(m, x);
                first_preimage.emplace(y, x);
                if (y == 0) kernel.insert(x);
                CHECK(gf2::matvec(m, {x, cols}).bits == y);
            }
            const std::size_t r = gf2::rank(m);
            CHECK(first_preimage.size() == (1ULL << r));

            const auto kb = gf2::kernel_basis(m);
            CHECK(kb.size() == cols - r);
            std::set<std::uint64_t> spanned;
            for (const auto &v : gf2::span(kb, cols)) spanned.insert(v.bits);
            CHECK(spanned == kernel);

            const auto img = gf2::image_with_preimages(m);
            REQUIRE(img.size() == first_preimage.size());
            for (const auto &e : img) {
                REQUIRE(first_preimage.count(e.image.bits));
                CHECK(e.preimage.bits == first_preimage[e.image.bits]);
            }
        }
    }

    TEST_CASE("orthocomplement is exhaustive up to length 12") {
        std::mt19937_64 rng(testing::test_seed(22));
        for (int trial = 0; trial < 100; trial++) {
            const std::size_t len = 1 + rng() % 12;
            std::vector<Gf2Vector> vs;
            for (std::size_t i = 0, k = rng() % 5; i < k; i++) vs.push_back({rng() & ((1ULL << len) - 1), len});
            std::vector<std::uint64_t> want;
            for (std::uint64_t x = 0; x < (1ULL << len); x++) {
                bool ok = true;
                for (const auto &v : vs) ok &= (std::popcount(x & v.bits) % 2) == 0;
                if (ok) want.push_back(x);
            }
            std::vector<std::uint64_t> got;
            for (const auto &v : gf2::orthocomplement(vs, len)) got.push_back(v.bits);
            CHECK(got == want);
            Gf2Matrix m(0, len);
            for (const auto &v : vs) m.rows.push_back(v.bits);
            CHECK(got.size() == (1ULL << (len - gf2::rank(m))));
        }
    }

    TEST_CASE("deposit and extract are inverse on the mask") {
        std::mt19937_64 rng(testing::test_seed(23));
        for (int trial = 0; trial < 1000; trial++) {
            const std::uint64_t mask = rng() & rng();
            const std::uint64_t x = rng() & mask;
            CHECK(gf2::deposit(gf2::extract(x, mask), mask) == x);
            const std::uint64_t packed = rng() & ((std::popcount(mask) == 64) ? ~0ULL : ((1ULL << std::popcount(mask)) - 1));
            CHECK(gf2::extract(gf2::deposit(packed, mask), mask) == packed);
        }
    }
}
