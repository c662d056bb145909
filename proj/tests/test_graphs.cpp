// Copyright 2026 The qdeco Authors
// SPDX-License-Identifier: Apache-2.0

#include <bit>
#include <numbers>
#include <doctest.h>

#include "qdeco/errors.hpp"
#include "qdeco/graphs.hpp"
#include "test_util.hpp"

using namespace qdeco;
using namespace qdeco::graphs;

TEST_SUITE("graphs") {
    TEST_CASE("lattice spec mini-language") {
        const Graph ring = parse_lattice_spec("ring:6");
        CHECK(ring.n == 6);
        CHECK(ring.edge_count() == 6);
        for (int k = 0; k < 6; k++) CHECK(degree(ring, k) == 2);

        const Graph line = parse_lattice_spec("line:5");
        CHECK(line.edge_count() == 4);
        CHECK(degree(line, 0) == 1);

        const Graph grid = parse_lattice_spec("grid2d:4x3");
        CHECK(grid.n == 12);
        CHECK(grid.edge_count() == 3 * 3 + 4 * 2);
        CHECK(grid.has_edge(0, 1));
        CHECK(grid.has_edge(0, 4));
        CHECK_FALSE(grid.has_edge(3, 4));

        const Graph cube = parse_lattice_spec("grid3d:2x2x2");
        CHECK(cube.edge_count() == 12);
        for (int k = 0; k < 8; k++) CHECK(degree(cube, k) == 3);

        const Graph star = parse_lattice_spec("star:5");
        CHECK(degree(star, 0) == 4);
        CHECK(parse_lattice_spec("complete:5").edge_count() == 10);

        CHECK_THROWS_AS(parse_lattice_spec("ring"), ValidationError);
        CHECK_THROWS_AS(parse_lattice_spec("ring:2"), ValidationError);
        CHECK_THROWS_AS(parse_lattice_spec("blob:3"), ValidationError);
        CHECK_THROWS_AS(parse_lattice_spec("grid2d:4"), ValidationError);
        CHECK_THROWS_AS(parse_lattice_spec("grid2d:4xq"), ValidationError);
        CHECK_THROWS_AS(parse_lattice_spec("grid2d:5x5"), CapacityError);
        CHECK_THROWS_AS(parse_lattice_spec("line:0"), ValidationError);
    }

    TEST_CASE("neighborhoods and gamma") {
        const Graph ring = parse_lattice_spec("ring:5");
        CHECK(neighborhood(ring, 0) == 0b10010);
        CHECK(symdiff_neighborhoods(ring, 0, 1) == 0b10111);
        // gamma is linear: the image of a sum is the sum of images.
        std::mt19937_64 rng(testing::test_seed(41));
        for (int trial = 0; trial < 50; trial++) {
            const Graph g = testing::random_graph(rng, 9, 0.4);
            const Mask a = rng() & g.all(), b = rng() & g.all();
            CHECK(gamma(g, a ^ b) == (gamma(g, a) ^ gamma(g, b)));
            for (int k = 0; k < 9; k++) CHECK(gamma(g, Mask{1} << k) == neighborhood(g, k));
        }
    }

    TEST_CASE("bipartitions are canonical and complete") {
        for (std::size_t n = 2; n <= 10; n++) {
            Graph g(n);
            const auto parts = bipartitions(g);
            CHECK(parts.size() == (std::size_t{1} << (n - 1)) - 1);
            for (const auto &p : parts) {
                CHECK((p.a_mask & 1) == 0);
                CHECK(p.a_mask != 0);
                CHECK((p.a_mask | p.complement()) == g.all());
            }
        }
        Graph g(4);
        CHECK(make_bipartition(g, 0b0011).a_mask == 0b1100);
        CHECK(make_bipartition(g, 0b0100).a_mask == 0b0100);
        CHECK_THROWS_AS(make_bipartition(g, 0), ValidationError);
        CHECK_THROWS_AS(make_bipartition(g, 0b1111), ValidationError);
        CHECK_THROWS_AS(bipartitions(Graph(21)), CapacityError);
    }

    TEST_CASE("M-partitions") {
        CHECK_NOTHROW(validate(MPartition{{0b01, 0b10}, 2}));
        CHECK_THROWS_AS(validate(MPartition{{0b011, 0b110}, 3}), ValidationError);
        CHECK_THROWS_AS(validate(MPartition{{0b01}, 2}), ValidationError);
        CHECK_THROWS_AS(validate(MPartition{{0b11, 0}, 2}), ValidationError);
    }

    TEST_CASE("edges and weights") {
        Graph g(3);
        g.add_edge(0, 1);
        CHECK_FALSE(g.weighted());
        g.add_edge(1, 2, std::numbers::pi / 2);
        CHECK(g.weighted());
        CHECK(g.phi(2, 1) == doctest::Approx(std::numbers::pi / 2));
        CHECK(g.phi(0, 1) == doctest::Approx(std::numbers::pi));
        CHECK(g.connected());
        CHECK_THROWS_AS(g.add_edge(0, 0), ValidationError);
        CHECK_THROWS_AS(g.add_edge(0, 3), ValidationError);
        CHECK_THROWS_AS(g.add_edge(0, 2, 0.0), ValidationError);
        CHECK_THROWS_AS(g.add_edge(0, 2, 4.0), ValidationError);
        CHECK_FALSE(Graph(2).connected());
        CHECK_THROWS_AS(Graph(25), CapacityError);
    }

    TEST_CASE("graph JSON round trip and errors") {
        std::mt19937_64 rng(testing::test_seed(42));
        for (int trial = 0; trial < 30; trial++) {
            Graph g = testing::random_graph(rng, 7, 0.5);
            if (trial % 2) {
                auto es = g.edges();
                if (!es.empty()) {
                    Graph w(7);
                    for (auto [u, v] : es) w.add_edge(u, v, 0.1 + (u + v) * 0.2);
                    g = w;
                }
            }
            const Graph back = graph_from_json(graph_to_json(g));
            CHECK(back.adj == g.adj);
            for (auto [u, v] : g.edges()) CHECK(back.phi(u, v) == doctest::Approx(g.phi(u, v)));
        }
        CHECK_THROWS_AS(graph_from_json(R"({"edges":[]})"), ValidationError);
        CHECK_THROWS_AS(graph_from_json(R"({"n":3,"edges":[[1,0]]})"), ValidationError);
        CHECK_THROWS_AS(graph_from_json(R"({"n":3,"edges":[[0,1],[0,1]]})"), ValidationError);
        CHECK_THROWS_AS(graph_from_json(R"({"n":3,"edges":[[0,5]]})"), ValidationError);
        CHECK_THROWS_AS(graph_from_json(R"({"n":3,"edges":[[0,1,7.0]]})"), ValidationError);
        try {
            graph_from_json(R"({"n":3,"edges":[[0,1],[2,1]]})");
            FAIL("expected a validation error");
        } catch (const ValidationError &e) {
            CHECK(std::string(e.what()).find("edges[1]") != std::string::npos);
        }
        CHECK(load_graph(R"({"n":2,"edges":[[0,1]]})").edge_count() == 1);
        CHECK(load_graph("ring:4").n == 4);
    }
}
