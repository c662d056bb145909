// Copyright 2026 The qdeco Authors
// SPDX-License-Identifier: Apache-2.0

#include <bit>
#include <cmath>
#include <numbers>
#include <doctest.h>

#include "qdeco/errors.hpp"
#include "qdeco/graphdiag.hpp"
#include "qdeco/oracle.hpp"
#include "test_util.hpp"

using namespace qdeco;
using namespace qdeco::graphdiag;
using channels::NamedKind;

namespace {

std::vector<double> oracle_lambda(const Graph &g, const channels::PauliChannel &ch) {
    auto s = oracle::dense_graph_state(g);
    oracle::apply_channels(s, {to_matrix(ch)});
    return oracle::graph_diagonal_coefficients(s, g);
}

std::vector<double> oracle_pt(const Graph &g, const channels::PauliChannel &ch, Mask a) {
    auto s = oracle::dense_graph_state(g);
    oracle::apply_channels(s, {to_matrix(ch)});
    return oracle::pt_spectrum(s, a);
}

PauliFamily named(NamedKind k) {
    return [k](double p) { return channels::named_channel(k, p); };
}

double sum(const std::vector<double> &v) {
    double s = 0;
    for (double x : v) s += x;
    return s;
}

}  // namespace

TEST_SUITE("graphdiag") {
    TEST_CASE("lambda for trivial cases") {
        const Graph ring = graphs::parse_lattice_spec("ring:4");
        const auto id = lambda_from_pauli(ring, channels::PauliChannel{});
        CHECK(id[0] == 1);
        for (std::size_t u = 1; u < id.size(); u++) CHECK(id[u] == 0);
        const Graph one(1);
        const auto l1 = lambda_from_pauli(one, channels::named_channel(NamedKind::depolarizing, 0.4));
        CHECK(l1[0] == doctest::Approx(0.7));
        CHECK(l1[1] == doctest::Approx(0.3));
        CHECK(lambda_direct(one, channels::named_channel(NamedKind::depolarizing, 0.4))[1] == doctest::Approx(0.3));
        const Graph r3 = graphs::parse_lattice_spec("ring:3");
        const double p = 0.6;
        const auto deph = lambda_from_pauli(r3, channels::named_channel(NamedKind::dephasing, p));
        CHECK(deph[1] == doctest::Approx(std::pow((1 + p) / 2, 2) * (1 - p) / 2));
    }

    TEST_CASE("fast lambda equals direct sums and the dense oracle") {
        const Graph ring = graphs::parse_lattice_spec("ring:4");
        const auto ch = channels::named_channel(NamedKind::depolarizing, 0.7);
        const auto fast = lambda_from_pauli(ring, ch);
        CHECK(testing::max_abs_diff(fast, lambda_direct(ring, ch)) < 1e-10);
        CHECK(testing::max_abs_diff(fast, oracle_lambda(ring, ch)) < 1e-10);

        std::mt19937_64 rng(testing::test_seed(81));
        for (int trial = 0; trial < 50; trial++) {
            const Graph g = testing::random_graph(rng, 1 + trial % 8, 0.45);
            const auto pc = testing::random_pauli(rng, 0.05);
            const auto f = lambda_from_pauli(g, pc);
            CHECK(testing::max_abs_diff(f, lambda_direct(g, pc)) < 1e-12);
            CHECK(sum(f) == doctest::Approx(1).epsilon(1e-12));
            if (g.n <= 6) CHECK(testing::max_abs_diff(f, oracle_lambda(g, pc)) < 1e-10);
        }
    }

    TEST_CASE("per-vertex channels match the oracle") {
        std::mt19937_64 rng(testing::test_seed(82));
        for (int trial = 0; trial < 10; trial++) {
            const Graph g = testing::random_graph(rng, 5, 0.5);
            std::vector<channels::PauliChannel> chs;
            auto s = oracle::dense_graph_state(g);
            for (std::size_t k = 0; k < g.n; k++) {
                chs.push_back(testing::random_pauli(rng));
                oracle::apply_channel(s, k, to_matrix(chs.back()));
            }
            CHECK(testing::max_abs_diff(lambda_from_pauli(g, chs), oracle::graph_diagonal_coefficients(s, g)) < 1e-10);
        }
    }

    TEST_CASE("lambda errors") {
        Graph w(2);
        w.add_edge(0, 1, 1.0);
        CHECK_THROWS_AS(lambda_from_pauli(w, channels::PauliChannel{}), UnsupportedError);
        CHECK_THROWS_AS(lambda_direct(Graph(2), channels::make_pauli(0, 0.5, 0.5, 0)), UnsupportedError);
        CHECK_THROWS_AS(lambda_direct(Graph(15), channels::PauliChannel{}), CapacityError);
        CHECK_THROWS_AS(lambda_from_pauli(Graph(3), std::vector<channels::PauliChannel>(2)), ValidationError);
    }

    TEST_CASE("Bell pair PT spectrum") {
        Graph g(2);
        g.add_edge(0, 1);
        const auto lam = lambda_from_pauli(g, channels::PauliChannel{});
        for (const auto &s : {pt_spectrum(g, lam, 0b10), pt_single_vertex(g, lam, 0)}) {
            auto v = testing::sorted(s.values);
            CHECK(v[0] == doctest::Approx(-0.5));
            CHECK(v[1] == doctest::Approx(0.5));
            CHECK(v[3] == doctest::Approx(0.5));
        }
    }

    TEST_CASE("isolated vertex leaves the spectrum unchanged") {
        Graph g = graphs::parse_lattice_spec("line:3");
        Graph h(4);
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        const auto lam = lambda_from_pauli(h, channels::named_channel(NamedKind::depolarizing, 0.5));
        const auto s = pt_spectrum(h, lam, 0b1000);
        CHECK(testing::max_abs_diff(s.values, lam) < 1e-15);
        const auto single = pt_single_vertex(h, lam, 3);
        CHECK(single.used_fallback);
        CHECK(testing::max_abs_diff(single.values, lam) < 1e-15);
    }

    TEST_CASE("PT spectra match the dense oracle on every ring-6 bipartition") {
        const Graph g = graphs::parse_lattice_spec("ring:6");
        const auto ch = channels::named_channel(NamedKind::depolarizing, 0.8);
        const auto lam = lambda_from_pauli(g, ch);
        for (const auto &part : graphs::bipartitions(g)) {
            const auto s = pt_spectrum(g, lam, part.a_mask);
            CHECK(testing::max_abs_diff(testing::sorted(s.values), oracle_pt(g, ch, part.a_mask)) < 1e-9);
            CHECK(sum(s.values) == doctest::Approx(1).epsilon(1e-12));
        }
    }

    TEST_CASE("PT spectra match the oracle on random triples") {
        std::mt19937_64 rng(testing::test_seed(83));
        for (int trial = 0; trial < 30; trial++) {
            const Graph g = testing::random_graph(rng, 2 + trial % 6, 0.5);
            const auto ch = testing::random_pauli(rng);
            const Mask a = (rng() % (g.all() - 1)) + 1;
            const auto lam = lambda_from_pauli(g, ch);
            const auto s = pt_spectrum(g, lam, a);
            CHECK(testing::max_abs_diff(testing::sorted(s.values), oracle_pt(g, ch, a)) < 1e-9);
            CHECK(s.min_value == doctest::Approx(testing::sorted(s.values).front()));
            // Both sides of a cut give the same multiset.
            const auto other = pt_spectrum(g, lam, g.all() & ~a);
            CHECK(testing::max_abs_diff(testing::sorted(other.values), testing::sorted(s.values)) < 1e-12);
        }
    }

    TEST_CASE("closed-form one and two vertex spectra equal the general formula") {
        std::mt19937_64 rng(testing::test_seed(84));
        int direct2 = 0;
        for (int trial = 0; trial < 60; trial++) {
            const Graph g = testing::random_graph(rng, 4 + trial % 5, 0.5);
            const auto lam = lambda_from_pauli(g, testing::random_pauli(rng));
            const int k = int(rng() % g.n);
            int l = int(rng() % g.n);
            if (l == k) l = (k + 1) % int(g.n);
            const auto s1 = pt_single_vertex(g, lam, k);
            CHECK(testing::max_abs_diff(s1.values, pt_spectrum(g, lam, Mask{1} << k).values) < 1e-12);
            const auto s2 = pt_two_vertices(g, lam, k, l);
            CHECK(testing::max_abs_diff(s2.values, pt_spectrum(g, lam, (Mask{1} << k) | (Mask{1} << l)).values) < 1e-12);
            if (!s2.used_fallback) direct2++;
        }
        CHECK(direct2 > 10);
        const Graph ring = graphs::parse_lattice_spec("ring:6");
        const auto lam = lambda_from_pauli(ring, testing::random_pauli(rng, 0.2));
        for (int k = 0; k < 6; k++) {
            const auto s = pt_two_vertices(ring, lam, k, (k + 1) % 6);
            CHECK_FALSE(s.used_fallback);
            CHECK(testing::max_abs_diff(s.values, pt_spectrum(ring, lam, (Mask{1} << k) | (Mask{1} << ((k + 1) % 6))).values) < 1e-12);
        }
        CHECK_THROWS_AS(pt_two_vertices(ring, lam, 2, 2), ValidationError);
    }

    TEST_CASE("ring-7 one-vertex minimum sits at U = N_k + k") {
        const Graph g = graphs::parse_lattice_spec("ring:7");
        const auto lam = lambda_from_pauli(g, channels::named_channel(NamedKind::depolarizing, 0.9));
        for (int k = 0; k < 7; k++) {
            const auto s = pt_single_vertex(g, lam, k);
            CHECK(s.argmin == (graphs::neighborhood(g, k) | (Mask{1} << k)));
        }
    }

    TEST_CASE("plans are reusable and cache the GF(2) rank") {
        const Graph g = graphs::parse_lattice_spec("ring:6");
        const auto plan = make_pt_plan(g, 0b000110);
        CHECK(plan.rank == 2);
        CHECK(plan.terms.size() == 16);
        for (double p : {0.3, 0.7}) {
            const auto lam = lambda_from_pauli(g, channels::named_channel(NamedKind::depolarizing, p));
            CHECK(apply_pt_plan(plan, lam).values == pt_spectrum(g, lam, 0b000110).values);
        }
        CHECK_THROWS_AS(apply_pt_plan(plan, std::vector<double>(8)), ValidationError);
    }

    TEST_CASE("parameter maps and estimate roots") {
        CHECK(depolarizing_p_from_q(0.5) == doctest::Approx(0.2));
        CHECK(depolarizing_p_from_q(depolarizing_q(0.37)) == doctest::Approx(0.37));
        CHECK(dephasing_p_from_q(dephasing_q(0.37)) == doctest::Approx(0.37));
        const auto single = estimate_single_root();
        REQUIRE(single.sign_change_found);
        CHECK(single.value == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(depolarizing_p_from_q(single.value) == doctest::Approx(0.2).epsilon(1e-8));
        const auto pair = estimate_pair_root();
        CHECK(std::abs(pair.value - 0.8457) < 5e-4);
        CHECK(std::abs(depolarizing_p_from_q(pair.value) - 0.0436) < 5e-4);
        const auto deph = estimate_dephasing_root(2);
        CHECK(std::abs(deph.value - 0.7549) < 5e-4);
        CHECK(std::abs(dephasing_p_from_q(deph.value) - 0.1397) < 5e-4);
        // The single-split estimate is weaker than entanglement breaking.
        CHECK(depolarizing_p_from_q(single.value) < 1.0 / 3);
        CHECK_THROWS_AS(estimate_dephasing_root(0), ValidationError);
    }

    TEST_CASE("estimate bounds hold on the actual spectra") {
        std::mt19937_64 rng(testing::test_seed(85));
        for (int trial = 0; trial < 20; trial++) {
            const Graph g = testing::random_graph(rng, 6, 0.5);
            const double p = 0.02 + 0.18 * (trial / 20.0);
            const auto ch = channels::named_channel(NamedKind::depolarizing, p);
            const auto lam = lambda_from_pauli(g, ch);
            const double q = depolarizing_q(p);
            CHECK(lambda_estimation_check(g, lam, q));
            for (int k = 0; k < int(g.n); k++) {
                const auto s = pt_single_vertex(g, lam, k);
                // The one-vertex formula carries an overall 1/2; only the sign of the factor matters.
                for (std::size_t u = 0; u < lam.size(); u++)
                    CHECK(s.values[u] >= 0.5 * estimate_single(q) * lam[u] - 1e-15);
            }
        }
        const Graph k4 = graphs::parse_lattice_spec("complete:4");
        CHECK(lambda_estimation_check(k4, lambda_from_pauli(k4, channels::make_pauli(0.7, 0.1, 0.1, 0.1)), 0.1 / 0.7));
        const Graph r5 = graphs::parse_lattice_spec("ring:5");
        CHECK(lambda_estimation_check(r5, lambda_from_pauli(r5, channels::named_channel(NamedKind::depolarizing, 0.6)),
                                      depolarizing_q(0.6)));
    }

    TEST_CASE("partition scans") {
        const Graph g = graphs::parse_lattice_spec("ring:6");
        const auto scan = scan_partitions(g, named(NamedKind::depolarizing), {}, 4);
        CHECK(scan.partitions.size() == 31);
        REQUIRE(scan.first_ppt);
        REQUIRE(scan.last_ppt);
        const auto &first = scan.partitions[*scan.first_ppt];
        const auto &last = scan.partitions[*scan.last_ppt];
        CHECK(first.p_crit >= last.p_crit);
        CHECK(std::popcount(last.part.a_mask) == 1);
        // Reproducible regardless of worker count.
        const auto serial = scan_partitions(g, named(NamedKind::depolarizing), {}, 1);
        for (std::size_t i = 0; i < 31; i++) {
            CHECK(serial.partitions[i].part.a_mask == scan.partitions[i].part.a_mask);
            CHECK(serial.partitions[i].p_crit == scan.partitions[i].p_crit);
        }
        // The margin changes sign at p_crit on the oracle too.
        const double pc = last.p_crit;
        const auto ch = channels::named_channel(NamedKind::depolarizing, pc * 1.001);
        CHECK(oracle_pt(g, ch, last.part.a_mask).front() < 0);
        const auto below = channels::named_channel(NamedKind::depolarizing, pc * 0.999);
        CHECK(oracle_pt(g, below, last.part.a_mask).front() > -1e-12);
    }

    TEST_CASE("Bell pair depolarizing threshold is 1/sqrt3") {
        Graph g(2);
        g.add_edge(0, 1);
        const auto r = scan_partition(g, 0b10, named(NamedKind::depolarizing));
        REQUIRE(r.status == PartitionStatus::crossing);
        CHECK(r.p_crit == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-8));
    }

    TEST_CASE("disconnected cut is always PPT") {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        const auto r = scan_partition(g, 0b1100, named(NamedKind::depolarizing));
        CHECK(r.status == PartitionStatus::always_ppt);
        CHECK(std::isnan(r.p_crit));
        CHECK(to_string(r.status) == "always_ppt");
    }

    TEST_CASE("ring dephasing first-PPT value") {
        for (std::size_t n : {4, 5, 6}) {
            const Graph g = graphs::make_lattice(graphs::Lattice::ring, {n});
            const auto scan = scan_partitions(g, named(NamedKind::dephasing), {}, 4);
            REQUIRE(scan.first_ppt);
            CHECK(std::abs(scan.partitions[*scan.first_ppt].p_crit - (std::numbers::sqrt2 - 1)) < 1e-3);
        }
    }
}
