// Copyright 2026 The qdeco Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QDECO_TEST_UTIL_HPP
#define QDECO_TEST_UTIL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "qdeco/channels.hpp"
#include "qdeco/graphs.hpp"
#include "qdeco/numeric.hpp"

namespace qdeco::testing {

/// QDECO_TEST_SEED overrides the default so failures can be replayed.
inline std::uint64_t test_seed(std::uint64_t fallback) {
    if (const char *s = std::getenv("QDECO_TEST_SEED")) return std::strtoull(s, nullptr, 10);
    return fallback;
}

inline channels::PauliChannel random_pauli(std::mt19937_64 &rng, double min_p0 = 0.0) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::array<double, 4> w;
    for (double &x : w) x = u(rng);
    w[0] += min_p0 * 4;
    const double s = w[0] + w[1] + w[2] + w[3];
    for (double &x : w) x /= s;
    w[0] = 1 - w[1] - w[2] - w[3];
    return {w};
}

inline graphs::Graph random_graph(std::mt19937_64 &rng, std::size_t n, double density) {
    std::bernoulli_distribution coin(density);
    graphs::Graph g(n);
    for (std::size_t u = 0; u < n; u++)
        for (std::size_t v = u + 1; v < n; v++)
            if (coin(rng)) g.add_edge(int(u), int(v));
    return g;
}

inline graphs::Graph random_connected_graph(std::mt19937_64 &rng, std::size_t n, double density) {
    for (;;) {
        graphs::Graph g = random_graph(rng, n, density);
        if (g.connected()) return g;
    }
}

inline numeric::HermitianMatrix random_hermitian(std::mt19937_64 &rng, std::size_t d) {
    std::normal_distribution<double> nd;
    numeric::HermitianMatrix m(d);
    for (std::size_t r = 0; r < d; r++) {
        m(r, r) = nd(rng);
        for (std::size_t c = r + 1; c < d; c++) {
            m(r, c) = {nd(rng), nd(rng)};
            m(c, r) = std::conj(m(r, c));
        }
    }
    return m;
}

inline double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double w = a.size() == b.size() ? 0.0 : INFINITY;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); i++) w = std::max(w, std::abs(a[i] - b[i]));
    return w;
}

inline double max_abs_diff(const numeric::HermitianMatrix &a, const numeric::HermitianMatrix &b) {
    if (a.dim() != b.dim()) return INFINITY;
    double w = 0;
    for (std::size_t r = 0; r < a.dim(); r++)
        for (std::size_t c = 0; c < a.dim(); c++) w = std::max(w, std::abs(a(r, c) - b(r, c)));
    return w;
}

inline std::vector<double> sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace qdeco::testing

#endif
