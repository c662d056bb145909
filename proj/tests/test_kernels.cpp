// Copyright 2026 The qdeco Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstring>
#include <doctest.h>

#include "qdeco/errors.hpp"
#include "qdeco/graphdiag.hpp"
#include "qdeco/kernels.hpp"
#include "test_util.hpp"

using namespace qdeco;
using namespace qdeco::kernels;

namespace {

std::vector<double> random_vec(std::mt19937_64 &rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<double> v(n);
    for (double &x : v) x = u(rng);
    return v;
}

bool bit_equal(const std::vector<double> &a, const std::vector<double> &b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

/// Restores the active backend on scope exit.
struct BackendGuard {
    Backend saved = active_backend();
    ~BackendGuard() { set_backend(saved); }
};

}  // namespace

TEST_SUITE("kernels") {
    TEST_CASE("scalar is always available and listed first") {
        const auto av = available_backends();
        REQUIRE_FALSE(av.empty());
        CHECK(av.front() == Backend::scalar);
        CHECK(table_for(Backend::scalar) != nullptr);
        for (Backend b : av) CHECK(table_for(b) != nullptr);
        MESSAGE("active backend: " << to_string(active_backend()));
    }

    TEST_CASE("scalar reference semantics") {
        const std::vector<double> in = {1, 2, 3, 4};
        std::vector<double> out(4, 10.0);
        table_for(Backend::scalar)->xor_axpy(out.data(), in.data(), 4, 3, 0.5);
        CHECK(out == std::vector<double>{12, 11.5, 11, 10.5});
        const std::uint64_t masks[4] = {0, 1, 2, 3};
        const double w[4] = {1, 10, 100, 1000};
        table_for(Backend::scalar)->xor_mix4(out.data(), in.data(), 4, masks, w);
        CHECK(out[0] == 1 + 20 + 300 + 4000);
        CHECK(out[3] == 4 + 30 + 200 + 1000);
    }

    TEST_CASE("every backend is bit-identical to scalar") {
        std::mt19937_64 rng(testing::test_seed(71));
        const KernelTable *ref = table_for(Backend::scalar);
        for (Backend b : available_backends()) {
            const KernelTable *t = table_for(b);
            for (std::size_t log = 0; log <= 12; log++) {
                const std::size_t n = std::size_t{1} << log;
                for (int trial = 0; trial < 20; trial++) {
                    const auto in = random_vec(rng, n);
                    const auto base = random_vec(rng, n);
                    const std::uint64_t mask = rng() & (n - 1);
                    const double c = std::uniform_real_distribution<double>(-2, 2)(rng);
                    auto a = base, bb = base;
                    ref->xor_axpy(a.data(), in.data(), n, mask, c);
                    t->xor_axpy(bb.data(), in.data(), n, mask, c);
                    CHECK_MESSAGE(bit_equal(a, bb), to_string(b) << " xor_axpy n=" << n << " mask=" << mask);

                    std::uint64_t masks[4];
                    double w[4];
                    for (int i = 0; i < 4; i++) {
                        masks[i] = rng() & (n - 1);
                        w[i] = std::uniform_real_distribution<double>(0, 1)(rng);
                    }
                    if (trial == 0) masks[0] = 0;
                    std::vector<double> x(n), y(n);
                    ref->xor_mix4(x.data(), in.data(), n, masks, w);
                    t->xor_mix4(y.data(), in.data(), n, masks, w);
                    CHECK_MESSAGE(bit_equal(x, y), to_string(b) << " xor_mix4 n=" << n);
                }
            }
        }
    }

    TEST_CASE("graph-diagonal pipeline is bit-identical across backends") {
        BackendGuard guard;
        std::mt19937_64 rng(testing::test_seed(72));
        for (int trial = 0; trial < 10; trial++) {
            const auto g = testing::random_graph(rng, 10, 0.35);
            const auto ch = testing::random_pauli(rng, 0.3);
            const graphs::Mask a = graphs::make_bipartition(g, (rng() & g.all()) | 2).a_mask;
            set_backend(Backend::scalar);
            const auto lam0 = graphdiag::lambda_from_pauli(g, ch);
            const auto pt0 = graphdiag::pt_spectrum(g, lam0, a);
            for (Backend b : available_backends()) {
                set_backend(b);
                const auto lam = graphdiag::lambda_from_pauli(g, ch);
                CHECK(bit_equal(lam, lam0));
                CHECK(bit_equal(graphdiag::pt_spectrum(g, lam, a).values, pt0.values));
            }
        }
    }

    TEST_CASE("span wrappers validate shapes") {
        std::vector<double> a(8), b(8), c(6), d(4);
        CHECK_NOTHROW(xor_axpy(a, b, 7, 1.0));
        CHECK_THROWS_AS(xor_axpy(a, b, 8, 1.0), ValidationError);
        CHECK_THROWS_AS(xor_axpy(c, c, 1, 1.0), ValidationError);
        CHECK_THROWS_AS(xor_axpy(a, d, 1, 1.0), ValidationError);
        CHECK_THROWS_AS(xor_mix4(a, b, {0, 1, 2, 9}, {1, 0, 0, 0}), ValidationError);
    }

    TEST_CASE("unavailable backends are rejected") {
        BackendGuard guard;
        for (Backend b : {Backend::avx2, Backend::neon}) {
            if (table_for(b) == nullptr) CHECK_THROWS_AS(set_backend(b), ValidationError);
        }
    }
}
