// Copyright 2026 The qdeco Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <doctest.h>

#include "qdeco/channels.hpp"
#include "qdeco/errors.hpp"
#include "test_util.hpp"

using namespace qdeco;
using namespace qdeco::channels;

namespace {

using M2 = std::array<std::array<cplx, 2>, 2>;

M2 mul(const M2 &a, const M2 &b) {
    M2 r{};
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++)
            for (int k = 0; k < 2; k++) r[i][j] += a[i][k] * b[k][j];
    return r;
}

M2 sigma(int i) {
    const cplx I(0, 1);
    switch (i) {
        case 1:
            return {{{0, 1}, {1, 0}}};
        case 2:
            return {{{0, -I}, {I, 0}}};
        case 3:
            return {{{1, 0}, {0, -1}}};
        default:
            return {{{1, 0}, {0, 1}}};
    }
}

/// rho -> sum_ij p_ij sigma_i rho sigma_j, written out directly.
M2 act(const ChannelMatrix &ch, const M2 &rho) {
    M2 out{};
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++) {
            const M2 t = mul(mul(sigma(i), rho), sigma(j));
            for (int a = 0; a < 2; a++)
                for (int b = 0; b < 2; b++) out[a][b] += ch.p[i][j] * t[a][b];
        }
    return out;
}

M2 random_state(std::mt19937_64 &rng) {
    std::normal_distribution<double> nd;
    const cplx a(nd(rng), nd(rng)), b(nd(rng), nd(rng));
    const double n = std::norm(a) + std::norm(b);
    return {{{std::norm(a) / n, a * std::conj(b) / n}, {b * std::conj(a) / n, std::norm(b) / n}}};
}

double diff(const M2 &a, const M2 &b) {
    double w = 0;
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++) w = std::max(w, std::abs(a[i][j] - b[i][j]));
    return w;
}

QoChannel random_qo(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0, 1);
    const double B = 0.1 + 2 * u(rng);
    return {B, B / 2 + 2 * u(rng), u(rng)};
}

}  // namespace

TEST_SUITE("channels") {
    TEST_CASE("named channels") {
        const auto d = named_channel(NamedKind::depolarizing, 0.6);
        CHECK(d.p[0] == doctest::Approx(0.7));
        CHECK(d.p[3] == doctest::Approx(0.1));
        const auto z = named_channel(NamedKind::dephasing, 0.6);
        CHECK(z.p[0] == doctest::Approx(0.8));
        CHECK(z.p[3] == doctest::Approx(0.2));
        const auto x = named_channel(NamedKind::bitflip, 0.6);
        CHECK(x.p[1] == doctest::Approx(0.2));
        CHECK_THROWS_AS(named_channel(NamedKind::depolarizing, 1.5), ValidationError);
        CHECK_THROWS_AS(named_channel(NamedKind::depolarizing, -0.1), ValidationError);
        CHECK_THROWS_AS(make_pauli(0.5, 0.5, 0.5, 0), ValidationError);
    }

    TEST_CASE("pauli product phases follow XY = iZ") {
        const auto xy = mul(sigma(1), sigma(2));
        for (int a = 0; a < 4; a++)
            for (int b = 0; b < 4; b++) {
                const M2 lhs = mul(sigma(a), sigma(b));
                const M2 rhs = sigma(a ^ b);
                M2 scaled;
                for (int i = 0; i < 2; i++)
                    for (int j = 0; j < 2; j++) scaled[i][j] = pauli_product_phase(a, b) * rhs[i][j];
                CHECK(diff(lhs, scaled) < 1e-15);
            }
        CHECK(std::abs(xy[0][0] - cplx(0, 1)) < 1e-15);
    }

    TEST_CASE("QO snapshot formulas") {
        const QoChannel ch{1.0, 0.7, 0.8};
        const double t = 0.4;
        const auto s = qo_snapshot(ch, t);
        const double eb = std::exp(-t), ec = std::exp(-0.7 * t);
        CHECK(s.lambda[0] == doctest::Approx((1 + 2 * ec + eb) / 4));
        CHECK(s.lambda[1] == doctest::Approx((1 - eb) / 4));
        CHECK(s.lambda[3] == doctest::Approx((1 - 2 * ec + eb) / 4));
        CHECK(s.mu == doctest::Approx(0.6 * (1 - eb) / 4));
        CHECK(s.a == doctest::Approx(0.8 + 0.2 * eb));
        CHECK(s.c == doctest::Approx(0.2 + 0.8 * eb));
        CHECK_THROWS_AS(qo_snapshot(ch, -1), ValidationError);
        CHECK_THROWS_AS(qo_snapshot({1.0, 0.4, 0.5}, 1), ValidationError);
    }

    TEST_CASE("QO snapshots are valid channels with 2 lambda1 >= |2 mu|") {
        std::mt19937_64 rng(testing::test_seed(31));
        for (int trial = 0; trial < 200; trial++) {
            const QoChannel ch = random_qo(rng);
            const double t = std::uniform_real_distribution<double>(0, 5)(rng);
            const auto s = qo_snapshot(ch, t);
            CHECK(2 * s.lambda[1] >= std::abs(2 * s.mu) - 1e-15);
            CHECK_NOTHROW(validate(to_matrix(s)));
        }
    }

    TEST_CASE("QO snapshots compose as a semigroup") {
        std::mt19937_64 rng(testing::test_seed(32));
        for (int trial = 0; trial < 50; trial++) {
            const QoChannel ch = random_qo(rng);
            const double t1 = 0.3 * (trial % 7), t2 = 0.11 * trial;
            const auto joint = to_matrix(qo_snapshot(ch, t1 + t2));
            const auto seq = compose(to_matrix(qo_snapshot(ch, t2)), to_matrix(qo_snapshot(ch, t1)));
            CHECK(max_abs_diff(joint, seq) < 1e-10);
        }
    }

    TEST_CASE("decay Kraus form equals the QO form with s = 1 and B = 2C") {
        for (double kt : {0.0, 0.1, 1.0, 7.0}) {
            CHECK(max_abs_diff(decay_channel(kt), to_matrix(qo_snapshot({1.0, 0.5, 1.0}, kt))) < 1e-14);
        }
    }

    TEST_CASE("compose matches explicit application") {
        std::mt19937_64 rng(testing::test_seed(33));
        for (int trial = 0; trial < 100; trial++) {
            const auto e = to_matrix(qo_snapshot(random_qo(rng), 0.5));
            const auto f = to_matrix(testing::random_pauli(rng));
            const M2 rho = random_state(rng);
            CHECK(diff(act(compose(e, f), rho), act(e, act(f, rho))) < 1e-14);
        }
        CHECK(compose_dephasing(0.5, 0.4) == doctest::Approx(0.2));
        const auto dd = compose(to_matrix(named_channel(NamedKind::dephasing, 0.5)),
                                to_matrix(named_channel(NamedKind::dephasing, 0.4)));
        CHECK(max_abs_diff(dd, to_matrix(named_channel(NamedKind::dephasing, 0.2))) < 1e-15);
        const auto pp = compose(to_matrix(named_channel(NamedKind::depolarizing, 0.5)),
                                to_matrix(named_channel(NamedKind::depolarizing, 0.4)));
        CHECK(max_abs_diff(pp, to_matrix(named_channel(NamedKind::depolarizing, 0.2))) < 1e-15);
    }

    TEST_CASE("Jamiolkowski state is a normalised positive state") {
        std::mt19937_64 rng(testing::test_seed(34));
        for (int trial = 0; trial < 100; trial++) {
            const auto j = jamiolkowski_state(to_matrix(qo_snapshot(random_qo(rng), 0.3 * trial)));
            CHECK(j.trace().real() == doctest::Approx(1).epsilon(1e-12));
            CHECK(numeric::min_eig(j) > -1e-12);
            // The reference marginal is maximally mixed for any trace preserving map.
            CHECK(std::abs(j(0, 0) + j(2, 2) - 0.5) < 1e-12);
            CHECK(std::abs(j(0, 1) + j(2, 3)) < 1e-12);
        }
        ChannelMatrix bad;
        bad.p[0][0] = 1;
        bad.p[1][1] = -0.5;
        CHECK_THROWS_AS(jamiolkowski_state(bad), ValidationError);
    }

    TEST_CASE("entanglement breaking boundaries") {
        CHECK(is_entanglement_breaking_pauli(named_channel(NamedKind::depolarizing, 1.0 / 3)));
        CHECK_FALSE(is_entanglement_breaking_pauli(named_channel(NamedKind::depolarizing, 0.34)));
        CHECK(is_entanglement_breaking_jamiolkowski(to_matrix(named_channel(NamedKind::depolarizing, 0.33))));
        CHECK_FALSE(is_entanglement_breaking_jamiolkowski(to_matrix(named_channel(NamedKind::depolarizing, 0.34))));
        for (double p : {0.2, 0.3, 0.333, 0.334, 0.4}) {
            const QoChannel ch{1, 1, 0.5};
            CHECK(is_entanglement_breaking_qo(ch, -std::log(p)) == (p <= 1.0 / 3));
        }
        for (double kt : {0.0, 1.0, 10.0, 50.0}) {
            CHECK_FALSE(is_entanglement_breaking_qo({1, 0.5, 0}, kt));
            CHECK_FALSE(is_entanglement_breaking_qo({1, 0.5, 1}, kt));
        }
    }

    TEST_CASE("closed-form EB verdicts agree with Jamiolkowski PPT on random channels") {
        std::mt19937_64 rng(testing::test_seed(35));
        int compared = 0;
        for (int trial = 0; trial < 1000; trial++) {
            const auto pc = testing::random_pauli(rng);
            const double mx = *std::max_element(pc.p.begin(), pc.p.end());
            if (std::abs(mx - 0.5) > 1e-9) {
                CHECK(is_entanglement_breaking_pauli(pc) == is_entanglement_breaking_jamiolkowski(to_matrix(pc)));
                compared++;
            }
            const QoChannel qc = random_qo(rng);
            const double t = std::uniform_real_distribution<double>(0, 4)(rng);
            const double g = std::exp(qc.C * t) * (1 - std::exp(-qc.B * t));
            if (std::abs(qc.s * (1 - qc.s) * g * g - 1) > 1e-6) {
                CHECK(is_entanglement_breaking_qo(qc, t) ==
                      is_entanglement_breaking_jamiolkowski(to_matrix(qo_snapshot(qc, t))));
                compared++;
            }
        }
        CHECK(compared > 1500);
    }

    TEST_CASE("minimal dephasing of Pauli channels") {
        for (double p : {0.1, 0.5, 0.9}) {
            CHECK(*minimal_dephasing_pauli(named_channel(NamedKind::depolarizing, p)) ==
                  doctest::Approx(2 * p / (1 + p)).epsilon(1e-14));
            CHECK(*minimal_dephasing_pauli(named_channel(NamedKind::dephasing, p)) ==
                  doctest::Approx(p).epsilon(1e-14));
            CHECK_FALSE(minimal_dephasing_pauli(named_channel(NamedKind::bitflip, p)));
        }
        // mu = 0 QO: p1 = p2 = p, p3 = q.
        for (auto [p, q] : {std::pair{0.05, 0.1}, std::pair{0.1, 0.02}, std::pair{0.2, 0.15}}) {
            CHECK(*minimal_dephasing_pauli(make_pauli(1 - 2 * p - q, p, p, q)) ==
                  doctest::Approx(1 - 2 * q / (1 - 2 * p)).epsilon(1e-13));
        }
        CHECK_FALSE(minimal_dephasing_pauli(make_pauli(1, 0, 0, 0)));
        CHECK_THROWS_AS(extract_dephasing(to_matrix(make_pauli(1, 0, 0, 0)), 0), ValidationError);
    }

    TEST_CASE("extraction is feasible exactly from the minimal p_z and recomposes") {
        std::mt19937_64 rng(testing::test_seed(36));
        for (int trial = 0; trial < 200; trial++) {
            const PauliChannel pc = testing::random_pauli(rng, 0.05);
            const auto pz = minimal_dephasing_pauli(pc);
            REQUIRE(pz);
            const auto cm = to_matrix(pc);
            const auto at = extract_dephasing(cm, *pz);
            CHECK(at.feasible);
            CHECK_FALSE(extract_dephasing(cm, 0.99 * *pz).feasible);
            const auto recomposed = compose(at.residual, to_matrix(named_channel(NamedKind::dephasing, *pz)));
            CHECK(max_abs_diff(recomposed, cm) < 1e-10);
            const auto general = minimal_dephasing(cm);
            REQUIRE(general);
            CHECK(*general == doctest::Approx(*pz).epsilon(1e-8));
        }
    }

    TEST_CASE("extraction from non-Pauli QO channels recomposes") {
        std::mt19937_64 rng(testing::test_seed(37));
        for (int trial = 0; trial < 30; trial++) {
            const auto cm = to_matrix(qo_snapshot(random_qo(rng), 0.2 + 0.05 * trial));
            const auto pz = minimal_dephasing(cm);
            if (!pz) continue;
            const auto at = extract_dephasing(cm, *pz);
            CHECK(at.feasible);
            CHECK(max_abs_diff(compose(at.residual, to_matrix(named_channel(NamedKind::dephasing, *pz))), cm) < 1e-10);
            if (*pz > 1e-6) CHECK_FALSE(extract_dephasing(cm, 0.99 * *pz).feasible);
        }
    }

    TEST_CASE("channel JSON") {
        const auto d = parse_channel_spec(R"({"kind":"depolarizing","p":0.3})");
        CHECK(d.is_named());
        CHECK(*d.p == 0.3);
        CHECK(d.pauli_at(0.3).p[0] == doctest::Approx(0.475));
        CHECK(parse_channel_spec("dephasing").kind == "dephasing");
        const auto q = parse_channel_spec(R"({"kind":"qo","B":1,"C":1,"s":0.25,"t":0.5})");
        CHECK(q.qo.s == 0.25);
        CHECK(*q.t == 0.5);
        CHECK(parse_channel_spec(R"({"kind":"decay","s":0})").qo.s == 0);
        const auto pc = parse_channel_spec(R"({"kind":"pauli","p0":0.7,"p1":0.1,"p2":0.1,"p3":0.1})");
        CHECK(pc.is_pauli());
        CHECK(parse_channel_spec(pc.to_json()).pauli.p == pc.pauli.p);
        CHECK_THROWS_AS(parse_channel_spec(R"({"kind":"qo","B":1,"C":0.2,"s":0.5})"), ValidationError);
        CHECK_THROWS_AS(parse_channel_spec(R"({"kind":"nope"})"), ValidationError);
        CHECK_THROWS_AS(parse_channel_spec(R"({"kind":"depolarizing","p":2})"), ValidationError);
        CHECK_THROWS_AS(parse_channel_spec(R"({"kind":"decay","s":0.5})"), ValidationError);
        CHECK_THROWS_AS(parse_channel_spec("{bad json"), ValidationError);
        CHECK_THROWS_AS(q.pauli_at(0.5), UnsupportedError);
    }
}
