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

#include "qdeco/pairdistill.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "qdeco/errors.hpp"
#include "qdeco/gf2.hpp"
#include "qdeco/oracle.hpp"
#include "qdeco/parallel.hpp"

namespace qdeco::pairdistill {

using numeric::cplx;
using numeric::HermitianMatrix;

namespace {

void check_edge(const Graph &g, int k, int l) {
    graphs::neighborhood(g, k);
    graphs::neighborhood(g, l);
    if (!g.has_edge(k, l)) throw ValidationError("vertices " + std::to_string(k) + " and " +
                                                 std::to_string(l) + " are not adjacent");
}

/// Flip pattern (bit 0 = Z_k, bit 1 = Z_l) applied with probability f.
void flip(BellDiagonal &b, int pattern, double f) {
    if (pattern == 0 || f == 0) return;
    BellDiagonal out;
    for (int i = 0; i < 4; i++) out.c[i] = (1 - f) * b.c[i] + f * b.c[i ^ pattern];
    b = out;
}

double check_p(double p) {
    if (!(p >= 0 && p <= 1)) throw ValidationError("p must lie in [0, 1]");
    return p;
}

}  // namespace

EdgeDegrees edge_degrees(const Graph &g, int k, int l) {
    check_edge(g, k, l);
    return {graphs::degree(g, k), graphs::degree(g, l),
            static_cast<std::size_t>(std::popcount(graphs::symdiff_neighborhoods(g, k, l)))};
}

BellDiagonal reduced_pair_state(const Graph &g, int k, int l, const channels::PauliChannel &ch) {
    check_edge(g, k, l);
    if (g.weighted()) throw UnsupportedError("reduced_pair_state needs phases equal to pi");
    channels::validate(ch);
    const auto &p = ch.p;
    BellDiagonal b;
    // On the pair, X_k -> Z_l, Y_k -> Z_k Z_l, Z_k -> Z_k, and symmetrically for l.
    auto apply_endpoint = [&](int self, int other) {
        BellDiagonal out{{0, 0, 0, 0}};
        for (int i = 0; i < 4; i++) {
            out.c[i] += p[0] * b.c[i];
            out.c[i ^ other] += p[1] * b.c[i];
            out.c[i ^ 3] += p[2] * b.c[i];
            out.c[i ^ self] += p[3] * b.c[i];
        }
        b = out;
    };
    apply_endpoint(1, 2);
    apply_endpoint(2, 1);
    const double fz = p[1] + p[2];
    const graphs::Mask kb = graphs::Mask{1} << k, lb = graphs::Mask{1} << l;
    const graphs::Mask nk = g.adj[k] & ~lb, nl = g.adj[l] & ~kb;
    for (graphs::Mask m = nk & ~nl; m; m &= m - 1) flip(b, 1, fz);
    for (graphs::Mask m = nl & ~nk; m; m &= m - 1) flip(b, 2, fz);
    for (graphs::Mask m = nk & nl; m; m &= m - 1) flip(b, 3, fz);
    return b;
}

bool pair_npt(const BellDiagonal &b) { return *std::max_element(b.c.begin(), b.c.end()) > 0.5; }

HermitianMatrix bell_to_dense(const BellDiagonal &b) {
    HermitianMatrix rho(4);
    for (int i = 0; i < 4; i++) {
        std::array<double, 4> v;
        for (int x = 0; x < 4; x++) {
            const int ones = std::popcount(static_cast<unsigned>((x & i)));
            const double cz = (x == 3) ? -1.0 : 1.0;
            v[x] = 0.5 * cz * ((ones & 1) ? -1.0 : 1.0);
        }
        for (int r = 0; r < 4; r++)
            for (int c = 0; c < 4; c++) rho(r, c) += b.c[i] * v[r] * v[c];
    }
    return rho;
}

double pair_pt_min(const HermitianMatrix &rho) {
    if (rho.dim() != 4) throw ValidationError("pair_pt_min needs a 4x4 state");
    return numeric::min_eig(oracle::partial_transpose(rho, 1));
}

double closed_form_margin(ClosedForm kind, const EdgeDegrees &d, double p) {
    check_p(p);
    switch (kind) {
        case ClosedForm::depolarizing:
            return std::pow(p, double(d.dk + 1)) + std::pow(p, double(d.dsym)) + std::pow(p, double(d.dl + 1)) - 1;
        case ClosedForm::bitflip:
            return std::pow(p, double(d.dk)) + std::pow(p, double(d.dsym)) + std::pow(p, double(d.dl)) - 1;
        case ClosedForm::dephasing:
            return 2 * p + p * p - 1;
    }
    throw ValidationError("unknown closed form");
}

double closed_form_margin_qo(const EdgeDegrees &d, double p, double q) {
    if (!(p >= 0 && p < 0.25 && q >= 0 && q < 0.25)) {
        throw ValidationError("QO closed form needs 0 <= p, q < 1/4");
    }
    const double r = 1 - 4 * p, s = 1 - 2 * (p + q);
    return s * (std::pow(r, double(d.dk)) + std::pow(r, double(d.dl)) + std::pow(r, double(d.dsym) - 2) * s) - 1;
}

double closed_form_margin_star(std::size_t n, double p) {
    check_p(p);
    if (n < 2) throw ValidationError("star needs n >= 2");
    return 2 * std::pow(p, double(n)) + p * p - 1;
}

bool closed_form_condition(ClosedForm kind, const EdgeDegrees &d, double p) {
    return closed_form_margin(kind, d, p) > 0;
}

numeric::ThresholdResult closed_form_threshold(ClosedForm kind, const EdgeDegrees &d, const numeric::Tolerance &tol) {
    return numeric::bisect([&](double p) { return closed_form_margin(kind, d, p); }, 0.0, 1.0, tol);
}

numeric::ThresholdResult star_threshold(std::size_t n, const numeric::Tolerance &tol) {
    return numeric::bisect([n](double p) { return closed_form_margin_star(n, p); }, 0.0, 1.0, tol);
}

UniversalBound universal_lower_bound(std::size_t dk, std::size_t dl) {
    const double e = 2.0 / double(dk + dl + 2);
    return {std::exp2(-e), e * std::numbers::ln2};
}

HermitianMatrix weighted_reduced_pair(const Graph &g, int k, int l, const channels::PauliChannel &ch) {
    check_edge(g, k, l);
    channels::validate(ch);
    const graphs::Mask kb = graphs::Mask{1} << k, lb = graphs::Mask{1} << l;
    const graphs::Mask rest = (g.adj[k] | g.adj[l]) & ~(kb | lb);
    if (std::popcount(rest) + 2 > static_cast<int>(kMaxRegion)) {
        throw CapacityError("weighted_reduced_pair region exceeds 12 vertices");
    }
    // Outcome 0 on j keeps weight p0+p3 (no flip) or p1+p2 (j was flipped and
    // sat in |1>, which puts phase phi_kj on k and phi_lj on l).
    const double w0 = ch.p[0] + ch.p[3], w1 = ch.p[1] + ch.p[2];
    const double phi_kl = g.phi(k, l);
    const std::size_t m = std::popcount(rest);
    oracle::DenseState s{2, HermitianMatrix(4)};
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << m); sel++) {
        const graphs::Mask u = gf2::deposit(sel, rest);
        const double w = std::pow(w1, double(std::popcount(sel))) * std::pow(w0, double(m - std::popcount(sel)));
        if (w == 0) continue;
        double tk = 0, tl = 0;
        for (graphs::Mask x = u; x; x &= x - 1) {
            const int j = std::countr_zero(x);
            if (g.has_edge(k, j)) tk += g.phi(k, j);
            if (g.has_edge(l, j)) tl += g.phi(l, j);
        }
        std::array<cplx, 4> chi;
        for (int x = 0; x < 4; x++) {
            const int xk = x & 1, xl = (x >> 1) & 1;
            chi[x] = 0.5 * std::polar(1.0, -(phi_kl * xk * xl + tk * xk + tl * xl));
        }
        for (int r = 0; r < 4; r++)
            for (int c = 0; c < 4; c++) s.rho(r, c) += w * chi[r] * std::conj(chi[c]);
    }
    const channels::ChannelMatrix cm = channels::to_matrix(ch);
    oracle::apply_channel(s, 0, cm);
    oracle::apply_channel(s, 1, cm);
    return s.rho;
}

LowerBoundReport lifetime_lower_bound(const Graph &g, const graphdiag::PauliFamily &family,
                                      const numeric::Tolerance &tol, std::size_t jobs) {
    if (g.n < 2 || !g.connected()) throw ValidationError("lifetime_lower_bound needs a connected graph");
    const auto edges = g.edges();
    const bool weighted = g.weighted();
    const double zero = tol.eig_zero(4);
    LowerBoundReport rep;
    rep.edges.resize(edges.size());
    parallel_for(edges.size(), jobs, [&](std::size_t i) {
        const auto [u, v] = edges[i];
        auto margin = [&](double p) {
            if (weighted) return zero - pair_pt_min(weighted_reduced_pair(g, u, v, family(p)));
            const BellDiagonal b = reduced_pair_state(g, u, v, family(p));
            return *std::max_element(b.c.begin(), b.c.end()) - 0.5;
        };
        EdgeThreshold e{u, v, g.phi(u, v), 0, {}};
        constexpr double lo = 1e-9, hi = 1.0;
        e.detail = numeric::bisect(margin, lo, hi, tol);
        if (e.detail.sign_change_found) {
            e.p_threshold = e.detail.value;
        } else {
            e.p_threshold = margin(hi) > 0 ? 0.0 : std::numeric_limits<double>::infinity();
        }
        rep.edges[i] = e;
    });

    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rep.edges[a].p_threshold < rep.edges[b].p_threshold; });
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t joined = 0;
    for (std::size_t i : order) {
        const auto &e = rep.edges[i];
        if (!std::isfinite(e.p_threshold)) break;
        const int a = find(e.u), b = find(e.v);
        if (a == b) continue;
        parent[a] = b;
        if (++joined + 1 == g.n) {
            rep.p_spanning = e.p_threshold;
            rep.bottleneck_edge = std::pair{e.u, e.v};
            break;
        }
    }
    const auto &worst = rep.edges[order.back()];
    rep.weakest_edge = std::pair{worst.u, worst.v};
    if (std::isfinite(worst.p_threshold)) rep.p_all_edges = worst.p_threshold;
    return rep;
}

}  // namespace qdeco::pairdistill
