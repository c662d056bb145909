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

#include "qdeco/graphdiag.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "qdeco/errors.hpp"
#include "qdeco/gf2.hpp"
#include "qdeco/kernels.hpp"
#include "qdeco/parallel.hpp"

namespace qdeco::graphdiag {

namespace {

void reject_weighted(const Graph &g) {
    if (g.weighted()) {
        throw UnsupportedError("graph-diagonal fast path needs phases equal to pi");
    }
}

PtSpectrum finish(std::vector<double> values, bool fallback) {
    PtSpectrum s;
    const auto it = std::min_element(values.begin(), values.end());
    s.min_value = *it;
    s.argmin = static_cast<Mask>(it - values.begin());
    s.values = std::move(values);
    s.used_fallback = fallback;
    return s;
}

void check_lambda(const Graph &g, const std::vector<double> &lam) {
    if (lam.size() != (std::size_t{1} << g.n)) {
        throw ValidationError("lambda vector must have 2^n entries");
    }
}

PtSpectrum shifted_sum(const std::vector<double> &lam, const std::vector<std::pair<Mask, double>> &terms) {
    std::vector<double> out(lam.size(), 0.0);
    for (const auto &[mask, coeff] : terms) kernels::xor_axpy(out, lam, mask, coeff);
    return finish(std::move(out), false);
}

}  // namespace

std::vector<double> lambda_from_pauli(const Graph &g, const std::vector<channels::PauliChannel> &per_vertex) {
    reject_weighted(g);
    if (per_vertex.size() != g.n) throw ValidationError("need one Pauli channel per vertex");
    const std::size_t d = std::size_t{1} << g.n;
    std::vector<double> lam(d, 0.0), next(d);
    lam[0] = 1;
    for (std::size_t k = 0; k < g.n; k++) {
        channels::validate(per_vertex[k]);
        const Mask nk = g.adj[k], bit = Mask{1} << k;
        kernels::xor_mix4(next, lam, {0, nk, nk | bit, bit}, per_vertex[k].p);
        lam.swap(next);
    }
    return lam;
}

std::vector<double> lambda_from_pauli(const Graph &g, const channels::PauliChannel &ch) {
    return lambda_from_pauli(g, std::vector<channels::PauliChannel>(g.n, ch));
}

std::vector<double> lambda_direct(const Graph &g, const channels::PauliChannel &ch) {
    reject_weighted(g);
    channels::validate(ch);
    if (g.n > kMaxDirect) throw CapacityError("lambda_direct is limited to 14 vertices");
    const double p0 = ch.p[0];
    if (!(p0 > 0)) throw UnsupportedError("lambda_direct needs p0 > 0");
    std::vector<std::array<double, kMaxDirect + 1>> pw(4);
    for (int i = 1; i < 4; i++) {
        pw[i][0] = 1;
        for (std::size_t e = 1; e <= g.n; e++) pw[i][e] = pw[i][e - 1] * (ch.p[i] / p0);
    }
    const std::size_t d = std::size_t{1} << g.n;
    std::vector<Mask> gam(d);
    for (Mask u = 0; u < d; u++) gam[u] = graphs::gamma(g, u);
    const double scale = std::pow(p0, double(g.n));
    std::vector<double> lam(d);
    for (Mask u = 0; u < d; u++) {
        double acc = 0;
        for (Mask x = 0; x < d; x++) {
            const Mask w = gam[x] ^ u;
            acc += pw[1][std::popcount(x & ~w)] * pw[2][std::popcount(x & w)] * pw[3][std::popcount(w & ~x)];
        }
        lam[u] = scale * acc;
    }
    return lam;
}

PtPlan make_pt_plan(const Graph &g, Mask a_mask) {
    const graphs::Bipartition part = graphs::make_bipartition(g, a_mask);
    a_mask = part.a_mask;
    const Mask ac = part.complement();
    const std::size_t na = std::popcount(a_mask), nc = std::popcount(ac);

    // Gamma' maps subsets of A to the neighbour parity they induce on A^c.
    gf2::Gf2Matrix gp(nc, na);
    std::size_t row = 0;
    for (Mask rest = ac; rest; rest &= rest - 1, row++) {
        gp.rows[row] = gf2::extract(g.adj[std::countr_zero(rest)] & a_mask, a_mask);
    }
    const std::vector<gf2::Gf2Vector> ker = gf2::kernel_basis(gp);
    const std::vector<gf2::Gf2Vector> xs = gf2::orthocomplement(ker, na);
    const std::vector<gf2::ImageEntry> ys = gf2::image_with_preimages(gp);

    PtPlan plan{g.n, a_mask, na - ker.size(), {}};
    const double scale = std::ldexp(1.0, static_cast<int>(ker.size()) - static_cast<int>(na));
    plan.terms.reserve(xs.size() * ys.size());
    for (const auto &x : xs) {
        const Mask xm = gf2::deposit(x.bits, a_mask);
        for (const auto &y : ys) {
            const bool odd = std::popcount(x.bits & y.preimage.bits) & 1;
            plan.terms.emplace_back(xm ^ gf2::deposit(y.image.bits, ac), odd ? -scale : scale);
        }
    }
    return plan;
}

PtSpectrum apply_pt_plan(const PtPlan &plan, const std::vector<double> &lam) {
    if (lam.size() != (std::size_t{1} << plan.n)) throw ValidationError("lambda vector must have 2^n entries");
    return shifted_sum(lam, plan.terms);
}

PtSpectrum pt_spectrum(const Graph &g, const std::vector<double> &lam, Mask a_mask) {
    check_lambda(g, lam);
    return apply_pt_plan(make_pt_plan(g, a_mask), lam);
}

PtSpectrum pt_single_vertex(const Graph &g, const std::vector<double> &lam, int k) {
    check_lambda(g, lam);
    const Mask nk = graphs::neighborhood(g, k), kb = Mask{1} << k;
    if (nk == 0) {
        PtSpectrum s = pt_spectrum(g, lam, kb);
        s.used_fallback = true;
        return s;
    }
    return shifted_sum(lam, {{0, 0.5}, {nk, 0.5}, {kb, 0.5}, {nk | kb, -0.5}});
}

PtSpectrum pt_two_vertices(const Graph &g, const std::vector<double> &lam, int k, int l) {
    check_lambda(g, lam);
    if (k == l) throw ValidationError("pt_two_vertices needs distinct vertices");
    const Mask kb = Mask{1} << k, lb = Mask{1} << l;
    const Mask nk = graphs::neighborhood(g, k) & ~lb;
    const Mask nl = graphs::neighborhood(g, l) & ~kb;
    if (nk == 0 || nl == 0 || nk == nl) {
        PtSpectrum s = pt_spectrum(g, lam, kb | lb);
        s.used_fallback = true;
        return s;
    }
    const Mask plus[] = {0, kb, lb, kb | lb, nk, nl, nk ^ nl, kb ^ nl, lb ^ nk, kb ^ lb ^ nk ^ nl};
    const Mask minus[] = {kb ^ nk, lb ^ nl, kb ^ nk ^ nl, lb ^ nk ^ nl, kb ^ lb ^ nk, kb ^ lb ^ nl};
    std::vector<std::pair<Mask, double>> terms;
    for (Mask m : plus) terms.emplace_back(m, 0.25);
    for (Mask m : minus) terms.emplace_back(m, -0.25);
    return shifted_sum(lam, terms);
}

double depolarizing_q(double p) { return (1 - p) / (1 + 3 * p); }
double depolarizing_p_from_q(double q) { return (1 - q) / (1 + 3 * q); }
double dephasing_q(double p) { return (1 - p) / (1 + p); }
double dephasing_p_from_q(double q) { return (1 - q) / (1 + q); }

double estimate_single(double q) { return 1 + 2 * q - 1 / q; }

double estimate_pair(double q) { return 1 + 4 * q + 5 * q * q - 2 / q - 4 / (q * q); }

double estimate_dephasing(double q, std::size_t deg) {
    return 1 + std::pow(q, double(deg)) + q - std::pow(q, -double(deg + 1));
}

namespace {

constexpr double kQLo = 1e-3, kQHi = 1.0;

}  // namespace

numeric::ThresholdResult estimate_single_root(const numeric::Tolerance &tol) {
    return numeric::bisect(estimate_single, kQLo, kQHi, tol);
}

numeric::ThresholdResult estimate_pair_root(const numeric::Tolerance &tol) {
    return numeric::bisect(estimate_pair, kQLo, kQHi, tol);
}

numeric::ThresholdResult estimate_dephasing_root(std::size_t deg, const numeric::Tolerance &tol) {
    if (deg == 0) throw ValidationError("estimate_dephasing_root needs degree >= 1");
    return numeric::bisect([deg](double q) { return estimate_dephasing(q, deg); }, kQLo, kQHi, tol);
}

bool lambda_estimation_check(const Graph &g, const std::vector<double> &lam, double q) {
    check_lambda(g, lam);
    for (std::size_t k = 0; k < g.n; k++) {
        const Mask nk = g.adj[k], kb = Mask{1} << k;
        for (Mask x : {kb, nk, nk | kb}) {
            for (Mask u = 0; u < lam.size(); u++) {
                const double here = lam[u], there = lam[u ^ x];
                const double slack = 1e-12 * std::max(here, there) + 1e-300;
                if (q * here > there + slack || there > here / q + slack) return false;
            }
        }
    }
    return true;
}

PartitionResult scan_partition(const Graph &g, Mask a_mask, const PauliFamily &family,
                               const numeric::Tolerance &tol) {
    const PtPlan plan = make_pt_plan(g, a_mask);
    const double zero = tol.eig_zero(std::size_t{1} << g.n);
    auto margin = [&](double p) { return apply_pt_plan(plan, lambda_from_pauli(g, family(p))).min_value - zero; };
    PartitionResult r{{plan.a_mask, g.n}, PartitionStatus::crossing, std::numeric_limits<double>::quiet_NaN(), {}};
    constexpr double lo = 1e-6, hi = 1 - 1e-6;
    r.detail = numeric::bisect(margin, lo, hi, tol);
    if (r.detail.sign_change_found) {
        r.p_crit = r.detail.value;
    } else {
        r.status = margin(hi) > 0 ? PartitionStatus::always_ppt : PartitionStatus::always_npt;
    }
    return r;
}

ScanResult scan_partitions(const Graph &g, const PauliFamily &family, const numeric::Tolerance &tol,
                           std::size_t jobs) {
    reject_weighted(g);
    const std::vector<graphs::Bipartition> parts = graphs::bipartitions(g);
    ScanResult out;
    out.partitions.resize(parts.size());
    parallel_for(parts.size(), jobs,
                 [&](std::size_t i) { out.partitions[i] = scan_partition(g, parts[i].a_mask, family, tol); });
    for (std::size_t i = 0; i < out.partitions.size(); i++) {
        const auto &r = out.partitions[i];
        if (r.status != PartitionStatus::crossing) continue;
        if (!out.first_ppt || r.p_crit > out.partitions[*out.first_ppt].p_crit) out.first_ppt = i;
        if (!out.last_ppt || r.p_crit < out.partitions[*out.last_ppt].p_crit) out.last_ppt = i;
    }
    return out;
}

std::string to_string(PartitionStatus s) {
    switch (s) {
        case PartitionStatus::crossing:
            return "crossing";
        case PartitionStatus::always_ppt:
            return "always_ppt";
        case PartitionStatus::always_npt:
            return "always_npt";
    }
    return "?";
}

}  // namespace qdeco::graphdiag
