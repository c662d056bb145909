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

#include "qdeco/isingsep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qdeco/channels.hpp"
#include "qdeco/errors.hpp"
#include "qdeco/oracle.hpp"

namespace qdeco::isingsep {

using numeric::cplx;
using numeric::HermitianMatrix;

namespace {

void check_pz(double x) {
    if (!(x >= 0 && x <= 1)) throw ValidationError("dephasing parameter must lie in [0, 1]");
}

void check_degrees(std::size_t dk, std::size_t dl) {
    if (dk == 0 || dl == 0) throw ValidationError("edge endpoint degrees must be positive");
}

double spread(double p_z, std::size_t d) { return p_z == 0 ? 0.0 : std::pow(p_z, 1.0 / double(d)); }

}  // namespace

bool gate_separable(double p_z, double q_z) {
    check_pz(p_z);
    check_pz(q_z);
    return (1 + p_z) * (1 + q_z) <= 2 + 1e-12;
}

std::array<double, 4> noisy_gate_weights(double p_z, double q_z) {
    check_pz(p_z);
    check_pz(q_z);
    return {(1 + p_z) * (1 + q_z) / 4, (1 + p_z) * (1 - q_z) / 4, (1 - p_z) * (1 + q_z) / 4,
            (1 - p_z) * (1 - q_z) / 4};
}

HermitianMatrix noisy_gate_state(double phi, double p_z, double q_z) {
    check_pz(p_z);
    check_pz(q_z);
    std::vector<cplx> psi(16, 0.0);
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            const int idx = a | (a << 1) | (b << 2) | (b << 3);
            psi[idx] = 0.5 * std::polar(1.0, -phi * a * b);
        }
    }
    oracle::DenseState s = oracle::from_vector(psi);
    using channels::NamedKind;
    oracle::apply_channel(s, 1, channels::to_matrix(channels::named_channel(NamedKind::dephasing, p_z)));
    oracle::apply_channel(s, 3, channels::to_matrix(channels::named_channel(NamedKind::dephasing, q_z)));
    return s.rho;
}

double noisy_gate_pt_min(double phi, double p_z, double q_z) {
    return numeric::min_eig(oracle::partial_transpose(noisy_gate_state(phi, p_z, q_z), 0b0011));
}

double edge_separability_threshold(std::size_t dk, std::size_t dl, const numeric::Tolerance &tol) {
    check_degrees(dk, dl);
    auto f = [&](double x) { return (1 + spread(x, dk)) * (1 + spread(x, dl)) - 2; };
    return numeric::bisect(f, 0.0, 1.0, tol).value;
}

GraphSeparability graph_separability_threshold(const Graph &g, const numeric::Tolerance &tol) {
    if (g.weighted()) throw UnsupportedError("graph_separability_threshold needs phases equal to pi");
    GraphSeparability out;
    out.p_z = std::numeric_limits<double>::infinity();
    std::size_t max_deg = 0;
    for (auto [u, v] : g.edges()) {
        const std::size_t du = graphs::degree(g, u), dv = graphs::degree(g, v);
        max_deg = std::max({max_deg, du, dv});
        const double t = edge_separability_threshold(du, dv, tol);
        out.edges.push_back({u, v, g.phi(u, v), t});
        if (t < out.p_z) {
            out.p_z = t;
            out.argmin_edge = {u, v};
        }
    }
    if (out.edges.empty()) throw ValidationError("graph has no edges");
    out.weak_bound = std::pow(std::sqrt(2.0) - 1, double(max_deg));
    return out;
}

numeric::ThresholdResult weighted_gate_threshold(double phi, std::size_t dk, std::size_t dl,
                                                 const numeric::Tolerance &tol) {
    check_degrees(dk, dl);
    if (!(phi > 0 && phi <= std::numbers::pi)) {
        throw ValidationError("gate phase must lie in (0, pi]");
    }
    const double zero = tol.eig_zero(16);
    auto f = [&](double x) { return noisy_gate_pt_min(phi, spread(x, dk), spread(x, dl)) - zero; };
    return numeric::bisect(f, 0.0, 1.0, tol);
}

double channel_parameter_for_dephasing(const graphdiag::PauliFamily &family, double p_z,
                                       const numeric::Tolerance &tol) {
    check_pz(p_z);
    auto f = [&](double p) {
        const auto m = channels::minimal_dephasing_pauli(family(p));
        if (!m) return 1.0 - p_z;
        return *m - p_z;
    };
    // The family must admit a non-trivial extraction somewhere below p = 1.
    if (!channels::minimal_dephasing_pauli(family(0.5))) {
        throw UnsupportedError("channel family admits no dephasing extraction");
    }
    const numeric::ThresholdResult r = numeric::bisect(f, 0.0, 1.0, tol);
    if (!r.sign_change_found) return f(0.0) > 0 ? 0.0 : 1.0;
    return r.value;
}

WeightedThreshold weighted_graph_threshold(const Graph &g, const graphdiag::PauliFamily &family,
                                           const numeric::Tolerance &tol) {
    WeightedThreshold out;
    out.graph.p_z = std::numeric_limits<double>::infinity();
    out.vertex_p_z.assign(g.n, std::numeric_limits<double>::infinity());
    std::size_t max_deg = 0;
    for (auto [u, v] : g.edges()) {
        const std::size_t du = graphs::degree(g, u), dv = graphs::degree(g, v);
        max_deg = std::max({max_deg, du, dv});
        const numeric::ThresholdResult r = weighted_gate_threshold(g.phi(u, v), du, dv, tol);
        const double t = r.sign_change_found ? r.value : 1.0;
        out.graph.edges.push_back({u, v, g.phi(u, v), t});
        out.vertex_p_z[u] = std::min(out.vertex_p_z[u], t);
        out.vertex_p_z[v] = std::min(out.vertex_p_z[v], t);
        if (t < out.graph.p_z) {
            out.graph.p_z = t;
            out.graph.argmin_edge = {u, v};
        }
    }
    if (out.graph.edges.empty()) throw ValidationError("graph has no edges");
    out.graph.weak_bound = std::pow(std::sqrt(2.0) - 1, double(max_deg));
    out.p_crit = channel_parameter_for_dephasing(family, out.graph.p_z, tol);
    return out;
}

}  // namespace qdeco::isingsep
