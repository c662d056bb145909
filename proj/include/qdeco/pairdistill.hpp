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

#ifndef QDECO_PAIRDISTILL_HPP
#define QDECO_PAIRDISTILL_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qdeco/channels.hpp"
#include "qdeco/graphdiag.hpp"
#include "qdeco/graphs.hpp"
#include "qdeco/numeric.hpp"

// Entanglement left on an edge (k, l) after measuring the rest of its
// neighbourhood in the Z basis and keeping the all-zero outcome.
namespace qdeco::pairdistill {

using graphs::Graph;

constexpr std::size_t kMaxRegion = 12;

/// Weights of {I, Z_k, Z_l, Z_k Z_l} applied to the edge state CZ|++>.
/// Bit 0 of the index is Z_k, bit 1 is Z_l.
struct BellDiagonal {
    std::array<double, 4> c{1, 0, 0, 0};
};

struct EdgeDegrees {
    std::size_t dk = 0, dl = 0;
    /// |N_k + N_l| as a symmetric difference; includes k and l themselves.
    std::size_t dsym = 0;
};

EdgeDegrees edge_degrees(const Graph &g, int k, int l);

/// Rejects non-adjacent pairs and weighted graphs.
BellDiagonal reduced_pair_state(const Graph &g, int k, int l, const channels::PauliChannel &ch);
/// NPT iff the largest weight exceeds 1/2.
bool pair_npt(const BellDiagonal &b);
/// 4x4 density matrix, qubit k is bit 0.
numeric::HermitianMatrix bell_to_dense(const BellDiagonal &b);
/// Smallest eigenvalue of a 4x4 pair state transposed on qubit k.
double pair_pt_min(const numeric::HermitianMatrix &rho);

enum class ClosedForm { depolarizing, bitflip, dephasing };

/// lhs - 1 of the distillability inequality; positive means NPT.
double closed_form_margin(ClosedForm kind, const EdgeDegrees &d, double p);
/// QO noise with mu = 0: p1 = p2 = p, p3 = q, both below 1/4.
double closed_form_margin_qo(const EdgeDegrees &d, double p, double q);
/// Centre-leaf edge of a star with n vertices: 2 p^n + p^2 - 1.
double closed_form_margin_star(std::size_t n, double p);
bool closed_form_condition(ClosedForm kind, const EdgeDegrees &d, double p);
/// Root in p of the closed-form inequality.
numeric::ThresholdResult closed_form_threshold(ClosedForm kind, const EdgeDegrees &d,
                                               const numeric::Tolerance &tol = {});
numeric::ThresholdResult star_threshold(std::size_t n, const numeric::Tolerance &tol = {});

struct UniversalBound {
    double p;
    double kt;
};
/// Depolarizing p = 2^(-2/(dk+dl+2)), kt = 2 ln 2 / (dk+dl+2).
UniversalBound universal_lower_bound(std::size_t dk, std::size_t dl);

/// Pair state of a weighted graph, built from the Z-basis branches of the
/// measured region N_k u N_l minus {k, l}. Qubit k is bit 0.
numeric::HermitianMatrix weighted_reduced_pair(const Graph &g, int k, int l, const channels::PauliChannel &ch);

struct EdgeThreshold {
    int u = 0, v = 0;
    double phi = 0;
    /// NPT for p above this. +inf when the edge never becomes NPT.
    double p_threshold = 0;
    numeric::ThresholdResult detail;
};

struct LowerBoundReport {
    std::vector<EdgeThreshold> edges;
    /// Smallest p at which NPT edges still span a connected subgraph.
    std::optional<double> p_spanning;
    /// Smallest p at which every edge is NPT.
    std::optional<double> p_all_edges;
    /// Edge with the largest threshold in the bottleneck spanning tree.
    std::optional<std::pair<int, int>> bottleneck_edge;
    /// Edge with the largest threshold overall.
    std::optional<std::pair<int, int>> weakest_edge;
};

/// Per-edge thresholds by bisection, then the spanning relaxation.
/// Throws ValidationError for a disconnected graph.
LowerBoundReport lifetime_lower_bound(const Graph &g, const graphdiag::PauliFamily &family,
                                      const numeric::Tolerance &tol = {}, std::size_t jobs = 1);

}  // namespace qdeco::pairdistill

#endif
