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

#ifndef QDECO_ISINGSEP_HPP
#define QDECO_ISINGSEP_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qdeco/graphdiag.hpp"
#include "qdeco/graphs.hpp"
#include "qdeco/numeric.hpp"

// Separability of a controlled-phase gate followed by dephasing on both
// qubits, lifted to every edge of a graph-state preparation.
namespace qdeco::isingsep {

using graphs::Graph;

/// (1 + p_z)(1 + q_z) <= 2: the noisy CZ is a separable map.
bool gate_separable(double p_z, double q_z);

/// Weights of the four Bell-like Choi components of the noisy CZ, ordered
/// 00, 01, 10, 11.
std::array<double, 4> noisy_gate_weights(double p_z, double q_z);

/// 16x16 Choi state of D(q_z)_l D(p_z)_k CPhase(phi) on two |Phi+> pairs.
/// Qubit order k1, k2, l1, l2 from bit 0; the gate and noise act on k2, l2.
numeric::HermitianMatrix noisy_gate_state(double phi, double p_z, double q_z);
/// Smallest eigenvalue after transposing the k side.
double noisy_gate_pt_min(double phi, double p_z, double q_z);

/// Root in x of (1 + x^(1/dk))(1 + x^(1/dl)) = 2.
double edge_separability_threshold(std::size_t dk, std::size_t dl, const numeric::Tolerance &tol = {});

struct EdgeSeparability {
    int u = 0, v = 0;
    double phi = 0;
    double p_z = 0;
};

struct GraphSeparability {
    std::vector<EdgeSeparability> edges;
    /// Dephasing parameter below which the preparation is separable.
    double p_z = 0;
    std::pair<int, int> argmin_edge{0, 0};
    /// (sqrt 2 - 1)^m with m the maximal degree.
    double weak_bound = 0;
};

/// Unweighted graphs only.
GraphSeparability graph_separability_threshold(const Graph &g, const numeric::Tolerance &tol = {});

/// Largest p_z with the gate of phase phi separable when each endpoint carries
/// p_z spread over dk resp. dl gates.
numeric::ThresholdResult weighted_gate_threshold(double phi, std::size_t dk, std::size_t dl,
                                                 const numeric::Tolerance &tol = {});

struct WeightedThreshold {
    /// Per-edge thresholds, then the per-vertex minima over incident edges.
    GraphSeparability graph;
    std::vector<double> vertex_p_z;
    /// Channel parameter p at which the minimal dephasing of the family equals p_z.
    double p_crit = 0;
};

/// Throws UnsupportedError when the family admits no dephasing extraction.
WeightedThreshold weighted_graph_threshold(const Graph &g, const graphdiag::PauliFamily &family,
                                           const numeric::Tolerance &tol = {});

/// p with minimal_dephasing_pauli(family(p)) = p_z, by bisection on [0, 1].
double channel_parameter_for_dephasing(const graphdiag::PauliFamily &family, double p_z,
                                       const numeric::Tolerance &tol = {});

}  // namespace qdeco::isingsep

#endif
