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

#ifndef QDECO_GRAPHDIAG_HPP
#define QDECO_GRAPHDIAG_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qdeco/channels.hpp"
#include "qdeco/graphs.hpp"
#include "qdeco/numeric.hpp"

// Graph-diagonal states sum_U lam[U] Z^U|G><G|Z^U, with U a vertex mask.
namespace qdeco::graphdiag {

using graphs::Graph;
using graphs::Mask;

constexpr std::size_t kMaxDirect = 14;

/// Pauli noise on every vertex of |G>. Pauli errors propagate as
/// X_k -> Z^{N_k}, Y_k -> Z^{N_k + k}, Z_k -> Z^k. Rejects weighted graphs.
std::vector<double> lambda_from_pauli(const Graph &g, const channels::PauliChannel &ch);
std::vector<double> lambda_from_pauli(const Graph &g, const std::vector<channels::PauliChannel> &per_vertex);
/// Closed-form sum over error sets U'. Needs p0 > 0 and n <= 14. Test oracle.
std::vector<double> lambda_direct(const Graph &g, const channels::PauliChannel &ch);

struct PtSpectrum {
    /// Eigenvalue of the partial transpose attached to each index U.
    std::vector<double> values;
    double min_value = 0;
    Mask argmin = 0;
    bool used_fallback = false;
};

/// Signed shifts whose sum is the partial transpose across (A, A^c):
/// lam'[U] = sum_t coeff_t lam[U ^ mask_t].
struct PtPlan {
    std::size_t n = 0;
    Mask a_mask = 0;
    std::size_t rank = 0;
    std::vector<std::pair<Mask, double>> terms;
};

PtPlan make_pt_plan(const Graph &g, Mask a_mask);
PtSpectrum apply_pt_plan(const PtPlan &plan, const std::vector<double> &lam);
PtSpectrum pt_spectrum(const Graph &g, const std::vector<double> &lam, Mask a_mask);
/// Split {k} vs rest; falls back to pt_spectrum for an isolated k.
PtSpectrum pt_single_vertex(const Graph &g, const std::vector<double> &lam, int k);
/// Split {k, l} vs rest; falls back to pt_spectrum unless the outside
/// neighbourhoods of k and l are linearly independent.
PtSpectrum pt_two_vertices(const Graph &g, const std::vector<double> &lam, int k, int l);

/// q = (1-p)/(1+3p), the smallest ratio p_i / p_0 for depolarizing noise.
double depolarizing_q(double p);
double depolarizing_p_from_q(double q);
/// q = (1-p)/(1+p) for dephasing noise.
double dephasing_q(double p);
double dephasing_p_from_q(double q);

/// Lower bounds on the single-vertex, vertex-pair and dephasing PT minimum,
/// scaled by 1/lam[0]. Non-negative implies PPT.
double estimate_single(double q);
double estimate_pair(double q);
double estimate_dephasing(double q, std::size_t deg);
/// Roots in q on (0, 1).
numeric::ThresholdResult estimate_single_root(const numeric::Tolerance &tol = {});
numeric::ThresholdResult estimate_pair_root(const numeric::Tolerance &tol = {});
numeric::ThresholdResult estimate_dephasing_root(std::size_t deg, const numeric::Tolerance &tol = {});

/// q lam[U] <= lam[U+X] <= lam[U]/q for X in {k, N_k, N_k+k}, all U and k.
bool lambda_estimation_check(const Graph &g, const std::vector<double> &lam, double q);

enum class PartitionStatus { crossing, always_ppt, always_npt };

struct PartitionResult {
    graphs::Bipartition part;
    PartitionStatus status = PartitionStatus::crossing;
    /// PPT for p below p_crit. NaN unless status is crossing.
    double p_crit;
    numeric::ThresholdResult detail;
};

struct ScanResult {
    std::vector<PartitionResult> partitions;
    /// Indices into partitions: largest and smallest p_crit.
    std::optional<std::size_t> first_ppt;
    std::optional<std::size_t> last_ppt;
};

using PauliFamily = std::function<channels::PauliChannel(double)>;

/// p_crit of every canonical bipartition on [1e-6, 1 - 1e-6]. Output order
/// and values do not depend on jobs.
ScanResult scan_partitions(const Graph &g, const PauliFamily &family, const numeric::Tolerance &tol = {},
                           std::size_t jobs = 1);
PartitionResult scan_partition(const Graph &g, Mask a_mask, const PauliFamily &family,
                               const numeric::Tolerance &tol = {});

std::string to_string(PartitionStatus s);

}  // namespace qdeco::graphdiag

#endif
