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

#ifndef QDECO_GHZ_HPP
#define QDECO_GHZ_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "qdeco/channels.hpp"
#include "qdeco/numeric.hpp"

// GHZ-diagonal states of N qubits with permutation-symmetric diagonal.
// lam[k] is the weight of each computational basis state with k ones, mu the
// coherence between |0...0> and |1...1>.
namespace qdeco::ghz {

constexpr std::size_t kMaxQubits = 1000;

struct GhzDiagonal {
    std::size_t n = 0;
    std::vector<double> lam;
    double mu = 0;
    bool symmetric = true;
};

/// Depolarizing noise of survival parameter p on every qubit of |GHZ>.
GhzDiagonal ghz_depol_coeffs(std::size_t n, double p);
GhzDiagonal ghz_qo_coeffs(std::size_t n, const channels::QoChannel &ch, double t);

/// sum_k binom(N, k) lam[k]; equals 1 for a normalised state.
double normalization(const GhzDiagonal &d);

/// lam[k] lam[N-k] - mu^2; PPT across any k-vs-(N-k) split iff >= 0.
double ppt_margin(const GhzDiagonal &d, std::size_t k);
/// mu^2 <= lam[k] lam[N-k], boundary inclusive. k must lie in 1..N-1.
bool ghz_ppt_condition(const GhzDiagonal &d, std::size_t k);

/// Critical depolarizing p below which the k-vs-(N-k) split is PPT.
numeric::ThresholdResult ghz_lifetime(std::size_t n, std::size_t k, const numeric::Tolerance &tol = {});
/// Critical time for QO noise, searched on [0, t_max].
numeric::ThresholdResult ghz_lifetime_qo(std::size_t n, std::size_t k, const channels::QoChannel &ch,
                                         double t_max, const numeric::Tolerance &tol = {});

/// lam[k] <- (lam[k] + lam[N-k]) / 2, mu unchanged.
GhzDiagonal ghz_depolarize(const GhzDiagonal &d);
/// Sufficient condition for distillability of every bipartite split under QO noise.
bool ghz_qo_distillable_lower(std::size_t n, const channels::QoChannel &ch, double t);

/// Block count above which some M-block partition of the depolarized GHZ
/// state is PPT. p in (0, 1).
double blockwise_upper_M(double p);
/// Block count below which every block partition stays NPT.
double blockwise_lower_M(double p);
/// Smallest block that must stay entangled, N / blockwise_upper_M(p).
double blockwise_upper_m(std::size_t n, double p);
/// QO analogue of blockwise_upper_M; nullopt ("no finite bound") for s in {0, 1}.
std::optional<double> blockwise_qo_upper_M(const channels::QoChannel &ch, double t);

/// lam[k] lam[N-k] is non-increasing for k = 1..floor(N/2).
bool ghz_lambda_product_monotonicity(const GhzDiagonal &d);

/// ln(2) / N: a conservative lifetime below which 2 p^N > 1, hence
/// 2 p^N + p^2 > 1, so star-graph pairs stay distillable.
double star_pair_lifetime_estimate(std::size_t n);

}  // namespace qdeco::ghz

#endif
