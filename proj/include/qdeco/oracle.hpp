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

#ifndef QDECO_ORACLE_HPP
#define QDECO_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "qdeco/channels.hpp"
#include "qdeco/graphs.hpp"
#include "qdeco/numeric.hpp"

// Brute-force density matrices for cross-checking the structured fast paths.
// Qubit q is bit q of the basis index.
namespace qdeco::oracle {

using numeric::cplx;
using numeric::HermitianMatrix;

struct DenseState {
    std::size_t n = 0;
    HermitianMatrix rho;
};

struct Projection {
    /// Normalised post-measurement state; the measured qubit is kept.
    DenseState state;
    double probability = 0;
};

/// Amplitudes 2^(-n/2) prod over edges inside x of exp(-i phi). Caps n at 8.
std::vector<cplx> graph_state_vector(const graphs::Graph &g);
DenseState dense_graph_state(const graphs::Graph &g);
DenseState dense_ghz(std::size_t n);
DenseState from_vector(const std::vector<cplx> &psi);

void apply_channel(DenseState &s, std::size_t qubit, const channels::ChannelMatrix &ch);
/// One channel per qubit, or a single channel applied to every qubit.
void apply_channels(DenseState &s, const std::vector<channels::ChannelMatrix> &chs);

HermitianMatrix partial_transpose(const HermitianMatrix &rho, std::uint64_t mask);
DenseState partial_trace(const DenseState &s, std::uint64_t keep_mask);
/// Throws EvaluationError when the outcome has zero probability.
Projection project_z(const DenseState &s, std::size_t qubit, int outcome);

/// Expectation of the stabilizer X_k Z^{N_k} in s.
double stabilizer_expectation(const DenseState &s, const graphs::Graph &g, int k);
/// lambda_U = <G| Z^U rho Z^U |G> for every U.
std::vector<double> graph_diagonal_coefficients(const DenseState &s, const graphs::Graph &g);
/// Sorted spectrum of rho^{T_A}.
std::vector<double> pt_spectrum(const DenseState &s, std::uint64_t a_mask);

}  // namespace qdeco::oracle

#endif
