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

#ifndef QDECO_CHANNELS_HPP
#define QDECO_CHANNELS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qdeco/numeric.hpp"

namespace qdeco::channels {

using numeric::cplx;
using numeric::HermitianMatrix;

/// Pauli index convention: 0=I, 1=X, 2=Y, 3=Z. With it, sigma_a sigma_b is a
/// phase times sigma_(a xor b).
cplx pauli_product_phase(int a, int b);

/// rho -> p0 rho + p1 X rho X + p2 Y rho Y + p3 Z rho Z. Sum is 1 within 1e-12.
struct PauliChannel {
    std::array<double, 4> p{1, 0, 0, 0};
};

/// Single-qubit Lindblad generator with population damping rate B, phase
/// damping rate C and steady-state weight s on |0>. Requires 2C >= B.
struct QoChannel {
    double B = 0;
    double C = 0;
    double s = 0.5;
};

struct QoSnapshot {
    std::array<double, 4> lambda{};
    double mu = 0;
    double a = 1, b = 1, c = 1;
};

/// rho -> sum_ij p[i][j] sigma_i rho sigma_j. Hermitian and trace preserving.
struct ChannelMatrix {
    std::array<std::array<cplx, 4>, 4> p{};
};

struct DephasingSplit {
    double p_z = 1;
    /// E' with E = E' o D(p_z); D acts first.
    ChannelMatrix residual;
    bool feasible = false;
};

enum class NamedKind { depolarizing, dephasing, bitflip };

PauliChannel make_pauli(double p0, double p1, double p2, double p3);
void validate(const PauliChannel &ch);
void validate(const QoChannel &ch);
/// Hermitian, completely positive and trace preserving within 1e-10.
void validate(const ChannelMatrix &ch);

/// p in [0, 1] is the survival parameter: p = 1 is the identity channel.
PauliChannel named_channel(NamedKind kind, double p);
NamedKind parse_named_kind(const std::string &name);
std::string to_string(NamedKind kind);

QoSnapshot qo_snapshot(const QoChannel &ch, double t);

ChannelMatrix to_matrix(const PauliChannel &ch);
ChannelMatrix to_matrix(const QoSnapshot &snap);
using Kraus2 = std::array<std::array<cplx, 2>, 2>;
ChannelMatrix from_kraus(const std::vector<Kraus2> &ops);
/// Amplitude decay towards |0> with gamma = 1 - exp(-kt).
ChannelMatrix decay_channel(double kt);

/// after o before: before acts first.
ChannelMatrix compose(const ChannelMatrix &after, const ChannelMatrix &before);
/// Parameter of D(pa) o D(pb).
double compose_dephasing(double pa, double pb);
double max_abs_diff(const ChannelMatrix &a, const ChannelMatrix &b);

/// 4x4 state (E x id)|Phi+><Phi+|, basis index 2*out + ref.
HermitianMatrix jamiolkowski_state(const ChannelMatrix &ch);
/// Partial transpose on the output qubit of a jamiolkowski_state.
HermitianMatrix transpose_output(const HermitianMatrix &j);

bool is_entanglement_breaking_pauli(const PauliChannel &ch);
/// s(1-s) [exp(Ct)(1-exp(-Bt))]^2 >= 1. Never true for s in {0, 1}.
bool is_entanglement_breaking_qo(const QoChannel &ch, double t);
/// PPT test of the Jamiolkowski state; exact for qubit channels.
bool is_entanglement_breaking_jamiolkowski(const ChannelMatrix &ch,
                                           const numeric::Tolerance &tol = {});

/// Q = (p_z+1)/(2p_z) P + (p_z-1)/(2p_z) M P M. Feasible iff Q is PSD within -1e-10.
DephasingSplit extract_dephasing(const ChannelMatrix &ch, double p_z);
/// Smallest p_z < 1 for which extraction is feasible, or nullopt when only
/// the trivial p_z = 1 works (one member of a ratio pair is zero).
std::optional<double> minimal_dephasing_pauli(const PauliChannel &ch);
/// Same question for a general channel, by bisection on feasibility.
std::optional<double> minimal_dephasing(const ChannelMatrix &ch, const numeric::Tolerance &tol = {});

/// Parsed {"kind": ...} channel description. Kinds depolarizing, dephasing and
/// bitflip may omit "p", which then becomes the sweep variable.
struct ChannelSpec {
    std::string kind;
    std::optional<double> p;
    PauliChannel pauli;
    QoChannel qo;
    std::optional<double> t;

    bool is_named() const;
    bool is_pauli() const;
    /// Pauli channel at sweep parameter p (a named kind) or the fixed one.
    PauliChannel pauli_at(double p) const;
    std::string to_json() const;
};

/// Accepts a JSON object or a bare kind name. Raises ValidationError with context.
ChannelSpec parse_channel_spec(const std::string &text);

}  // namespace qdeco::channels

#endif
