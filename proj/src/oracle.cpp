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

#include "qdeco/oracle.hpp"

#include <bit>
#include <cmath>

#include "qdeco/errors.hpp"

namespace qdeco::oracle {

namespace {

void check_cap(std::size_t n) {
    if (n > graphs::kMaxDense) {
        throw CapacityError("dense oracle is limited to " + std::to_string(graphs::kMaxDense) + " qubits");
    }
}

using Pauli2 = std::array<std::array<cplx, 2>, 2>;

Pauli2 pauli(int i) {
    static const std::array<Pauli2, 4> s = {{
        {{{1, 0}, {0, 1}}},
        {{{0, 1}, {1, 0}}},
        {{{0, cplx(0, -1)}, {cplx(0, 1), 0}}},
        {{{1, 0}, {0, -1}}},
    }};
    return s[i];
}

}  // namespace

std::vector<cplx> graph_state_vector(const graphs::Graph &g) {
    check_cap(g.n);
    const std::size_t d = std::size_t{1} << g.n;
    std::vector<cplx> psi(d, 1.0 / std::sqrt(static_cast<double>(d)));
    for (auto [u, v] : g.edges()) {
        const cplx ph = std::polar(1.0, -g.phi(u, v));
        for (std::size_t x = 0; x < d; x++) {
            if (((x >> u) & 1) && ((x >> v) & 1)) psi[x] *= ph;
        }
    }
    return psi;
}

DenseState from_vector(const std::vector<cplx> &psi) {
    const std::size_t n = std::countr_zero(psi.size());
    check_cap(n);
    DenseState s{n, HermitianMatrix(psi.size())};
    for (std::size_t r = 0; r < psi.size(); r++) {
        for (std::size_t c = 0; c < psi.size(); c++) s.rho(r, c) = psi[r] * std::conj(psi[c]);
    }
    return s;
}

DenseState dense_graph_state(const graphs::Graph &g) { return from_vector(graph_state_vector(g)); }

DenseState dense_ghz(std::size_t n) {
    check_cap(n);
    if (n == 0) throw ValidationError("GHZ state needs at least one qubit");
    std::vector<cplx> psi(std::size_t{1} << n, 0.0);
    psi.front() = psi.back() = 1 / std::sqrt(2.0);
    return from_vector(psi);
}

void apply_channel(DenseState &s, std::size_t qubit, const channels::ChannelMatrix &ch) {
    if (qubit >= s.n) throw ValidationError("apply_channel: qubit out of range");
    // B' = sum_ij p_ij sigma_i B sigma_j on each 2x2 block of the qubit.
    cplx sup[2][2][2][2] = {};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            if (ch.p[i][j] == cplx{}) continue;
            const Pauli2 si = pauli(i), sj = pauli(j);
            for (int a = 0; a < 2; a++)
                for (int b = 0; b < 2; b++)
                    for (int c = 0; c < 2; c++)
                        for (int e = 0; e < 2; e++) sup[a][b][c][e] += ch.p[i][j] * si[a][c] * sj[e][b];
        }
    }
    const std::size_t d = s.rho.dim();
    const std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t r = 0; r < d; r++) {
        if (r & bit) continue;
        for (std::size_t c = 0; c < d; c++) {
            if (c & bit) continue;
            cplx blk[2][2], out[2][2] = {};
            for (int a = 0; a < 2; a++)
                for (int b = 0; b < 2; b++) blk[a][b] = s.rho(r | (a ? bit : 0), c | (b ? bit : 0));
            for (int a = 0; a < 2; a++)
                for (int b = 0; b < 2; b++)
                    for (int x = 0; x < 2; x++)
                        for (int y = 0; y < 2; y++) out[a][b] += sup[a][b][x][y] * blk[x][y];
            for (int a = 0; a < 2; a++)
                for (int b = 0; b < 2; b++) s.rho(r | (a ? bit : 0), c | (b ? bit : 0)) = out[a][b];
        }
    }
}

void apply_channels(DenseState &s, const std::vector<channels::ChannelMatrix> &chs) {
    if (chs.size() != 1 && chs.size() != s.n) {
        throw ValidationError("apply_channels: need one channel or one per qubit");
    }
    for (std::size_t q = 0; q < s.n; q++) apply_channel(s, q, chs.size() == 1 ? chs[0] : chs[q]);
}

HermitianMatrix partial_transpose(const HermitianMatrix &rho, std::uint64_t mask) {
    const std::size_t d = rho.dim();
    HermitianMatrix t(d);
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            const std::size_t r2 = (r & ~mask) | (c & mask);
            const std::size_t c2 = (c & ~mask) | (r & mask);
            t(r, c) = rho(r2, c2);
        }
    }
    return t;
}

DenseState partial_trace(const DenseState &s, std::uint64_t keep_mask) {
    keep_mask &= (std::uint64_t{1} << s.n) - 1;
    const std::size_t k = std::popcount(keep_mask);
    const std::uint64_t drop = ((std::uint64_t{1} << s.n) - 1) & ~keep_mask;
    DenseState out{k, HermitianMatrix(std::size_t{1} << k)};
    auto spread = [](std::uint64_t packed, std::uint64_t mask) {
        std::uint64_t o = 0;
        for (std::uint64_t bit = 1; mask; bit <<= 1) {
            const std::uint64_t low = mask & -mask;
            if (packed & bit) o |= low;
            mask ^= low;
        }
        return o;
    };
    const std::size_t dk = std::size_t{1} << k;
    const std::size_t dd = std::size_t{1} << std::popcount(drop);
    for (std::size_t r = 0; r < dk; r++) {
        for (std::size_t c = 0; c < dk; c++) {
            cplx acc = 0;
            for (std::size_t e = 0; e < dd; e++) {
                const std::uint64_t env = spread(e, drop);
                acc += s.rho(spread(r, keep_mask) | env, spread(c, keep_mask) | env);
            }
            out.rho(r, c) = acc;
        }
    }
    return out;
}

Projection project_z(const DenseState &s, std::size_t qubit, int outcome) {
    if (qubit >= s.n || (outcome != 0 && outcome != 1)) {
        throw ValidationError("project_z: bad qubit or outcome");
    }
    const std::size_t d = s.rho.dim();
    const std::size_t bit = std::size_t{1} << qubit;
    const std::size_t want = outcome ? bit : 0;
    double prob = 0;
    for (std::size_t x = 0; x < d; x++) {
        if ((x & bit) == want) prob += s.rho(x, x).real();
    }
    if (!(prob > 1e-300)) {
        throw EvaluationError("project_z: outcome has zero probability");
    }
    Projection p{{s.n, HermitianMatrix(d)}, prob};
    for (std::size_t r = 0; r < d; r++) {
        if ((r & bit) != want) continue;
        for (std::size_t c = 0; c < d; c++) {
            if ((c & bit) == want) p.state.rho(r, c) = s.rho(r, c) / prob;
        }
    }
    return p;
}

double stabilizer_expectation(const DenseState &s, const graphs::Graph &g, int k) {
    // tr(rho K) with K|x> = (-1)^{|x & N_k|} |x ^ k>.
    const std::size_t d = s.rho.dim();
    const std::size_t nk = graphs::neighborhood(g, k);
    cplx acc = 0;
    for (std::size_t x = 0; x < d; x++) {
        const double sign = (std::popcount(x & nk) & 1) ? -1.0 : 1.0;
        acc += s.rho(x, x ^ (std::size_t{1} << k)) * sign;
    }
    return acc.real();
}

std::vector<double> graph_diagonal_coefficients(const DenseState &s, const graphs::Graph &g) {
    const std::vector<cplx> psi = graph_state_vector(g);
    const std::size_t d = psi.size();
    std::vector<double> lam(d);
    std::vector<cplx> v(d), rv(d);
    for (std::size_t u = 0; u < d; u++) {
        for (std::size_t x = 0; x < d; x++) v[x] = (std::popcount(x & u) & 1) ? -psi[x] : psi[x];
        cplx acc = 0;
        for (std::size_t r = 0; r < d; r++) {
            cplx row = 0;
            for (std::size_t c = 0; c < d; c++) row += s.rho(r, c) * v[c];
            acc += std::conj(v[r]) * row;
        }
        lam[u] = acc.real();
    }
    return lam;
}

std::vector<double> pt_spectrum(const DenseState &s, std::uint64_t a_mask) {
    return numeric::hermitian_spectrum(partial_transpose(s.rho, a_mask));
}

}  // namespace qdeco::oracle
