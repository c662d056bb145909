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

#ifndef QDECO_GRAPHS_HPP
#define QDECO_GRAPHS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qdeco::graphs {

constexpr std::size_t kMaxVertices = 24;
constexpr std::size_t kMaxEnumerate = 20;
constexpr std::size_t kMaxDense = 8;

using Mask = std::uint64_t;

/// Simple undirected graph; adj[k] is the neighbour mask of k. Optional edge
/// phases phi in (0, pi], keyed by (u, v) with u < v; absent means pi.
struct Graph {
    std::size_t n = 0;
    std::vector<Mask> adj;
    std::map<std::pair<int, int>, double> weights;
    std::string name;

    explicit Graph(std::size_t n = 0);
    void add_edge(int u, int v);
    void add_edge(int u, int v, double phi);
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    /// True when some edge phase differs from pi.
    bool weighted() const;
    double phi(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;
    std::size_t edge_count() const;
    Mask all() const { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
    bool connected() const;
};

/// Canonical: vertex 0 lies in the complement, so a_mask is nonzero and even.
struct Bipartition {
    Mask a_mask = 0;
    std::size_t n = 0;

    Mask complement() const { return ((Mask{1} << n) - 1) & ~a_mask; }
};

/// Disjoint nonempty blocks covering all vertices.
struct MPartition {
    std::vector<Mask> blocks;
    std::size_t n = 0;
};

enum class Lattice { ring, line, grid2d, grid3d, complete, star };

/// dims: ring/line/complete/star take {N}; grid2d {W, H}; grid3d {W, H, D}.
/// Vertex (x, y, z) of a grid has index x + W (y + H z). Star centre is 0.
Graph make_lattice(Lattice kind, const std::vector<std::size_t> &dims);
/// "ring:6", "grid2d:4x5", "grid3d:3x3x3", ...
Graph parse_lattice_spec(const std::string &spec);

Mask neighborhood(const Graph &g, int k);
std::size_t degree(const Graph &g, int k);
Mask symdiff_neighborhoods(const Graph &g, int k, int l);
/// Union of neighbourhoods of the vertices in U: Gamma U over GF(2).
Mask gamma(const Graph &g, Mask u);

/// All 2^(n-1) - 1 canonical bipartitions, ascending a_mask.
std::vector<Bipartition> bipartitions(const Graph &g);
Bipartition make_bipartition(const Graph &g, Mask a_mask);
void validate(const MPartition &p);

Graph graph_from_json(const std::string &text);
std::string graph_to_json(const Graph &g);
Graph load_graph(const std::string &path_or_spec);

}  // namespace qdeco::graphs

#endif
