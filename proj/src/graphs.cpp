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

#include "qdeco/graphs.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <numbers>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qdeco/errors.hpp"

namespace qdeco::graphs {

namespace {

void check_vertex(const Graph &g, int v) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.n) {
        throw ValidationError("vertex " + std::to_string(v) + " out of range");
    }
}

}  // namespace

Graph::Graph(std::size_t n_) : n(n_), adj(n_, 0) {
    if (n_ > kMaxVertices) {
        throw CapacityError("graph size " + std::to_string(n_) + " exceeds the cap of " +
                              std::to_string(kMaxVertices) + " vertices");
    }
}

void Graph::add_edge(int u, int v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v) {
        throw ValidationError("self loops are not allowed");
    }
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
}

void Graph::add_edge(int u, int v, double phi_) {
    if (!(phi_ > 0 && phi_ <= std::numbers::pi)) {
        throw ValidationError("edge phase must lie in (0, pi]");
    }
    add_edge(u, v);
    weights[{std::min(u, v), std::max(u, v)}] = phi_;
}

bool Graph::weighted() const {
    for (const auto &[e, w] : weights) {
        if (w != std::numbers::pi) return true;
    }
    return false;
}

double Graph::phi(int u, int v) const {
    auto it = weights.find({std::min(u, v), std::max(u, v)});
    return it == weights.end() ? std::numbers::pi : it->second;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t u = 0; u < n; u++) {
        for (std::size_t v = u + 1; v < n; v++) {
            if ((adj[u] >> v) & 1) {
                out.emplace_back(static_cast<int>(u), static_cast<int>(v));
            }
        }
    }
    return out;
}

std::size_t Graph::edge_count() const {
    std::size_t e = 0;
    for (Mask m : adj) e += std::popcount(m);
    return e / 2;
}

bool Graph::connected() const {
    if (n == 0) return true;
    Mask seen = 1, frontier = 1;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) {
            next |= adj[std::countr_zero(f)];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == all();
}

Graph make_lattice(Lattice kind, const std::vector<std::size_t> &dims) {
    auto need = [&](std::size_t k) {
        if (dims.size() != k) {
            throw ValidationError("lattice expects " + std::to_string(k) + " dimensions");
        }
        std::size_t total = 1;
        for (std::size_t d : dims) {
            if (d == 0) throw ValidationError("lattice dimensions must be positive");
            if (d > kMaxVertices) throw CapacityError("lattice dimension exceeds the vertex cap");
            total *= d;
        }
        if (total > kMaxVertices) {
            throw CapacityError("lattice size " + std::to_string(total) + " exceeds the cap of " +
                                  std::to_string(kMaxVertices) + " vertices");
        }
        return total;
    };
    switch (kind) {
        case Lattice::ring: {
            const std::size_t n = need(1);
            if (n < 3) throw ValidationError("ring needs at least 3 vertices");
            Graph g(n);
            for (std::size_t i = 0; i < n; i++) g.add_edge(int(i), int((i + 1) % n));
            g.name = "ring:" + std::to_string(n);
            return g;
        }
        case Lattice::line: {
            Graph g(need(1));
            for (std::size_t i = 0; i + 1 < g.n; i++) g.add_edge(int(i), int(i + 1));
            g.name = "line:" + std::to_string(g.n);
            return g;
        }
        case Lattice::complete: {
            Graph g(need(1));
            for (std::size_t i = 0; i < g.n; i++)
                for (std::size_t j = i + 1; j < g.n; j++) g.add_edge(int(i), int(j));
            g.name = "complete:" + std::to_string(g.n);
            return g;
        }
        case Lattice::star: {
            Graph g(need(1));
            for (std::size_t i = 1; i < g.n; i++) g.add_edge(0, int(i));
            g.name = "star:" + std::to_string(g.n);
            return g;
        }
        case Lattice::grid2d:
        case Lattice::grid3d: {
            const bool three = kind == Lattice::grid3d;
            Graph g(need(three ? 3 : 2));
            const std::size_t w = dims[0], h = dims[1], d = three ? dims[2] : 1;
            auto id = [&](std::size_t x, std::size_t y, std::size_t z) { return int(x + w * (y + h * z)); };
            for (std::size_t z = 0; z < d; z++)
                for (std::size_t y = 0; y < h; y++)
                    for (std::size_t x = 0; x < w; x++) {
                        if (x + 1 < w) g.add_edge(id(x, y, z), id(x + 1, y, z));
                        if (y + 1 < h) g.add_edge(id(x, y, z), id(x, y + 1, z));
                        if (z + 1 < d) g.add_edge(id(x, y, z), id(x, y, z + 1));
                    }
            g.name = (three ? "grid3d:" : "grid2d:") + std::to_string(w) + "x" + std::to_string(h) +
                     (three ? "x" + std::to_string(d) : "");
            return g;
        }
    }
    throw ValidationError("unknown lattice");
}

Graph parse_lattice_spec(const std::string &spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw ValidationError("graph spec '" + spec + "' must look like kind:dims");
    }
    const std::string kind = spec.substr(0, colon);
    std::vector<std::size_t> dims;
    std::stringstream ss(spec.substr(colon + 1));
    std::string part;
    while (std::getline(ss, part, 'x')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
            throw ValidationError("graph spec '" + spec + "' has a malformed dimension");
        }
        dims.push_back(std::stoul(part));
    }
    static const std::map<std::string, Lattice> kinds = {
        {"ring", Lattice::ring},     {"line", Lattice::line},         {"grid2d", Lattice::grid2d},
        {"grid3d", Lattice::grid3d}, {"complete", Lattice::complete}, {"star", Lattice::star}};
    auto it = kinds.find(kind);
    if (it == kinds.end()) {
        throw ValidationError("unknown lattice kind '" + kind + "'");
    }
    return make_lattice(it->second, dims);
}

Mask neighborhood(const Graph &g, int k) {
    check_vertex(g, k);
    return g.adj[k];
}

std::size_t degree(const Graph &g, int k) { return std::popcount(neighborhood(g, k)); }

Mask symdiff_neighborhoods(const Graph &g, int k, int l) { return neighborhood(g, k) ^ neighborhood(g, l); }

Mask gamma(const Graph &g, Mask u) {
    Mask out = 0;
    for (; u; u &= u - 1) out ^= g.adj[std::countr_zero(u)];
    return out;
}

std::vector<Bipartition> bipartitions(const Graph &g) {
    if (g.n > kMaxEnumerate) {
        throw CapacityError("bipartition enumeration is limited to " + std::to_string(kMaxEnumerate) +
                            " vertices");
    }
    std::vector<Bipartition> out;
    if (g.n < 2) return out;
    out.reserve((std::size_t{1} << (g.n - 1)) - 1);
    for (Mask a = 2; a < (Mask{1} << g.n); a += 2) out.push_back({a, g.n});
    return out;
}

Bipartition make_bipartition(const Graph &g, Mask a_mask) {
    if (a_mask == 0 || (a_mask & ~g.all()) || a_mask == g.all()) {
        throw ValidationError("bipartition must leave both sides nonempty");
    }
    if (a_mask & 1) a_mask = g.all() & ~a_mask;
    return {a_mask, g.n};
}

void validate(const MPartition &p) {
    Mask seen = 0;
    for (Mask b : p.blocks) {
        if (b == 0) throw ValidationError("partition blocks must be nonempty");
        if (b & seen) throw ValidationError("partition blocks must be disjoint");
        seen |= b;
    }
    if (seen != ((Mask{1} << p.n) - 1)) throw ValidationError("partition blocks must cover all vertices");
}

Graph graph_from_json(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ValidationError(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
        throw ValidationError("graph JSON: integer field 'n' required");
    }
    const auto n = j["n"].get<long long>();
    if (n < 0) throw ValidationError("graph JSON: 'n' must be non-negative");
    Graph g(static_cast<std::size_t>(n));
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ValidationError("graph JSON: 'name' must be a string");
        g.name = j["name"].get<std::string>();
    }
    if (!j.contains("edges") || !j["edges"].is_array()) {
        throw ValidationError("graph JSON: array field 'edges' required");
    }
    const auto &edges = j["edges"];
    for (std::size_t i = 0; i < edges.size(); i++) {
        const std::string where = "graph JSON: edges[" + std::to_string(i) + "]";
        const auto &e = edges[i];
        if (!e.is_array() || (e.size() != 2 && e.size() != 3) || !e[0].is_number_integer() ||
            !e[1].is_number_integer() || (e.size() == 3 && !e[2].is_number())) {
            throw ValidationError(where + ": expected [u, v] or [u, v, phi]");
        }
        const int u = e[0].get<int>(), v = e[1].get<int>();
        if (!(u < v)) throw ValidationError(where + ": requires u < v");
        if (u < 0 || v >= n) throw ValidationError(where + ": vertex out of range");
        if (g.has_edge(u, v)) throw ValidationError(where + ": duplicate edge");
        try {
            if (e.size() == 3) {
                g.add_edge(u, v, e[2].get<double>());
            } else {
                g.add_edge(u, v);
            }
        } catch (const ValidationError &err) {
            throw ValidationError(where + ": " + err.what());
        }
    }
    return g;
}

std::string graph_to_json(const Graph &g) {
    nlohmann::ordered_json j;
    j["n"] = g.n;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) {
        auto it = g.weights.find({u, v});
        if (it == g.weights.end()) {
            edges.push_back({u, v});
        } else {
            edges.push_back({u, v, it->second});
        }
    }
    j["edges"] = edges;
    if (!g.name.empty()) j["name"] = g.name;
    return j.dump();
}

Graph load_graph(const std::string &path_or_spec) {
    std::ifstream in(path_or_spec);
    if (in) {
        std::stringstream buf;
        buf << in.rdbuf();
        return graph_from_json(buf.str());
    }
    if (!path_or_spec.empty() && path_or_spec.front() == '{') {
        return graph_from_json(path_or_spec);
    }
    return parse_lattice_spec(path_or_spec);
}

}  // namespace qdeco::graphs
