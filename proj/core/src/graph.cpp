// Copyright 2026 The stabmmi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabmmi/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace stabmmi {

Graph::Graph(std::size_t n) : n_(n), adj_(n, n) {
    if (n > kMaxParties) {
        throw std::invalid_argument("Graph: at most 64 vertices are supported");
    }
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge> &edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw std::invalid_argument("Graph::from_edges: vertex out of range in edge (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
        }
        if (u == v) {
            throw std::invalid_argument("Graph::from_edges: self-loop at vertex " + std::to_string(u));
        }
        g.adj_.set(u, v, true);
        g.adj_.set(v, u, true);
    }
    return g;
}

Graph Graph::from_adjacency(const BitMatrix &adjacency) {
    if (adjacency.rows() != adjacency.cols()) {
        throw std::invalid_argument("Graph::from_adjacency: matrix is not square");
    }
    Graph g(adjacency.rows());
    for (std::size_t i = 0; i < g.n_; ++i) {
        if (adjacency.get(i, i)) {
            throw std::invalid_argument("Graph::from_adjacency: nonzero diagonal");
        }
        for (std::size_t j = i + 1; j < g.n_; ++j) {
            if (adjacency.get(i, j) != adjacency.get(j, i)) {
                throw std::invalid_argument("Graph::from_adjacency: matrix is not symmetric");
            }
        }
    }
    g.adj_ = adjacency;
    return g;
}

Graph Graph::from_rows(std::span<const Mask> rows) {
    Graph g(rows.size());
    g.adj_ = BitMatrix::from_words(rows, rows.size());
    return g;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (std::size_t v = 0; v < n_; ++v) {
        twice += mask_size(neighbors(v));
    }
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n_; ++u) {
        Mask later = neighbors(u) & ~full_mask(u + 1);
        for (auto v : mask_members(later)) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::with_edge_toggled(std::size_t u, std::size_t v) const {
    if (u >= n_ || v >= n_ || u == v) {
        throw std::invalid_argument("Graph::with_edge_toggled: invalid vertex pair");
    }
    Graph g = *this;
    g.adj_.flip(u, v);
    g.adj_.flip(v, u);
    return g;
}

Graph Graph::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != n_) {
        throw std::invalid_argument("Graph::permuted: permutation size mismatch");
    }
    Graph g(n_);
    for (auto [u, v] : edges()) {
        g.adj_.set(perm[u], perm[v], true);
        g.adj_.set(perm[v], perm[u], true);
    }
    return g;
}

Graph Graph::local_complement(std::size_t a) const {
    if (a >= n_) {
        throw std::out_of_range("Graph::local_complement: vertex out of range");
    }
    Graph g = *this;
    const Mask nbhd = neighbors(a);
    for (auto v : mask_members(nbhd)) {
        // flip v's adjacency to the rest of N(a); no self-loop since v ∉ N(a)\{v}
        g.adj_.row_words(v)[0] ^= nbhd & ~(Mask{1} << v);
    }
    return g;
}

BitMatrix Graph::submatrix(Mask a) const {
    const Mask all = vertex_mask();
    if (a == 0 || a == all || (a & ~all)) {
        throw std::invalid_argument("Graph::submatrix: subsystem must be a nonempty proper vertex subset");
    }
    auto rows = mask_members(a);
    auto cols = mask_members(all & ~a);
    return adj_.select(rows, cols);
}

std::size_t Graph::entropy(Mask a) const {
    const Mask all = vertex_mask();
    if (a == 0 || (a & ~all)) {
        throw std::invalid_argument("Graph::entropy: subsystem must be a nonempty vertex subset");
    }
    if (a == all) {
        return 0;
    }
    std::uint64_t rows[kMaxParties];
    std::size_t k = 0;
    for (Mask m = a; m; m &= m - 1) {
        rows[k++] = neighbors(static_cast<std::size_t>(std::countr_zero(m))) & ~a;
    }
    return rank_words({rows, k});
}

std::size_t GraphHash::operator()(const Graph &g) const {
    std::size_t h = g.n() * 0x9e3779b97f4a7c15ULL;
    for (std::size_t v = 0; v < g.n(); ++v) {
        h ^= g.neighbors(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::vector<FourStar> induced_four_stars(const Graph &g) {
    std::vector<FourStar> out;
    for (std::size_t c = 0; c < g.n(); ++c) {
        auto nb = mask_members(g.neighbors(c));
        for (std::size_t x = 0; x < nb.size(); ++x) {
            for (std::size_t y = x + 1; y < nb.size(); ++y) {
                if (g.has_edge(nb[x], nb[y])) {
                    continue;
                }
                for (std::size_t z = y + 1; z < nb.size(); ++z) {
                    if (!g.has_edge(nb[x], nb[z]) && !g.has_edge(nb[y], nb[z])) {
                        out.push_back({c, {nb[x], nb[y], nb[z]}});
                    }
                }
            }
        }
    }
    return out;
}

bool has_induced_four_star(const Graph &g) {
    for (std::size_t c = 0; c < g.n(); ++c) {
        auto nb = mask_members(g.neighbors(c));
        for (std::size_t x = 0; x < nb.size(); ++x) {
            // leaves y, z must avoid N(x); look for two non-adjacent ones there
            const Mask rest = g.neighbors(c) & ~g.neighbors(nb[x]) & ~full_mask(nb[x] + 1);
            for (auto y : mask_members(rest)) {
                if (rest & ~g.neighbors(y) & ~full_mask(y + 1)) {
                    return true;
                }
            }
        }
    }
    return false;
}

std::optional<Graph> find_in_lc_orbit(const Graph &g, const std::function<bool(const Graph &)> &pred,
                                      std::size_t node_budget) {
    std::unordered_set<Graph, GraphHash> seen;
    std::deque<Graph> frontier;
    seen.insert(g);
    frontier.push_back(g);
    while (!frontier.empty()) {
        Graph cur = std::move(frontier.front());
        frontier.pop_front();
        if (pred(cur)) {
            return cur;
        }
        for (std::size_t a = 0; a < cur.n(); ++a) {
            if (cur.neighbors(a) == 0) {
                continue;
            }
            Graph next = cur.local_complement(a);
            if (seen.contains(next)) {
                continue;
            }
            if (seen.size() >= node_budget) {
                throw LimitExceeded("LC orbit exceeds node budget of " + std::to_string(node_budget), seen.size());
            }
            seen.insert(next);
            frontier.push_back(std::move(next));
        }
    }
    return std::nullopt;
}

std::vector<Graph> lc_orbit(const Graph &g, std::size_t node_budget) {
    std::vector<Graph> order;
    find_in_lc_orbit(
        g,
        [&order](const Graph &member) {
            order.push_back(member);
            return false;
        },
        node_budget);
    return order;
}

Graph minimal_edge_representative(std::span<const Graph> orbit) {
    if (orbit.empty()) {
        throw std::invalid_argument("minimal_edge_representative: empty orbit");
    }
    const Graph *best = &orbit.front();
    std::size_t best_edges = best->edge_count();
    std::string best_code = to_graph6(*best);
    for (const auto &g : orbit.subspan(1)) {
        const std::size_t e = g.edge_count();
        if (e > best_edges) {
            continue;
        }
        std::string code = to_graph6(g);
        if (e < best_edges || code < best_code) {
            best = &g;
            best_edges = e;
            best_code = std::move(code);
        }
    }
    return *best;
}

// ---------------------------------------------------------------------------
// graph6

namespace {
constexpr int kGraph6Offset = 63;
constexpr std::size_t kGraph6MaxSmall = 62;
}  // namespace

std::string to_graph6(const Graph &g) {
    const std::size_t n = g.n();
    if (n > kGraph6MaxSmall) {
        throw std::invalid_argument("to_graph6: only n <= 62 is supported");
    }
    std::string out(1, static_cast<char>(n + kGraph6Offset));
    int acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kGraph6Offset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) {
        out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Offset));
    }
    return out;
}

Graph from_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) {
        text.remove_prefix(header.size());
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw ParseError("graph6: empty input");
    }
    for (char ch : text) {
        if (ch < kGraph6Offset || ch > 126) {
            throw ParseError("graph6: character outside the printable range 63..126");
        }
    }
    if (text[0] == 126) {
        throw ParseError("graph6: graphs with more than 62 vertices are not supported");
    }
    const std::size_t n = static_cast<std::size_t>(text[0] - kGraph6Offset);
    const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
    const std::size_t chars = (bits + 5) / 6;
    if (text.size() != 1 + chars) {
        throw ParseError("graph6: expected " + std::to_string(1 + chars) + " characters for n=" +
                         std::to_string(n) + ", got " + std::to_string(text.size()));
    }
    Graph g(n);
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const int value = text[1 + k / 6] - kGraph6Offset;
            if ((value >> (5 - k % 6)) & 1) {
                edges.emplace_back(i, j);
            }
        }
    }
    if (chars) {
        const int last = text.back() - kGraph6Offset;
        const std::size_t pad = chars * 6 - bits;
        if (last & ((1 << pad) - 1)) {
            throw ParseError("graph6: nonzero padding bits");
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace stabmmi
