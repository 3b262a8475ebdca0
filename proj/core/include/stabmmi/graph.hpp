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

#ifndef STABMMI_GRAPH_HPP
#define STABMMI_GRAPH_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stabmmi/gf2.hpp"
#include "stabmmi/types.hpp"

namespace stabmmi {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..n-1 (n <= 64), stored as a
/// symmetric zero-diagonal adjacency matrix. Represents the graph state
/// obtained by applying CZ along every edge to |+>^n.
class Graph {
  public:
    explicit Graph(std::size_t n = 0);

    /// Builds from 0-based edges. Self-loops and out-of-range vertices throw
    /// std::invalid_argument; repeated edges are accepted.
    static Graph from_edges(std::size_t n, const std::vector<Edge> &edges);
    /// Validates symmetry and a zero diagonal.
    static Graph from_adjacency(const BitMatrix &adjacency);
    /// Builds from one neighbourhood mask per vertex (trusted to be symmetric).
    static Graph from_rows(std::span<const Mask> rows);

    std::size_t n() const { return n_; }
    const BitMatrix &adjacency() const { return adj_; }
    Mask neighbors(std::size_t v) const { return adj_.row_word(v); }
    bool has_edge(std::size_t u, std::size_t v) const { return adj_.get(u, v); }
    std::size_t edge_count() const;
    /// Edges (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    Graph with_edge_toggled(std::size_t u, std::size_t v) const;
    /// Relabels vertex v as perm[v].
    Graph permuted(std::span<const std::size_t> perm) const;

    /// tau_a: complements the subgraph induced by the open neighbourhood of a.
    Graph local_complement(std::size_t a) const;

    /// |A| x |complement A| block of the adjacency matrix, rows and columns in
    /// ascending vertex order. A must be nonempty and proper.
    BitMatrix submatrix(Mask a) const;
    /// S_A = rank of submatrix(A); the full set gives 0.
    std::size_t entropy(Mask a) const;

    Mask vertex_mask() const { return full_mask(n_); }

    bool operator==(const Graph &other) const = default;

  private:
    std::size_t n_;
    BitMatrix adj_;
};

struct GraphHash {
    std::size_t operator()(const Graph &g) const;
};

/// An induced subgraph isomorphic to K_{1,3}: `center` adjacent to all three
/// `leaves`, leaves pairwise non-adjacent.
struct FourStar {
    std::size_t center;
    std::array<std::size_t, 3> leaves;  // ascending
    bool operator==(const FourStar &other) const = default;
};

/// All induced four-stars, ordered by (center, leaves).
std::vector<FourStar> induced_four_stars(const Graph &g);
bool has_induced_four_star(const Graph &g);

constexpr std::size_t kDefaultOrbitBudget = 1'000'000;

/// Breadth-first closure of g under local complementation at every vertex,
/// deduplicated by labelled adjacency, in discovery order. Throws
/// LimitExceeded (with the partial size) if more than `node_budget` graphs
/// would be collected.
std::vector<Graph> lc_orbit(const Graph &g, std::size_t node_budget = kDefaultOrbitBudget);

/// Walks the LC orbit of g and returns the first member accepted by `pred`,
/// or nullopt once the orbit is exhausted. Same budget rule as lc_orbit.
std::optional<Graph> find_in_lc_orbit(const Graph &g, const std::function<bool(const Graph &)> &pred,
                                      std::size_t node_budget = kDefaultOrbitBudget);

/// Member with the fewest edges; ties broken by the lexicographically
/// smallest graph6 string.
Graph minimal_edge_representative(std::span<const Graph> orbit);

/// graph6 encoding (no ">>graph6<<" header). Supports n <= 62.
std::string to_graph6(const Graph &g);
/// Throws ParseError on malformed input.
Graph from_graph6(std::string_view text);

}  // namespace stabmmi

#endif  // STABMMI_GRAPH_HPP
