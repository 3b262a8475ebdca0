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


#ifndef STABMMI_TESTS_SUPPORT_HPP
#define STABMMI_TESTS_SUPPORT_HPP

// Brute-force reference implementations and shared fixtures for the test
// suites. Nothing here calls into the linear algebra of the library under
// test, so agreement is meaningful.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stabmmi/entropy.hpp"
#include "stabmmi/graph.hpp"
#include "stabmmi/stabilizer.hpp"
#include "stabmmi/star.hpp"

namespace stabmmi::oracle {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// ---------------------------------------------------------------------------
// Subspaces as explicit element sets (ambient <= 16)

/// Indicator over all 2^ambient vectors of the span of `gens`.
inline std::vector<bool> span_set(const std::vector<std::uint32_t> &gens, std::size_t ambient) {
    std::vector<bool> in(std::size_t{1} << ambient, false);
    std::vector<std::uint32_t> elems{0};
    in[0] = true;
    for (auto g : gens) {
        if (in[g]) {
            continue;
        }
        const std::size_t m = elems.size();
        for (std::size_t t = 0; t < m; ++t) {
            const std::uint32_t v = elems[t] ^ g;
            in[v] = true;
            elems.push_back(v);
        }
    }
    return in;
}

inline std::size_t set_dim(const std::vector<bool> &s) {
    const auto count = static_cast<std::size_t>(std::count(s.begin(), s.end(), true));
    return static_cast<std::size_t>(std::countr_zero(count));
}

inline std::vector<bool> set_intersect(const std::vector<bool> &a, const std::vector<bool> &b) {
    std::vector<bool> out(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) {
        out[v] = a[v] && b[v];
    }
    return out;
}

inline std::vector<std::uint32_t> set_elements(const std::vector<bool> &s) {
    std::vector<std::uint32_t> out;
    for (std::size_t v = 0; v < s.size(); ++v) {
        if (s[v]) {
            out.push_back(static_cast<std::uint32_t>(v));
        }
    }
    return out;
}

inline std::vector<bool> set_sum(const std::vector<bool> &a, const std::vector<bool> &b) {
    std::vector<bool> out(a.size(), false);
    const auto ea = set_elements(a);
    for (auto y : set_elements(b)) {
        for (auto x : ea) {
            out[x ^ y] = true;
        }
    }
    return out;
}

/// Elements of a library subspace, by expanding its basis.
inline std::vector<bool> subspace_set(const Subspace &s) {
    std::vector<std::uint32_t> gens;
    for (std::size_t r = 0; r < s.dim(); ++r) {
        gens.push_back(static_cast<std::uint32_t>(s.basis().row_word(r)));
    }
    return span_set(gens, s.ambient());
}

inline Subspace subspace_of(const std::vector<std::uint32_t> &gens, std::size_t ambient) {
    std::vector<BitVector> rows;
    for (auto g : gens) {
        rows.push_back(BitVector::from_word(g, ambient));
    }
    return Subspace::span(rows, ambient);
}

inline std::vector<std::uint32_t> random_generators(Rng &rng, std::size_t ambient, std::size_t count) {
    std::vector<std::uint32_t> gens;
    for (std::size_t t = 0; t < count; ++t) {
        gens.push_back(static_cast<std::uint32_t>(rng() & ((std::uint64_t{1} << ambient) - 1)));
    }
    return gens;
}

/// Rank of vectors packed one per word, as log2 of the span size.
inline std::size_t brute_rank(const std::vector<std::uint32_t> &rows, std::size_t bits) {
    return set_dim(span_set(rows, bits));
}

// ---------------------------------------------------------------------------
// Dense state vectors

using Amplitudes = std::vector<std::complex<double>>;

/// Pure n-qubit state; qubit q is bit q of the amplitude index.
class StateVector {
  public:
    static StateVector zero(std::size_t n) {
        StateVector s(n);
        s.amp_[0] = 1.0;
        return s;
    }

    static StateVector graph_state(const Graph &g) {
        StateVector s(g.n());
        const double norm = 1.0 / std::sqrt(static_cast<double>(s.amp_.size()));
        for (std::size_t x = 0; x < s.amp_.size(); ++x) {
            std::size_t parity = 0;
            for (auto [u, v] : g.edges()) {
                parity ^= ((x >> u) & (x >> v)) & 1;
            }
            s.amp_[x] = parity ? -norm : norm;
        }
        return s;
    }

    std::size_t n() const { return n_; }

    void h(std::size_t a) {
        const double r = 1.0 / std::sqrt(2.0);
        for (std::size_t x = 0; x < amp_.size(); ++x) {
            if (!((x >> a) & 1)) {
                const auto y = x | (std::size_t{1} << a);
                const auto p = amp_[x];
                const auto q = amp_[y];
                amp_[x] = r * (p + q);
                amp_[y] = r * (p - q);
            }
        }
    }

    void s(std::size_t a) {
        for (std::size_t x = 0; x < amp_.size(); ++x) {
            if ((x >> a) & 1) {
                amp_[x] *= std::complex<double>(0.0, 1.0);
            }
        }
    }

    void cnot(std::size_t c, std::size_t t) {
        for (std::size_t x = 0; x < amp_.size(); ++x) {
            if (((x >> c) & 1) && !((x >> t) & 1)) {
                std::swap(amp_[x], amp_[x | (std::size_t{1} << t)]);
            }
        }
    }

    void cz(std::size_t a, std::size_t b) {
        for (std::size_t x = 0; x < amp_.size(); ++x) {
            if (((x >> a) & 1) && ((x >> b) & 1)) {
                amp_[x] = -amp_[x];
            }
        }
    }

    /// Numerical rank of the amplitude matrix with rows indexed by the
    /// qubits in A and columns by the rest.
    std::size_t schmidt_rank(Mask a) const {
        const auto in_a = mask_members(a);
        const auto out_a = mask_members(full_mask(n_) & ~a);
        const std::size_t rows = std::size_t{1} << in_a.size();
        const std::size_t cols = std::size_t{1} << out_a.size();
        std::vector<Amplitudes> m(rows, Amplitudes(cols));
        for (std::size_t x = 0; x < amp_.size(); ++x) {
            std::size_t r = 0;
            std::size_t c = 0;
            for (std::size_t t = 0; t < in_a.size(); ++t) {
                r |= ((x >> in_a[t]) & 1) << t;
            }
            for (std::size_t t = 0; t < out_a.size(); ++t) {
                c |= ((x >> out_a[t]) & 1) << t;
            }
            m[r][c] = amp_[x];
        }
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols && rank < rows; ++col) {
            std::size_t best = rank;
            for (std::size_t r = rank; r < rows; ++r) {
                if (std::abs(m[r][col]) > std::abs(m[best][col])) {
                    best = r;
                }
            }
            if (std::abs(m[best][col]) < 1e-9) {
                continue;
            }
            std::swap(m[best], m[rank]);
            for (std::size_t r = rank + 1; r < rows; ++r) {
                const auto f = m[r][col] / m[rank][col];
                for (std::size_t cc = col; cc < cols; ++cc) {
                    m[r][cc] -= f * m[rank][cc];
                }
            }
            ++rank;
        }
        return rank;
    }

    /// log2 of the Schmidt rank; the empty and full sets give 0.
    std::size_t entropy(Mask a) const {
        if (a == 0 || a == full_mask(n_)) {
            return 0;
        }
        return static_cast<std::size_t>(std::countr_zero(schmidt_rank(a)));
    }

  private:
    explicit StateVector(std::size_t n) : n_(n), amp_(std::size_t{1} << n) {}

    std::size_t n_;
    Amplitudes amp_;
};

// ---------------------------------------------------------------------------
// Random Clifford circuits

struct Gate {
    enum Kind { H, S, CNOT, CZ } kind;
    std::size_t a = 0;
    std::size_t b = 0;
};

inline std::vector<Gate> random_circuit(Rng &rng, std::size_t n, std::size_t length) {
    std::vector<Gate> gates;
    for (std::size_t t = 0; t < length; ++t) {
        Gate g{static_cast<Gate::Kind>(uniform(rng, 0, n > 1 ? 3 : 1))};
        g.a = uniform(rng, 0, n - 1);
        if (g.kind == Gate::CNOT || g.kind == Gate::CZ) {
            g.b = uniform(rng, 0, n - 2);
            if (g.b >= g.a) {
                ++g.b;
            }
        }
        gates.push_back(g);
    }
    return gates;
}

inline Tableau run_circuit(Tableau t, const std::vector<Gate> &gates) {
    for (const auto &g : gates) {
        switch (g.kind) {
            case Gate::H: t = t.apply_h(g.a); break;
            case Gate::S: t = t.apply_s(g.a); break;
            case Gate::CNOT: t = t.apply_cnot(g.a, g.b); break;
            case Gate::CZ: t = t.apply_cz(g.a, g.b); break;
        }
    }
    return t;
}

inline void run_circuit(StateVector &s, const std::vector<Gate> &gates) {
    for (const auto &g : gates) {
        switch (g.kind) {
            case Gate::H: s.h(g.a); break;
            case Gate::S: s.s(g.a); break;
            case Gate::CNOT: s.cnot(g.a, g.b); break;
            case Gate::CZ: s.cz(g.a, g.b); break;
        }
    }
}

inline Tableau random_tableau(Rng &rng, std::size_t n, std::size_t length = 0) {
    return run_circuit(Tableau::zero_state(n), random_circuit(rng, n, length ? length : 6 * n * n + 4));
}

// ---------------------------------------------------------------------------
// Graphs

inline Graph random_graph(Rng &rng, std::size_t n, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

using Dense = std::vector<std::vector<int>>;

inline Dense dense_of(const Graph &g) {
    Dense d(g.n(), std::vector<int>(g.n(), 0));
    for (auto [u, v] : g.edges()) {
        d[u][v] = d[v][u] = 1;
    }
    return d;
}

inline Dense dense_local_complement(const Dense &d, std::size_t a) {
    Dense out = d;
    for (std::size_t u = 0; u < d.size(); ++u) {
        for (std::size_t v = 0; v < d.size(); ++v) {
            if (u != v && d[a][u] && d[a][v]) {
                out[u][v] ^= 1;
            }
        }
    }
    return out;
}

/// Every graph reachable by local complementations, by breadth-first search
/// over dense adjacency matrices.
inline std::set<Dense> dense_lc_orbit(const Graph &g) {
    std::set<Dense> seen{dense_of(g)};
    std::vector<Dense> queue{dense_of(g)};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::size_t a = 0; a < g.n(); ++a) {
            auto next = dense_local_complement(queue[head], a);
            if (seen.insert(next).second) {
                queue.push_back(std::move(next));
            }
        }
    }
    return seen;
}

/// Rank over GF(2) of the A x complement(A) adjacency block, via span sets.
inline std::size_t brute_graph_entropy(const Graph &g, Mask a) {
    const auto rows = mask_members(a);
    const auto cols = mask_members(g.vertex_mask() & ~a);
    if (rows.empty() || cols.empty()) {
        return 0;
    }
    std::vector<std::uint32_t> vecs;
    for (auto r : rows) {
        std::uint32_t w = 0;
        for (std::size_t t = 0; t < cols.size(); ++t) {
            w |= static_cast<std::uint32_t>(g.has_edge(r, cols[t])) << t;
        }
        vecs.push_back(w);
    }
    return brute_rank(vecs, cols.size());
}

/// A graph with vertices named like "c1", "i2", "k3": the letter selects
/// the block. Vertices are numbered C first, then I, J, K, each by index.
struct NamedGraph {
    Graph graph;
    StarPartition partition;
    std::map<std::string, std::size_t> index;
};

inline NamedGraph named_graph(const std::vector<std::pair<std::string, std::string>> &edges) {
    auto key = [](const std::string &name) {
        const std::string order = "cijk";
        return std::make_pair(order.find(name[0]), std::stoi(name.substr(1)));
    };
    std::vector<std::string> names;
    for (const auto &[a, b] : edges) {
        names.push_back(a);
        names.push_back(b);
    }
    std::sort(names.begin(), names.end(), [&](const auto &x, const auto &y) { return key(x) < key(y); });
    names.erase(std::unique(names.begin(), names.end()), names.end());
    NamedGraph out;
    Mask *blocks[] = {&out.partition.c, &out.partition.i, &out.partition.j, &out.partition.k};
    for (std::size_t v = 0; v < names.size(); ++v) {
        out.index[names[v]] = v;
        *blocks[key(names[v]).first] |= Mask{1} << v;
    }
    std::vector<Edge> e;
    for (const auto &[a, b] : edges) {
        e.emplace_back(out.index[a], out.index[b]);
    }
    out.graph = Graph::from_edges(names.size(), e);
    return out;
}

// ---------------------------------------------------------------------------
// Generalized star partitions

/// Column spaces of the C x I, C x J, C x K blocks as element sets, with
/// coordinates ordered by ascending vertex index inside C.
inline std::array<std::vector<bool>, 3> brute_block_sets(const Graph &g, const StarPartition &p) {
    const auto centre = mask_members(p.c);
    std::array<std::vector<bool>, 3> out;
    const Mask blocks[] = {p.i, p.j, p.k};
    for (std::size_t b = 0; b < 3; ++b) {
        std::vector<std::uint32_t> cols;
        for (auto v : mask_members(blocks[b])) {
            std::uint32_t w = 0;
            for (std::size_t t = 0; t < centre.size(); ++t) {
                w |= static_cast<std::uint32_t>(g.has_edge(v, centre[t])) << t;
            }
            cols.push_back(w);
        }
        out[b] = span_set(cols, centre.size());
    }
    return out;
}

inline bool brute_is_star(const Graph &g, const StarPartition &p) {
    for (auto [u, v] : g.edges()) {
        const int bu = (p.i >> u & 1) ? 1 : (p.j >> u & 1) ? 2 : (p.k >> u & 1) ? 3 : 0;
        const int bv = (p.i >> v & 1) ? 1 : (p.j >> v & 1) ? 2 : (p.k >> v & 1) ? 3 : 0;
        if (bu && bv && bu != bv) {
            return false;
        }
    }
    return true;
}

/// Every generalized star partition of g, found by trying all 4^n role
/// assignments, optionally restricted to nontrivial triple intersections.
inline std::vector<StarPartition> brute_star_partitions(const Graph &g, bool require_nontrivial) {
    const std::size_t n = g.n();
    std::vector<StarPartition> out;
    std::size_t total = 1;
    for (std::size_t t = 0; t < n; ++t) {
        total *= 4;
    }
    for (std::size_t code = 0; code < total; ++code) {
        StarPartition p;
        std::size_t c = code;
        Mask *blocks[] = {&p.c, &p.i, &p.j, &p.k};
        for (std::size_t v = 0; v < n; ++v, c /= 4) {
            *blocks[c % 4] |= Mask{1} << v;
        }
        if (!p.c || !p.i || !p.j || !p.k || !brute_is_star(g, p)) {
            continue;
        }
        if (require_nontrivial) {
            const auto sets = brute_block_sets(g, p);
            if (set_dim(set_intersect(set_intersect(sets[0], sets[1]), sets[2])) == 0) {
                continue;
            }
        }
        out.push_back(p);
    }
    return out;
}

/// Random generalized star: random roles, random edges except between two
/// different blocks among I, J, K.
inline std::pair<Graph, StarPartition> random_generalized_star(Rng &rng, std::size_t n, double p = 0.5) {
    StarPartition part;
    std::vector<std::size_t> role(n);
    for (std::size_t v = 0; v < n; ++v) {
        role[v] = v < 4 ? v : uniform(rng, 0, 3);
    }
    std::shuffle(role.begin(), role.end(), rng);
    Mask *blocks[] = {&part.c, &part.i, &part.j, &part.k};
    for (std::size_t v = 0; v < n; ++v) {
        *blocks[role[v]] |= Mask{1} << v;
    }
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const bool cross = role[u] && role[v] && role[u] != role[v];
            if (!cross && coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return {Graph::from_edges(n, edges), part};
}

/// The seven entropies of MMI over the instance (C, I, J) evaluated straight
/// from the graph.
inline MmiOutcome direct_cij_outcome(const Graph &g, const StarPartition &p) {
    auto s = [&](Mask m) { return static_cast<long>(g.entropy(m)); };
    const long lhs = s(p.c | p.i) + s(p.c | p.j) + s(p.i | p.j);
    const long rhs = s(p.c) + s(p.i) + s(p.j) + s(p.c | p.i | p.j);
    return lhs > rhs ? MmiOutcome::Satisfies : lhs == rhs ? MmiOutcome::Saturates : MmiOutcome::Fails;
}

// ---------------------------------------------------------------------------
// Counting

/// Unordered triples of pairwise disjoint nonempty subsets of n parties.
inline std::uint64_t mmi_instance_count(std::size_t n, bool include_full_union = true) {
    auto pw = [](std::uint64_t b, std::size_t e) {
        std::uint64_t r = 1;
        for (std::size_t t = 0; t < e; ++t) {
            r *= b;
        }
        return r;
    };
    const std::uint64_t all = (pw(4, n) - 3 * pw(3, n) + 3 * pw(2, n) - 1) / 6;
    const std::uint64_t covering = (pw(3, n) - 3 * pw(2, n) + 3) / 6;
    return include_full_union ? all : all - covering;
}

}  // namespace stabmmi::oracle

#endif  // STABMMI_TESTS_SUPPORT_HPP
