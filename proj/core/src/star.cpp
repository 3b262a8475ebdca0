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

#include "stabmmi/star.hpp"

#include <array>
#include <stdexcept>
#include <tuple>

namespace stabmmi {

void StarPartition::validate(std::size_t n) const {
    if (c == 0 || i == 0 || j == 0 || k == 0) {
        throw std::invalid_argument("StarPartition: C, I, J and K must all be nonempty");
    }
    if ((c & i) || (c & j) || (c & k) || (i & j) || (i & k) || (j & k)) {
        throw std::invalid_argument("StarPartition: blocks overlap");
    }
    if ((c | i | j | k) != full_mask(n)) {
        throw std::invalid_argument("StarPartition: blocks do not cover all " + std::to_string(n) + " vertices");
    }
}

namespace {

Mask neighborhood(const Graph &g, Mask s) {
    Mask out = 0;
    for (Mask m = s; m; m &= m - 1) {
        out |= g.neighbors(static_cast<std::size_t>(std::countr_zero(m)));
    }
    return out;
}

bool blocks_disconnected(const Graph &g, const StarPartition &p) {
    const Mask ni = neighborhood(g, p.i);
    return !(ni & (p.j | p.k)) && !(neighborhood(g, p.j) & p.k);
}

void require_star(const Graph &g, const StarPartition &p, const char *op) {
    p.validate(g.n());
    if (!blocks_disconnected(g, p)) {
        throw std::invalid_argument(std::string(op) + ": partition is not a generalized star (edge between I, J, K)");
    }
}

BitMatrix block(const Graph &g, Mask rows, Mask cols) {
    auto r = mask_members(rows);
    auto c = mask_members(cols);
    return g.adjacency().select(r, c);
}

std::size_t block_rank(const Graph &g, Mask rows, Mask cols) {
    std::uint64_t words[kMaxParties];
    std::size_t k = 0;
    for (Mask m = cols; m; m &= m - 1) {
        words[k++] = g.neighbors(static_cast<std::size_t>(std::countr_zero(m))) & rows;
    }
    return rank_words({words, k});
}

// Reduced xor basis over 64-bit vectors keyed by the highest set bit.
class WordBasis {
  public:
    bool insert(std::uint64_t v) {
        v = reduce(v);
        if (!v) {
            return false;
        }
        basis_[size_++] = v;
        return true;
    }
    std::uint64_t reduce(std::uint64_t v) const {
        for (std::size_t t = 0; t < size_; ++t) {
            const std::uint64_t b = basis_[t];
            const std::uint64_t top = std::uint64_t{1} << (63 - std::countl_zero(b));
            if (v & top) {
                v ^= b;
            }
        }
        return v;
    }
    bool contains(std::uint64_t v) const { return reduce(v) == 0; }
    std::size_t dim() const { return size_; }
    std::uint64_t operator[](std::size_t t) const { return basis_[t]; }

  private:
    // Each inserted vector is already reduced against earlier ones, so
    // reducing in insertion order clears every earlier leading bit.
    std::array<std::uint64_t, 64> basis_{};
    std::size_t size_ = 0;
};

WordBasis block_basis(const Graph &g, Mask center, Mask b) {
    WordBasis out;
    for (Mask m = b; m; m &= m - 1) {
        out.insert(g.neighbors(static_cast<std::size_t>(std::countr_zero(m))) & center);
    }
    return out;
}

bool nontrivial_triple(const WordBasis &a, const WordBasis &b, const WordBasis &c) {
    const WordBasis *s = &a, *t = &b, *u = &c;
    if (t->dim() < s->dim()) {
        std::swap(s, t);
    }
    if (u->dim() < s->dim()) {
        std::swap(s, u);
    }
    if (s->dim() == 0) {
        return false;
    }
    const std::size_t combos = std::size_t{1} << s->dim();
    for (std::size_t code = 1; code < combos; ++code) {
        std::uint64_t v = 0;
        for (std::size_t bit = 0; bit < s->dim(); ++bit) {
            if ((code >> bit) & 1) {
                v ^= (*s)[bit];
            }
        }
        if (t->contains(v) && u->contains(v)) {
            return true;
        }
    }
    return false;
}

std::vector<Mask> components(const Graph &g, Mask vertices) {
    std::vector<Mask> out;
    Mask left = vertices;
    while (left) {
        Mask comp = left & (~left + 1);
        Mask frontier = comp;
        while (frontier) {
            const Mask grown = (neighborhood(g, frontier) & vertices) & ~comp;
            comp |= grown;
            frontier = grown;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

// Visits every generalized star partition of g; the callback returns true to stop.
template <typename Visit>
void for_each_star_partition(const Graph &g, Visit &&visit) {
    const std::size_t n = g.n();
    const Mask all = g.vertex_mask();
    for (Mask c = 1; c < all; ++c) {
        if (n - mask_size(c) < 3) {
            continue;
        }
        auto comps = components(g, all & ~c);
        const std::size_t m = comps.size();
        if (m < 3) {
            continue;
        }
        std::size_t colorings = 1;
        for (std::size_t t = 0; t < m; ++t) {
            colorings *= 3;
        }
        for (std::size_t code = 0; code < colorings; ++code) {
            Mask blocks[3] = {0, 0, 0};
            std::size_t rest = code;
            for (std::size_t t = 0; t < m; ++t) {
                blocks[rest % 3] |= comps[t];
                rest /= 3;
            }
            if (!blocks[0] || !blocks[1] || !blocks[2]) {
                continue;
            }
            if (visit(StarPartition{c, blocks[0], blocks[1], blocks[2]})) {
                return;
            }
        }
    }
}

bool has_triple(const Graph &g, const StarPartition &p) {
    return nontrivial_triple(block_basis(g, p.c, p.i), block_basis(g, p.c, p.j), block_basis(g, p.c, p.k));
}

}  // namespace

bool is_generalized_star(const Graph &g, const StarPartition &p) {
    p.validate(g.n());
    return blocks_disconnected(g, p);
}

bool is_anchored_single_center(const Graph &g, const StarPartition &p) {
    if (mask_size(p.c) != 1) {
        throw std::invalid_argument("is_anchored_single_center: C must be a single vertex");
    }
    if (!is_generalized_star(g, p)) {
        return false;
    }
    const Mask nc = g.neighbors(static_cast<std::size_t>(std::countr_zero(p.c)));
    return (nc & p.i) && (nc & p.j) && (nc & p.k);
}

BlockSpaces block_spaces(const Graph &g, const StarPartition &p) {
    require_star(g, p, "block_spaces");
    return {column_space(block(g, p.c, p.i)), column_space(block(g, p.c, p.j)), column_space(block(g, p.c, p.k))};
}

StarClassification classify(const Graph &g, const StarPartition &p) {
    const BlockSpaces w = block_spaces(g, p);
    StarClassification out;
    out.nontrivial_intersection = !intersect(intersect(w.w_i, w.w_j), w.w_k).is_zero();
    out.distributive = is_distributive(w.w_i, w.w_j, w.w_k);
    if (!out.nontrivial_intersection) {
        out.case_id = out.distributive ? 2 : 1;
        out.predicted = out.distributive ? MmiOutcome::Saturates : MmiOutcome::Satisfies;
    } else {
        out.case_id = out.distributive ? 3 : 4;
        if (out.distributive) {
            out.predicted = MmiOutcome::Fails;
        }
    }
    return out;
}

MmiOutcome mmi_cij_colspace(const Graph &g, const StarPartition &p) {
    const BlockSpaces w = block_spaces(g, p);
    const std::size_t lhs = intersect(w.w_i, w.w_k).dim() + intersect(w.w_j, w.w_k).dim();
    const std::size_t rhs = intersect(sum(w.w_i, w.w_j), w.w_k).dim();
    return lhs < rhs ? MmiOutcome::Satisfies : lhs == rhs ? MmiOutcome::Saturates : MmiOutcome::Fails;
}

StarEntropies entropies_from_blocks(const Graph &g, const StarPartition &p) {
    require_star(g, p, "entropies_from_blocks");
    StarEntropies s;
    s.s_c = block_rank(g, p.c, p.i | p.j | p.k);
    s.s_i = block_rank(g, p.c, p.i);
    s.s_j = block_rank(g, p.c, p.j);
    s.s_ci = block_rank(g, p.c, p.j | p.k);
    s.s_cj = block_rank(g, p.c, p.i | p.k);
    s.s_ij = block_rank(g, p.c, p.i | p.j);
    s.s_cij = block_rank(g, p.c, p.k);
    return s;
}

bool generalized_anchoring(const Graph &g, const StarPartition &p) {
    const BlockSpaces w = block_spaces(g, p);
    return w.w_i == w.w_j && w.w_j == w.w_k;
}

std::optional<FourStar> four_star_from_intersection(const Graph &g, const StarPartition &p) {
    const BlockSpaces w = block_spaces(g, p);
    const Subspace triple = intersect(intersect(w.w_i, w.w_j), w.w_k);
    if (triple.is_zero()) {
        return std::nullopt;
    }
    const auto centers = mask_members(p.c);
    const std::size_t center = centers[triple.pivots().front()];
    auto leaf_in = [&](Mask b) {
        return static_cast<std::size_t>(std::countr_zero(g.neighbors(center) & b));
    };
    std::array<std::size_t, 3> leaves = {leaf_in(p.i), leaf_in(p.j), leaf_in(p.k)};
    std::sort(leaves.begin(), leaves.end());
    return FourStar{center, leaves};
}

std::optional<StarPartition> find_star_partition(const Graph &g, bool require_nontrivial, bool maximize_cij) {
    if (g.n() < 4 || g.n() > 12) {
        throw std::invalid_argument("find_star_partition: n must be in [4, 12]");
    }
    std::optional<StarPartition> best;
    auto key = [maximize_cij](const StarPartition &p) {
        const std::size_t k_size = maximize_cij ? mask_size(p.k) : 0;
        return std::make_tuple(k_size, p.c, p.i, p.j);
    };
    for_each_star_partition(g, [&](const StarPartition &p) {
        if (require_nontrivial && !has_triple(g, p)) {
            return false;
        }
        if (!best || key(p) < key(*best)) {
            best = p;
        }
        return false;
    });
    return best;
}

bool has_nontrivial_star_partition(const Graph &g) {
    if (g.n() < 4 || !has_induced_four_star(g)) {
        return false;
    }
    bool found = false;
    for_each_star_partition(g, [&](const StarPartition &p) {
        found = has_triple(g, p);
        return found;
    });
    return found;
}

}  // namespace stabmmi
