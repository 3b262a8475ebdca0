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

#ifndef STABMMI_STAR_HPP
#define STABMMI_STAR_HPP

#include <cstddef>
#include <optional>

#include "stabmmi/entropy.hpp"
#include "stabmmi/gf2.hpp"
#include "stabmmi/graph.hpp"
#include "stabmmi/types.hpp"

namespace stabmmi {

/// Vertex partition V = C u I u J u K with every block nonempty.
struct StarPartition {
    Mask c = 0;
    Mask i = 0;
    Mask j = 0;
    Mask k = 0;

    /// Throws std::invalid_argument unless the blocks are nonempty, pairwise
    /// disjoint and cover exactly the n vertices.
    void validate(std::size_t n) const;
    /// The MMI instance (C, I, J).
    MmiInstance instance() const { return MmiInstance::make(c, i, j); }

    bool operator==(const StarPartition &other) const = default;
};

/// Column spaces W_I, W_J, W_K of the C x I, C x J, C x K adjacency blocks,
/// with coordinates indexed by the vertices of C in ascending order.
struct BlockSpaces {
    Subspace w_i;
    Subspace w_j;
    Subspace w_k;
};

struct StarClassification {
    bool nontrivial_intersection = false;
    bool distributive = false;
    int case_id = 0;                        // 1..4
    std::optional<MmiOutcome> predicted;    // nullopt for case 4
};

/// The seven entropies entering MMI_{C,I,J}.
struct StarEntropies {
    std::size_t s_c = 0, s_i = 0, s_j = 0;
    std::size_t s_ci = 0, s_cj = 0, s_ij = 0;
    std::size_t s_cij = 0;

    bool operator==(const StarEntropies &other) const = default;
};

/// True iff no edge joins two different blocks among I, J, K.
bool is_generalized_star(const Graph &g, const StarPartition &p);

/// Requires |C| == 1 (std::invalid_argument otherwise). True iff the
/// partition is a generalized star and each of I, J, K has a neighbour of the
/// center.
bool is_anchored_single_center(const Graph &g, const StarPartition &p);

// The functions below throw std::invalid_argument if p is not a generalized
// star partition of g.

BlockSpaces block_spaces(const Graph &g, const StarPartition &p);
StarClassification classify(const Graph &g, const StarPartition &p);

/// dim(W_I n W_K) + dim(W_J n W_K) against dim((W_I + W_J) n W_K):
/// smaller satisfies, equal saturates, larger fails.
MmiOutcome mmi_cij_colspace(const Graph &g, const StarPartition &p);

/// Block-rank formulas: S_C = rank[CI CJ CK], S_I = rank CI, S_J = rank CJ,
/// S_CI = rank[CJ CK], S_CJ = rank[CI CK], S_IJ = rank[CI CJ], S_CIJ = rank CK.
StarEntropies entropies_from_blocks(const Graph &g, const StarPartition &p);

/// W_I == W_J == W_K.
bool generalized_anchoring(const Graph &g, const StarPartition &p);

/// If W_I n W_J n W_K is nontrivial, an induced four-star with its center in
/// C and one leaf in each of I, J, K; nullopt otherwise.
std::optional<FourStar> four_star_from_intersection(const Graph &g, const StarPartition &p);

/// Exhaustive search over generalized star partitions of g (n in [4, 12]).
/// With `require_nontrivial`, only partitions with a nontrivial triple
/// intersection qualify. With `maximize_cij` the result maximizes |C u I u J|;
/// remaining ties (and, without it, all candidates) are ordered by the
/// smallest (C, I, J) mask triple.
std::optional<StarPartition> find_star_partition(const Graph &g, bool require_nontrivial, bool maximize_cij);

/// Whether some generalized star partition of g has a nontrivial triple
/// intersection. Stops at the first hit.
bool has_nontrivial_star_partition(const Graph &g);

}  // namespace stabmmi

#endif  // STABMMI_STAR_HPP
