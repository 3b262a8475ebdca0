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

#ifndef STABMMI_STABILIZER_HPP
#define STABMMI_STABILIZER_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "stabmmi/gf2.hpp"
#include "stabmmi/graph.hpp"
#include "stabmmi/types.hpp"

namespace stabmmi {

/// Generator matrix [X | Z] of an unsigned stabilizer group on n qubits.
/// Row i is generator i; column j of X (resp. Z) marks an X or Y (resp. Z or
/// Y) on qubit j. Row signs carry no entropy information and are not stored.
///
/// Every Tableau has independent, pairwise commuting generators. Gates return
/// a new value.
class Tableau {
  public:
    /// Validates rank([x|z]) == n and symplectic self-orthogonality; throws
    /// InvariantViolation otherwise.
    Tableau(BitMatrix x, BitMatrix z);

    /// Stabilizers Z_1, ..., Z_n of |0...0>.
    static Tableau zero_state(std::size_t n);
    /// Generators X_v prod_{w in N(v)} Z_w, i.e. x = I and z = adjacency.
    static Tableau from_graph(const Graph &g);
    /// Row r of the tableau is words[r]; X bits in positions [0, n), Z bits in [n, 2n).
    static Tableau from_packed(std::span<const std::uint64_t> words, std::size_t n);

    /// Parses n lines of 2n '0'/'1' characters (X block then Z block).
    static Tableau from_text(std::string_view text);
    std::string to_text() const;

    std::size_t n() const { return n_; }
    const BitMatrix &x() const { return x_; }
    const BitMatrix &z() const { return z_; }

    // 0-based qubit indices.
    Tableau apply_h(std::size_t a) const;
    Tableau apply_s(std::size_t a) const;
    Tableau apply_cnot(std::size_t control, std::size_t target) const;
    Tableau apply_cz(std::size_t a, std::size_t b) const;

    /// n x 2|A| matrix: X columns of A, then Z columns of A (ascending).
    BitMatrix project(Mask a) const;
    std::size_t projected_rank(Mask a) const;
    /// S_A = rank(project(A)) - |A|.
    std::size_t entropy(Mask a) const;

    /// Same stabilizer group (equal row spaces of [X | Z]).
    bool same_group(const Tableau &other) const;

    /// Rows packed as X bits [0, n) and Z bits [n, 2n); requires n <= 32.
    std::vector<std::uint64_t> packed_rows() const;

    bool operator==(const Tableau &other) const = default;

  private:
    struct Unchecked {};
    Tableau(BitMatrix x, BitMatrix z, Unchecked);
    void check_qubit(std::size_t a, const char *op) const;
    Mask checked_subsystem(Mask a, const char *op) const;

    std::size_t n_;
    BitMatrix x_;
    BitMatrix z_;
};

/// R_A = rank(project(A)) for every nonempty A, indexed by mask.
struct RankVector {
    std::size_t n = 0;
    std::vector<std::size_t> entries;  // entries[0] unused

    std::size_t operator[](Mask a) const { return entries.at(a); }
};

RankVector rank_vector(const Tableau &t);

/// Rank of the packed tableau rows restricted to subsystem A.
inline std::size_t packed_projected_rank(std::span<const std::uint64_t> rows, std::size_t n, Mask a) {
    const std::uint64_t keep = a | (a << n);
    std::uint64_t buf[32];
    for (std::size_t i = 0; i < rows.size(); ++i) {
        buf[i] = rows[i] & keep;
    }
    return rank_words({buf, rows.size()});
}

}  // namespace stabmmi

#endif  // STABMMI_STABILIZER_HPP
