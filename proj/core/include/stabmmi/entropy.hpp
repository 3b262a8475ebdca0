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

#ifndef STABMMI_ENTROPY_HPP
#define STABMMI_ENTROPY_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "stabmmi/graph.hpp"
#include "stabmmi/stabilizer.hpp"
#include "stabmmi/types.hpp"

namespace stabmmi {

/// Entropy vectors are materialized in full (2^n entries).
constexpr std::size_t kMaxEntropyParties = 16;

/// Entanglement entropies (in bits) of every subsystem, indexed by mask.
/// values()[0] is the empty set and always 0.
class EntropyVector {
  public:
    EntropyVector() = default;

    /// Takes 2^n values indexed by mask. Throws InvariantViolation unless
    /// values[0] == values[full] == 0, values[A] == values[complement A], and
    /// S_A + S_B >= S_{A u B} for disjoint A, B.
    static EntropyVector from_values(std::size_t n, std::vector<std::uint8_t> values);

    static EntropyVector of(const Graph &g);
    static EntropyVector of(const Tableau &t);

    std::size_t n() const { return n_; }
    std::uint8_t operator[](Mask a) const { return values_.at(a); }
    std::span<const std::uint8_t> values() const { return values_; }

    auto operator<=>(const EntropyVector &other) const = default;
    bool operator==(const EntropyVector &other) const = default;

  private:
    EntropyVector(std::size_t n, std::vector<std::uint8_t> values) : n_(n), values_(std::move(values)) {}

    std::size_t n_ = 0;
    std::vector<std::uint8_t> values_;
};

/// Unordered triple of pairwise-disjoint nonempty subsystems, stored with
/// i < j < k as integers.
struct MmiInstance {
    Mask i = 0;
    Mask j = 0;
    Mask k = 0;

    /// Sorts the masks; throws std::invalid_argument if any is empty or two overlap.
    static MmiInstance make(Mask a, Mask b, Mask c);

    Mask all() const { return i | j | k; }
    auto operator<=>(const MmiInstance &other) const = default;
};

enum class MmiOutcome { Satisfies, Saturates, Fails };

/// "Satisfies", "Saturates" or "Fails".
std::string_view outcome_name(MmiOutcome o);
/// "S", "ST" or "F".
std::string_view outcome_code(MmiOutcome o);

/// Instances in ascending (i, j, k) order; n must be in [3, 12].
std::vector<MmiInstance> mmi_instances(std::size_t n, bool include_full_union = true);

/// S_IJ + S_IK + S_JK against S_I + S_J + S_K + S_IJK over a raw mask-indexed table.
inline MmiOutcome mmi_outcome(std::span<const std::uint8_t> s, const MmiInstance &m) {
    const int lhs = s[m.i | m.j] + s[m.i | m.k] + s[m.j | m.k];
    const int rhs = s[m.i] + s[m.j] + s[m.k] + s[m.i | m.j | m.k];
    return lhs > rhs ? MmiOutcome::Satisfies : lhs == rhs ? MmiOutcome::Saturates : MmiOutcome::Fails;
}

/// Throws std::invalid_argument if the instance is malformed or exceeds ev.n().
MmiOutcome evaluate_mmi(const EntropyVector &ev, const MmiInstance &inst);

struct MmiTally {
    std::uint64_t satisfies = 0;
    std::uint64_t saturates = 0;
    std::uint64_t fails = 0;

    std::uint64_t total() const { return satisfies + saturates + fails; }
    void add(MmiOutcome o);
    MmiTally &operator+=(const MmiTally &other);
    bool operator==(const MmiTally &other) const = default;
};

MmiTally mmi_tally(const EntropyVector &ev, bool include_full_union = true);
MmiTally mmi_tally(const EntropyVector &ev, std::span<const MmiInstance> instances);

/// Three-way per-state bucket: any failing instance, else any strict
/// satisfaction, else every instance saturated.
enum class StateBucket { SaturateAll, SatisfySomeFailNone, FailSome };

StateBucket state_bucket(const MmiTally &t);

/// Lexicographically least relabeling of ev over all n! qubit permutations,
/// comparing values in ascending mask order. Requires n <= 8.
EntropyVector canonicalize(const EntropyVector &ev);

/// Precomputed permutation tables for repeated canonicalization at fixed n.
class Canonicalizer {
  public:
    explicit Canonicalizer(std::size_t n);

    std::size_t n() const { return n_; }
    /// Canonical form of a raw 2^n table; also works on tables that are not
    /// valid entropy vectors.
    std::vector<std::uint8_t> canonical_values(std::span<const std::uint8_t> values) const;
    EntropyVector canonicalize(const EntropyVector &ev) const;

  private:
    std::size_t n_;
    std::size_t size_;
    // preimage_[p * size_ + B] = permutation p applied inversely to mask B
    std::vector<std::uint8_t> preimage_;
    std::size_t perm_count_;
};

}  // namespace stabmmi

#endif  // STABMMI_ENTROPY_HPP
