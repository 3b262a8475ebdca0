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

#ifndef STABMMI_CENSUS_HPP
#define STABMMI_CENSUS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stabmmi/entropy.hpp"
#include "stabmmi/graph.hpp"
#include "stabmmi/stabilizer.hpp"

namespace stabmmi {

// ---------------------------------------------------------------------------
// Labeled graphs

/// Number of vertex pairs, n(n-1)/2.
constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Graph whose edge set is the binary expansion of `code`; bit e stands for
/// the e-th pair in the order (0,1), (0,2), ..., (0,n-1), (1,2), ...
Graph graph_from_code(std::size_t n, std::uint64_t code);
std::uint64_t graph_code(const Graph &g);

/// All 2^{n(n-1)/2} labeled graphs on n vertices in ascending code order.
/// Supports 1 <= n <= 8.
class GraphRange {
  public:
    explicit GraphRange(std::size_t n);

    class iterator {
      public:
        using value_type = Graph;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        iterator(std::size_t n, std::uint64_t code) : n_(n), code_(code) {}
        Graph operator*() const { return graph_from_code(n_, code_); }
        iterator &operator++() {
            ++code_;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++code_;
            return old;
        }
        bool operator==(const iterator &other) const = default;

      private:
        std::size_t n_ = 0;
        std::uint64_t code_ = 0;
    };

    iterator begin() const { return {n_, 0}; }
    iterator end() const { return {n_, count_}; }
    std::uint64_t size() const { return count_; }

  private:
    std::size_t n_;
    std::uint64_t count_;
};

GraphRange enumerate_graphs(std::size_t n);

// ---------------------------------------------------------------------------
// Unsigned stabilizer groups

/// prod_{k=1..n} (2^k + 1).
std::uint64_t stabilizer_group_count(std::size_t n);

/// Streams every n-qubit unsigned stabilizer group exactly once as its
/// canonical generator matrix: the reduced row echelon basis of a Lagrangian
/// subspace of Z_2^{2n} in which each row's pivot is its lowest set bit and
/// rows are ordered by descending pivot. Rows are packed with X bits in
/// [0, n) and Z bits in [n, 2n). Supports 1 <= n <= 6.
class GroupIterator {
  public:
    /// Enumerates the groups whose first rows equal `prefix` (which must
    /// itself be a valid partial canonical basis). With depth < n, yields
    /// partial bases of `depth` rows instead of complete groups.
    explicit GroupIterator(std::size_t n, std::vector<std::uint64_t> prefix = {}, std::size_t depth = 0);

    /// Advances to the next group; false once the stream is exhausted.
    bool next();
    /// Current generator rows (valid after next() returned true).
    std::span<const std::uint64_t> rows() const { return rows_; }
    Tableau tableau() const { return Tableau::from_packed(rows_, n_); }
    std::size_t n() const { return n_; }

  private:
    struct Frame {
        std::size_t pivot;          // current pivot candidate
        std::uint64_t particular;   // affine solution offset
        std::vector<std::uint64_t> kernel;
        std::uint64_t counter;      // next index into the affine space
    };

    bool push_frame();
    bool advance_top();
    bool find_pivot(Frame &f, std::size_t start) const;
    std::uint64_t candidate(const Frame &f, std::uint64_t index) const;

    std::size_t n_;
    std::size_t depth_;
    std::size_t fixed_;
    std::vector<std::uint64_t> rows_;
    std::vector<Frame> stack_;
    bool started_ = false;
    bool done_ = false;
};

GroupIterator enumerate_stabilizer_groups(std::size_t n);

/// Canonical partial bases of `depth` rows; each is a valid prefix for
/// GroupIterator and together they partition the stream.
std::vector<std::vector<std::uint64_t>> group_prefixes(std::size_t n, std::size_t depth);

// ---------------------------------------------------------------------------
// Vector census

enum class CensusSource { Graphs, Groups };

struct CensusOptions {
    std::size_t jobs = 1;
    /// Also compute a minimum-edge realizing graph per distinct vector. For
    /// the groups source this adds a pass over all labeled graphs.
    bool representatives = true;
};

struct VectorRecord {
    EntropyVector vector;
    /// Graphs or groups (unsigned) realizing this exact vector.
    std::uint64_t count = 0;
    MmiTally tally;
    std::size_t class_id = 0;
    /// Fewest edges, then smallest graph_code.
    std::optional<std::uint64_t> representative_code;
};

struct ClassRecord {
    std::size_t id = 0;  // 1-based, ascending canonical vector order
    EntropyVector canonical;
    MmiTally tally;
    std::size_t vector_count = 0;
    std::uint64_t count = 0;  // summed over member vectors
    std::optional<std::uint64_t> representative_code;
};

struct VectorCensus {
    std::size_t n = 0;
    CensusSource source = CensusSource::Graphs;
    std::vector<VectorRecord> vectors;  // ascending by vector
    std::vector<ClassRecord> classes;   // ascending by id
    std::uint64_t items = 0;            // graphs or groups visited

    /// Distinct-sign states per enumerated item: 2^n for groups, 1 for graphs.
    std::uint64_t multiplicity() const { return source == CensusSource::Groups ? (std::uint64_t{1} << n) : 1; }
};

/// Caps: graphs n <= 7 (n = 8 needs allow_large), groups n <= 6.
VectorCensus vector_census(std::size_t n, CensusSource source, const CensusOptions &opts = {}, bool allow_large = false);

struct CensusRow {
    std::size_t n = 0;
    std::uint64_t total_states = 0;
    std::uint64_t saturate_all = 0;
    std::uint64_t satisfy_some_fail_none = 0;
    std::uint64_t fail_some = 0;
    std::uint64_t distinct_vectors = 0;
    std::uint64_t classes_up_to_exchange = 0;
    std::uint64_t failing_vector_count = 0;

    bool operator==(const CensusRow &other) const = default;
};

CensusRow census_row(const VectorCensus &census);
/// Group-source census reduced to a row; n in [1, 6] (n < 3 has no MMI instance).
CensusRow state_census(std::size_t n, const CensusOptions &opts = {});

// ---------------------------------------------------------------------------
// Scans

struct FourStarWitness {
    EntropyVector vector;
    std::uint64_t representative_code = 0;
    std::optional<Graph> witness;   // orbit member with an induced four-star
    std::optional<FourStar> star;
    std::size_t orbit_explored = 0;
    bool budget_exceeded = false;
};

struct FourStarReport {
    std::size_t n = 0;
    std::vector<FourStarWitness> entries;  // one per distinct failing vector

    /// Failing vectors whose orbit was fully explored without a four-star.
    std::size_t violations() const;
    std::size_t budget_failures() const;
};

/// For every distinct MMI-failing vector of the n-vertex graph census, walks
/// the LC orbit of its representative graph looking for an induced
/// four-star. n in [3, 7].
FourStarReport four_star_conjecture_scan(std::size_t n, std::size_t orbit_budget = kDefaultOrbitBudget,
                                         std::size_t jobs = 1);

struct IntersectionReport {
    std::size_t n = 0;
    std::uint64_t graphs = 0;
    std::uint64_t qualifying = 0;  // graphs with a nontrivially intersecting star partition
    std::uint64_t failing = 0;     // qualifying graphs that fail some MMI instance
    std::vector<std::uint64_t> counterexamples;  // graph codes, ascending
};

/// Checks every labeled graph on n vertices (n in [4, 7]): whenever it admits
/// a generalized star partition with nontrivial triple intersection, its
/// state must fail at least one MMI instance.
IntersectionReport nontrivial_intersection_scan(std::size_t n, std::size_t jobs = 1);

/// Runs body(chunk, worker) for every chunk in [0, chunks) on up to `jobs`
/// threads; worker is in [0, jobs) and no two concurrent calls share one.
void parallel_for(std::size_t chunks, std::size_t jobs,
                  const std::function<void(std::size_t chunk, std::size_t worker)> &body);

}  // namespace stabmmi

#endif  // STABMMI_CENSUS_HPP
