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

#include "stabmmi/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "stabmmi/star.hpp"

namespace stabmmi {

// ---------------------------------------------------------------------------
// Labeled graphs

namespace {

void rows_from_code(std::size_t n, std::uint64_t code, Mask *rows) {
    std::fill(rows, rows + n, Mask{0});
    std::size_t e = 0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v, ++e) {
            if ((code >> e) & 1) {
                rows[u] |= Mask{1} << v;
                rows[v] |= Mask{1} << u;
            }
        }
    }
}

}  // namespace

Graph graph_from_code(std::size_t n, std::uint64_t code) {
    if (n == 0 || n > 11) {
        throw std::invalid_argument("graph_from_code: n must be in [1, 11]");
    }
    if (pair_count(n) < 64 && (code >> pair_count(n))) {
        throw std::invalid_argument("graph_from_code: code has bits beyond the vertex pairs");
    }
    Mask rows[11];
    rows_from_code(n, code, rows);
    return Graph::from_rows({rows, n});
}

std::uint64_t graph_code(const Graph &g) {
    if (pair_count(g.n()) > 64) {
        throw std::invalid_argument("graph_code: graph too large for a 64-bit code");
    }
    std::uint64_t code = 0;
    std::size_t e = 0;
    for (std::size_t u = 0; u < g.n(); ++u) {
        for (std::size_t v = u + 1; v < g.n(); ++v, ++e) {
            if (g.has_edge(u, v)) {
                code |= std::uint64_t{1} << e;
            }
        }
    }
    return code;
}

GraphRange::GraphRange(std::size_t n) : n_(n) {
    if (n == 0 || n > 8) {
        throw std::invalid_argument("enumerate_graphs: n must be in [1, 8]");
    }
    count_ = std::uint64_t{1} << pair_count(n);
}

GraphRange enumerate_graphs(std::size_t n) { return GraphRange(n); }

// ---------------------------------------------------------------------------
// Stabilizer groups

std::uint64_t stabilizer_group_count(std::size_t n) {
    std::uint64_t out = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        out *= (std::uint64_t{1} << k) + 1;
    }
    return out;
}

namespace {

std::uint64_t swap_halves(std::uint64_t row, std::size_t n) {
    const std::uint64_t lo = full_mask(n);
    return ((row & lo) << n) | ((row >> n) & lo);
}

bool commute(std::uint64_t a, std::uint64_t b, std::size_t n) { return (std::popcount(a & swap_halves(b, n)) & 1) == 0; }

std::size_t pivot_of(std::uint64_t row) { return static_cast<std::size_t>(std::countr_zero(row)); }

}  // namespace

GroupIterator::GroupIterator(std::size_t n, std::vector<std::uint64_t> prefix, std::size_t depth)
    : n_(n), depth_(depth == 0 ? n : depth), fixed_(prefix.size()), rows_(std::move(prefix)) {
    if (n == 0 || n > 6) {
        throw std::invalid_argument("enumerate_stabilizer_groups: n must be in [1, 6]");
    }
    if (depth_ > n_ || fixed_ > depth_) {
        throw std::invalid_argument("GroupIterator: prefix longer than the requested depth");
    }
    Mask pivots = 0;
    for (std::size_t r = 0; r < fixed_; ++r) {
        const std::uint64_t row = rows_[r];
        if (row == 0 || (row >> (2 * n))) {
            throw std::invalid_argument("GroupIterator: prefix row out of range");
        }
        if (r > 0 && pivot_of(row) >= pivot_of(rows_[r - 1])) {
            throw std::invalid_argument("GroupIterator: prefix pivots must descend");
        }
        pivots |= Mask{1} << pivot_of(row);
    }
    for (std::size_t r = 0; r < fixed_; ++r) {
        if ((rows_[r] & pivots) != (Mask{1} << pivot_of(rows_[r]))) {
            throw std::invalid_argument("GroupIterator: prefix is not reduced");
        }
        for (std::size_t s = r + 1; s < fixed_; ++s) {
            if (!commute(rows_[r], rows_[s], n)) {
                throw std::invalid_argument("GroupIterator: prefix rows do not commute");
            }
        }
    }
}

// Solves the isotropy constraints for a new row with pivot f.pivot: the row
// is e_pivot plus a combination of non-pivot positions above it.
bool GroupIterator::find_pivot(Frame &f, std::size_t start) const {
    const std::size_t depth = rows_.size();
    const std::size_t lowest = n_ - depth - 1;  // leave room for the remaining pivots
    Mask taken = 0;
    for (auto r : rows_) {
        taken |= Mask{1} << pivot_of(r);
    }
    const Mask ambient = full_mask(2 * n_);
    for (std::size_t p = start + 1; p-- > lowest;) {
        const Mask free = ambient & ~full_mask(p + 1) & ~taken;
        // Rows of the linear system: coefficient mask over `free`, plus rhs.
        std::uint64_t coef[12];
        bool rhs[12];
        std::size_t m = 0;
        for (auto r : rows_) {
            const std::uint64_t d = swap_halves(r, n_);
            coef[m] = d & free;
            rhs[m] = (d >> p) & 1;
            ++m;
        }
        // Full reduction; each row keeps the variable it was pivoted on.
        std::size_t rank = 0;
        std::uint64_t pivot_vars = 0;
        std::uint64_t pivot_bit[12];
        bool consistent = true;
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t best = m;
            for (std::size_t t = rank; t < m; ++t) {
                if (coef[t]) {
                    best = t;
                    break;
                }
            }
            if (best == m) {
                break;
            }
            std::swap(coef[rank], coef[best]);
            std::swap(rhs[rank], rhs[best]);
            const std::uint64_t bit = coef[rank] & (~coef[rank] + 1);
            for (std::size_t t = 0; t < m; ++t) {
                if (t != rank && (coef[t] & bit)) {
                    coef[t] ^= coef[rank];
                    rhs[t] ^= rhs[rank];
                }
            }
            pivot_vars |= bit;
            pivot_bit[rank] = bit;
            ++rank;
        }
        for (std::size_t t = rank; t < m; ++t) {
            if (rhs[t]) {
                consistent = false;
            }
        }
        if (!consistent) {
            continue;
        }
        f.pivot = p;
        f.particular = Mask{1} << p;
        for (std::size_t t = 0; t < rank; ++t) {
            if (rhs[t]) {
                f.particular |= pivot_bit[t];
            }
        }
        f.kernel.clear();
        for (Mask q = free & ~pivot_vars; q; q &= q - 1) {
            const std::uint64_t bit = q & (~q + 1);
            std::uint64_t v = bit;
            for (std::size_t t = 0; t < rank; ++t) {
                if (coef[t] & bit) {
                    v |= pivot_bit[t];
                }
            }
            f.kernel.push_back(v);
        }
        f.counter = 0;
        return true;
    }
    return false;
}

std::uint64_t GroupIterator::candidate(const Frame &f, std::uint64_t index) const {
    std::uint64_t v = f.particular;
    for (std::size_t t = 0; index; ++t, index >>= 1) {
        if (index & 1) {
            v ^= f.kernel[t];
        }
    }
    return v;
}

bool GroupIterator::push_frame() {
    const std::size_t start = rows_.empty() ? 2 * n_ - 1 : pivot_of(rows_.back()) - 1;
    if (!rows_.empty() && pivot_of(rows_.back()) == 0) {
        return false;
    }
    Frame f{};
    if (!find_pivot(f, start)) {
        return false;
    }
    rows_.push_back(candidate(f, 0));
    f.counter = 1;
    stack_.push_back(std::move(f));
    return true;
}

bool GroupIterator::advance_top() {
    Frame &f = stack_.back();
    rows_.pop_back();
    if (f.counter < (std::uint64_t{1} << f.kernel.size())) {
        rows_.push_back(candidate(f, f.counter++));
        return true;
    }
    if (f.pivot > 0 && find_pivot(f, f.pivot - 1)) {
        rows_.push_back(candidate(f, 0));
        f.counter = 1;
        return true;
    }
    stack_.pop_back();
    return false;
}

bool GroupIterator::next() {
    if (done_) {
        return false;
    }
    if (!started_) {
        started_ = true;
        if (fixed_ == depth_) {
            return true;
        }
    } else {
        bool moved = false;
        while (!stack_.empty()) {
            if (advance_top()) {
                moved = true;
                break;
            }
        }
        if (!moved) {
            done_ = true;
            return false;
        }
    }
    while (rows_.size() < depth_) {
        if (push_frame()) {
            continue;
        }
        bool moved = false;
        while (!stack_.empty()) {
            if (advance_top()) {
                moved = true;
                break;
            }
        }
        if (!moved) {
            done_ = true;
            return false;
        }
    }
    return true;
}

GroupIterator enumerate_stabilizer_groups(std::size_t n) { return GroupIterator(n); }

std::vector<std::vector<std::uint64_t>> group_prefixes(std::size_t n, std::size_t depth) {
    if (depth == 0 || depth > n) {
        throw std::invalid_argument("group_prefixes: depth must be in [1, n]");
    }
    std::vector<std::vector<std::uint64_t>> out;
    GroupIterator it(n, {}, depth);
    while (it.next()) {
        out.emplace_back(it.rows().begin(), it.rows().end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parallel driver

void parallel_for(std::size_t chunks, std::size_t jobs,
                  const std::function<void(std::size_t chunk, std::size_t worker)> &body) {
    jobs = std::max<std::size_t>(1, std::min(jobs, chunks));
    if (jobs == 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            body(c, 0);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            for (;;) {
                const std::size_t c = next.fetch_add(1);
                if (c >= chunks) {
                    return;
                }
                try {
                    body(c, w);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                    next.store(chunks);
                    return;
                }
            }
        });
    }
    for (auto &t : workers) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

// ---------------------------------------------------------------------------
// Vector census

namespace {

// Entropies of the subsets not containing the last party, 4 bits each; the
// rest follow from complement symmetry. Fits n <= 8.
using VectorKey = std::array<std::uint64_t, 8>;

struct KeyHash {
    std::size_t operator()(const VectorKey &k) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (auto w : k) {
            h ^= w;
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }
};

struct Accum {
    std::uint64_t count = 0;
    // (edge count, code) of the best realizing graph; UINT64_MAX when unknown
    std::uint64_t rep_edges = ~std::uint64_t{0};
    std::uint64_t rep_code = ~std::uint64_t{0};

    void merge(const Accum &o) {
        count += o.count;
        if (std::tie(o.rep_edges, o.rep_code) < std::tie(rep_edges, rep_code)) {
            rep_edges = o.rep_edges;
            rep_code = o.rep_code;
        }
    }
};

using AccumMap = std::unordered_map<VectorKey, Accum, KeyHash>;

void put(VectorKey &key, Mask a, std::uint64_t value) { key[a >> 4] |= value << (4 * (a & 15)); }

std::uint8_t get(const VectorKey &key, Mask a) { return static_cast<std::uint8_t>((key[a >> 4] >> (4 * (a & 15))) & 15); }

VectorKey graph_key(std::size_t n, const Mask *rows) {
    VectorKey key{};
    const Mask half = Mask{1} << (n - 1);
    std::uint64_t buf[8];
    for (Mask a = 1; a < half; ++a) {
        std::size_t k = 0;
        for (Mask m = a; m; m &= m - 1) {
            buf[k++] = rows[std::countr_zero(m)] & ~a;
        }
        put(key, a, rank_words({buf, k}));
    }
    return key;
}

VectorKey group_key(std::size_t n, std::span<const std::uint64_t> rows) {
    VectorKey key{};
    const Mask half = Mask{1} << (n - 1);
    for (Mask a = 1; a < half; ++a) {
        put(key, a, packed_projected_rank(rows, n, a) - mask_size(a));
    }
    return key;
}

std::vector<std::uint8_t> unpack(std::size_t n, const VectorKey &key) {
    const Mask full = full_mask(n);
    std::vector<std::uint8_t> values(full + 1, 0);
    const Mask half = Mask{1} << (n - 1);
    for (Mask a = 1; a < half; ++a) {
        values[a] = get(key, a);
        values[full & ~a] = values[a];
    }
    return values;
}

void merge_into(AccumMap &dst, const AccumMap &src) {
    for (const auto &[k, v] : src) {
        dst[k].merge(v);
    }
}

AccumMap graph_pass(std::size_t n, std::size_t jobs) {
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(total, 512));
    const std::uint64_t per = (total + chunks - 1) / chunks;
    std::vector<AccumMap> maps(std::max<std::size_t>(1, jobs));
    parallel_for(chunks, jobs, [&](std::size_t c, std::size_t w) {
        AccumMap &map = maps[w];
        Mask rows[8];
        const std::uint64_t lo = c * per, hi = std::min(total, lo + per);
        for (std::uint64_t code = lo; code < hi; ++code) {
            rows_from_code(n, code, rows);
            Accum one;
            one.count = 1;
            one.rep_edges = static_cast<std::uint64_t>(std::popcount(code));
            one.rep_code = code;
            map[graph_key(n, rows)].merge(one);
        }
    });
    for (std::size_t w = 1; w < maps.size(); ++w) {
        merge_into(maps[0], maps[w]);
    }
    return std::move(maps[0]);
}

AccumMap group_pass(std::size_t n, std::size_t jobs, std::uint64_t &items) {
    const auto prefixes = group_prefixes(n, std::min<std::size_t>(n, 2));
    std::vector<AccumMap> maps(std::max<std::size_t>(1, jobs));
    std::vector<std::uint64_t> seen(maps.size(), 0);
    parallel_for(prefixes.size(), jobs, [&](std::size_t c, std::size_t w) {
        AccumMap &map = maps[w];
        GroupIterator it(n, prefixes[c]);
        while (it.next()) {
            ++map[group_key(n, it.rows())].count;
            ++seen[w];
        }
    });
    items = 0;
    for (std::size_t w = 0; w < maps.size(); ++w) {
        items += seen[w];
        if (w > 0) {
            merge_into(maps[0], maps[w]);
        }
    }
    return std::move(maps[0]);
}

}  // namespace

VectorCensus vector_census(std::size_t n, CensusSource source, const CensusOptions &opts, bool allow_large) {
    if (n == 0) {
        throw std::invalid_argument("vector_census: n must be at least 1");
    }
    if (source == CensusSource::Graphs && (n > 8 || (n == 8 && !allow_large))) {
        throw LimitExceeded("vector_census: graph source is capped at n = 7 (n = 8 needs an explicit override)");
    }
    if (source == CensusSource::Groups && n > 6) {
        throw LimitExceeded("vector_census: group source is capped at n = 6");
    }
    VectorCensus out;
    out.n = n;
    out.source = source;

    AccumMap acc;
    if (source == CensusSource::Graphs) {
        acc = graph_pass(n, opts.jobs);
        out.items = std::uint64_t{1} << pair_count(n);
    } else {
        acc = group_pass(n, opts.jobs, out.items);
        if (opts.representatives) {
            AccumMap graphs = graph_pass(n, opts.jobs);
            for (auto &[key, a] : acc) {
                auto it = graphs.find(key);
                if (it == graphs.end()) {
                    throw InvariantViolation("vector_census: a stabilizer entropy vector has no graph-state realization");
                }
                a.rep_edges = it->second.rep_edges;
                a.rep_code = it->second.rep_code;
            }
            if (graphs.size() != acc.size()) {
                throw InvariantViolation("vector_census: graph and group sources disagree on the vector set");
            }
        }
    }

    std::vector<std::pair<std::vector<std::uint8_t>, Accum>> sorted;
    sorted.reserve(acc.size());
    for (const auto &[key, a] : acc) {
        sorted.emplace_back(unpack(n, key), a);
    }
    std::sort(sorted.begin(), sorted.end(), [](const auto &x, const auto &y) { return x.first < y.first; });

    const std::vector<MmiInstance> instances = n >= 3 ? mmi_instances(n, true) : std::vector<MmiInstance>{};
    const Canonicalizer canon(n);
    std::map<std::vector<std::uint8_t>, std::vector<std::size_t>> by_class;
    std::map<std::vector<std::uint8_t>, std::size_t> index_of;
    for (std::size_t idx = 0; idx < sorted.size(); ++idx) {
        auto &[values, a] = sorted[idx];
        VectorRecord rec;
        rec.vector = EntropyVector::from_values(n, values);
        rec.count = a.count;
        rec.tally = mmi_tally(rec.vector, instances);
        if (a.rep_code != ~std::uint64_t{0}) {
            rec.representative_code = a.rep_code;
        }
        by_class[canon.canonical_values(values)].push_back(idx);
        index_of[values] = idx;
        out.vectors.push_back(std::move(rec));
    }
    std::size_t id = 0;
    for (const auto &[canonical, members] : by_class) {
        ClassRecord cls;
        cls.id = ++id;
        cls.canonical = EntropyVector::from_values(n, canonical);
        cls.vector_count = members.size();
        auto self = index_of.find(canonical);
        if (self == index_of.end()) {
            throw InvariantViolation("vector_census: canonical vector missing from the census");
        }
        cls.tally = out.vectors[self->second].tally;
        cls.representative_code = out.vectors[self->second].representative_code;
        for (auto m : members) {
            out.vectors[m].class_id = cls.id;
            cls.count += out.vectors[m].count;
        }
        out.classes.push_back(std::move(cls));
    }
    return out;
}

CensusRow census_row(const VectorCensus &census) {
    CensusRow row;
    row.n = census.n;
    row.distinct_vectors = census.vectors.size();
    row.classes_up_to_exchange = census.classes.size();
    const std::uint64_t mult = census.multiplicity();
    for (const auto &v : census.vectors) {
        const std::uint64_t states = v.count * mult;
        row.total_states += states;
        switch (state_bucket(v.tally)) {
        case StateBucket::SaturateAll:
            row.saturate_all += states;
            break;
        case StateBucket::SatisfySomeFailNone:
            row.satisfy_some_fail_none += states;
            break;
        case StateBucket::FailSome:
            row.fail_some += states;
            ++row.failing_vector_count;
            break;
        }
    }
    return row;
}

CensusRow state_census(std::size_t n, const CensusOptions &opts) {
    CensusOptions o = opts;
    o.representatives = false;
    VectorCensus census = vector_census(n, CensusSource::Groups, o);
    if (census.items != stabilizer_group_count(n)) {
        throw InvariantViolation("state_census: group stream length does not match the product formula");
    }
    return census_row(census);
}

// ---------------------------------------------------------------------------
// Scans

std::size_t FourStarReport::violations() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const auto &e) { return !e.witness && !e.budget_exceeded; }));
}

std::size_t FourStarReport::budget_failures() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const auto &e) { return e.budget_exceeded; }));
}

FourStarReport four_star_conjecture_scan(std::size_t n, std::size_t orbit_budget, std::size_t jobs) {
    if (n < 3) {
        throw std::invalid_argument("four_star_conjecture_scan: n must be at least 3");
    }
    if (n > 7) {
        throw LimitExceeded("four_star_conjecture_scan: capped at n = 7");
    }
    CensusOptions opts;
    opts.jobs = jobs;
    const VectorCensus census = vector_census(n, CensusSource::Graphs, opts);
    FourStarReport report;
    report.n = n;
    for (const auto &v : census.vectors) {
        if (v.tally.fails) {
            FourStarWitness w;
            w.vector = v.vector;
            w.representative_code = *v.representative_code;
            report.entries.push_back(std::move(w));
        }
    }
    parallel_for(report.entries.size(), jobs, [&](std::size_t c, std::size_t) {
        FourStarWitness &w = report.entries[c];
        const Graph start = graph_from_code(n, w.representative_code);
        std::size_t explored = 0;
        try {
            w.witness = find_in_lc_orbit(
                start,
                [&explored](const Graph &g) {
                    ++explored;
                    return has_induced_four_star(g);
                },
                orbit_budget);
        } catch (const LimitExceeded &e) {
            w.budget_exceeded = true;
            explored = e.partial_size();
        }
        w.orbit_explored = explored;
        if (w.witness) {
            w.star = induced_four_stars(*w.witness).front();
        }
    });
    return report;
}

IntersectionReport nontrivial_intersection_scan(std::size_t n, std::size_t jobs) {
    if (n < 4) {
        throw std::invalid_argument("nontrivial_intersection_scan: n must be at least 4");
    }
    if (n > 7) {
        throw LimitExceeded("nontrivial_intersection_scan: capped at n = 7");
    }
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(total, 512));
    const std::uint64_t per = (total + chunks - 1) / chunks;
    const auto instances = mmi_instances(n, true);
    struct Partial {
        std::uint64_t qualifying = 0, failing = 0;
        std::vector<std::uint64_t> counterexamples;
    };
    std::vector<Partial> parts(chunks);
    parallel_for(chunks, jobs, [&](std::size_t c, std::size_t) {
        Partial &part = parts[c];
        Mask rows[8];
        std::vector<std::uint8_t> values(std::size_t{1} << n, 0);
        const std::uint64_t lo = c * per, hi = std::min(total, lo + per);
        for (std::uint64_t code = lo; code < hi; ++code) {
            rows_from_code(n, code, rows);
            const Graph g = Graph::from_rows({rows, n});
            if (!has_nontrivial_star_partition(g)) {
                continue;
            }
            ++part.qualifying;
            const auto key = graph_key(n, rows);
            values = unpack(n, key);
            const bool fails = std::any_of(instances.begin(), instances.end(), [&](const MmiInstance &m) {
                return mmi_outcome(values, m) == MmiOutcome::Fails;
            });
            if (fails) {
                ++part.failing;
            } else {
                part.counterexamples.push_back(code);
            }
        }
    });
    IntersectionReport report;
    report.n = n;
    report.graphs = total;
    for (const auto &p : parts) {
        report.qualifying += p.qualifying;
        report.failing += p.failing;
        report.counterexamples.insert(report.counterexamples.end(), p.counterexamples.begin(),
                                      p.counterexamples.end());
    }
    return report;
}

}  // namespace stabmmi
