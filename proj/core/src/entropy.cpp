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

#include "stabmmi/entropy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stabmmi {

EntropyVector EntropyVector::from_values(std::size_t n, std::vector<std::uint8_t> values) {
    if (n == 0 || n > kMaxEntropyParties) {
        throw std::invalid_argument("EntropyVector: n must be in [1, 16]");
    }
    const Mask full = full_mask(n);
    if (values.size() != full + 1) {
        throw std::invalid_argument("EntropyVector: expected 2^n values");
    }
    if (values[0] != 0) {
        throw InvariantViolation("EntropyVector: empty-set entropy must be 0");
    }
    if (values[full] != 0) {
        throw InvariantViolation("EntropyVector: entropy of the full system must be 0");
    }
    for (Mask a = 1; a < full; ++a) {
        if (values[a] != values[full & ~a]) {
            throw InvariantViolation("EntropyVector: S_A != S_complement(A) for A = {" + mask_label(a) + "}");
        }
    }
    for (Mask a = 1; a < full; ++a) {
        const Mask rest = full & ~a;
        for (Mask b = rest; b; b = (b - 1) & rest) {
            if (values[a] + values[b] < values[a | b]) {
                throw InvariantViolation("EntropyVector: subadditivity fails for {" + mask_label(a) + "}, {" +
                                         mask_label(b) + "}");
            }
        }
    }
    return EntropyVector(n, std::move(values));
}

EntropyVector EntropyVector::of(const Graph &g) {
    if (g.n() == 0 || g.n() > kMaxEntropyParties) {
        throw std::invalid_argument("EntropyVector::of: graph size must be in [1, 16]");
    }
    std::vector<std::uint8_t> values(std::size_t{1} << g.n(), 0);
    for (Mask a = 1; a < values.size(); ++a) {
        values[a] = static_cast<std::uint8_t>(g.entropy(a));
    }
    return from_values(g.n(), std::move(values));
}

EntropyVector EntropyVector::of(const Tableau &t) {
    if (t.n() > kMaxEntropyParties) {
        throw std::invalid_argument("EntropyVector::of: tableau size must be at most 16");
    }
    auto rows = t.packed_rows();
    std::vector<std::uint8_t> values(std::size_t{1} << t.n(), 0);
    for (Mask a = 1; a < values.size(); ++a) {
        values[a] = static_cast<std::uint8_t>(packed_projected_rank(rows, t.n(), a) - mask_size(a));
    }
    return from_values(t.n(), std::move(values));
}

MmiInstance MmiInstance::make(Mask a, Mask b, Mask c) {
    if (a == 0 || b == 0 || c == 0) {
        throw std::invalid_argument("MmiInstance: subsystems must be nonempty");
    }
    if ((a & b) || (a & c) || (b & c)) {
        throw std::invalid_argument("MmiInstance: subsystems must be pairwise disjoint");
    }
    Mask m[3] = {a, b, c};
    std::sort(m, m + 3);
    return {m[0], m[1], m[2]};
}

std::string_view outcome_name(MmiOutcome o) {
    switch (o) {
    case MmiOutcome::Satisfies:
        return "Satisfies";
    case MmiOutcome::Saturates:
        return "Saturates";
    case MmiOutcome::Fails:
        return "Fails";
    }
    return "?";
}

std::string_view outcome_code(MmiOutcome o) {
    switch (o) {
    case MmiOutcome::Satisfies:
        return "S";
    case MmiOutcome::Saturates:
        return "ST";
    case MmiOutcome::Fails:
        return "F";
    }
    return "?";
}

std::vector<MmiInstance> mmi_instances(std::size_t n, bool include_full_union) {
    if (n < 3 || n > 12) {
        throw std::invalid_argument("mmi_instances: n must be in [3, 12]");
    }
    const Mask full = full_mask(n);
    std::vector<MmiInstance> out;
    // Each party gets a role in {unused, first, second, third}; keep the
    // assignment whose blocks are already in ascending order.
    const std::size_t total = std::size_t{1} << (2 * n);
    for (std::size_t code = 0; code < total; ++code) {
        Mask blocks[4] = {0, 0, 0, 0};
        for (std::size_t p = 0; p < n; ++p) {
            blocks[(code >> (2 * p)) & 3] |= Mask{1} << p;
        }
        const Mask i = blocks[1], j = blocks[2], k = blocks[3];
        if (i == 0 || j == 0 || k == 0 || !(i < j && j < k)) {
            continue;
        }
        if (!include_full_union && (i | j | k) == full) {
            continue;
        }
        out.push_back({i, j, k});
    }
    std::sort(out.begin(), out.end());
    return out;
}

MmiOutcome evaluate_mmi(const EntropyVector &ev, const MmiInstance &inst) {
    const MmiInstance m = MmiInstance::make(inst.i, inst.j, inst.k);
    if (m.all() & ~full_mask(ev.n())) {
        throw std::invalid_argument("evaluate_mmi: instance refers to parties beyond n");
    }
    return mmi_outcome(ev.values(), m);
}

void MmiTally::add(MmiOutcome o) {
    switch (o) {
    case MmiOutcome::Satisfies:
        ++satisfies;
        break;
    case MmiOutcome::Saturates:
        ++saturates;
        break;
    case MmiOutcome::Fails:
        ++fails;
        break;
    }
}

MmiTally &MmiTally::operator+=(const MmiTally &other) {
    satisfies += other.satisfies;
    saturates += other.saturates;
    fails += other.fails;
    return *this;
}

MmiTally mmi_tally(const EntropyVector &ev, bool include_full_union) {
    auto instances = mmi_instances(ev.n(), include_full_union);
    return mmi_tally(ev, instances);
}

MmiTally mmi_tally(const EntropyVector &ev, std::span<const MmiInstance> instances) {
    MmiTally t;
    for (const auto &inst : instances) {
        if (inst.all() & ~full_mask(ev.n())) {
            throw std::invalid_argument("mmi_tally: instance refers to parties beyond n");
        }
        t.add(mmi_outcome(ev.values(), inst));
    }
    return t;
}

StateBucket state_bucket(const MmiTally &t) {
    if (t.fails) {
        return StateBucket::FailSome;
    }
    return t.satisfies ? StateBucket::SatisfySomeFailNone : StateBucket::SaturateAll;
}

Canonicalizer::Canonicalizer(std::size_t n) : n_(n), size_(std::size_t{1} << n) {
    if (n == 0 || n > 8) {
        throw std::invalid_argument("Canonicalizer: n must be in [1, 8]");
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    perm_count_ = 0;
    do {
        ++perm_count_;
        // relabeled[B] = original[perm^-1(B)]: party perm[p] of the image is party p of the source
        const std::size_t base = preimage_.size();
        preimage_.resize(base + size_);
        for (std::size_t b = 0; b < size_; ++b) {
            Mask src = 0;
            for (std::size_t p = 0; p < n; ++p) {
                if ((b >> perm[p]) & 1) {
                    src |= Mask{1} << p;
                }
            }
            preimage_[base + b] = static_cast<std::uint8_t>(src);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<std::uint8_t> Canonicalizer::canonical_values(std::span<const std::uint8_t> values) const {
    if (values.size() != size_) {
        throw std::invalid_argument("Canonicalizer: value table has the wrong size");
    }
    // Permutation 0 is the identity.
    std::vector<std::uint8_t> best(values.begin(), values.end());
    for (std::size_t p = 1; p < perm_count_; ++p) {
        const std::uint8_t *pre = preimage_.data() + p * size_;
        std::size_t b = 1;
        while (b < size_ && values[pre[b]] == best[b]) {
            ++b;
        }
        if (b < size_ && values[pre[b]] < best[b]) {
            for (; b < size_; ++b) {
                best[b] = values[pre[b]];
            }
        }
    }
    return best;
}

EntropyVector Canonicalizer::canonicalize(const EntropyVector &ev) const {
    if (ev.n() != n_) {
        throw std::invalid_argument("Canonicalizer: party count mismatch");
    }
    return EntropyVector::from_values(n_, canonical_values(ev.values()));
}

EntropyVector canonicalize(const EntropyVector &ev) { return Canonicalizer(ev.n()).canonicalize(ev); }

}  // namespace stabmmi
