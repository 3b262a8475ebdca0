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

#include "stabmmi/stabilizer.hpp"

#include <sstream>
#include <stdexcept>

namespace stabmmi {

namespace {

bool symplectic_product(const BitMatrix &x, const BitMatrix &z, std::size_t i, std::size_t j) {
    unsigned acc = 0;
    auto xi = x.row_words(i), zi = z.row_words(i), xj = x.row_words(j), zj = z.row_words(j);
    for (std::size_t w = 0; w < xi.size(); ++w) {
        acc ^= static_cast<unsigned>(std::popcount((xi[w] & zj[w]) ^ (zi[w] & xj[w])));
    }
    return acc & 1;
}

void xor_column(BitMatrix &dst_m, std::size_t dst, const BitMatrix &src_m, std::size_t src) {
    for (std::size_t r = 0; r < dst_m.rows(); ++r) {
        if (src_m.get(r, src)) {
            dst_m.flip(r, dst);
        }
    }
}

}  // namespace

Tableau::Tableau(BitMatrix x, BitMatrix z, Unchecked) : n_(x.rows()), x_(std::move(x)), z_(std::move(z)) {}

Tableau::Tableau(BitMatrix x, BitMatrix z) : Tableau(std::move(x), std::move(z), Unchecked{}) {
    if (n_ == 0) {
        throw InvariantViolation("Tableau: at least one qubit is required");
    }
    if (x_.cols() != n_ || z_.rows() != n_ || z_.cols() != n_) {
        throw InvariantViolation("Tableau: X and Z must both be n x n");
    }
    if (rank(x_.hconcat(z_)) != n_) {
        throw InvariantViolation("Tableau: generators are not independent");
    }
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (symplectic_product(x_, z_, i, j)) {
                throw InvariantViolation("Tableau: generators " + std::to_string(i + 1) + " and " +
                                         std::to_string(j + 1) + " anticommute");
            }
        }
    }
}

Tableau Tableau::zero_state(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("zero_state: n must be at least 1");
    }
    return Tableau(BitMatrix(n, n), BitMatrix::identity(n), Unchecked{});
}

Tableau Tableau::from_graph(const Graph &g) {
    if (g.n() == 0) {
        throw std::invalid_argument("Tableau::from_graph: empty graph");
    }
    return Tableau(BitMatrix::identity(g.n()), g.adjacency(), Unchecked{});
}

Tableau Tableau::from_packed(std::span<const std::uint64_t> words, std::size_t n) {
    if (words.size() != n || n > 32) {
        throw std::invalid_argument("Tableau::from_packed: need n <= 32 rows");
    }
    BitMatrix x(n, n), z(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        x.row_words(r)[0] = words[r] & full_mask(n);
        z.row_words(r)[0] = (words[r] >> n) & full_mask(n);
    }
    return Tableau(std::move(x), std::move(z));
}

Tableau Tableau::from_text(std::string_view text) {
    std::vector<std::string> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        rows.push_back(line);
    }
    const std::size_t n = rows.size();
    if (n == 0) {
        throw ParseError("tableau text: no rows");
    }
    for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].size() != 2 * n) {
            throw ParseError("tableau text: row " + std::to_string(r + 1) + " has " +
                             std::to_string(rows[r].size()) + " characters, expected " + std::to_string(2 * n));
        }
        if (rows[r].find_first_not_of("01") != std::string::npos) {
            throw ParseError("tableau text: row " + std::to_string(r + 1) + " contains a character other than 0/1");
        }
    }
    BitMatrix x(n, n), z(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            x.set(r, c, rows[r][c] == '1');
            z.set(r, c, rows[r][n + c] == '1');
        }
    }
    return Tableau(std::move(x), std::move(z));
}

std::string Tableau::to_text() const {
    std::string out;
    for (std::size_t r = 0; r < n_; ++r) {
        out += x_.row(r).str();
        out += z_.row(r).str();
        out.push_back('\n');
    }
    return out;
}

void Tableau::check_qubit(std::size_t a, const char *op) const {
    if (a >= n_) {
        throw std::out_of_range(std::string(op) + ": qubit index " + std::to_string(a) + " out of range for n=" +
                                std::to_string(n_));
    }
}

Mask Tableau::checked_subsystem(Mask a, const char *op) const {
    if (a == 0) {
        throw std::invalid_argument(std::string(op) + ": empty subsystem");
    }
    if (a & ~full_mask(n_)) {
        throw std::invalid_argument(std::string(op) + ": subsystem has qubits outside [0, n)");
    }
    return a;
}

Tableau Tableau::apply_h(std::size_t a) const {
    check_qubit(a, "apply_h");
    Tableau t = *this;
    for (std::size_t r = 0; r < n_; ++r) {
        const bool xv = x_.get(r, a);
        t.x_.set(r, a, z_.get(r, a));
        t.z_.set(r, a, xv);
    }
    return t;
}

Tableau Tableau::apply_s(std::size_t a) const {
    check_qubit(a, "apply_s");
    Tableau t = *this;
    xor_column(t.z_, a, x_, a);
    return t;
}

Tableau Tableau::apply_cnot(std::size_t control, std::size_t target) const {
    check_qubit(control, "apply_cnot");
    check_qubit(target, "apply_cnot");
    if (control == target) {
        throw std::invalid_argument("apply_cnot: control and target coincide");
    }
    Tableau t = *this;
    xor_column(t.x_, target, x_, control);
    xor_column(t.z_, control, z_, target);
    return t;
}

Tableau Tableau::apply_cz(std::size_t a, std::size_t b) const {
    check_qubit(a, "apply_cz");
    check_qubit(b, "apply_cz");
    if (a == b) {
        throw std::invalid_argument("apply_cz: qubits coincide");
    }
    Tableau t = *this;
    xor_column(t.z_, a, x_, b);
    xor_column(t.z_, b, x_, a);
    return t;
}

BitMatrix Tableau::project(Mask a) const {
    checked_subsystem(a, "project");
    auto cols = mask_members(a);
    BitMatrix out(n_, 2 * cols.size());
    for (std::size_t r = 0; r < n_; ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            out.set(r, c, x_.get(r, cols[c]));
            out.set(r, cols.size() + c, z_.get(r, cols[c]));
        }
    }
    return out;
}

std::size_t Tableau::projected_rank(Mask a) const {
    checked_subsystem(a, "projected_rank");
    if (n_ <= 32) {
        auto rows = packed_rows();
        return packed_projected_rank(rows, n_, a);
    }
    return rank(project(a));
}

std::size_t Tableau::entropy(Mask a) const {
    checked_subsystem(a, "entropy");
    return projected_rank(a) - mask_size(a);
}

bool Tableau::same_group(const Tableau &other) const {
    return n_ == other.n_ && Subspace::row_space(x_.hconcat(z_)) == Subspace::row_space(other.x_.hconcat(other.z_));
}

std::vector<std::uint64_t> Tableau::packed_rows() const {
    if (n_ > 32) {
        throw std::invalid_argument("Tableau::packed_rows: n > 32");
    }
    std::vector<std::uint64_t> out(n_);
    for (std::size_t r = 0; r < n_; ++r) {
        out[r] = x_.row_word(r) | (z_.row_word(r) << n_);
    }
    return out;
}

RankVector rank_vector(const Tableau &t) {
    if (t.n() > 24) {
        throw std::invalid_argument("rank_vector: n too large to enumerate all subsystems");
    }
    RankVector rv;
    rv.n = t.n();
    rv.entries.assign(std::size_t{1} << t.n(), 0);
    for (Mask a = 1; a < rv.entries.size(); ++a) {
        rv.entries[a] = t.projected_rank(a);
    }
    return rv;
}

}  // namespace stabmmi
