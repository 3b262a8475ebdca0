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

#include "stabmmi/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace stabmmi {

namespace {

std::uint64_t tail_mask(std::size_t len) {
    const std::size_t r = len & 63;
    return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

void require_same_ambient(const Subspace &u, const Subspace &v, const char *op) {
    if (u.ambient() != v.ambient()) {
        throw std::invalid_argument(std::string(op) + ": ambient dimension mismatch (" +
                                    std::to_string(u.ambient()) + " vs " + std::to_string(v.ambient()) + ")");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// BitVector

BitVector::BitVector(std::size_t len) : len_(len), words_(words_for_bits(len), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string contains a character other than '0'/'1'");
        }
    }
    return v;
}

BitVector BitVector::from_word(std::uint64_t word, std::size_t len) {
    if (len > 64) {
        throw std::invalid_argument("BitVector::from_word: len > 64");
    }
    BitVector v(len);
    if (len) {
        v.words_[0] = word & tail_mask(len);
    }
    return v;
}

void BitVector::set(std::size_t i, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= bit;
    } else {
        words_[i >> 6] &= ~bit;
    }
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::popcount() const {
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (len_ != other.len_) {
        throw std::invalid_argument("BitVector xor: length mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

std::string BitVector::str() const {
    std::string out(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for_bits(cols)), data_(rows * words_for_bits(cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string> &rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("BitMatrix::from_strings: ragged rows");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const char ch = rows[r][c];
            if (ch == '1') {
                m.set(r, c, true);
            } else if (ch != '0') {
                throw std::invalid_argument("BitMatrix::from_strings: character other than '0'/'1'");
            }
        }
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector> &rows, std::size_t cols) {
    BitMatrix m(0, cols);
    for (const auto &r : rows) {
        m.append_row(r);
    }
    return m;
}

BitMatrix BitMatrix::from_words(std::span<const std::uint64_t> words, std::size_t cols) {
    if (cols > 64) {
        throw std::invalid_argument("BitMatrix::from_words: cols > 64");
    }
    BitMatrix m(words.size(), cols);
    if (cols) {
        for (std::size_t r = 0; r < words.size(); ++r) {
            m.data_[r] = words[r] & tail_mask(cols);
        }
    }
    return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    auto &w = data_[r * stride_ + (c >> 6)];
    w = value ? (w | bit) : (w & ~bit);
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    auto src = row_words(r);
    std::copy(src.begin(), src.end(), v.words().begin());
    return v;
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (get(r, c)) {
            v.set(r, true);
        }
    }
    return v;
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    const std::uint64_t *s = data_.data() + src * stride_;
    std::uint64_t *d = data_.data() + dst * stride_;
    for (std::size_t i = 0; i < stride_; ++i) {
        d[i] ^= s[i];
    }
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

void BitMatrix::append_row(const BitVector &row) {
    if (row.size() != cols_) {
        throw std::invalid_argument("BitMatrix::append_row: row length " + std::to_string(row.size()) +
                                    " != cols " + std::to_string(cols_));
    }
    data_.insert(data_.end(), row.words().begin(), row.words().end());
    ++rows_;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    BitMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r) {
        for (std::size_t c = 0; c < col_idx.size(); ++c) {
            if (get(row_idx[r], col_idx[c])) {
                out.set(r, c, true);
            }
        }
    }
    return out;
}

BitMatrix BitMatrix::hconcat(const BitMatrix &other) const {
    if (rows_ != other.rows_) {
        throw std::invalid_argument("BitMatrix::hconcat: row count mismatch");
    }
    BitMatrix out(rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) {
                out.set(r, c, true);
            }
        }
        for (std::size_t c = 0; c < other.cols_; ++c) {
            if (other.get(r, c)) {
                out.set(r, cols_ + c, true);
            }
        }
    }
    return out;
}

BitMatrix BitMatrix::vconcat(const BitMatrix &other) const {
    if (cols_ != other.cols_) {
        throw std::invalid_argument("BitMatrix::vconcat: column count mismatch");
    }
    BitMatrix out = *this;
    out.data_.insert(out.data_.end(), other.data_.begin(), other.data_.end());
    out.rows_ += other.rows_;
    return out;
}

bool BitMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

std::string BitMatrix::str() const {
    std::string out;
    out.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out.push_back(get(r, c) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

// ---------------------------------------------------------------------------
// Elimination

std::size_t rank_words(std::span<const std::uint64_t> rows) {
    // xor basis keyed by leading bit
    std::uint64_t basis[64] = {};
    std::size_t r = 0;
    for (std::uint64_t v : rows) {
        while (v) {
            const int top = 63 - std::countl_zero(v);
            if (!basis[top]) {
                basis[top] = v;
                ++r;
                break;
            }
            v ^= basis[top];
        }
    }
    return r;
}

std::size_t rank(const BitMatrix &m) {
    if (m.cols() <= 64) {
        std::vector<std::uint64_t> words(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            words[r] = m.row_word(r);
        }
        return rank_words(words);
    }
    BitMatrix work = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < work.cols() && r < work.rows(); ++c) {
        std::size_t p = r;
        while (p < work.rows() && !work.get(p, c)) {
            ++p;
        }
        if (p == work.rows()) {
            continue;
        }
        work.swap_rows(p, r);
        for (std::size_t i = r + 1; i < work.rows(); ++i) {
            if (work.get(i, c)) {
                work.xor_row_into(r, i);
            }
        }
        ++r;
    }
    return r;
}

RrefResult rref(const BitMatrix &m) {
    BitMatrix work = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < work.cols() && r < work.rows(); ++c) {
        std::size_t p = r;
        while (p < work.rows() && !work.get(p, c)) {
            ++p;
        }
        if (p == work.rows()) {
            continue;
        }
        work.swap_rows(p, r);
        for (std::size_t i = 0; i < work.rows(); ++i) {
            if (i != r && work.get(i, c)) {
                work.xor_row_into(r, i);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    BitMatrix reduced(r, work.cols());
    for (std::size_t i = 0; i < r; ++i) {
        auto src = work.row_words(i);
        std::copy(src.begin(), src.end(), reduced.row_words(i).begin());
    }
    return {std::move(reduced), std::move(pivots)};
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::row_space(const BitMatrix &m) {
    Subspace s(m.cols());
    auto reduced = rref(m);
    s.basis_ = std::move(reduced.matrix);
    s.pivots_ = std::move(reduced.pivots);
    return s;
}

Subspace Subspace::span(const std::vector<BitVector> &vectors, std::size_t ambient) {
    return row_space(BitMatrix::from_rows(vectors, ambient));
}

Subspace Subspace::full(std::size_t ambient) { return row_space(BitMatrix::identity(ambient)); }

bool Subspace::contains(const BitVector &v) const {
    if (v.size() != ambient_) {
        throw std::invalid_argument("Subspace::contains: vector length != ambient");
    }
    BitVector residue = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        if (residue.get(pivots_[i])) {
            auto row = basis_.row_words(i);
            auto dst = residue.words();
            for (std::size_t w = 0; w < row.size(); ++w) {
                dst[w] ^= row[w];
            }
        }
    }
    return residue.is_zero();
}

bool Subspace::contains(const Subspace &other) const {
    for (std::size_t i = 0; i < other.dim(); ++i) {
        if (!contains(other.basis().row(i))) {
            return false;
        }
    }
    return true;
}

Subspace column_space(const BitMatrix &m) { return Subspace::row_space(m.transpose()); }

Subspace sum(const Subspace &u, const Subspace &v) {
    require_same_ambient(u, v, "sum");
    return Subspace::row_space(u.basis().vconcat(v.basis()));
}

Subspace intersect(const Subspace &u, const Subspace &v) {
    require_same_ambient(u, v, "intersect");
    const std::size_t a = u.ambient();
    // [[U U],[V 0]]; rows of the reduced form whose left half vanishes span U∩V.
    BitMatrix block(u.dim() + v.dim(), 2 * a);
    for (std::size_t r = 0; r < u.dim(); ++r) {
        for (std::size_t c = 0; c < a; ++c) {
            if (u.basis().get(r, c)) {
                block.set(r, c, true);
                block.set(r, a + c, true);
            }
        }
    }
    for (std::size_t r = 0; r < v.dim(); ++r) {
        for (std::size_t c = 0; c < a; ++c) {
            if (v.basis().get(r, c)) {
                block.set(u.dim() + r, c, true);
            }
        }
    }
    auto reduced = rref(block);
    std::vector<BitVector> rows;
    for (std::size_t i = 0; i < reduced.pivots.size(); ++i) {
        if (reduced.pivots[i] < a) {
            continue;
        }
        BitVector w(a);
        for (std::size_t c = 0; c < a; ++c) {
            if (reduced.matrix.get(i, a + c)) {
                w.set(c, true);
            }
        }
        rows.push_back(std::move(w));
    }
    return Subspace::span(rows, a);
}

bool is_distributive(const Subspace &u, const Subspace &v, const Subspace &w) {
    require_same_ambient(u, v, "is_distributive");
    require_same_ambient(u, w, "is_distributive");
    auto holds = [](const Subspace &a, const Subspace &b, const Subspace &c) {
        return sum(intersect(a, c), intersect(b, c)) == intersect(sum(a, b), c);
    };
    const bool first = holds(u, v, w);
    const bool second = holds(w, v, u);
    const bool third = holds(u, w, v);
    if (first != second || first != third) {
        throw std::logic_error("is_distributive: permuted distributivity identities disagree");
    }
    return first;
}

}  // namespace stabmmi
