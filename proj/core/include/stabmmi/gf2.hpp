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

#ifndef STABMMI_GF2_HPP
#define STABMMI_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stabmmi {

/// Number of 64-bit words needed to hold `bits` bits.
constexpr std::size_t words_for_bits(std::size_t bits) { return (bits + 63) / 64; }

/// A packed vector over GF(2). Bit i lives in word i/64 at position i%64.
/// Padding bits beyond len() are always zero.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t len);

    /// Parses a string of '0'/'1' characters.
    static BitVector from_string(std::string_view bits);
    /// Builds a vector of length `len` from the low bits of `word` (len <= 64).
    static BitVector from_word(std::uint64_t word, std::size_t len);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool value);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool is_zero() const;
    std::size_t popcount() const;

    BitVector &operator^=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }
    bool operator==(const BitVector &other) const = default;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    std::string str() const;

  private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense row-major matrix over GF(2). Each row is stored as a run of
/// words_per_row() machine words, little-endian bit order within the row.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    /// Parses rows of '0'/'1' characters; every row must have the same length.
    static BitMatrix from_strings(const std::vector<std::string> &rows);
    static BitMatrix from_rows(const std::vector<BitVector> &rows, std::size_t cols);
    /// Builds a matrix whose row r is the low `cols` bits of words[r] (cols <= 64).
    static BitMatrix from_words(std::span<const std::uint64_t> words, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool value);
    void flip(std::size_t r, std::size_t c) {
        data_[r * stride_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {data_.data() + r * stride_, stride_};
    }
    std::span<std::uint64_t> row_words(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    BitVector row(std::size_t r) const;
    BitVector column(std::size_t c) const;
    /// First word of row r; only meaningful when cols() <= 64.
    std::uint64_t row_word(std::size_t r) const { return stride_ ? data_[r * stride_] : 0; }

    void xor_row_into(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);
    void append_row(const BitVector &row);

    BitMatrix transpose() const;
    /// Rows listed in `row_idx` (in order) restricted to columns in `col_idx`.
    BitMatrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
    /// [this | other]; row counts must agree.
    BitMatrix hconcat(const BitMatrix &other) const;
    /// [this ; other]; column counts must agree.
    BitMatrix vconcat(const BitMatrix &other) const;

    bool is_zero() const;
    bool operator==(const BitMatrix &other) const = default;

    /// Rows of '0'/'1' characters separated by '\n'.
    std::string str() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

struct RrefResult {
    BitMatrix matrix;               // zero rows dropped
    std::vector<std::size_t> pivots;  // strictly increasing
};

std::size_t rank(const BitMatrix &m);
RrefResult rref(const BitMatrix &m);

/// Rank of a set of vectors packed one per word.
std::size_t rank_words(std::span<const std::uint64_t> rows);

/// Subspace of GF(2)^ambient held as a canonical reduced row-echelon basis.
/// Equality of subspaces is bit-equality of canonical bases.
class Subspace {
  public:
    explicit Subspace(std::size_t ambient = 0);

    /// Row span of m (ambient = m.cols()).
    static Subspace row_space(const BitMatrix &m);
    /// Span of the given vectors, all of length `ambient`.
    static Subspace span(const std::vector<BitVector> &vectors, std::size_t ambient);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    const BitMatrix &basis() const { return basis_; }
    const std::vector<std::size_t> &pivots() const { return pivots_; }

    bool contains(const BitVector &v) const;
    /// True when every basis vector of `other` lies in this subspace.
    bool contains(const Subspace &other) const;

    bool operator==(const Subspace &other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }

  private:
    std::size_t ambient_;
    BitMatrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Column space of m (ambient = m.rows()).
Subspace column_space(const BitMatrix &m);
Subspace sum(const Subspace &u, const Subspace &v);
/// Intersection by Zassenhaus block reduction of [[U U],[V 0]].
Subspace intersect(const Subspace &u, const Subspace &v);

/// Checks (u∩w + v∩w) == (u+v)∩w together with the two permuted identities
/// (roles of w exchanged with u and with v). The three always agree; a
/// disagreement throws std::logic_error.
bool is_distributive(const Subspace &u, const Subspace &v, const Subspace &w);

}  // namespace stabmmi

#endif  // STABMMI_GF2_HPP
