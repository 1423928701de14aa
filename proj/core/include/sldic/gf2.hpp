#pragma once

// Word-packed GF(2) linear algebra: bit vectors, bit matrices, downshift
// operators, rank, column-space tests and linear solving.
//
// Vector entry 0 is the TOP entry. The channel model numbers levels from the
// bottom-most entry, so level i of a length-q vector is entry q - i. A single
// shift "down" moves entry e to entry e + 1, drops the bottom entry and
// zero-fills the top.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sldic/errors.hpp"

namespace sldic {

class BitMatrix;

class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t length)
        : len_(length), words_((length + kWordBits - 1) / kWordBits, 0) {}

    static BitVector zeros(std::size_t length) { return BitVector(length); }

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
    }

    void set(std::size_t i, bool v) {
        check_index(i);
        const std::uint64_t bit = std::uint64_t{1} << (i % kWordBits);
        if (v)
            words_[i / kWordBits] |= bit;
        else
            words_[i / kWordBits] &= ~bit;
    }

    void flip(std::size_t i) { set(i, !get(i)); }

    bool is_zero() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector& a, const BitVector& b) = default;

    /// Entry i packed into bit i of a machine word; requires size() <= 64.
    std::uint64_t to_word() const;
    static BitVector from_word(std::uint64_t w, std::size_t length);

    /// "0101..." with the top entry first.
    std::string to_string() const;

  private:
    static constexpr std::size_t kWordBits = 64;
    void check_index(std::size_t i) const {
        if (i >= len_) throw DimensionError("BitVector: index out of range");
    }
    friend BitVector operator*(const BitMatrix&, const BitVector&);

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows),
          cols_(cols),
          wpr_((cols + kWordBits - 1) / kWordBits),
          words_(rows * wpr_, 0) {}

    static BitMatrix zeros(std::size_t rows, std::size_t cols) { return BitMatrix(rows, cols); }
    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        check_index(r, c);
        return (words_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool v) {
        check_index(r, c);
        const std::uint64_t bit = std::uint64_t{1} << (c % kWordBits);
        if (v)
            words_[r * wpr_ + c / kWordBits] |= bit;
        else
            words_[r * wpr_ + c / kWordBits] &= ~bit;
    }

    void flip(std::size_t r, std::size_t c) { set(r, c, !get(r, c)); }

    bool is_zero() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    /// Row r packed with column c in bit c; requires cols() <= 64.
    std::uint64_t row_word(std::size_t r) const;

    /// Columns [first, first + count) as a new matrix.
    BitMatrix select_columns(std::size_t first, std::size_t count) const;
    /// All columns except [first, first + count).
    BitMatrix drop_columns(std::size_t first, std::size_t count) const;

    bool column_is_zero(std::size_t c) const;

    std::string row_string(std::size_t r) const;

    BitMatrix& operator^=(const BitMatrix& other);
    friend BitMatrix operator^(BitMatrix a, const BitMatrix& b) { return a ^= b; }
    friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

  private:
    static constexpr std::size_t kWordBits = 64;
    void check_index(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw DimensionError("BitMatrix: index out of range");
    }
    friend std::size_t rank(const BitMatrix&);
    friend BitMatrix operator*(const BitMatrix&, const BitMatrix&);
    friend BitVector operator*(const BitMatrix&, const BitVector&);
    friend std::optional<BitVector> solve(const BitMatrix&, const BitVector&);

    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> words_;
};

/// D^s for the q x q downshift matrix D (d_{j,k} = 1 iff j = k + 1, 1-based);
/// D^0 is the identity and D^q annihilates every vector.
/// Shifts outside [0, q] are rejected: the channel only needs s = q - m, q - n.
BitMatrix downshift(std::size_t q, std::int64_t s);

/// GF(2) rank by Gaussian elimination.
std::size_t rank(const BitMatrix& m);

/// True iff every column of a lies in the column space of b,
/// i.e. rank([b | a]) == rank(b). Row counts must match.
bool colspace_contains(const BitMatrix& b, const BitMatrix& a);

/// Matrix-vector product over GF(2).
BitVector matvec(const BitMatrix& m, const BitVector& v);

BitVector operator*(const BitMatrix& m, const BitVector& v);
BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);

BitMatrix hstack(const BitMatrix& left, const BitMatrix& right);
BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom);

/// Entries move down by s: result entry e = v entry e - s, top s entries zero.
BitVector shift_down(const BitVector& v, std::size_t s);

/// One solution x of m x = b, or nullopt when inconsistent.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

}  // namespace sldic
