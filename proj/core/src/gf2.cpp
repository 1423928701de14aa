#include "sldic/gf2.hpp"

#include <bit>

namespace sldic {

namespace {
constexpr std::size_t kWordBits = 64;

std::uint64_t tail_mask(std::size_t nbits) {
    const std::size_t rem = nbits % kWordBits;
    return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}
}  // namespace

BitVector& BitVector::operator^=(const BitVector& other) {
    if (len_ != other.len_) throw DimensionError("BitVector: xor length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

std::uint64_t BitVector::to_word() const {
    if (len_ > kWordBits) throw DimensionError("BitVector: too long for a single word");
    return words_.empty() ? 0 : words_[0];
}

BitVector BitVector::from_word(std::uint64_t w, std::size_t length) {
    if (length > kWordBits) throw DimensionError("BitVector: too long for a single word");
    BitVector v(length);
    if (length > 0) v.words_[0] = w & tail_mask(length);
    return v;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

std::uint64_t BitMatrix::row_word(std::size_t r) const {
    if (cols_ > kWordBits) throw DimensionError("BitMatrix: too wide for a single word");
    if (r >= rows_) throw DimensionError("BitMatrix: row out of range");
    return wpr_ == 0 ? 0 : words_[r * wpr_];
}

BitMatrix BitMatrix::select_columns(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw DimensionError("BitMatrix: column range out of range");
    BitMatrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c)
            if (get(r, first + c)) out.set(r, c, true);
    return out;
}

BitMatrix BitMatrix::drop_columns(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw DimensionError("BitMatrix: column range out of range");
    BitMatrix out(rows_, cols_ - count);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::size_t oc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c >= first && c < first + count) continue;
            if (get(r, c)) out.set(r, oc, true);
            ++oc;
        }
    }
    return out;
}

bool BitMatrix::column_is_zero(std::size_t c) const {
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) return false;
    return true;
}

std::string BitMatrix::row_string(std::size_t r) const {
    std::string s(cols_, '0');
    for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) s[c] = '1';
    return s;
}

BitMatrix& BitMatrix::operator^=(const BitMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionError("BitMatrix: xor shape mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitMatrix downshift(std::size_t q, std::int64_t s) {
    if (s < 0 || static_cast<std::size_t>(s) > q)
        throw InvalidShiftError("downshift: shift outside [0, q]");
    BitMatrix m(q, q);
    for (std::size_t c = 0; c + static_cast<std::size_t>(s) < q; ++c)
        m.set(c + static_cast<std::size_t>(s), c, true);
    return m;
}

std::size_t rank(const BitMatrix& m) {
    if (m.rows_ == 0 || m.cols_ == 0) return 0;
    std::vector<std::uint64_t> rows(m.words_);
    const std::size_t wpr = m.wpr_;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < m.cols_ && rk < m.rows_; ++c) {
        const std::size_t wi = c / kWordBits;
        const std::uint64_t bit = std::uint64_t{1} << (c % kWordBits);
        std::size_t pivot = rk;
        while (pivot < m.rows_ && !(rows[pivot * wpr + wi] & bit)) ++pivot;
        if (pivot == m.rows_) continue;
        if (pivot != rk)
            for (std::size_t w = 0; w < wpr; ++w)
                std::swap(rows[pivot * wpr + w], rows[rk * wpr + w]);
        for (std::size_t r = rk + 1; r < m.rows_; ++r)
            if (rows[r * wpr + wi] & bit)
                for (std::size_t w = 0; w < wpr; ++w) rows[r * wpr + w] ^= rows[rk * wpr + w];
        ++rk;
    }
    return rk;
}

bool colspace_contains(const BitMatrix& b, const BitMatrix& a) {
    if (b.rows() != a.rows()) throw DimensionError("colspace_contains: row count mismatch");
    return rank(hstack(b, a)) == rank(b);
}

BitVector matvec(const BitMatrix& m, const BitVector& v) { return m * v; }

BitVector operator*(const BitMatrix& m, const BitVector& v) {
    if (m.cols_ != v.size()) throw DimensionError("matvec: dimension mismatch");
    BitVector out(m.rows_);
    for (std::size_t r = 0; r < m.rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < m.wpr_; ++w) acc ^= m.words_[r * m.wpr_ + w] & v.words_[w];
        out.set(r, (std::popcount(acc) & 1) != 0);
    }
    return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matmul: dimension mismatch");
    BitMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (a.get(r, k))
                for (std::size_t w = 0; w < out.wpr_; ++w)
                    out.words_[r * out.wpr_ + w] ^= b.words_[k * b.wpr_ + w];
    return out;
}

BitMatrix hstack(const BitMatrix& left, const BitMatrix& right) {
    if (left.rows() != right.rows()) throw DimensionError("hstack: row count mismatch");
    BitMatrix out(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < out.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c)
            if (left.get(r, c)) out.set(r, c, true);
        for (std::size_t c = 0; c < right.cols(); ++c)
            if (right.get(r, c)) out.set(r, left.cols() + c, true);
    }
    return out;
}

BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw DimensionError("vstack: column count mismatch");
    BitMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c)
            if (top.get(r, c)) out.set(r, c, true);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t c = 0; c < bottom.cols(); ++c)
            if (bottom.get(r, c)) out.set(top.rows() + r, c, true);
    return out;
}

BitVector shift_down(const BitVector& v, std::size_t s) {
    if (s > v.size()) throw InvalidShiftError("shift_down: shift outside [0, q]");
    BitVector out(v.size());
    for (std::size_t e = s; e < v.size(); ++e)
        if (v.get(e - s)) out.set(e, true);
    return out;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    if (m.rows_ != b.size()) throw DimensionError("solve: dimension mismatch");
    // Eliminate on [m | b] and back-substitute from the pivot positions.
    BitMatrix aug = hstack(m, [&] {
        BitMatrix col(b.size(), 1);
        for (std::size_t r = 0; r < b.size(); ++r)
            if (b.get(r)) col.set(r, 0, true);
        return col;
    }());
    const std::size_t n = m.cols_;
    std::vector<std::size_t> pivot_col;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < n && rk < aug.rows(); ++c) {
        std::size_t p = rk;
        while (p < aug.rows() && !aug.get(p, c)) ++p;
        if (p == aug.rows()) continue;
        if (p != rk)
            for (std::size_t cc = 0; cc <= n; ++cc) {
                const bool t = aug.get(p, cc);
                aug.set(p, cc, aug.get(rk, cc));
                aug.set(rk, cc, t);
            }
        for (std::size_t r = 0; r < aug.rows(); ++r)
            if (r != rk && aug.get(r, c))
                for (std::size_t cc = c; cc <= n; ++cc)
                    aug.set(r, cc, aug.get(r, cc) ^ aug.get(rk, cc));
        pivot_col.push_back(c);
        ++rk;
    }
    for (std::size_t r = rk; r < aug.rows(); ++r)
        if (aug.get(r, n)) return std::nullopt;  // 0 = 1 row: inconsistent
    BitVector x(n);
    for (std::size_t r = 0; r < rk; ++r)
        if (aug.get(r, n)) x.set(pivot_col[r], true);
    return x;
}

}  // namespace sldic
