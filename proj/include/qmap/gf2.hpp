#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qmap {

/// Dense bit vector over F2, packed in 64-bit words.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    bool operator==(const BitVector&) const = default;

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int popcount() const;

    /// Index of the lowest set bit, or -1.
    int lowest_set() const;

    /// Dot product mod 2.
    bool dot(const BitVector& o) const;

    std::string str() const;  // e.g. "101"

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense matrix over F2 stored by rows.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return row_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { row_[r].set(c, v); }

    BitVector& row(std::size_t r) { return row_[r]; }
    const BitVector& row(std::size_t r) const { return row_[r]; }

    BitVector mul(const BitVector& x) const;   // A x, |x| = cols
    BitMatrix mul(const BitMatrix& b) const;   // A B
    BitMatrix transposed() const;

    bool operator==(const BitMatrix&) const = default;

    BitMatrix& operator^=(const BitMatrix& o) {
        for (std::size_t r = 0; r < rows_; ++r) row_[r] ^= o.row_[r];
        return *this;
    }

    std::size_t rank() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVector> row_;
};

/// Reduced row echelon form with recorded pivot columns.
/// Pivots are chosen leftmost-first, which makes the reduction deterministic.
struct Rref {
    BitMatrix mat;                   // nonzero rows only
    std::vector<std::size_t> pivot_cols;  // pivot_cols[i] is the pivot of row i, increasing
    std::size_t rank() const { return pivot_cols.size(); }
};

Rref row_reduce(const BitMatrix& a);

/// Affine solution set of Ax = b.
struct SolutionSet {
    BitVector particular;            // free variables set to 0
    std::vector<BitVector> kernel;   // basis of {x : Ax = 0}
    bool unique() const { return kernel.empty(); }
};

/// Solves Ax = b over F2. Returns nullopt when the system is inconsistent.
std::optional<SolutionSet> solve_linear(const BitMatrix& a, const BitVector& b);

std::vector<BitVector> kernel_basis(const BitMatrix& a);

/// Basis of the column span of a (as vectors of length a.rows()).
std::vector<BitVector> column_space_basis(const BitMatrix& a);

/// Expresses v in terms of the given (not necessarily independent) spanning
/// vectors; nullopt when v is outside the span.
std::optional<BitVector> coordinates_in_span(const std::vector<BitVector>& span,
                                             const BitVector& v);

}  // namespace qmap
