#include "qmap/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace qmap {

int BitVector::popcount() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

int BitVector::lowest_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    return -1;
}

bool BitVector::dot(const BitVector& o) const {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1;
}

std::string BitVector::str() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitVector BitMatrix::mul(const BitVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("BitMatrix::mul: size mismatch");
    BitVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        if (row_[i].dot(x)) r.set(i);
    return r;
}

BitMatrix BitMatrix::mul(const BitMatrix& b) const {
    if (cols_ != b.rows_) throw std::invalid_argument("BitMatrix::mul: shape mismatch");
    BitMatrix r(rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (row_[i].get(k)) r.row_[i] ^= b.row_[k];
    return r;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j)) r.set(j, i);
    return r;
}

std::size_t BitMatrix::rank() const { return row_reduce(*this).rank(); }

Rref row_reduce(const BitMatrix& a) {
    std::vector<BitVector> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));

    Rref out;
    std::size_t next = 0;
    for (std::size_t col = 0; col < a.cols() && next < rows.size(); ++col) {
        std::size_t piv = next;
        while (piv < rows.size() && !rows[piv].get(col)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[next], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != next && rows[i].get(col)) rows[i] ^= rows[next];
        out.pivot_cols.push_back(col);
        ++next;
    }
    out.mat = BitMatrix(next, a.cols());
    for (std::size_t i = 0; i < next; ++i) out.mat.row(i) = rows[i];
    return out;
}

std::optional<SolutionSet> solve_linear(const BitMatrix& a, const BitVector& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: A rows != |b|");
    // Augmented elimination: last column holds b.
    BitMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        aug.row(i) = BitVector(a.cols() + 1);
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.get(i, j)) aug.row(i).set(j);
        if (b.get(i)) aug.row(i).set(a.cols());
    }
    Rref r = row_reduce(aug);
    SolutionSet sol;
    sol.particular = BitVector(a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t i = 0; i < r.rank(); ++i) {
        if (r.pivot_cols[i] == a.cols()) return std::nullopt;  // rank[A|b] > rank[A]
        is_pivot[r.pivot_cols[i]] = true;
        if (r.mat.get(i, a.cols())) sol.particular.set(r.pivot_cols[i]);
    }
    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        BitVector k(a.cols());
        k.set(free_col);
        for (std::size_t i = 0; i < r.rank(); ++i)
            if (r.mat.get(i, free_col)) k.set(r.pivot_cols[i]);
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

std::vector<BitVector> kernel_basis(const BitMatrix& a) {
    auto sol = solve_linear(a, BitVector(a.rows()));
    return sol->kernel;
}

std::vector<BitVector> column_space_basis(const BitMatrix& a) {
    Rref r = row_reduce(a);
    std::vector<BitVector> basis;
    for (std::size_t c : r.pivot_cols) {
        BitVector v(a.rows());
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (a.get(i, c)) v.set(i);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVector> coordinates_in_span(const std::vector<BitVector>& span,
                                             const BitVector& v) {
    if (span.empty()) {
        if (v.any()) return std::nullopt;
        return BitVector(0);
    }
    BitMatrix m(v.size(), span.size());
    for (std::size_t j = 0; j < span.size(); ++j)
        for (std::size_t i = 0; i < v.size(); ++i)
            if (span[j].get(i)) m.set(i, j);
    auto sol = solve_linear(m, v);
    if (!sol) return std::nullopt;
    return sol->particular;
}

}  // namespace qmap
