#include "qmap/quadmap.hpp"

#include <stdexcept>

#include "qmap/errors.hpp"

namespace qmap {

namespace {

BitVector index_to_vec(unsigned idx, int dim) {
    BitVector v(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i)
        if ((idx >> i) & 1u) v.set(static_cast<std::size_t>(i));
    return v;
}

}  // namespace

QuadraticMap::QuadraticMap(int m, int n, std::vector<BitVector> q_on_basis,
                           std::vector<std::vector<BitVector>> b_table)
    : m_(m), n_(n), q_basis_(std::move(q_on_basis)) {
    if (static_cast<int>(q_basis_.size()) != m)
        throw std::invalid_argument("QuadraticMap: need m basis values");
    for (auto& v : q_basis_)
        if (static_cast<int>(v.size()) != n)
            throw std::invalid_argument("QuadraticMap: basis value has wrong dim");
    b_.assign(static_cast<std::size_t>(m),
              std::vector<BitVector>(static_cast<std::size_t>(m),
                                     BitVector(static_cast<std::size_t>(n))));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (i < static_cast<int>(b_table.size()) &&
                j < static_cast<int>(b_table[i].size()) &&
                b_table[i][j].size() == static_cast<std::size_t>(n)) {
                b_[i][j] = b_table[i][j];
                b_[j][i] = b_table[i][j];
            }
        }
}

QuadraticMap QuadraticMap::zero(int m, int n) {
    return QuadraticMap(m, n,
                        std::vector<BitVector>(static_cast<std::size_t>(m),
                                               BitVector(static_cast<std::size_t>(n))),
                        {});
}

QuadraticMap QuadraticMap::from_function(
    int m, int n, const std::function<BitVector(const BitVector&)>& f) {
    std::vector<BitVector> values;
    for (int i = 0; i < m; ++i) values.push_back(f(index_to_vec(1u << i, m)));
    std::vector<std::vector<BitVector>> b(
        static_cast<std::size_t>(m),
        std::vector<BitVector>(static_cast<std::size_t>(m), BitVector(static_cast<std::size_t>(n))));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            b[i][j] = f(index_to_vec((1u << i) | (1u << j), m)) ^ values[i] ^ values[j];
    QuadraticMap q(m, n, std::move(values), std::move(b));
    if (m <= 12) {
        // f must actually be quadratic: compare pointwise.
        for (unsigned w = 0; w < (1u << m); ++w) {
            BitVector wv = index_to_vec(w, m);
            if (q.eval(wv) != f(wv))
                throw std::invalid_argument("from_function: input is not a quadratic map");
        }
    }
    return q;
}

QuadraticMap QuadraticMap::from_polys(const std::vector<Poly>& q, int m) {
    int n = static_cast<int>(q.size());
    std::vector<BitVector> values(static_cast<std::size_t>(m),
                                  BitVector(static_cast<std::size_t>(n)));
    std::vector<std::vector<BitVector>> b(
        static_cast<std::size_t>(m),
        std::vector<BitVector>(static_cast<std::size_t>(m), BitVector(static_cast<std::size_t>(n))));
    for (int k = 0; k < n; ++k) {
        const Poly& p = q[k];
        if (p.nvars() != m)
            throw std::invalid_argument("from_polys: wrong variable count");
        if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != 2))
            throw std::invalid_argument("from_polys: entries must be homogeneous of degree 2");
        for (auto& t : p.terms()) {
            int a = -1, c = -1;
            for (std::size_t i = 0; i < t.exp.size(); ++i) {
                if (t.exp[i] == 2) { a = c = static_cast<int>(i); }
                else if (t.exp[i] == 1) { (a < 0 ? a : c) = static_cast<int>(i); }
            }
            if (a == c) values[static_cast<std::size_t>(a)].flip(static_cast<std::size_t>(k));
            else {
                b[a][c].flip(static_cast<std::size_t>(k));
                b[c][a].flip(static_cast<std::size_t>(k));
            }
        }
    }
    return QuadraticMap(m, n, std::move(values), std::move(b));
}

BitVector QuadraticMap::eval(const BitVector& w) const {
    if (static_cast<int>(w.size()) != m_)
        throw std::invalid_argument("QuadraticMap::eval: dimension mismatch");
    BitVector r(static_cast<std::size_t>(n_));
    for (int i = 0; i < m_; ++i) {
        if (!w.get(static_cast<std::size_t>(i))) continue;
        r ^= q_basis_[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m_; ++j)
            if (w.get(static_cast<std::size_t>(j))) r ^= b_[i][j];
    }
    return r;
}

BitVector QuadraticMap::bilinear(const BitVector& w, const BitVector& w2) const {
    BitVector r(static_cast<std::size_t>(n_));
    for (int i = 0; i < m_; ++i) {
        if (!w.get(static_cast<std::size_t>(i))) continue;
        for (int j = 0; j < m_; ++j)
            if (w2.get(static_cast<std::size_t>(j))) r ^= b_[i][j];
    }
    return r;
}

std::vector<Poly> QuadraticMap::extension_class() const {
    std::vector<Poly> q;
    for (int k = 0; k < n_; ++k) {
        std::vector<Monomial> terms;
        for (int i = 0; i < m_; ++i) {
            if (q_basis_[static_cast<std::size_t>(i)].get(static_cast<std::size_t>(k))) {
                Monomial t(static_cast<std::size_t>(m_));
                t.exp[static_cast<std::size_t>(i)] = 2;
                terms.push_back(std::move(t));
            }
            for (int j = i + 1; j < m_; ++j)
                if (b_[i][j].get(static_cast<std::size_t>(k))) {
                    Monomial t(static_cast<std::size_t>(m_));
                    t.exp[static_cast<std::size_t>(i)] = 1;
                    t.exp[static_cast<std::size_t>(j)] = 1;
                    terms.push_back(std::move(t));
                }
        }
        q.push_back(Poly::from_terms(m_, std::move(terms)));
    }
    return q;
}

QuadMorphism identity_morphism(const QuadraticMap& q) {
    return {BitMatrix::identity(static_cast<std::size_t>(q.dim_w())),
            BitMatrix::identity(static_cast<std::size_t>(q.dim_v()))};
}

QuadMorphism compose(const QuadMorphism& g, const QuadMorphism& f) {
    return {g.f_w.mul(f.f_w), g.f_v.mul(f.f_v)};
}

bool verify_morphism(const QuadMorphism& f, const QuadraticMap& q1,
                     const QuadraticMap& q2) {
    int m1 = q1.dim_w();
    auto check = [&](const BitVector& w) {
        return q2.eval(f.f_w.mul(w)) == f.f_v.mul(q1.eval(w));
    };
    for (int i = 0; i < m1; ++i) {
        BitVector wi(static_cast<std::size_t>(m1));
        wi.set(static_cast<std::size_t>(i));
        if (!check(wi)) return false;
        for (int j = i + 1; j < m1; ++j) {
            BitVector wij = wi;
            wij.set(static_cast<std::size_t>(j));
            if (!check(wij)) return false;
        }
    }
    return true;
}

bool pullback_check(const QuadMorphism& f, const QuadraticMap& q1,
                    const QuadraticMap& q2) {
    int m1 = q1.dim_w(), m2 = q2.dim_w();
    std::vector<Poly> images;  // x_a (in m2 vars) -> row a of f_w as a linear form
    for (int a = 0; a < m2; ++a) {
        Poly lin(m1);
        for (int i = 0; i < m1; ++i)
            if (f.f_w.get(static_cast<std::size_t>(a), static_cast<std::size_t>(i)))
                lin += Poly::variable(m1, i);
        images.push_back(std::move(lin));
    }
    std::vector<Poly> c1 = q1.extension_class();
    std::vector<Poly> c2 = q2.extension_class();
    for (int k = 0; k < q2.dim_v(); ++k) {
        Poly lhs = c2[static_cast<std::size_t>(k)].substitute(images);
        Poly rhs(m1);
        for (int l = 0; l < q1.dim_v(); ++l)
            if (f.f_v.get(static_cast<std::size_t>(k), static_cast<std::size_t>(l)))
                rhs += c1[static_cast<std::size_t>(l)];
        if (lhs != rhs) return false;
    }
    return true;
}

namespace {

/// Q restricted to given subspace bases; throws when values escape the span.
RestrictedMap restrict_map(const QuadraticMap& q, std::vector<BitVector> basis_w,
                           std::vector<BitVector> basis_v) {
    int m = static_cast<int>(basis_w.size());
    int n = static_cast<int>(basis_v.size());
    std::vector<BitVector> values;
    for (int i = 0; i < m; ++i) {
        auto c = coordinates_in_span(basis_v, q.eval(basis_w[static_cast<std::size_t>(i)]));
        if (!c) throw std::invalid_argument("restrict: Q value outside target span");
        BitVector padded(static_cast<std::size_t>(n));
        for (int k = 0; k < static_cast<int>(c->size()); ++k)
            if (c->get(static_cast<std::size_t>(k))) padded.set(static_cast<std::size_t>(k));
        values.push_back(padded);
    }
    std::vector<std::vector<BitVector>> b(
        static_cast<std::size_t>(m),
        std::vector<BitVector>(static_cast<std::size_t>(m), BitVector(static_cast<std::size_t>(n))));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto c = coordinates_in_span(
                basis_v, q.bilinear(basis_w[static_cast<std::size_t>(i)],
                                    basis_w[static_cast<std::size_t>(j)]));
            if (!c) throw std::invalid_argument("restrict: B value outside target span");
            for (int k = 0; k < static_cast<int>(c->size()); ++k)
                if (c->get(static_cast<std::size_t>(k))) b[i][j].set(static_cast<std::size_t>(k));
        }
    return {QuadraticMap(m, n, std::move(values), std::move(b)), std::move(basis_w),
            std::move(basis_v)};
}

}  // namespace

RestrictedMap kernel(const QuadMorphism& f, const QuadraticMap& q1,
                     const QuadraticMap& /*q2*/) {
    return restrict_map(q1, kernel_basis(f.f_w), kernel_basis(f.f_v));
}

RestrictedMap image(const QuadMorphism& f, const QuadraticMap& /*q1*/,
                    const QuadraticMap& q2) {
    return restrict_map(q2, column_space_basis(f.f_w), column_space_basis(f.f_v));
}

bool is_injective(const QuadMorphism& f, const QuadraticMap& q1,
                  const QuadraticMap& q2) {
    auto k = kernel(f, q1, q2);
    return k.map.dim_w() == 0 && k.map.dim_v() == 0;
}

bool is_normal_embedding(const QuadMorphism& f, const QuadraticMap& q1,
                         const QuadraticMap& q2) {
    if (!is_injective(f, q1, q2))
        throw std::invalid_argument("is_normal_embedding: f must be injective");
    auto im_v = column_space_basis(f.f_v);
    int m1 = q1.dim_w(), m2 = q2.dim_w();
    for (int i = 0; i < m1; ++i) {
        BitVector w1(static_cast<std::size_t>(m1));
        w1.set(static_cast<std::size_t>(i));
        BitVector fw = f.f_w.mul(w1);
        for (int j = 0; j < m2; ++j) {
            BitVector w2(static_cast<std::size_t>(m2));
            w2.set(static_cast<std::size_t>(j));
            if (!coordinates_in_span(im_v, q2.bilinear(fw, w2))) return false;
        }
    }
    return true;
}

namespace {

/// Mod-subspace reduction data: RREF rows of the subspace plus the complement
/// coordinates (non-pivots), which index canonical coset representatives.
struct QuotientData {
    Rref rref;
    std::vector<std::size_t> complement;  // non-pivot coordinates

    explicit QuotientData(const std::vector<BitVector>& span, std::size_t dim) {
        BitMatrix m(span.size(), dim);
        for (std::size_t i = 0; i < span.size(); ++i) m.row(i) = span[i];
        rref = row_reduce(m);
        std::size_t p = 0;
        for (std::size_t c = 0; c < dim; ++c) {
            if (p < rref.pivot_cols.size() && rref.pivot_cols[p] == c) ++p;
            else complement.push_back(c);
        }
    }

    BitVector reduce(BitVector v) const {
        for (std::size_t i = 0; i < rref.rank(); ++i)
            if (v.get(rref.pivot_cols[i])) v ^= rref.mat.row(i);
        return v;
    }

    /// Coordinates of the canonical representative in the complement basis.
    BitVector quotient_coords(const BitVector& v) const {
        BitVector red = reduce(v);
        BitVector c(complement.size());
        for (std::size_t k = 0; k < complement.size(); ++k)
            if (red.get(complement[k])) c.set(k);
        return c;
    }
};

}  // namespace

RestrictedMap cokernel(const QuadMorphism& f, const QuadraticMap& q1,
                       const QuadraticMap& q2) {
    if (!is_normal_embedding(f, q1, q2))
        throw std::invalid_argument("cokernel: f is not a normal embedding");
    std::size_t m2 = static_cast<std::size_t>(q2.dim_w());
    std::size_t n2 = static_cast<std::size_t>(q2.dim_v());
    QuotientData qw(column_space_basis(f.f_w), m2);
    QuotientData qv(column_space_basis(f.f_v), n2);

    auto rep = [&](std::size_t k) {
        BitVector v(m2);
        v.set(qw.complement[k]);
        return v;
    };
    int mq = static_cast<int>(qw.complement.size());
    int nq = static_cast<int>(qv.complement.size());
    std::vector<BitVector> values, basis_w, basis_v;
    for (int i = 0; i < mq; ++i) {
        basis_w.push_back(rep(static_cast<std::size_t>(i)));
        values.push_back(qv.quotient_coords(q2.eval(basis_w.back())));
    }
    for (std::size_t k = 0; k < qv.complement.size(); ++k) {
        BitVector v(n2);
        v.set(qv.complement[k]);
        basis_v.push_back(v);
    }
    std::vector<std::vector<BitVector>> b(
        static_cast<std::size_t>(mq),
        std::vector<BitVector>(static_cast<std::size_t>(mq), BitVector(static_cast<std::size_t>(nq))));
    for (int i = 0; i < mq; ++i)
        for (int j = i + 1; j < mq; ++j)
            b[i][j] = qv.quotient_coords(q2.bilinear(basis_w[static_cast<std::size_t>(i)],
                                                     basis_w[static_cast<std::size_t>(j)]));

    if (q2.dim_w() <= 12) {
        // Well-definedness on cosets, exhaustively.
        for (unsigned w = 0; w < (1u << q2.dim_w()); ++w) {
            BitVector wv = index_to_vec(w, q2.dim_w());
            BitVector base = qv.quotient_coords(q2.eval(wv));
            BitVector shifted = qv.quotient_coords(q2.eval(qw.reduce(wv)));
            if (base != shifted)
                throw std::logic_error("cokernel: not well defined on cosets");
        }
    }
    return {QuadraticMap(mq, nq, std::move(values), std::move(b)), std::move(basis_w),
            std::move(basis_v)};
}

bool is_frattini(const QuadraticMap& q) {
    // span{Q(w)} = span{Q(w_i)} + span{B(w_i, w_j)} by the polar identity.
    std::vector<BitVector> gens;
    for (int i = 0; i < q.dim_w(); ++i) {
        gens.push_back(q.value_on_basis(i));
        for (int j = i + 1; j < q.dim_w(); ++j) gens.push_back(q.bilinear_on_basis(i, j));
    }
    BitMatrix m(gens.size(), static_cast<std::size_t>(q.dim_v()));
    for (std::size_t i = 0; i < gens.size(); ++i) m.row(i) = gens[i];
    return m.rank() == static_cast<std::size_t>(q.dim_v());
}

bool is_effective(const QuadraticMap& q) {
    if (q.dim_w() > 24) throw CapExceeded("is_effective: m > 24");
    for (unsigned w = 1; w < (1u << q.dim_w()); ++w)
        if (q.eval(index_to_vec(w, q.dim_w())).none()) return false;
    return true;
}

bool is_two_power_exact(const QuadraticMap& q) {
    return q.dim_w() == q.dim_v() && is_frattini(q) && is_effective(q);
}

QuadraticMap family(Family kind, int size) {
    if (size < 1) throw std::invalid_argument("family: size must be >= 1");
    // Basis of the matrix subspace, row-major over admissible entries.
    std::vector<std::vector<int>> basis;  // flattened 0/1 matrices, size*size
    auto elem = [&](int i, int j) {
        std::vector<int> e(static_cast<std::size_t>(size) * size, 0);
        e[static_cast<std::size_t>(i) * size + j] = 1;
        return e;
    };
    switch (kind) {
        case Family::gl:
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j) basis.push_back(elem(i, j));
            break;
        case Family::sl:
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j)
                    if (i != j) basis.push_back(elem(i, j));
            for (int i = 0; i + 1 < size; ++i) {
                auto e = elem(i, i);
                e[static_cast<std::size_t>(i + 1) * size + i + 1] = 1;
                basis.push_back(e);
            }
            break;
        case Family::u:
            for (int i = 0; i < size; ++i)
                for (int j = i + 1; j < size; ++j) basis.push_back(elem(i, j));
            break;
    }
    int m = static_cast<int>(basis.size());
    std::size_t flat = static_cast<std::size_t>(size) * size;
    std::vector<BitVector> basis_vecs;
    for (auto& e : basis) {
        BitVector v(flat);
        for (std::size_t p = 0; p < flat; ++p)
            if (e[p]) v.set(p);
        basis_vecs.push_back(std::move(v));
    }
    auto f = [&](const BitVector& coords) {
        // A = sum coords_i M_i; Q(A) = A^2 + A expressed in basis coordinates.
        std::vector<int> a(flat, 0);
        for (int i = 0; i < m; ++i)
            if (coords.get(static_cast<std::size_t>(i)))
                for (std::size_t p = 0; p < flat; ++p) a[p] ^= basis[static_cast<std::size_t>(i)][p];
        std::vector<int> sq(flat, 0);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) {
                int acc = 0;
                for (int k = 0; k < size; ++k)
                    acc ^= a[static_cast<std::size_t>(i) * size + k] &
                           a[static_cast<std::size_t>(k) * size + j];
                sq[static_cast<std::size_t>(i) * size + j] = acc ^ a[static_cast<std::size_t>(i) * size + j];
            }
        BitVector v(flat);
        for (std::size_t p = 0; p < flat; ++p)
            if (sq[p]) v.set(p);
        auto c = coordinates_in_span(basis_vecs, v);
        if (!c) throw std::logic_error("family: Q value escaped the subspace");
        BitVector out(static_cast<std::size_t>(m));
        for (int i = 0; i < static_cast<int>(c->size()); ++i)
            if (c->get(static_cast<std::size_t>(i))) out.set(static_cast<std::size_t>(i));
        return out;
    };
    return QuadraticMap::from_function(m, m, f);
}

}  // namespace qmap
