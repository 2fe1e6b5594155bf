#include "qmap/ideal.hpp"

#include <stdexcept>

#include "qmap/errors.hpp"

namespace qmap {

QuotientAlgebra::QuotientAlgebra(std::vector<Poly> generators, int nvars, int max_degree)
    : gens_(std::move(generators)), nvars_(nvars), max_degree_(max_degree) {
    for (auto& g : gens_) {
        if (g.nvars() != nvars_)
            throw std::invalid_argument("QuotientAlgebra: generator variable mismatch");
        if (!g.is_zero() && (!g.is_homogeneous() || g.degree() != 2))
            throw std::invalid_argument("QuotientAlgebra: generators must be degree-2 forms");
    }
    deg_.resize(static_cast<std::size_t>(max_degree_) + 1);
    for (int d = 0; d <= max_degree_; ++d) {
        DegreeData& dd = deg_[static_cast<std::size_t>(d)];
        dd.mons = monomials_of_degree(nvars_, d);
        for (int c = 0; c < static_cast<int>(dd.mons.size()); ++c)
            dd.index[dd.mons[static_cast<std::size_t>(c)].exp] = c;
        dd.pivot_row_of_col.assign(dd.mons.size(), -1);

        // Relation rows mu * q_k with deg mu = d - 2.
        if (d >= 2) {
            for (int k = 0; k < static_cast<int>(gens_.size()); ++k)
                for (auto& mu : monomials_of_degree(nvars_, d - 2))
                    dd.rel_tags.emplace_back(k, mu);
        }
        std::size_t nrel = dd.rel_tags.size();
        for (std::size_t r = 0; r < nrel; ++r) {
            auto& [k, mu] = dd.rel_tags[r];
            Poly rel = gens_[static_cast<std::size_t>(k)] * Poly::from_monomial(nvars_, mu);
            BitVector row(dd.mons.size());
            for (auto& t : rel.terms()) row.set(static_cast<std::size_t>(dd.index.at(t.exp)));
            BitVector cert(nrel);
            cert.set(r);
            // Reduce against existing rows, then insert if nonzero.
            for (std::size_t i = 0; i < dd.rows.size(); ++i)
                if (row.get(static_cast<std::size_t>(dd.pivot_col[i]))) {
                    row ^= dd.rows[i];
                    cert ^= dd.certs[i];
                }
            int piv = row.lowest_set();
            if (piv < 0) continue;
            // Back-substitute into earlier rows for full RREF.
            for (std::size_t i = 0; i < dd.rows.size(); ++i)
                if (dd.rows[i].get(static_cast<std::size_t>(piv))) {
                    dd.rows[i] ^= row;
                    dd.certs[i] ^= cert;
                }
            dd.pivot_row_of_col[static_cast<std::size_t>(piv)] =
                static_cast<int>(dd.rows.size());
            dd.pivot_col.push_back(piv);
            dd.rows.push_back(std::move(row));
            dd.certs.push_back(std::move(cert));
        }
        for (int c = 0; c < static_cast<int>(dd.mons.size()); ++c)
            if (dd.pivot_row_of_col[static_cast<std::size_t>(c)] < 0) {
                dd.basis_index[dd.mons[static_cast<std::size_t>(c)].exp] =
                    static_cast<int>(dd.basis.size());
                dd.basis.push_back(dd.mons[static_cast<std::size_t>(c)]);
            }
    }
}

void QuotientAlgebra::reduce_component(int d, BitVector& vec, BitVector* cert) const {
    const DegreeData& dd = deg_[static_cast<std::size_t>(d)];
    for (std::size_t i = 0; i < dd.rows.size(); ++i)
        if (vec.get(static_cast<std::size_t>(dd.pivot_col[i]))) {
            vec ^= dd.rows[i];
            if (cert) *cert ^= dd.certs[i];
        }
}

Poly QuotientAlgebra::normal_form(const Poly& f) const {
    if (f.degree() > max_degree_)
        throw CapExceeded("normal_form: degree exceeds truncation");
    std::vector<Monomial> out;
    for (int d = 0; d <= f.degree(); ++d) {
        Poly comp = f.homogeneous_component(d);
        if (comp.is_zero()) continue;
        const DegreeData& dd = deg_[static_cast<std::size_t>(d)];
        BitVector vec(dd.mons.size());
        for (auto& t : comp.terms()) vec.set(static_cast<std::size_t>(dd.index.at(t.exp)));
        reduce_component(d, vec, nullptr);
        for (std::size_t c = 0; c < dd.mons.size(); ++c)
            if (vec.get(c)) out.push_back(dd.mons[c]);
    }
    return Poly::from_terms(nvars_, std::move(out));
}

std::vector<Poly> QuotientAlgebra::reduction_certificate(const Poly& f) const {
    if (f.degree() > max_degree_)
        throw CapExceeded("reduction_certificate: degree exceeds truncation");
    std::vector<Poly> h(gens_.size(), Poly(nvars_));
    for (int d = 0; d <= f.degree(); ++d) {
        Poly comp = f.homogeneous_component(d);
        if (comp.is_zero()) continue;
        const DegreeData& dd = deg_[static_cast<std::size_t>(d)];
        BitVector vec(dd.mons.size());
        for (auto& t : comp.terms()) vec.set(static_cast<std::size_t>(dd.index.at(t.exp)));
        BitVector cert(dd.rel_tags.size());
        reduce_component(d, vec, &cert);
        for (std::size_t r = 0; r < dd.rel_tags.size(); ++r)
            if (cert.get(r))
                h[static_cast<std::size_t>(dd.rel_tags[r].first)] +=
                    Poly::from_monomial(nvars_, dd.rel_tags[r].second);
    }
    return h;
}

std::vector<int> QuotientAlgebra::hilbert_series() const {
    std::vector<int> dims;
    for (int d = 0; d <= max_degree_; ++d) dims.push_back(dim(d));
    return dims;
}

BitVector QuotientAlgebra::coords(const Poly& f, int d) const {
    const DegreeData& dd = deg_[static_cast<std::size_t>(d)];
    BitVector c(dd.basis.size());
    for (auto& t : f.terms()) {
        auto it = dd.basis_index.find(t.exp);
        if (it == dd.basis_index.end())
            throw std::invalid_argument("coords: polynomial is not in normal form");
        c.set(static_cast<std::size_t>(it->second));
    }
    return c;
}

Poly QuotientAlgebra::from_coords(const BitVector& c, int d) const {
    const DegreeData& dd = deg_[static_cast<std::size_t>(d)];
    std::vector<Monomial> terms;
    for (std::size_t i = 0; i < dd.basis.size(); ++i)
        if (c.get(i)) terms.push_back(dd.basis[i]);
    return Poly::from_terms(nvars_, std::move(terms));
}

RegularityReport is_regular_sequence(const QuadraticMap& q, int truncation) {
    int m = q.dim_w(), n = q.dim_v();
    RegularityReport rep;
    rep.square = (m == n);
    // Vanishing of a degree is final (the quotient is generated in degree 1),
    // so degree n+2 decides everything in the square case; for m != n fall
    // back to the mn+1 safety bound.
    if (truncation < 0) truncation = rep.square ? n + 2 : m * n + 1;
    QuotientAlgebra a(q.extension_class(), m, truncation);
    rep.dims = a.hilbert_series();
    rep.finite = false;
    for (int d = 0; d <= truncation; ++d)
        if (rep.dims[static_cast<std::size_t>(d)] == 0) { rep.finite = true; break; }
    if (rep.square) {
        rep.regular = truncation > n ? rep.dims[static_cast<std::size_t>(n) + 1] == 0
                                     : false;
        // Sanity: a regular sequence forces the binomial series.
        if (rep.regular) {
            long long binom = 1;
            for (int d = 0; d <= std::min(truncation, n); ++d) {
                if (rep.dims[static_cast<std::size_t>(d)] != binom) {
                    rep.regular = false;
                    break;
                }
                binom = binom * (n - d) / (d + 1);
            }
        }
    } else {
        rep.regular = false;
    }
    return rep;
}

}  // namespace qmap
