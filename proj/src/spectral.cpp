#include "qmap/spectral.hpp"

#include <stdexcept>

namespace qmap {

B1Page::B1Page(const QuadraticMap& q, const PolyMatrix& l, std::vector<Poly> eta,
               int max_degree)
    : q_(&q), l_(l), n_(q.dim_v()), max_degree_(max_degree) {
    int m = q.dim_w();
    if (l.rows != n_ || l.cols != n_ || l.nvars != m)
        throw std::invalid_argument("b1_page: L has the wrong shape");
    if (max_degree < 0) throw std::invalid_argument("b1_page: negative degree");
    a_ = std::make_unique<QuotientAlgebra>(q.extension_class(), m, max_degree);
    if (eta.empty()) eta.assign(static_cast<std::size_t>(n_), Poly(m));
    if (static_cast<int>(eta.size()) != n_)
        throw std::invalid_argument("b1_page: eta needs one entry per generator");
    eta_ = std::move(eta);
    for (auto& e : eta_) e = a_->normal_form(e);

    basis_.resize(static_cast<std::size_t>(max_degree_) + 1);
    index_.resize(static_cast<std::size_t>(max_degree_) + 1);
    for (int s = 0; s <= max_degree_; ++s) {
        for (int i = 0; 2 * i <= s; ++i) {
            int d = s - 2 * i;
            if (a_->dim(d) == 0) continue;
            for (auto& alpha : monomials_of_degree(n_, i))
                for (auto& mu : a_->basis(d)) {
                    index_[static_cast<std::size_t>(s)][{alpha.exp, mu.exp}] =
                        static_cast<int>(basis_[static_cast<std::size_t>(s)].size());
                    basis_[static_cast<std::size_t>(s)].push_back({alpha, mu});
                }
        }
    }

    beta_.resize(static_cast<std::size_t>(max_degree_));
    for (int s = 0; s < max_degree_; ++s) {
        BitMatrix mat(static_cast<std::size_t>(dim(s + 1)), static_cast<std::size_t>(dim(s)));
        for (int c = 0; c < dim(s); ++c) {
            BitVector img = beta_of(s, c);
            for (std::size_t r = 0; r < mat.rows(); ++r)
                if (img.get(r)) mat.set(r, c);
        }
        beta_[static_cast<std::size_t>(s)] = std::move(mat);
    }

    for (int s = 0; s + 1 < max_degree_; ++s) {
        BitMatrix sq = beta_[static_cast<std::size_t>(s) + 1].mul(beta_[static_cast<std::size_t>(s)]);
        for (std::size_t r = 0; r < sq.rows(); ++r)
            if (sq.row(r).any())
                throw std::invalid_argument(
                    "b1_page: beta^2 != 0 (eta is not consistent with L)");
    }
}

BitVector B1Page::element_coords(int s,
                                 const std::vector<std::pair<Monomial, Poly>>& terms) const {
    BitVector v(static_cast<std::size_t>(dim(s)));
    auto& idx = index_[static_cast<std::size_t>(s)];
    for (auto& [sig, p] : terms)
        for (auto& t : p.terms())
            v.flip(static_cast<std::size_t>(idx.at({sig.exp, t.exp})));
    return v;
}

BitVector B1Page::beta_of(int s, int index) const {
    const BasisElem& e = basis_[static_cast<std::size_t>(s)][static_cast<std::size_t>(index)];
    int m = q_->dim_w();
    Poly mu = Poly::from_monomial(m, e.a_part);
    std::vector<std::pair<Monomial, Poly>> terms;
    terms.emplace_back(e.s_part, a_->normal_form(bockstein(mu)));
    for (int j = 0; j < n_; ++j) {
        if (e.s_part.exp[static_cast<std::size_t>(j)] % 2 == 0) continue;
        Monomial base = e.s_part;
        base.exp[static_cast<std::size_t>(j)] -= 1;
        for (int k = 0; k < n_; ++k) {
            if (l_.at(j, k).is_zero()) continue;
            Monomial sig = base;
            sig.exp[static_cast<std::size_t>(k)] += 1;
            terms.emplace_back(sig, a_->normal_form(l_.at(j, k) * mu));
        }
        if (!eta_[static_cast<std::size_t>(j)].is_zero())
            terms.emplace_back(base, a_->normal_form(eta_[static_cast<std::size_t>(j)] * mu));
    }
    return element_coords(s + 1, terms);
}

std::vector<int> B1Page::dims() const {
    std::vector<int> d;
    for (int s = 0; s <= max_degree_; ++s) d.push_back(dim(s));
    return d;
}

BPage b1_dims(const B1Page& page) {
    return {page.max_degree(), page.dims(), "B1"};
}

BPage b2_direct(const B1Page& page) {
    BPage out{page.max_degree(), {}, "direct"};
    std::size_t prev_rank = 0;
    for (int s = 0; s < page.max_degree(); ++s) {
        std::size_t rank = page.beta_matrix(s).rank();
        int ker = page.dim(s) - static_cast<int>(rank);
        out.dims.push_back(ker - static_cast<int>(prev_rank));
        prev_rank = rank;
    }
    return out;
}

BPage b2_decomposition(const QuadraticMap& q, const PolyMatrix& l, int max_degree) {
    QuotientAlgebra a(q.extension_class(), q.dim_w(), max_degree + 1);
    BPage out{max_degree, std::vector<int>(static_cast<std::size_t>(max_degree), 0),
              "decomposition"};
    for (int i = 0; 2 * i < max_degree; ++i) {
        auto sym = sym_power_module(q, l, i);
        if (!sym)
            throw std::invalid_argument("b2_decomposition: Sym^i(L) is not a module");
        CochainComplex cx(q, *sym, a);
        for (int p = 0; p + 2 * i < max_degree; ++p) {
            if (a.dim(p) == 0) continue;
            out.dims[static_cast<std::size_t>(p + 2 * i)] += cx.cohomology(p).dim;
        }
    }
    return out;
}

std::vector<int> torsion_report(const BPage& b2) {
    std::vector<int> out;
    for (int s = 1; s < static_cast<int>(b2.dims.size()); ++s)
        if (b2.dims[static_cast<std::size_t>(s)] != 0) out.push_back(s);
    return out;
}

}  // namespace qmap
