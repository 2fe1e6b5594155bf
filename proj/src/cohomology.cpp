#include "qmap/cohomology.hpp"

#include <map>
#include <stdexcept>

#include "qmap/errors.hpp"

namespace qmap {

namespace {

bool lin_coeff(const Poly& p, int var) {
    for (auto& t : p.terms())
        if (t.degree() == 1 && t.exp[static_cast<std::size_t>(var)] == 1) return true;
    return false;
}

BitVector poly_coords(const Poly& p, const std::vector<Monomial>& mons,
                      const std::map<std::vector<std::uint8_t>, int>& idx) {
    BitVector v(mons.size());
    for (auto& t : p.terms()) v.set(static_cast<std::size_t>(idx.at(t.exp)));
    return v;
}

std::map<std::vector<std::uint8_t>, int> index_of(const std::vector<Monomial>& mons) {
    std::map<std::vector<std::uint8_t>, int> idx;
    for (int c = 0; c < static_cast<int>(mons.size()); ++c)
        idx[mons[static_cast<std::size_t>(c)].exp] = c;
    return idx;
}

/// Writes each target (homogeneous degree 2 in m vars) as sum_j b_j q_j.
/// Row i of the result holds the coefficients for targets[i].
std::optional<BitMatrix> decompose_over_generators(const std::vector<Poly>& q, int m,
                                                   const std::vector<Poly>& targets) {
    int n = static_cast<int>(q.size());
    auto mons = monomials_of_degree(m, 2);
    auto idx = index_of(mons);
    BitMatrix gen_cols(mons.size(), static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        for (auto& t : q[static_cast<std::size_t>(j)].terms())
            gen_cols.set(static_cast<std::size_t>(idx.at(t.exp)), static_cast<std::size_t>(j));
    BitMatrix out(targets.size(), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < targets.size(); ++i) {
        auto sol = solve_linear(gen_cols, poly_coords(targets[i], mons, idx));
        if (!sol) return std::nullopt;
        out.row(i) = sol->particular;
    }
    return out;
}

QuadraticMap identity_quad(int k) {
    std::vector<BitVector> vals;
    for (int i = 0; i < k; ++i) {
        BitVector e(static_cast<std::size_t>(k));
        e.set(static_cast<std::size_t>(i));
        vals.push_back(std::move(e));
    }
    std::vector<std::vector<BitVector>> b(
        static_cast<std::size_t>(k),
        std::vector<BitVector>(static_cast<std::size_t>(k), BitVector(static_cast<std::size_t>(k))));
    return QuadraticMap(k, k, std::move(vals), std::move(b));
}

bool same_span(const std::vector<BitVector>& a, const std::vector<BitVector>& b) {
    if (a.empty() && b.empty()) return true;
    for (auto& v : a)
        if (!coordinates_in_span(b, v)) return false;
    for (auto& v : b)
        if (!coordinates_in_span(a, v)) return false;
    return true;
}

}  // namespace

CochainComplex::CochainComplex(const QuadraticMap& q, QModule mod, const QuotientAlgebra& a)
    : q_(&q), mod_(std::move(mod)), a_(&a) {
    if (a.nvars() != q.dim_w() || mod_.R.nvars != q.dim_w() ||
        mod_.R.rows != mod_.k || mod_.R.cols != mod_.k)
        throw std::invalid_argument("cochain complex: shape mismatch");
    if (!check_representation(mod_, q))
        throw std::invalid_argument("module fails the representation condition");
    delta_cache_.resize(static_cast<std::size_t>(a.max_degree()));
}

Cochain CochainComplex::normalize(int degree, std::vector<Poly> entries) const {
    if (static_cast<int>(entries.size()) != mod_.k)
        throw std::invalid_argument("cochain: wrong number of entries");
    for (auto& e : entries) e = a_->normal_form(e);
    return Cochain{degree, std::move(entries)};
}

Cochain CochainComplex::zero(int degree) const {
    return Cochain{degree, std::vector<Poly>(static_cast<std::size_t>(mod_.k),
                                             Poly(a_->nvars()))};
}

Cochain CochainComplex::differential(const Cochain& c) const {
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(mod_.k));
    for (int i = 0; i < mod_.k; ++i) {
        Poly e = bockstein(c.entries[static_cast<std::size_t>(i)]);
        for (int j = 0; j < mod_.k; ++j)
            e += mod_.R.at(i, j) * c.entries[static_cast<std::size_t>(j)];
        out.push_back(a_->normal_form(e));
    }
    return Cochain{c.degree + 1, std::move(out)};
}

BitVector CochainComplex::to_coords(const Cochain& c) const {
    int d = a_->dim(c.degree);
    BitVector v(static_cast<std::size_t>(cochain_dim(c.degree)));
    for (int i = 0; i < mod_.k; ++i) {
        BitVector part = a_->coords(c.entries[static_cast<std::size_t>(i)], c.degree);
        for (int b = 0; b < d; ++b)
            if (part.get(static_cast<std::size_t>(b)))
                v.set(static_cast<std::size_t>(i) * d + static_cast<std::size_t>(b));
    }
    return v;
}

Cochain CochainComplex::from_coords(int p, const BitVector& v) const {
    int d = a_->dim(p);
    std::vector<Poly> entries;
    for (int i = 0; i < mod_.k; ++i) {
        BitVector part(static_cast<std::size_t>(d));
        for (int b = 0; b < d; ++b)
            if (v.get(static_cast<std::size_t>(i) * d + static_cast<std::size_t>(b)))
                part.set(static_cast<std::size_t>(b));
        entries.push_back(a_->from_coords(part, p));
    }
    return Cochain{p, std::move(entries)};
}

const BitMatrix& CochainComplex::delta_matrix(int p) const {
    if (p < 0 || p > max_p()) throw std::out_of_range("delta_matrix: degree out of range");
    auto& slot = delta_cache_[static_cast<std::size_t>(p)];
    if (!slot) {
        std::size_t src = static_cast<std::size_t>(cochain_dim(p));
        std::size_t dst = static_cast<std::size_t>(cochain_dim(p + 1));
        BitMatrix m(dst, src);
        for (std::size_t c = 0; c < src; ++c) {
            BitVector unit(src);
            unit.set(c);
            BitVector img = to_coords(differential(from_coords(p, unit)));
            for (std::size_t r = 0; r < dst; ++r)
                if (img.get(r)) m.set(r, c);
        }
        slot = std::move(m);
    }
    return *slot;
}

bool CochainComplex::is_cocycle(const Cochain& c) const {
    return differential(c).is_zero();
}

std::optional<Cochain> CochainComplex::coboundary_preimage(const Cochain& c) const {
    if (c.degree == 0) return c.is_zero() ? std::optional<Cochain>(zero(0)) : std::nullopt;
    auto sol = solve_linear(delta_matrix(c.degree - 1), to_coords(c));
    if (!sol) return std::nullopt;
    return from_coords(c.degree - 1, sol->particular);
}

CohomologyGroup CochainComplex::cohomology(int p) const {
    std::vector<BitVector> cocycles;
    if (p < max_p()) {
        cocycles = kernel_basis(delta_matrix(p));
    } else {
        // At the truncation boundary the differential out of C^p is unknown;
        // callers should size the algebra so this is not hit for degrees of
        // interest. Treat the whole space as cocycles.
        std::size_t d = static_cast<std::size_t>(cochain_dim(p));
        for (std::size_t i = 0; i < d; ++i) {
            BitVector v(d);
            v.set(i);
            cocycles.push_back(std::move(v));
        }
    }
    std::vector<BitVector> rows;
    std::vector<std::size_t> pivots;
    auto insert = [&](BitVector v) -> bool {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (v.get(pivots[i])) v ^= rows[i];
        if (!v.any()) return false;
        std::size_t piv = static_cast<std::size_t>(v.lowest_set());
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    };
    if (p > 0)
        for (auto& b : column_space_basis(delta_matrix(p - 1))) insert(b);

    CohomologyGroup h;
    h.p = p;
    for (auto& z : cocycles) {
        BitVector v = z;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (v.get(pivots[i])) v ^= rows[i];
        if (!v.any()) continue;
        h.representatives.push_back(from_coords(p, v));
        std::size_t piv = static_cast<std::size_t>(v.lowest_set());
        rows.push_back(std::move(v));
        pivots.push_back(piv);
    }
    h.dim = static_cast<int>(h.representatives.size());
    return h;
}

std::vector<BitVector> invariants(const QModule& mod, int m) {
    BitMatrix stacked(static_cast<std::size_t>(m) * mod.k, static_cast<std::size_t>(mod.k));
    for (int l = 0; l < m; ++l)
        for (int i = 0; i < mod.k; ++i)
            for (int j = 0; j < mod.k; ++j)
                if (lin_coeff(mod.R.at(i, j), l))
                    stacked.set(static_cast<std::size_t>(l) * mod.k + i,
                                static_cast<std::size_t>(j));
    return kernel_basis(stacked);
}

std::vector<BitVector> bockstein_invariants(const QuadraticMap& q) {
    int m = q.dim_w(), n = q.dim_v();
    std::vector<Poly> cls = q.extension_class();
    auto mons3 = monomials_of_degree(m, 3);
    auto idx3 = index_of(mons3);
    BitMatrix a(mons3.size(), static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        Poly bq = bockstein(cls[static_cast<std::size_t>(j)]);
        for (auto& t : bq.terms())
            a.set(static_cast<std::size_t>(idx3.at(t.exp)), static_cast<std::size_t>(j));
    }
    // Z(Q)^beta is a subspace of span{q_k}, so kernel vectors that only
    // express a linear dependency among the q_k must be discarded: keep a
    // coefficient vector only when sum c_k q_k enlarges the span seen so far.
    auto mons2 = monomials_of_degree(m, 2);
    auto idx2 = index_of(mons2);
    std::vector<BitVector> rows;
    std::vector<std::size_t> pivots;
    std::vector<BitVector> out;
    for (auto& c : kernel_basis(a)) {
        BitVector y(mons2.size());
        for (int j = 0; j < n; ++j)
            if (c.get(static_cast<std::size_t>(j)))
                for (auto& t : cls[static_cast<std::size_t>(j)].terms())
                    y.flip(static_cast<std::size_t>(idx2.at(t.exp)));
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (y.get(pivots[r])) y ^= rows[r];
        if (!y.any()) continue;
        pivots.push_back(static_cast<std::size_t>(y.lowest_set()));
        rows.push_back(std::move(y));
        out.push_back(c);
    }
    return out;
}

QuadraticMap cocycle_to_extension(const CochainComplex& cx, const Cochain& f) {
    if (f.degree != 2 || !cx.is_cocycle(f))
        throw std::invalid_argument("cocycle_to_extension: not a degree-2 cocycle");
    const QuadraticMap& q = cx.quad();
    const QModule& mod = cx.module();
    int k = mod.k, m = q.dim_w(), n = q.dim_v();
    return QuadraticMap::from_function(k + m, k + n, [&](const BitVector& uw) {
        BitVector u(static_cast<std::size_t>(k)), w(static_cast<std::size_t>(m));
        for (int i = 0; i < k; ++i)
            if (uw.get(static_cast<std::size_t>(i))) u.set(static_cast<std::size_t>(i));
        for (int i = 0; i < m; ++i)
            if (uw.get(static_cast<std::size_t>(k + i))) w.set(static_cast<std::size_t>(i));
        BitVector out_u = u ^ mod.R.eval(w).mul(u);
        for (int i = 0; i < k; ++i)
            if (f.entries[static_cast<std::size_t>(i)].eval(w))
                out_u.flip(static_cast<std::size_t>(i));
        BitVector qv = q.eval(w);
        BitVector out(static_cast<std::size_t>(k + n));
        for (int i = 0; i < k; ++i)
            if (out_u.get(static_cast<std::size_t>(i))) out.set(static_cast<std::size_t>(i));
        for (int i = 0; i < n; ++i)
            if (qv.get(static_cast<std::size_t>(i))) out.set(static_cast<std::size_t>(k + i));
        return out;
    });
}

bool validate_extension(const QuadExtension& e, const QuadraticMap& base) {
    int k = static_cast<int>(e.incl.f_w.cols());
    if (static_cast<int>(e.incl.f_v.cols()) != k) return false;
    if (e.incl.f_w.rows() != static_cast<std::size_t>(e.total.dim_w()) ||
        e.incl.f_v.rows() != static_cast<std::size_t>(e.total.dim_v()))
        return false;
    if (e.proj.f_w.cols() != static_cast<std::size_t>(e.total.dim_w()) ||
        e.proj.f_v.cols() != static_cast<std::size_t>(e.total.dim_v()) ||
        e.proj.f_w.rows() != static_cast<std::size_t>(base.dim_w()) ||
        e.proj.f_v.rows() != static_cast<std::size_t>(base.dim_v()))
        return false;

    QuadraticMap id_u = identity_quad(k);
    if (!verify_morphism(e.incl, id_u, e.total)) return false;
    if (!is_injective(e.incl, id_u, e.total)) return false;
    if (!verify_morphism(e.proj, e.total, base)) return false;
    if (e.proj.f_w.transposed().rank() != static_cast<std::size_t>(base.dim_w())) return false;
    if (e.proj.f_v.transposed().rank() != static_cast<std::size_t>(base.dim_v())) return false;

    // Exactness: Im(incl) = Ker(proj) on both levels.
    if (!same_span(column_space_basis(e.incl.f_w), kernel_basis(e.proj.f_w))) return false;
    if (!same_span(column_space_basis(e.incl.f_v), kernel_basis(e.proj.f_v))) return false;
    return true;
}

std::optional<std::pair<QModule, Cochain>> extension_to_cocycle(
    const QuadExtension& e, const QuadraticMap& base, const QuotientAlgebra& a) {
    if (!validate_extension(e, base))
        throw std::invalid_argument("extension_to_cocycle: not an extension");
    int k = static_cast<int>(e.incl.f_w.cols());
    int m = base.dim_w();

    // Linear sections of the projections (free coordinates set to zero).
    auto section = [](const BitMatrix& p) {
        BitMatrix s(p.cols(), p.rows());
        for (std::size_t j = 0; j < p.rows(); ++j) {
            BitVector ej(p.rows());
            ej.set(j);
            auto sol = solve_linear(p, ej);
            for (std::size_t i = 0; i < p.cols(); ++i)
                if (sol->particular.get(i)) s.set(i, j);
        }
        return s;
    };
    BitMatrix sw = section(e.proj.f_w);
    BitMatrix sv = section(e.proj.f_v);

    // rho_W from the polar form of the total map.
    PolyMatrix r(k, k, m);
    for (int l = 0; l < m; ++l) {
        BitVector wl(static_cast<std::size_t>(m));
        wl.set(static_cast<std::size_t>(l));
        BitVector swl = sw.mul(wl);
        for (int j = 0; j < k; ++j) {
            BitVector uj(static_cast<std::size_t>(k));
            uj.set(static_cast<std::size_t>(j));
            BitVector img = e.total.bilinear(e.incl.f_w.mul(uj), swl);
            auto sol = solve_linear(e.incl.f_v, img);
            if (!sol) return std::nullopt;  // kernel is not normal in the total map
            for (int i = 0; i < k; ++i)
                if (sol->particular.get(static_cast<std::size_t>(i)))
                    r.at(i, j) += Poly::variable(m, l);
        }
    }

    // Factor set: g(w) = incl_V^{-1}( Qt(s_W w) + s_V Q(w) ).
    QuadraticMap g = QuadraticMap::from_function(m, k, [&](const BitVector& w) {
        BitVector target = e.total.eval(sw.mul(w)) ^ sv.mul(base.eval(w));
        auto sol = solve_linear(e.incl.f_v, target);
        if (!sol) throw std::invalid_argument("extension_to_cocycle: broken exactness");
        return sol->particular;
    });

    auto mod = complete_module(base, r);
    if (!mod) return std::nullopt;
    std::vector<Poly> entries = g.extension_class();
    for (auto& p : entries) p = a.normal_form(p);
    return std::make_pair(std::move(*mod), Cochain{2, std::move(entries)});
}

std::optional<std::pair<BitMatrix, BitMatrix>> extensions_equivalent(
    const CochainComplex& cx, const Cochain& f1, const Cochain& f2) {
    const QuadraticMap& q = cx.quad();
    const QModule& mod = cx.module();
    int k = mod.k, m = q.dim_w();
    std::vector<Poly> diff;
    for (int i = 0; i < k; ++i)
        diff.push_back(f1.entries[static_cast<std::size_t>(i)] +
                       f2.entries[static_cast<std::size_t>(i)]);
    auto xi = cx.coboundary_preimage(cx.normalize(2, diff));
    if (!xi) return std::nullopt;

    BitMatrix a(static_cast<std::size_t>(k), static_cast<std::size_t>(m));
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < m; ++l)
            if (lin_coeff(xi->entries[static_cast<std::size_t>(i)], l))
                a.set(static_cast<std::size_t>(i), static_cast<std::size_t>(l));

    // Exact residue lies in the span of the generators; its coefficients give b.
    std::vector<Poly> residue;
    for (int i = 0; i < k; ++i) {
        Poly p = diff[static_cast<std::size_t>(i)] +
                 bockstein(xi->entries[static_cast<std::size_t>(i)]);
        for (int j = 0; j < k; ++j)
            p += mod.R.at(i, j) * xi->entries[static_cast<std::size_t>(j)];
        residue.push_back(std::move(p));
    }
    auto b = decompose_over_generators(q.extension_class(), m, residue);
    if (!b) return std::nullopt;
    return std::make_pair(std::move(a), std::move(*b));
}

std::vector<QuadMorphism> splittings(const CochainComplex& cx) {
    const QuadraticMap& q = cx.quad();
    const QModule& mod = cx.module();
    int k = mod.k, m = q.dim_w(), n = q.dim_v();
    CohomologyGroup h1 = cx.cohomology(1);
    if (h1.dim > 16) throw CapExceeded("splittings: dim H^1 > 16");

    std::vector<QuadMorphism> out;
    for (unsigned mask = 0; mask < (1u << h1.dim); ++mask) {
        Cochain d = cx.zero(1);
        for (int b = 0; b < h1.dim; ++b)
            if ((mask >> b) & 1u)
                for (int i = 0; i < k; ++i)
                    d.entries[static_cast<std::size_t>(i)] +=
                        h1.representatives[static_cast<std::size_t>(b)]
                            .entries[static_cast<std::size_t>(i)];

        BitMatrix dw(static_cast<std::size_t>(k), static_cast<std::size_t>(m));
        for (int i = 0; i < k; ++i)
            for (int l = 0; l < m; ++l)
                if (lin_coeff(d.entries[static_cast<std::size_t>(i)], l))
                    dw.set(static_cast<std::size_t>(i), static_cast<std::size_t>(l));

        std::vector<Poly> residue;
        for (int i = 0; i < k; ++i) {
            Poly p = bockstein(d.entries[static_cast<std::size_t>(i)]);
            for (int j = 0; j < k; ++j)
                p += mod.R.at(i, j) * d.entries[static_cast<std::size_t>(j)];
            residue.push_back(std::move(p));
        }
        auto dv = decompose_over_generators(q.extension_class(), m, residue);
        if (!dv) continue;  // representative is not a cocycle; cannot happen

        QuadMorphism s;
        s.f_w = BitMatrix(static_cast<std::size_t>(k + m), static_cast<std::size_t>(m));
        s.f_v = BitMatrix(static_cast<std::size_t>(k + n), static_cast<std::size_t>(n));
        for (int i = 0; i < k; ++i) {
            s.f_w.row(static_cast<std::size_t>(i)) = dw.row(static_cast<std::size_t>(i));
            s.f_v.row(static_cast<std::size_t>(i)) = dv->row(static_cast<std::size_t>(i));
        }
        for (int i = 0; i < m; ++i) s.f_w.set(static_cast<std::size_t>(k + i),
                                              static_cast<std::size_t>(i));
        for (int i = 0; i < n; ++i) s.f_v.set(static_cast<std::size_t>(k + i),
                                              static_cast<std::size_t>(i));
        out.push_back(std::move(s));
    }
    return out;
}

Cochain cup(const CochainComplex& cx, const Cochain& f, const Cochain& g) {
    if (cx.module_dim() != 1 || !cx.module().R.is_zero())
        throw std::invalid_argument("cup: needs trivial one-dimensional coefficients");
    return cx.normalize(f.degree + g.degree, {f.entries[0] * g.entries[0]});
}

std::optional<QModule> sym_power_module(const QuadraticMap& q, const PolyMatrix& l,
                                        int i) {
    int n = l.rows;
    if (l.cols != n || l.nvars != q.dim_w() || n != q.dim_v())
        throw std::invalid_argument("sym_power_module: shape mismatch");
    auto mons = monomials_of_degree(n, i);
    auto idx = index_of(mons);
    int k = static_cast<int>(mons.size());

    // beta(s^a) = sum_j a_j s^(a - e_j) (L s)_j, taken mod 2.
    PolyMatrix r(k, k, q.dim_w());
    for (int col = 0; col < k; ++col) {
        const Monomial& a = mons[static_cast<std::size_t>(col)];
        for (int j = 0; j < n; ++j) {
            if (a.exp[static_cast<std::size_t>(j)] % 2 == 0) continue;
            for (int t = 0; t < n; ++t) {
                if (l.at(j, t).is_zero()) continue;
                Monomial target = a;
                target.exp[static_cast<std::size_t>(j)] -= 1;
                target.exp[static_cast<std::size_t>(t)] += 1;
                r.at(idx.at(target.exp), col) += l.at(j, t);
            }
        }
    }
    return complete_module(q, r);
}

ObstructionResult obstruction_test(const CochainComplex& cx, const Cochain& eta) {
    if (eta.degree != 3 || !cx.is_cocycle(eta))
        return {ObstructionStatus::NotCocycle, std::nullopt};
    auto xi = cx.coboundary_preimage(eta);
    if (xi) return {ObstructionStatus::Coboundary, std::move(xi)};
    return {ObstructionStatus::NontrivialClass, std::nullopt};
}

}  // namespace qmap
