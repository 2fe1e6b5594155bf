#include "qmap/bockstein.hpp"

#include <map>
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

std::map<std::vector<std::uint8_t>, int> index_monomials(const std::vector<Monomial>& mons) {
    std::map<std::vector<std::uint8_t>, int> idx;
    for (int c = 0; c < static_cast<int>(mons.size()); ++c) idx[mons[static_cast<std::size_t>(c)].exp] = c;
    return idx;
}

BitVector poly_to_vec(const Poly& p, const std::map<std::vector<std::uint8_t>, int>& idx,
                      std::size_t ncols) {
    BitVector v(ncols);
    for (auto& t : p.terms()) v.set(static_cast<std::size_t>(idx.at(t.exp)));
    return v;
}

}  // namespace

std::optional<LSolution> solve_l(const QuadraticMap& qm) {
    int m = qm.dim_w(), n = qm.dim_v();
    std::vector<Poly> q = qm.extension_class();
    auto mons3 = monomials_of_degree(m, 3);
    auto idx3 = index_monomials(mons3);

    // Unknowns c_{ijk}: L[i][j] = sum_k c_{ijk} x_k.
    std::size_t nunk = static_cast<std::size_t>(n) * n * m;
    auto unk = [&](int i, int j, int k) {
        return (static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * m + k;
    };

    // Precompute x_k * q_j coefficient vectors.
    std::vector<BitVector> xq(static_cast<std::size_t>(n) * m);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < m; ++k)
            xq[static_cast<std::size_t>(j) * m + k] = poly_to_vec(
                q[static_cast<std::size_t>(j)] * Poly::variable(m, k), idx3, mons3.size());

    std::size_t nrows = static_cast<std::size_t>(n) * mons3.size();
    BitMatrix a(nrows, nunk);
    BitVector b(nrows);
    for (int i = 0; i < n; ++i) {
        BitVector beta_qi = poly_to_vec(bockstein(q[static_cast<std::size_t>(i)]), idx3, mons3.size());
        for (std::size_t mu = 0; mu < mons3.size(); ++mu) {
            std::size_t row = static_cast<std::size_t>(i) * mons3.size() + mu;
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < m; ++k)
                    if (xq[static_cast<std::size_t>(j) * m + k].get(mu))
                        a.set(row, unk(i, j, k));
            if (beta_qi.get(mu)) b.set(row);
        }
    }
    auto sol = solve_linear(a, b);
    if (!sol) return std::nullopt;

    auto to_matrix = [&](const BitVector& x) {
        PolyMatrix l(n, n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Poly e(m);
                for (int k = 0; k < m; ++k)
                    if (x.get(unk(i, j, k))) e += Poly::variable(m, k);
                l.at(i, j) = std::move(e);
            }
        return l;
    };
    LSolution out;
    out.particular = to_matrix(sol->particular);
    for (auto& k : sol->kernel) out.kernel.push_back(to_matrix(k));
    return out;
}

QModule QModule::trivial(int k, const QuadraticMap& q) {
    QModule mod;
    mod.k = k;
    mod.R = PolyMatrix(k, k, q.dim_w());
    mod.T.assign(static_cast<std::size_t>(q.dim_v()),
                 BitMatrix(static_cast<std::size_t>(k), static_cast<std::size_t>(k)));
    return mod;
}

bool check_representation(const QModule& mod, const QuadraticMap& q) {
    std::vector<Poly> cls = q.extension_class();
    PolyMatrix lhs = mod.R.bocksteined() + mod.R.mul(mod.R);
    PolyMatrix rhs(mod.k, mod.k, q.dim_w());
    for (int j = 0; j < q.dim_v(); ++j) {
        PolyMatrix tj = poly_matrix_from_bits(mod.T[static_cast<std::size_t>(j)], q.dim_w());
        for (auto& e : tj.entries) e = e * cls[static_cast<std::size_t>(j)];
        rhs = rhs + tj;
    }
    return lhs == rhs;
}

std::optional<QModule> complete_module(const QuadraticMap& qm, const PolyMatrix& r) {
    int m = qm.dim_w(), n = qm.dim_v(), k = r.rows;
    std::vector<Poly> q = qm.extension_class();
    auto mons2 = monomials_of_degree(m, 2);
    auto idx2 = index_monomials(mons2);
    BitMatrix gen_cols(mons2.size(), static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        for (auto& t : q[static_cast<std::size_t>(j)].terms())
            gen_cols.set(static_cast<std::size_t>(idx2.at(t.exp)), static_cast<std::size_t>(j));

    PolyMatrix e = r.bocksteined() + r.mul(r);
    QModule mod;
    mod.k = k;
    mod.R = r;
    mod.T.assign(static_cast<std::size_t>(n),
                 BitMatrix(static_cast<std::size_t>(k), static_cast<std::size_t>(k)));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            auto sol = solve_linear(gen_cols, poly_to_vec(e.at(a, b), idx2, mons2.size()));
            if (!sol) return std::nullopt;
            for (int j = 0; j < n; ++j)
                if (sol->particular.get(static_cast<std::size_t>(j)))
                    mod.T[static_cast<std::size_t>(j)].set(static_cast<std::size_t>(a),
                                                           static_cast<std::size_t>(b));
        }
    return mod;
}

std::optional<QModule> module_from_l(const QuadraticMap& q, const PolyMatrix& l) {
    return complete_module(q, l);
}

std::optional<BilinearP> check_p(const QuadraticMap& qm) {
    int m = qm.dim_w(), n = qm.dim_v();
    if (m > 12) throw CapExceeded("check_p: m > 12");
    std::size_t nmain = static_cast<std::size_t>(n) * m;  // unknowns (b,c) per output a
    std::size_t width = nmain + static_cast<std::size_t>(n);

    // Streaming RREF over rows from all (w, w') pairs; the coefficient part is
    // shared across outputs, the rhs column block holds one column per a.
    std::vector<BitVector> rows;
    std::vector<std::size_t> pivots;
    for (unsigned wi = 0; wi < (1u << m); ++wi) {
        BitVector w = index_to_vec(wi, m);
        BitVector qw = qm.eval(w);
        for (unsigned vi = 0; vi < (1u << m); ++vi) {
            BitVector w2 = index_to_vec(vi, m);
            BitVector bw = qm.bilinear(w, w2);
            BitVector row(width);
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < m; ++c) {
                    bool coef = (qw.get(static_cast<std::size_t>(b)) &&
                                 w2.get(static_cast<std::size_t>(c))) ^
                                (bw.get(static_cast<std::size_t>(b)) &&
                                 w.get(static_cast<std::size_t>(c)));
                    if (coef) row.set(static_cast<std::size_t>(b) * m + c);
                }
            for (int a = 0; a < n; ++a)
                if (bw.get(static_cast<std::size_t>(a))) row.set(nmain + a);
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (row.get(pivots[i])) row ^= rows[i];
            bool main_any = false;
            for (std::size_t c = 0; c < nmain; ++c)
                if (row.get(c)) { main_any = true; break; }
            if (!main_any) {
                for (int a = 0; a < n; ++a)
                    if (row.get(nmain + a)) return std::nullopt;  // inconsistent
                continue;
            }
            std::size_t piv = static_cast<std::size_t>(row.lowest_set());
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (rows[i].get(piv)) rows[i] ^= row;
            rows.push_back(std::move(row));
            pivots.push_back(piv);
        }
    }
    BilinearP p(static_cast<std::size_t>(n),
                BitMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(m)));
    for (int a = 0; a < n; ++a)
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].get(nmain + a))
                p[static_cast<std::size_t>(a)].set(pivots[i] / m, pivots[i] % m);
    return p;
}

PolyMatrix t_to_z(const std::vector<BitMatrix>& t, int k) {
    int n = static_cast<int>(t.size());
    PolyMatrix z(k, n, k);
    for (int a = 0; a < k; ++a)
        for (int j = 0; j < n; ++j) {
            Poly e(k);
            for (int i = 0; i < k; ++i)
                if (t[static_cast<std::size_t>(j)].get(static_cast<std::size_t>(a),
                                                       static_cast<std::size_t>(i)))
                    e += Poly::variable(k, i);
            z.at(a, j) = std::move(e);
        }
    return z;
}

std::vector<BitMatrix> z_to_t(const PolyMatrix& z, int n) {
    if (z.cols != n) throw std::invalid_argument("z_to_t: shape mismatch");
    int k = z.rows;
    std::vector<BitMatrix> t(static_cast<std::size_t>(n),
                             BitMatrix(static_cast<std::size_t>(k), static_cast<std::size_t>(k)));
    for (int a = 0; a < k; ++a)
        for (int j = 0; j < n; ++j)
            for (auto& term : z.at(a, j).terms())
                for (std::size_t i = 0; i < term.exp.size(); ++i)
                    if (term.exp[i])
                        t[static_cast<std::size_t>(j)].set(static_cast<std::size_t>(a), i);
    return t;
}

bool adjoint_identity_holds(const PolyMatrix& z, const std::vector<BitMatrix>& t,
                            const QuadraticMap& qm) {
    int m = qm.dim_w(), n = qm.dim_v(), k = z.rows;
    int nv = m + k;  // x variables first, then z variables
    std::vector<Poly> q = qm.extension_class();
    std::vector<Poly> qw, zc;
    for (auto& p : q) qw.push_back(p.widened(nv));
    for (int i = 0; i < k; ++i) zc.push_back(Poly::variable(nv, m + i));

    PolyMatrix zw(k, n, nv);
    for (int a = 0; a < k; ++a)
        for (int j = 0; j < n; ++j) zw.at(a, j) = z.at(a, j).shifted(m, nv);
    std::vector<Poly> lhs = zw.apply(qw);

    PolyMatrix tq(k, k, nv);
    for (int j = 0; j < n; ++j) {
        PolyMatrix tj = poly_matrix_from_bits(t[static_cast<std::size_t>(j)], nv);
        for (auto& e : tj.entries) e = e * qw[static_cast<std::size_t>(j)];
        tq = tq + tj;
    }
    return lhs == tq.apply(zc);
}

}  // namespace qmap
