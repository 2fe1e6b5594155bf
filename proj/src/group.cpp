#include "qmap/group.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qmap/errors.hpp"

namespace qmap {

namespace {

BitVector bits_of(unsigned x, int dim) {
    BitVector v(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i)
        if ((x >> i) & 1u) v.set(static_cast<std::size_t>(i));
    return v;
}

unsigned index_of(const BitVector& v) {
    unsigned x = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) x |= 1u << i;
    return x;
}

}  // namespace

FiniteTwoGroup FiniteTwoGroup::build(const QuadraticMap& q) {
    if (q.dim_w() + q.dim_v() > 20) throw CapExceeded("build_group: m + n > 20");
    FiniteTwoGroup g;
    g.m_ = q.dim_w();
    g.n_ = q.dim_v();
    g.f_ = [q](const BitVector& w, const BitVector& w2) {
        // Bilinear extension of the upper-triangular basis table.
        BitVector v(static_cast<std::size_t>(q.dim_v()));
        for (int i = 0; i < q.dim_w(); ++i) {
            if (!w.get(static_cast<std::size_t>(i))) continue;
            if (w2.get(static_cast<std::size_t>(i))) v ^= q.value_on_basis(i);
            for (int j = i + 1; j < q.dim_w(); ++j)
                if (w2.get(static_cast<std::size_t>(j))) v ^= q.bilinear_on_basis(i, j);
        }
        return v;
    };
    return g;
}

FiniteTwoGroup FiniteTwoGroup::from_factor_function(
    int m, int n, std::function<BitVector(const BitVector&, const BitVector&)> f) {
    if (m + n > 20) throw CapExceeded("build_group: m + n > 20");
    FiniteTwoGroup g;
    g.m_ = m;
    g.n_ = n;
    g.f_ = std::move(f);
    return g;
}

BitVector FiniteTwoGroup::v_part(unsigned g) const {
    return bits_of(g & ((1u << n_) - 1u), n_);
}

BitVector FiniteTwoGroup::w_part(unsigned g) const { return bits_of(g >> n_, m_); }

unsigned FiniteTwoGroup::encode(const BitVector& v, const BitVector& w) const {
    return index_of(v) | (index_of(w) << n_);
}

unsigned FiniteTwoGroup::mul(unsigned a, unsigned b) const {
    BitVector wa = w_part(a), wb = w_part(b);
    BitVector v = v_part(a) ^ v_part(b) ^ f_(wa, wb);
    return encode(v, wa ^ wb);
}

unsigned FiniteTwoGroup::inverse(unsigned a) const {
    BitVector w = w_part(a);
    // (v, w)^{-1} = (v + f(w, w), w).
    return encode(v_part(a) ^ f_(w, w), w);
}

StructureReport verify_structure(const FiniteTwoGroup& g, const QuadraticMap& q) {
    int m = g.m();
    if (m > 8) throw CapExceeded("verify_structure: m > 8");
    StructureReport rep;
    auto witness = [&](const std::string& s) {
        if (!rep.witness) rep.witness = s;
    };

    // Associativity depends only on the W parts of the three factors.
    rep.associative = true;
    for (unsigned a = 0; a < (1u << m) && rep.associative; ++a)
        for (unsigned b = 0; b < (1u << m) && rep.associative; ++b) {
            BitVector wa = bits_of(a, m), wb = bits_of(b, m);
            BitVector fab = g.factor(wa, wb);
            BitVector wab = wa ^ wb;
            for (unsigned c = 0; c < (1u << m); ++c) {
                BitVector wc = bits_of(c, m);
                BitVector lhs = fab ^ g.factor(wab, wc);
                BitVector rhs = g.factor(wb, wc) ^ g.factor(wa, wb ^ wc);
                if (!(lhs == rhs)) {
                    rep.associative = false;
                    witness("associativity fails on w-triple (" + std::to_string(a) +
                            "," + std::to_string(b) + "," + std::to_string(c) + ")");
                    break;
                }
            }
        }

    rep.squares_match = true;
    rep.v_central = true;
    for (unsigned a = 0; a < (1u << m); ++a) {
        BitVector w = bits_of(a, m);
        if (!(g.factor(w, w) == q.eval(w))) {
            rep.squares_match = false;
            witness("square of (0, w=" + std::to_string(a) + ") is not (Q(w), 0)");
            break;
        }
    }
    {
        BitVector zero(static_cast<std::size_t>(m));
        for (unsigned a = 0; a < (1u << m); ++a) {
            BitVector w = bits_of(a, m);
            if (g.factor(zero, w).any() || g.factor(w, zero).any()) {
                rep.v_central = false;
                witness("V is not central against w=" + std::to_string(a));
                break;
            }
        }
    }

    rep.commutators_match = true;
    for (unsigned a = 0; a < (1u << m) && rep.commutators_match; ++a)
        for (unsigned b = 0; b < (1u << m); ++b) {
            BitVector wa = bits_of(a, m), wb = bits_of(b, m);
            BitVector comm = g.factor(wa, wb) ^ g.factor(wb, wa);
            if (!(comm == q.bilinear(wa, wb))) {
                rep.commutators_match = false;
                witness("commutator of w-pair (" + std::to_string(a) + "," +
                        std::to_string(b) + ") is not (B(w,w'), 0)");
                break;
            }
        }

    rep.quotient_elementary = true;
    for (unsigned a = 0; a < g.order(); ++a)
        if (g.w_part(g.mul(a, a)).any()) {
            rep.quotient_elementary = false;
            witness("square of element " + std::to_string(a) + " is outside V");
            break;
        }
    return rep;
}

std::vector<unsigned> center(const FiniteTwoGroup& g) {
    int m = g.m();
    std::vector<unsigned> central_w;
    for (unsigned a = 0; a < (1u << m); ++a) {
        BitVector wa = bits_of(a, m);
        bool ok = true;
        for (unsigned b = 0; b < (1u << m) && ok; ++b) {
            BitVector wb = bits_of(b, m);
            ok = (g.factor(wa, wb) == g.factor(wb, wa));
        }
        if (ok) central_w.push_back(a);
    }
    std::vector<unsigned> out;
    for (unsigned a : central_w)
        for (unsigned v = 0; v < (1u << g.n()); ++v)
            out.push_back(v | (a << g.n()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BitVector> frattini_basis(const FiniteTwoGroup& g) {
    int m = g.m();
    std::vector<BitVector> rows;
    std::vector<std::size_t> pivots;
    auto insert = [&](BitVector v) {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (v.get(pivots[i])) v ^= rows[i];
        if (!v.any()) return;
        pivots.push_back(static_cast<std::size_t>(v.lowest_set()));
        rows.push_back(std::move(v));
    };
    for (unsigned a = 0; a < (1u << m); ++a) {
        BitVector wa = bits_of(a, m);
        insert(g.factor(wa, wa));  // square of any lift of wa
        for (unsigned b = 0; b < (1u << m); ++b) {
            BitVector wb = bits_of(b, m);
            insert(g.factor(wa, wb) ^ g.factor(wb, wa));
        }
    }
    return rows;
}

namespace {

void two_rank_search(const FiniteTwoGroup& g, const std::vector<unsigned>& involutions,
                     std::vector<unsigned>& subgroup, std::size_t next, int rank,
                     int& best) {
    if (rank > best) best = rank;
    for (std::size_t i = next; i < involutions.size(); ++i) {
        unsigned c = involutions[i];
        if (std::find(subgroup.begin(), subgroup.end(), c) != subgroup.end()) continue;
        bool ok = true;
        for (unsigned s : subgroup)
            if (g.mul(s, c) != g.mul(c, s)) { ok = false; break; }
        if (!ok) continue;
        std::size_t old = subgroup.size();
        for (std::size_t j = 0; j < old; ++j) subgroup.push_back(g.mul(subgroup[j], c));
        two_rank_search(g, involutions, subgroup, i + 1, rank + 1, best);
        subgroup.resize(old);
    }
}

}  // namespace

int two_rank(const FiniteTwoGroup& g) {
    if (g.m() + g.n() > 16) throw CapExceeded("two_rank: order > 2^16");
    std::vector<unsigned> involutions;
    for (unsigned a = 1; a < g.order(); ++a)
        if (g.mul(a, a) == g.identity()) involutions.push_back(a);
    std::vector<unsigned> subgroup{g.identity()};
    int best = 0;
    two_rank_search(g, involutions, subgroup, 0, 0, best);
    return best;
}

GroupHom realize_morphism(const QuadMorphism& phi, const QuadraticMap& q1,
                          const QuadraticMap& q2) {
    if (!verify_morphism(phi, q1, q2))
        throw std::invalid_argument("realize_morphism: not a morphism");
    int m1 = q1.dim_w(), n2 = q2.dim_v();
    if (m1 > 10) throw CapExceeded("realize_morphism: m > 10");
    FiniteTwoGroup g1 = FiniteTwoGroup::build(q1);
    FiniteTwoGroup g2 = FiniteTwoGroup::build(q2);

    // Unknowns: t(w) in V2 for w != 0 (t(0) = 0), flattened as (w-1)*n2 + bit.
    std::size_t nw = (std::size_t{1} << m1) - 1;
    std::size_t nunk = nw * static_cast<std::size_t>(n2);
    auto var = [&](unsigned w, int b) {
        return (static_cast<std::size_t>(w) - 1) * n2 + static_cast<std::size_t>(b);
    };
    BitMatrix a((nw + 1) * (nw + 1) * static_cast<std::size_t>(n2), nunk);
    BitVector b(a.rows());
    std::size_t r = 0;
    for (unsigned wi = 0; wi <= nw; ++wi)
        for (unsigned wj = 0; wj <= nw; ++wj) {
            BitVector w = bits_of(wi, m1), w2 = bits_of(wj, m1);
            unsigned ws = wi ^ wj;
            BitVector target = phi.f_v.mul(g1.factor(w, w2)) ^
                               g2.factor(phi.f_w.mul(w), phi.f_w.mul(w2));
            for (int bb = 0; bb < n2; ++bb, ++r) {
                // coinciding indices must cancel (t(w)+t(w) = 0), so xor
                if (wi) a.row(r).flip(var(wi, bb));
                if (wj) a.row(r).flip(var(wj, bb));
                if (ws) a.row(r).flip(var(ws, bb));
                if (target.get(static_cast<std::size_t>(bb))) b.set(r);
            }
        }
    auto sol = solve_linear(a, b);
    if (!sol) throw std::logic_error("realize_morphism: inconsistent system");

    GroupHom hom;
    hom.t.resize(nw + 1);
    hom.t[0] = BitVector(static_cast<std::size_t>(n2));
    for (unsigned w = 1; w <= nw; ++w) {
        BitVector t(static_cast<std::size_t>(n2));
        for (int bb = 0; bb < n2; ++bb)
            if (sol->particular.get(var(w, bb))) t.set(static_cast<std::size_t>(bb));
        hom.t[w] = std::move(t);
    }
    hom.table.resize(g1.order());
    for (unsigned g = 0; g < g1.order(); ++g) {
        BitVector w = g1.w_part(g);
        unsigned wi = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w.get(i)) wi |= 1u << i;
        BitVector v2 = phi.f_v.mul(g1.v_part(g)) ^ hom.t[wi];
        hom.table[g] = g2.encode(v2, phi.f_w.mul(w));
    }
    return hom;
}

bool is_homomorphism(const FiniteTwoGroup& g1, const FiniteTwoGroup& g2,
                     const std::vector<unsigned>& table) {
    if (table.size() != g1.order()) return false;
    if (g1.order() * g1.order() > (std::size_t{1} << 20))
        throw CapExceeded("is_homomorphism: |G|^2 > 2^20");
    for (unsigned a = 0; a < g1.order(); ++a)
        for (unsigned b = 0; b < g1.order(); ++b)
            if (table[g1.mul(a, b)] != g2.mul(table[a], table[b])) return false;
    return true;
}

Z4Matrix LatticeM::action(const BitVector& w) const {
    BitMatrix lw = l.eval(w);
    Z4Matrix out(static_cast<std::size_t>(n),
                 std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        for (int j = 0; j < n; ++j)
            if (lw.get(static_cast<std::size_t>(i), static_cast<std::size_t>(j)))
                out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    static_cast<std::uint8_t>(
                        (out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] + 2) % 4);
    }
    return out;
}

bool LatticeM::multiplicative() const {
    int m = l.nvars;
    if (m > 12) throw CapExceeded("lattice_M: m > 12");
    for (unsigned a = 0; a < (1u << m); ++a)
        for (unsigned b = 0; b < (1u << m); ++b) {
            BitVector w = bits_of(a, m), w2 = bits_of(b, m);
            Z4Matrix x = action(w), y = action(w2), expect = action(w ^ w2);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    unsigned s = 0;
                    for (int k = 0; k < n; ++k)
                        s += x[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                             y[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                    if (s % 4 != expect[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                        return false;
                }
        }
    return true;
}

LatticeM lattice_m(const PolyMatrix& l) {
    if (l.rows != l.cols) throw std::invalid_argument("lattice_M: L must be square");
    return LatticeM{l.rows, l};
}

std::string multiplication_table_text(const FiniteTwoGroup& g) {
    if (g.order() > 256) throw CapExceeded("multiplication table: order > 2^8");
    std::ostringstream os;
    for (unsigned a = 0; a < g.order(); ++a)
        for (unsigned b = 0; b < g.order(); ++b)
            os << a << ' ' << b << ' ' << g.mul(a, b) << '\n';
    return os.str();
}

}  // namespace qmap
