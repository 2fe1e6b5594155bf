#include <map>
#include <random>

#include "doctest.h"
#include "qmap/spectral.hpp"

using namespace qmap;

namespace {

QuadraticMap diagonal_map(int n) {
    std::vector<Poly> polys;
    for (int i = 0; i < n; ++i) {
        Poly x = Poly::variable(n, i);
        polys.push_back(x * x);
    }
    return QuadraticMap::from_polys(polys, n);
}

PolyMatrix zero_l(int n, int m) { return PolyMatrix(n, n, m); }

using Key = std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>;

std::map<Key, int> basis_index(const B1Page& page, int s) {
    std::map<Key, int> idx;
    const auto& basis = page.basis(s);
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        idx[{basis[static_cast<std::size_t>(i)].s_part.exp,
             basis[static_cast<std::size_t>(i)].a_part.exp}] = i;
    return idx;
}

/// Coordinates of (basis elem at (sa, ia)) * (basis elem at (sb, ib)).
BitVector product_coords(const B1Page& page, int sa, int ia, int sb, int ib) {
    const auto& a = page.basis(sa)[static_cast<std::size_t>(ia)];
    const auto& b = page.basis(sb)[static_cast<std::size_t>(ib)];
    int s = sa + sb;
    auto idx = basis_index(page, s);
    BitVector out(static_cast<std::size_t>(page.dim(s)));
    Monomial sp = a.s_part.times(b.s_part);
    int m = page.algebra().nvars();
    Poly prod = page.algebra().normal_form(Poly::from_monomial(m, a.a_part) *
                                           Poly::from_monomial(m, b.a_part));
    for (auto& t : prod.terms())
        out.flip(static_cast<std::size_t>(idx.at({sp.exp, t.exp})));
    return out;
}

}  // namespace

TEST_CASE("Z/4: B1 dims all 1, beta = 0, B2 all 1, all degrees flagged") {
    QuadraticMap seed = diagonal_map(1);
    B1Page page(seed, zero_l(1, 1), {}, 10);
    for (int s = 0; s <= 10; ++s) CHECK(page.dim(s) == 1);
    for (int s = 0; s < 10; ++s)
        for (std::size_t r = 0; r < page.beta_matrix(s).rows(); ++r)
            CHECK_FALSE(page.beta_matrix(s).row(r).any());
    BPage b2 = b2_direct(page);
    for (int s = 0; s < 10; ++s) CHECK(b2.dims[static_cast<std::size_t>(s)] == 1);
    auto flagged = torsion_report(b2);
    CHECK(flagged.size() == 9);  // degrees 1..9
}

TEST_CASE("(Z/4)^2: B1 dims 1,2,3,4,... and cross-method agreement") {
    QuadraticMap q = diagonal_map(2);
    B1Page page(q, zero_l(2, 2), {}, 9);
    for (int s = 0; s <= 9; ++s) CHECK(page.dim(s) == s + 1);
    BPage direct = b2_direct(page);
    BPage decomp = b2_decomposition(q, zero_l(2, 2), 9);
    CHECK(direct.dims == decomp.dims);
    CHECK(torsion_report(direct) == torsion_report(decomp));
}

TEST_CASE("u3 model: B1 dims are coefficients of 1/(1-t)^3") {
    QuadraticMap q = family(Family::u, 3);
    PolyMatrix l = solve_l(q)->particular;
    B1Page page(q, l, {}, 8);
    for (int s = 0; s <= 8; ++s) CHECK(page.dim(s) == (s + 1) * (s + 2) / 2);
}

TEST_CASE("cross-method B2 for the corpus, degree 8") {
    QuadraticMap u3 = family(Family::u, 3);
    PolyMatrix l3 = solve_l(u3)->particular;
    struct Case {
        QuadraticMap q;
        PolyMatrix l;
    };
    std::vector<Case> cases;
    for (int n = 1; n <= 3; ++n) cases.push_back({diagonal_map(n), zero_l(n, n)});
    cases.push_back({u3, l3});
    for (auto& c : cases) {
        B1Page page(c.q, c.l, {}, 8);
        BPage direct = b2_direct(page);
        BPage decomp = b2_decomposition(c.q, c.l, 8);
        CHECK(direct.dims == decomp.dims);
        CHECK(direct.dims[0] == 1);
        for (int s = 0; s < 8; ++s)
            CHECK(direct.dims[static_cast<std::size_t>(s)] <= page.dim(s));
    }
}

TEST_CASE("beta on the B1 model is a derivation") {
    QuadraticMap q = family(Family::u, 3);
    PolyMatrix l = solve_l(q)->particular;
    B1Page page(q, l, {}, 7);
    std::mt19937 rng(121);
    for (int trial = 0; trial < 300; ++trial) {
        int sa = static_cast<int>(rng() % 4), sb = static_cast<int>(rng() % 3);
        if (page.dim(sa) == 0 || page.dim(sb) == 0) continue;
        int ia = static_cast<int>(rng() % static_cast<unsigned>(page.dim(sa)));
        int ib = static_cast<int>(rng() % static_cast<unsigned>(page.dim(sb)));
        int s = sa + sb;
        BitVector prod = product_coords(page, sa, ia, sb, ib);
        BitVector lhs = page.beta_matrix(s).mul(prod);

        BitVector rhs(static_cast<std::size_t>(page.dim(s + 1)));
        BitVector ba = page.beta_of(sa, ia);
        for (std::size_t t = 0; t < ba.size(); ++t)
            if (ba.get(t)) rhs ^= product_coords(page, sa + 1, static_cast<int>(t), sb, ib);
        BitVector bb = page.beta_of(sb, ib);
        for (std::size_t t = 0; t < bb.size(); ++t)
            if (bb.get(t)) rhs ^= product_coords(page, sa, ia, sb + 1, static_cast<int>(t));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("consistent nonzero eta shifts away: same B2 as eta = 0") {
    QuadraticMap q = family(Family::u, 3);
    PolyMatrix l = solve_l(q)->particular;
    auto mod = module_from_l(q, l);
    REQUIRE(mod.has_value());
    QuotientAlgebra a(q.extension_class(), 3, 6);
    CochainComplex cx(q, *mod, a);
    std::mt19937 rng(131);
    BitVector v(static_cast<std::size_t>(cx.cochain_dim(2)));
    for (std::size_t i = 0; i < v.size(); ++i)
        if (rng() & 1) v.set(i);
    Cochain eta = cx.differential(cx.from_coords(2, v));
    REQUIRE(cx.is_cocycle(eta));

    B1Page with_eta(q, l, eta.entries, 7);
    B1Page without(q, l, {}, 7);
    CHECK(b2_direct(with_eta).dims == b2_direct(without).dims);
}

TEST_CASE("inconsistent eta is rejected") {
    // Over u3 the quotient dies in degree 4, so every eta is consistent there.
    // The zero map on two variables keeps the full polynomial ring, where
    // delta_L eta can be nonzero: with L = (x1), eta = x1^2 x2 gives
    // beta(eta) + x1 eta = x1^2 x2^2 + x1^3 x2 != 0.
    QuadraticMap q = QuadraticMap::zero(2, 1);
    PolyMatrix l(1, 1, 2);
    l.at(0, 0) = parse_poly("x1", 2);
    auto mod = module_from_l(q, l);
    REQUIRE(mod.has_value());
    CHECK_NOTHROW(B1Page(q, l, {}, 7));
    std::vector<Poly> eta{parse_poly("x1^2*x2", 2)};
    CHECK_THROWS_AS(B1Page(q, l, eta, 7), std::invalid_argument);
}
