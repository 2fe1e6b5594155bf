#include <random>

#include "doctest.h"
#include "qmap/bockstein.hpp"

using namespace qmap;

namespace {

BitVector bits(unsigned x, int dim) {
    BitVector v(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i)
        if ((x >> i) & 1u) v.set(static_cast<std::size_t>(i));
    return v;
}

QuadraticMap random_map(std::mt19937& rng, int m, int n) {
    std::vector<BitVector> values;
    for (int i = 0; i < m; ++i) values.push_back(bits(rng(), n));
    std::vector<std::vector<BitVector>> b(
        static_cast<std::size_t>(m),
        std::vector<BitVector>(static_cast<std::size_t>(m), BitVector(static_cast<std::size_t>(n))));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) b[i][j] = bits(rng(), n);
    return QuadraticMap(m, n, std::move(values), std::move(b));
}

bool l_equation_holds(const QuadraticMap& qm, const PolyMatrix& l) {
    auto q = qm.extension_class();
    std::vector<Poly> lq = l.apply(q);
    for (int i = 0; i < qm.dim_v(); ++i)
        if (bockstein(q[static_cast<std::size_t>(i)]) != lq[static_cast<std::size_t>(i)])
            return false;
    return true;
}

}  // namespace

TEST_CASE("u3: unique L with row 2 = (x3, 0, x1)") {
    QuadraticMap q = family(Family::u, 3);
    auto sol = solve_l(q);
    REQUIRE(sol.has_value());
    CHECK(sol->unique());
    const PolyMatrix& l = sol->particular;
    CHECK(l.at(1, 0) == parse_poly("x3", 3));
    CHECK(l.at(1, 1).is_zero());
    CHECK(l.at(1, 2) == parse_poly("x1", 3));
    for (int j = 0; j < 3; ++j) {
        CHECK(l.at(0, j).is_zero());
        CHECK(l.at(2, j).is_zero());
    }
    CHECK(l_equation_holds(q, l));
}

TEST_CASE("diagonal family: L = 0, unique") {
    for (int n = 1; n <= 3; ++n) {
        std::vector<Poly> polys;
        for (int i = 0; i < n; ++i) {
            Poly x = Poly::variable(n, i);
            polys.push_back(x * x);
        }
        auto sol = solve_l(QuadraticMap::from_polys(polys, n));
        REQUIRE(sol.has_value());
        CHECK(sol->unique());
        CHECK(sol->particular.is_zero());
    }
}

TEST_CASE("q = x1*x2 + x3^2 is not Bockstein closed, both characterizations") {
    QuadraticMap q = QuadraticMap::from_polys({parse_poly("x1*x2 + x3^2", 3)}, 3);
    CHECK_FALSE(solve_l(q).has_value());
    CHECK_FALSE(check_p(q).has_value());
}

TEST_CASE("kernel members of solve_l annihilate q") {
    std::mt19937 rng(31);
    int closed = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int m = 1 + static_cast<int>(rng() % 3), n = 1 + static_cast<int>(rng() % 3);
        QuadraticMap qm = random_map(rng, m, n);
        auto sol = solve_l(qm);
        if (!sol) continue;
        ++closed;
        CHECK(l_equation_holds(qm, sol->particular));
        auto q = qm.extension_class();
        for (auto& k : sol->kernel) {
            for (auto& e : k.apply(q)) CHECK(e.is_zero());
            // particular + kernel member is another solution
            CHECK(l_equation_holds(qm, sol->particular + k));
        }
    }
    CHECK(closed > 10);
}

TEST_CASE("check_p and solve_l agree on random maps") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 1 + static_cast<int>(rng() % 3), n = 1 + static_cast<int>(rng() % 3);
        QuadraticMap qm = random_map(rng, m, n);
        CHECK(check_p(qm).has_value() == solve_l(qm).has_value());
    }
}

TEST_CASE("check_p witnesses satisfy equation (1) pointwise") {
    QuadraticMap q = family(Family::u, 3);
    auto p = check_p(q);
    REQUIRE(p.has_value());
    auto apply_p = [&](const BitVector& v, const BitVector& w) {
        BitVector out(3);
        for (int a = 0; a < 3; ++a) {
            bool s = false;
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c)
                    if ((*p)[static_cast<std::size_t>(a)].get(static_cast<std::size_t>(b),
                                                              static_cast<std::size_t>(c)))
                        s ^= v.get(static_cast<std::size_t>(b)) &&
                             w.get(static_cast<std::size_t>(c));
            if (s) out.set(static_cast<std::size_t>(a));
        }
        return out;
    };
    for (unsigned a = 0; a < 8; ++a)
        for (unsigned b = 0; b < 8; ++b) {
            BitVector w = bits(a, 3), w2 = bits(b, 3);
            BitVector lhs = apply_p(q.eval(w), w2);
            BitVector rhs = q.bilinear(w, w2) ^ apply_p(q.bilinear(w, w2), w);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("module_from_l on u3: representation condition and T values") {
    QuadraticMap q = family(Family::u, 3);
    auto l = solve_l(q);
    REQUIRE(l.has_value());
    auto mod = module_from_l(q, l->particular);
    REQUIRE(mod.has_value());
    CHECK(check_representation(*mod, q));
    // beta(L) + L^2 has row 2 = (x3^2, 0, x1^2) = q3*E21-part + q1*E23-part.
    CHECK(mod->T[0].get(1, 2));
    CHECK(mod->T[2].get(1, 0));
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            CHECK_FALSE(mod->T[1].get(r, c));
            if (!(r == 1 && c == 2)) CHECK_FALSE(mod->T[0].get(r, c));
            if (!(r == 1 && c == 0)) CHECK_FALSE(mod->T[2].get(r, c));
        }
}

TEST_CASE("trivial module passes the representation check") {
    QuadraticMap q = family(Family::u, 3);
    CHECK(check_representation(QModule::trivial(1, q), q));
    CHECK(check_representation(QModule::trivial(4, q), q));
}

TEST_CASE("adjoint dictionary Z <-> T") {
    QuadraticMap q = family(Family::u, 3);
    auto mod = module_from_l(q, solve_l(q)->particular);
    REQUIRE(mod.has_value());
    PolyMatrix z = t_to_z(mod->T, mod->k);
    CHECK(z_to_t(z, q.dim_v()) == mod->T);
    CHECK(adjoint_identity_holds(z, mod->T, q));

    std::mt19937 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        int k = 1 + static_cast<int>(rng() % 3), n = 1 + static_cast<int>(rng() % 3);
        std::vector<BitMatrix> t;
        for (int j = 0; j < n; ++j) {
            BitMatrix mj(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
            for (std::size_t r = 0; r < static_cast<std::size_t>(k); ++r)
                for (std::size_t c = 0; c < static_cast<std::size_t>(k); ++c)
                    if (rng() & 1) mj.set(r, c);
            t.push_back(std::move(mj));
        }
        CHECK(z_to_t(t_to_z(t, k), n) == t);
    }
}

TEST_CASE("completed random modules satisfy the representation condition") {
    std::mt19937 rng(47);
    QuadraticMap q = family(Family::u, 3);
    int completed = 0;
    for (int trial = 0; trial < 200; ++trial) {
        PolyMatrix r(2, 2, 3);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Poly e(3);
                for (int v = 0; v < 3; ++v)
                    if (rng() & 1) e += Poly::variable(3, v);
                r.at(i, j) = std::move(e);
            }
        auto mod = complete_module(q, r);
        if (!mod) continue;
        ++completed;
        CHECK(check_representation(*mod, q));
    }
    CHECK(completed > 0);
}
