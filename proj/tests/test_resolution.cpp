#include "doctest.h"
#include "qmap/errors.hpp"
#include "qmap/resolution.hpp"

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

}  // namespace

TEST_CASE("Z/4: Betti numbers 1,1,1,1,1") {
    FiniteTwoGroup g = FiniteTwoGroup::build(diagonal_map(1));
    CHECK(betti_numbers(g, 4) == std::vector<int>{1, 1, 1, 1, 1});
}

TEST_CASE("(Z/2)^2: Betti numbers 1,2,3,4,5") {
    // Zero map with no V part: the group is elementary abelian of rank 2.
    FiniteTwoGroup g = FiniteTwoGroup::build(QuadraticMap::zero(2, 0));
    CHECK(betti_numbers(g, 4) == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("Z/2: Betti numbers all 1") {
    FiniteTwoGroup g = FiniteTwoGroup::build(QuadraticMap::zero(1, 0));
    CHECK(betti_numbers(g, 4) == std::vector<int>{1, 1, 1, 1, 1});
}

TEST_CASE("(Z/4)^2: Betti numbers 1,2,3,4") {
    FiniteTwoGroup g = FiniteTwoGroup::build(diagonal_map(2));
    CHECK(betti_numbers(g, 3) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("G(u3): Betti numbers 1,3,6,10") {
    FiniteTwoGroup g = FiniteTwoGroup::build(family(Family::u, 3));
    CHECK(betti_numbers(g, 3) == std::vector<int>{1, 3, 6, 10});
}

TEST_CASE("b_1 equals the minimal generator count m for Frattini-exact maps") {
    for (int n = 1; n <= 2; ++n) {
        FiniteTwoGroup g = FiniteTwoGroup::build(diagonal_map(n));
        CHECK(betti_numbers(g, 1)[1] == n);
    }
    FiniteTwoGroup g = FiniteTwoGroup::build(family(Family::u, 3));
    CHECK(betti_numbers(g, 1)[1] == 3);
}

TEST_CASE("poincare_check matches on the corpus") {
    auto z4 = poincare_check(diagonal_map(1), 4);
    CHECK(z4.match);
    CHECK(z4.predicted == std::vector<int>{1, 1, 1, 1, 1});

    auto z4sq = poincare_check(diagonal_map(2), 3);
    CHECK(z4sq.match);
    CHECK(z4sq.predicted == std::vector<int>{1, 2, 3, 4});

    auto u3 = poincare_check(family(Family::u, 3), 3);
    CHECK(u3.match);
    CHECK(u3.predicted == std::vector<int>{1, 3, 6, 10});
}

TEST_CASE("caps are enforced") {
    FiniteTwoGroup g = FiniteTwoGroup::build(QuadraticMap::zero(7, 0));
    CHECK_THROWS_AS(betti_numbers(g, 3), CapExceeded);
    FiniteTwoGroup small = FiniteTwoGroup::build(diagonal_map(1));
    CHECK_THROWS_AS(betti_numbers(small, 9), CapExceeded);
}
