#include <random>

#include "doctest.h"
#include "qmap/bockstein.hpp"
#include "qmap/json_io.hpp"

using namespace qmap;

TEST_CASE("round trip through JSON, both encodings cross-validated") {
    std::mt19937 rng(301);
    for (int trial = 0; trial < 100; ++trial) {
        int m = 1 + static_cast<int>(rng() % 4), n = 1 + static_cast<int>(rng() % 4);
        std::vector<BitVector> values;
        for (int i = 0; i < m; ++i) {
            BitVector v(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j)
                if (rng() & 1) v.set(static_cast<std::size_t>(j));
            values.push_back(std::move(v));
        }
        std::vector<std::vector<BitVector>> b(
            static_cast<std::size_t>(m),
            std::vector<BitVector>(static_cast<std::size_t>(m), BitVector(static_cast<std::size_t>(n))));
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int k = 0; k < n; ++k)
                    if (rng() & 1) b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                        .set(static_cast<std::size_t>(k));
        QuadraticMap q(m, n, std::move(values), std::move(b));
        Json j = quadmap_to_json(q);
        // to_json emits both the tables and q_polys; the loader cross-checks.
        CHECK(quadmap_from_json(j) == q);
        CHECK(quadmap_from_json_text(j.dump()) == q);
    }
}

TEST_CASE("poly-only and table-only forms load") {
    QuadraticMap u3 = family(Family::u, 3);
    Json full = quadmap_to_json(u3);
    Json polys_only{{"m", 3}, {"n", 3}, {"q_polys", full["q_polys"]}};
    CHECK(quadmap_from_json(polys_only) == u3);
    Json tables_only = full;
    tables_only.erase("q_polys");
    CHECK(quadmap_from_json(tables_only) == u3);
}

TEST_CASE("disagreeing forms are rejected") {
    Json j{{"m", 1},
           {"n", 1},
           {"Q", Json::array({Json::array({1})})},
           {"q_polys", Json::array({"0"})}};
    CHECK_THROWS_AS(quadmap_from_json(j), std::invalid_argument);
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(quadmap_from_json_text("not json"), std::invalid_argument);
    CHECK_THROWS_AS(quadmap_from_json(Json{{"m", 2}, {"n", 1}}), std::invalid_argument);
    Json bad_bits{{"m", 1}, {"n", 1}, {"Q", Json::array({Json::array({2})})}};
    CHECK_THROWS_AS(quadmap_from_json(bad_bits), std::invalid_argument);
    Json bad_b{{"m", 2},
               {"n", 1},
               {"Q", Json::array({Json::array({1}), Json::array({1})})},
               {"B", Json::array({Json{{"i", 2}, {"j", 1}, {"v", Json::array({1})}}})}};
    CHECK_THROWS_AS(quadmap_from_json(bad_b), std::invalid_argument);
}

TEST_CASE("serialization is deterministic") {
    QuadraticMap u3 = family(Family::u, 3);
    CHECK(quadmap_to_json(u3).dump(2) == quadmap_to_json(u3).dump(2));
    CHECK(polymatrix_to_json(solve_l(u3)->particular).dump() ==
          polymatrix_to_json(solve_l(u3)->particular).dump());
}
