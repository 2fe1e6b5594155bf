#include "qmap/json_io.hpp"

#include <stdexcept>

namespace qmap {

namespace {

BitVector bits_from_json(const Json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw std::invalid_argument("bit vector has the wrong length");
    BitVector v(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        int b = j[static_cast<std::size_t>(i)].get<int>();
        if (b != 0 && b != 1) throw std::invalid_argument("bits must be 0 or 1");
        if (b) v.set(static_cast<std::size_t>(i));
    }
    return v;
}

QuadraticMap from_tables(const Json& j, int m, int n) {
    std::vector<BitVector> q_basis;
    const Json& qj = j.at("Q");
    if (!qj.is_array() || static_cast<int>(qj.size()) != m)
        throw std::invalid_argument("Q needs one row per basis vector");
    for (int i = 0; i < m; ++i) q_basis.push_back(bits_from_json(qj[static_cast<std::size_t>(i)], n));

    std::vector<std::vector<BitVector>> b(
        static_cast<std::size_t>(m),
        std::vector<BitVector>(static_cast<std::size_t>(m), BitVector(static_cast<std::size_t>(n))));
    if (j.contains("B")) {
        for (const Json& e : j.at("B")) {
            int i = e.at("i").get<int>(), jj = e.at("j").get<int>();
            if (i < 1 || jj <= i || jj > m)
                throw std::invalid_argument("B entries need 1 <= i < j <= m");
            b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(jj - 1)] =
                bits_from_json(e.at("v"), n);
        }
    }
    return QuadraticMap(m, n, std::move(q_basis), std::move(b));
}

}  // namespace

QuadraticMap quadmap_from_json(const Json& j) {
    int m = j.at("m").get<int>(), n = j.at("n").get<int>();
    if (m < 0 || n < 0 || m > 64 || n > 64)
        throw std::invalid_argument("unreasonable dimensions");
    bool has_tables = j.contains("Q");
    bool has_polys = j.contains("q_polys");
    if (!has_tables && !has_polys)
        throw std::invalid_argument("need Q/B tables or q_polys");

    std::optional<QuadraticMap> from_t, from_p;
    if (has_tables) from_t = from_tables(j, m, n);
    if (has_polys) {
        const Json& pj = j.at("q_polys");
        if (!pj.is_array() || static_cast<int>(pj.size()) != n)
            throw std::invalid_argument("q_polys needs one entry per output");
        std::vector<Poly> polys;
        for (const Json& s : pj) polys.push_back(parse_poly(s.get<std::string>(), m));
        from_p = QuadraticMap::from_polys(polys, m);
    }
    if (from_t && from_p && !(*from_t == *from_p))
        throw std::invalid_argument("Q/B tables and q_polys disagree");
    return from_t ? *from_t : *from_p;
}

QuadraticMap quadmap_from_json_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("bad JSON: ") + e.what());
    }
    return quadmap_from_json(j);
}

Json bitvector_to_json(const BitVector& v) {
    Json a = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i) a.push_back(v.get(i) ? 1 : 0);
    return a;
}

Json bitmatrix_to_json(const BitMatrix& m) {
    Json a = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(bitvector_to_json(m.row(r)));
    return a;
}

Json polymatrix_to_json(const PolyMatrix& m) {
    Json a = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c).str());
        a.push_back(std::move(row));
    }
    return a;
}

Json quadmap_to_json(const QuadraticMap& q) {
    Json j;
    j["m"] = q.dim_w();
    j["n"] = q.dim_v();
    Json qrows = Json::array();
    for (int i = 0; i < q.dim_w(); ++i) qrows.push_back(bitvector_to_json(q.value_on_basis(i)));
    j["Q"] = std::move(qrows);
    Json bs = Json::array();
    for (int i = 0; i < q.dim_w(); ++i)
        for (int jj = i + 1; jj < q.dim_w(); ++jj) {
            const BitVector& v = q.bilinear_on_basis(i, jj);
            if (!v.any()) continue;
            Json e;
            e["i"] = i + 1;
            e["j"] = jj + 1;
            e["v"] = bitvector_to_json(v);
            bs.push_back(std::move(e));
        }
    j["B"] = std::move(bs);
    Json polys = Json::array();
    for (auto& p : q.extension_class()) polys.push_back(p.str());
    j["q_polys"] = std::move(polys);
    return j;
}

}  // namespace qmap
