#pragma once

#include <string>

#include "json.hpp"
#include "qmap/poly.hpp"
#include "qmap/quadmap.hpp"

namespace qmap {

using Json = nlohmann::ordered_json;

/// Accepts {"m","n","Q":[[bit..] x m],"B":[{"i","j","v":[bit..]}..]} with
/// 1-based i < j, or {"m","n","q_polys":[string..]}; when both forms appear
/// they must describe the same map. Throws std::invalid_argument on bad input.
QuadraticMap quadmap_from_json(const Json& j);
QuadraticMap quadmap_from_json_text(const std::string& text);

Json quadmap_to_json(const QuadraticMap& q);

Json bitvector_to_json(const BitVector& v);
Json bitmatrix_to_json(const BitMatrix& m);
Json polymatrix_to_json(const PolyMatrix& m);  // matrix of poly strings

}  // namespace qmap
