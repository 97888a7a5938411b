#pragma once

#include <json.hpp>

#include "sl2hom/abelian.hpp"

namespace sl2hom {

using Json = nlohmann::ordered_json;

/// {"free_rank": r, "invariant_factors": [d1, ...]} with d1 | d2 | ...
Json to_json(const FinGenAb& g);

/// Inverse of to_json. Rejects missing keys, negative rank and factors < 1.
FinGenAb group_from_json(const Json& j);

}  // namespace sl2hom
