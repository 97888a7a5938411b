#include "sl2hom/serialize.hpp"

#include "sl2hom/error.hpp"

namespace sl2hom {

Json to_json(const FinGenAb& g) {
  Json j;
  j["free_rank"] = g.free_rank();
  j["invariant_factors"] = invariant_factors(g);
  return j;
}

FinGenAb group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("free_rank") || !j.contains("invariant_factors"))
    throw DomainError("group JSON must have free_rank and invariant_factors");
  const auto& rank = j.at("free_rank");
  const auto& factors = j.at("invariant_factors");
  if (!rank.is_number_integer() || rank.get<Int>() < 0)
    throw DomainError("free_rank must be a non-negative integer");
  if (!factors.is_array()) throw DomainError("invariant_factors must be an array");
  std::vector<Int> orders;
  for (const auto& d : factors) {
    if (!d.is_number_integer() || d.get<Int>() < 1)
      throw DomainError("invariant factors must be positive integers");
    orders.push_back(d.get<Int>());
  }
  return from_invariant_factors(orders, rank.get<int>());
}

}  // namespace sl2hom
