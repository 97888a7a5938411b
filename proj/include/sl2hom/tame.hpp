#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sl2hom/rational.hpp"

namespace sl2hom {

/// Formal product of Steinberg symbols {a_i, b_i} in K_2(Q). Entries are nonzero.
class SymbolProduct {
 public:
  SymbolProduct() = default;
  SymbolProduct(std::initializer_list<std::pair<Rational, Rational>> symbols);

  /// Appends {a, b}; throws DomainError if either entry is zero.
  SymbolProduct& add(const Rational& a, const Rational& b);

  const std::vector<std::pair<Rational, Rational>>& symbols() const { return symbols_; }

 private:
  std::vector<std::pair<Rational, Rational>> symbols_;
};

/// Tame symbol at an odd prime p, as an integer in [1, p-1]:
///   {a, b} -> (-1)^(v(a) v(b)) * b^v(a) / a^v(b)  mod p,
/// multiplied over the product. Throws DomainError for p = 2 or composite p.
Int tame_symbol(Int p, const SymbolProduct& s);

/// Componentwise tame symbols at distinct odd primes.
std::vector<Int> delta_tuple(std::span<const Int> primes, const SymbolProduct& s);

/// Smallest b in [2, p-1] with tame_symbol(p, {p, b}) generating F_p^x.
Int surjectivity_witness(Int p);

}  // namespace sl2hom
