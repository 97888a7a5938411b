#include "sl2hom/tame.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

#include "sl2hom/arith.hpp"
#include "sl2hom/error.hpp"

namespace sl2hom {

namespace {

void require_odd_prime(Int p) {
  if (p == 2) throw DomainError("tame symbol at 2 is not supported (residue field F_2 has trivial units)");
  if (!is_prime(p)) throw DomainError("tame symbol needs an odd prime, got " + std::to_string(p));
}

// Residue of q / p^v(q) modulo p; always a unit.
Int unit_residue(Int p, const Rational& q, int v) {
  Int num = q.num(), den = q.den();
  for (int i = 0; i < v; ++i) num /= p;
  for (int i = 0; i > v; --i) den /= p;
  return mod(mod(num, p) * inverse_mod(den, p), p);
}

}  // namespace

SymbolProduct::SymbolProduct(std::initializer_list<std::pair<Rational, Rational>> symbols) {
  for (const auto& [a, b] : symbols) add(a, b);
}

SymbolProduct& SymbolProduct::add(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("Steinberg symbol entries must be nonzero");
  symbols_.emplace_back(a, b);
  return *this;
}

Int tame_symbol(Int p, const SymbolProduct& s) {
  require_odd_prime(p);
  Int result = 1;
  for (const auto& [a, b] : s.symbols()) {
    const int va = valuation(p, a);
    const int vb = valuation(p, b);
    // b^va / a^vb = ub^va / ua^vb: the powers of p cancel exactly
    const Int ua = unit_residue(p, a, va);
    const Int ub = unit_residue(p, b, vb);
    Int value = pow_mod(ub, va, p) * pow_mod(ua, -static_cast<Int>(vb), p) % p;
    if ((static_cast<Int>(va) * vb) % 2 != 0) value = mod(-value, p);
    result = result * value % p;
  }
  assert(result >= 1 && result < p);
  return result;
}

std::vector<Int> delta_tuple(std::span<const Int> primes, const SymbolProduct& s) {
  if (std::set<Int>(primes.begin(), primes.end()).size() != primes.size())
    throw DomainError("delta_tuple: primes must be distinct");
  std::vector<Int> out;
  out.reserve(primes.size());
  for (Int p : primes) out.push_back(tame_symbol(p, s));
  return out;
}

Int surjectivity_witness(Int p) {
  require_odd_prime(p);
  for (Int b = 2; b < p; ++b) {
    if (multiplicative_order(tame_symbol(p, {{Rational(p), Rational(b)}}), p) == p - 1) return b;
  }
  throw DomainError("no witness found for p = " + std::to_string(p));
}

}  // namespace sl2hom
