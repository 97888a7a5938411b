#include "sl2hom/arith.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "sl2hom/error.hpp"

namespace sl2hom {

namespace {

using U64 = unsigned long long;
using U128 = unsigned __int128;

U64 mulmod_u(U64 a, U64 b, U64 m) { return static_cast<U64>(static_cast<U128>(a) * b % m); }

U64 powmod_u(U64 b, U64 e, U64 m) {
  U64 r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u(r, b, m);
    b = mulmod_u(b, b, m);
    e >>= 1;
  }
  return r;
}

void require_squarefree_level(Int n, const char* op) {
  if (n <= 1) throw DomainError(std::string(op) + ": n must be > 1, got " + std::to_string(n));
  if (!is_squarefree(n))
    throw DomainError(std::string(op) + ": n must be square-free, got " + std::to_string(n));
}

}  // namespace

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  U64 d = static_cast<U64>(n) - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve primes are a deterministic witness set for all 64-bit n.
  for (U64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    U64 x = powmod_u(a, d, static_cast<U64>(n));
    if (x == 1 || x == static_cast<U64>(n) - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u(x, x, static_cast<U64>(n));
      if (x == static_cast<U64>(n) - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeFactorization factorize(Int n) {
  if (n < 1) throw DomainError("factorize: n must be positive, got " + std::to_string(n));
  PrimeFactorization out;
  for (Int p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.push_back({p, k});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<Int> prime_divisors(Int n) {
  std::vector<Int> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

std::vector<Int> divisors(Int n) {
  std::vector<Int> out{1};
  for (const auto& [p, k] : factorize(n)) {
    const std::size_t base = out.size();
    Int pk = 1;
    for (int i = 1; i <= k; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_squarefree(Int n) {
  if (n < 1) return false;
  const auto f = factorize(n);
  return std::all_of(f.begin(), f.end(), [](const PrimePower& pp) { return pp.multiplicity == 1; });
}

Int squarefree_core(Int n) {
  if (n <= 1) throw DomainError("squarefree_core: n must be > 1, got " + std::to_string(n));
  Int r = 1;
  for (Int p : prime_divisors(n)) r *= p;
  return r;
}

std::optional<Int> scpd(Int n) {
  require_squarefree_level(n, "scpd");
  for (Int q : {2, 3, 5, 7, 13}) {
    if (n % q == 0) return q;
  }
  return std::nullopt;
}

Int d_of(Int n) {
  if (n <= 1) throw DomainError("d_of: n must be > 1, got " + std::to_string(n));
  Int g = 0;
  for (Int m : divisors(n)) g = std::gcd(g, checked_sub(checked_mul(m, m), 1));
  return g;
}

Int r_p(Int p) {
  if (!is_prime(p)) throw DomainError("r_p: argument must be prime, got " + std::to_string(p));
  if (p == 2 || p == 3) return 1;
  switch (p % 12) {
    case 1: return (p - 7) / 6;
    case 5: return (p + 1) / 6;
    case 7: return (p - 1) / 6;
    default: return (p + 7) / 6;  // p = 11 mod 12
  }
}

Int pow_mod(Int base, Int exp, Int m) {
  if (m <= 0) throw DomainError("pow_mod: modulus must be positive");
  if (exp < 0) {
    base = inverse_mod(base, m);
    exp = -exp;
  }
  return static_cast<Int>(powmod_u(static_cast<U64>(mod(base, m)), static_cast<U64>(exp),
                                   static_cast<U64>(m)));
}

Int inverse_mod(Int a, Int m) {
  Int old_r = mod(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1 && m != 1) {
    throw DomainError("inverse_mod: " + std::to_string(a) + " is not a unit modulo " +
                      std::to_string(m));
  }
  return mod(old_s, m);
}

Int multiplicative_order(Int a, Int m) {
  a = mod(a, m);
  if (std::gcd(a, m) != 1) throw DomainError("multiplicative_order: not a unit");
  Int k = 1;
  for (Int x = a; x != 1 % m; x = static_cast<Int>(mulmod_u(x, a, m))) ++k;
  return k;
}

Int primitive_root(Int p) {
  if (!is_prime(p) || p == 2) throw DomainError("primitive_root: p must be an odd prime");
  const auto qs = prime_divisors(p - 1);
  for (Int g = 2; g < p; ++g) {
    if (std::all_of(qs.begin(), qs.end(), [&](Int q) { return pow_mod(g, (p - 1) / q, p) != 1; }))
      return g;
  }
  return 1;  // unreachable for odd primes
}

}  // namespace sl2hom
