#pragma once

#include <optional>
#include <vector>

#include "sl2hom/checked.hpp"

namespace sl2hom {

struct PrimePower {
  Int prime;
  int multiplicity;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Primes strictly increasing, multiplicities >= 1.
using PrimeFactorization = std::vector<PrimePower>;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(Int n);

/// Trial division. Requires n >= 1; factorize(1) is empty.
PrimeFactorization factorize(Int n);

/// Distinct primes dividing n, ascending.
std::vector<Int> prime_divisors(Int n);

/// All positive divisors of n, ascending.
std::vector<Int> divisors(Int n);

bool is_squarefree(Int n);

/// Product of the distinct primes dividing n. Throws DomainError for n <= 1.
Int squarefree_core(Int n);

/// Smallest prime dividing both n and 2730 = 2*3*5*7*13, if any.
/// Throws DomainError unless n > 1 is square-free.
std::optional<Int> scpd(Int n);

/// gcd of m^2 - 1 over all positive divisors m of n.
Int d_of(Int n);

/// Free rank of H_2(SL_2(Z[1/p]), Z). Throws DomainError for composite p.
Int r_p(Int p);

Int pow_mod(Int base, Int exp, Int m);
/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
Int inverse_mod(Int a, Int m);
/// Multiplicative order of a unit a modulo m.
Int multiplicative_order(Int a, Int m);
/// Smallest primitive root modulo an odd prime p.
Int primitive_root(Int p);

}  // namespace sl2hom
