#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2hom/abelian.hpp"

namespace sl2hom {

// Closed-form first and second integral homology of SL_2(Z[1/n]) and related
// groups. Every function below is a formula evaluator; nothing here builds a
// resolution. The finite-level values are cross-checked against the brute-force
// oracle in finite_group.hpp.

/// H_1(SL_2(Z[1/n])) for square-free n > 1.
FinGenAb h1_sl2_zn(Int n);

/// H_1(SL_2(Z/p^k)).
FinGenAb h1_sl2_zpk(Int p, int k);

struct FiniteLevels {
  FinGenAb h1_borel;  // H_1(B(F_p))
  FinGenAb h2_borel;  // H_2(B(F_p)), always 0
  FinGenAb h1_sl2fp;  // H_1(SL_2(F_p))
};
FiniteLevels h1_finite_levels(Int p);

/// H_2(SL_2(Z[1/p])) for a prime p.
FinGenAb h2_sl2_z1p(Int p);

enum class H2Status { Exact, Conjectural, Partial };

struct H2Result {
  H2Status status = H2Status::Partial;
  std::optional<FinGenAb> group;     // Exact and Conjectural
  std::optional<FinGenAb> quotient;  // Partial: a certified quotient of H_2
  Int rank_lo = 0;                   // Partial: bounds on the free rank
  Int rank_hi = 0;
  std::string provenance;
};

std::string to_string(H2Status s);

/// H_2(SL_2(Z[1/n])) for square-free n > 1.
///  - n prime: exact;
///  - n divisible by one of 2, 3, 5, 7, 13: exact, chosen by scpd(n);
///  - otherwise Conjectural when allow_conjecture, else Partial (quotient + rank bounds).
H2Result h2_sl2_zn(Int n, bool allow_conjecture = false);

/// The exact value for n with scpd(n) defined. For scpd in {5, 13} with a prime
/// = 3 mod 4 in the cofactor, q_prime selects which such prime is split off; the
/// default is the smallest. Throws DomainError when scpd is undefined or q_prime is
/// not admissible.
FinGenAb h2_small_prime_case(Int n, std::optional<Int> q_prime = std::nullopt);

/// Primes q = 3 mod 4 dividing n / scpd(n), when scpd(n) is 5 or 13; empty otherwise.
std::vector<Int> admissible_q_primes(Int n);

/// Conjectured H_2 for composite square-free n coprime to 2730.
FinGenAb h2_conjectural(Int n);

/// Primes of n sorted ascending by (r_p, p).
std::vector<Int> rank_ordered_primes(Int n);

/// Sum of Z/(p_i - 1) over all but the first prime in rank order: a quotient of
/// H_2(SL_2(Z[1/n])). Requires n composite and square-free.
FinGenAb h2_unit_quotient(Int n);

struct RankBounds {
  Int lo;
  Int hi;
  friend bool operator==(const RankBounds&, const RankBounds&) = default;
};
/// Bounds on the free rank of H_2(SL_2(Z[1/n])); exact for primes.
RankBounds rank_bounds(Int n);

/// H_1(Gamma_0(n, p)) when one of the three proven cases applies.
struct Gamma0H1 {
  std::optional<FinGenAb> group;  // empty: not applicable
  std::string case_tag;           // "p>3", "p=3", "p=2" or "not-applicable"
  bool applicable() const { return group.has_value(); }
};
Gamma0H1 h1_gamma0(Int n, Int p);

struct ConsistencyCheck {
  std::string name;
  bool applicable = false;
  bool passed = true;
  std::string detail;
};

struct ConsistencyReport {
  Int n = 0;
  std::vector<ConsistencyCheck> checks;
  bool all_passed() const;
};

/// Cross-checks the H_2 value of n against the independent structural facts:
/// quotient, split-sequence form when 6 | n, rank bounds, q' choice invariance
/// and injectivity from divisors.
ConsistencyReport consistency_suite(Int n);

}  // namespace sl2hom
