#include "sl2hom/homology.hpp"

#include <algorithm>
#include <numeric>

#include "sl2hom/arith.hpp"
#include "sl2hom/error.hpp"

namespace sl2hom {

namespace {

void require_squarefree(Int n, const char* op) {
  if (n <= 1 || !is_squarefree(n)) {
    throw DomainError(std::string(op) + ": n must be a square-free integer > 1, got " + std::to_string(n));
  }
}

void require_prime(Int p, const char* op) {
  if (!is_prime(p)) throw DomainError(std::string(op) + ": expected a prime, got " + std::to_string(p));
}

// Sum of F_p^x = Z/(p-1) over the given primes.
FinGenAb unit_groups(const std::vector<Int>& primes) {
  std::vector<Int> orders;
  for (Int p : primes) orders.push_back(p - 1);
  return FinGenAb::from_cyclic_orders(orders);
}

std::vector<Int> without(std::vector<Int> primes, Int q) {
  primes.erase(std::remove(primes.begin(), primes.end(), q), primes.end());
  return primes;
}

std::vector<Int> three_mod_four(const std::vector<Int>& primes) {
  std::vector<Int> out;
  std::copy_if(primes.begin(), primes.end(), std::back_inserter(out), [](Int p) { return p % 4 == 3; });
  return out;
}

// Z^rank + Z/small + units   when every cofactor prime is 1 mod 4, else
// Z^rank + Z/big + Z/((q-1)/2) + units without q.
FinGenAb split_off_three_mod_four(int rank, Int small, Int big, const std::vector<Int>& cofactor,
                                  std::optional<Int> q) {
  if (!q) return FinGenAb::free(rank) + FinGenAb::cyclic(small) + unit_groups(cofactor);
  return FinGenAb::free(rank) + FinGenAb::cyclic(big) + FinGenAb::cyclic((*q - 1) / 2) +
         unit_groups(without(cofactor, *q));
}

bool has_scpd(Int m) { return std::gcd(m, Int{2730}) != 1; }

}  // namespace

FinGenAb h1_sl2_zn(Int n) {
  require_squarefree(n, "h1_sl2_zn");
  const bool two = n % 2 == 0, three = n % 3 == 0;
  if (two && three) return FinGenAb::trivial();
  if (two) return FinGenAb::cyclic(3);
  if (three) return FinGenAb::cyclic(4);
  return FinGenAb::cyclic(12);
}

FinGenAb h1_sl2_zpk(Int p, int k) {
  require_prime(p, "h1_sl2_zpk");
  if (k < 1) throw DomainError("h1_sl2_zpk: k must be >= 1");
  // H_1(SL_2(A)) for local A: A/m^2 if |A/m| = 2, A/m if |A/m| = 3, else 0
  if (p == 2) return FinGenAb::cyclic(k == 1 ? 2 : 4);
  if (p == 3) return FinGenAb::cyclic(3);
  return FinGenAb::trivial();
}

FiniteLevels h1_finite_levels(Int p) {
  require_prime(p, "h1_finite_levels");
  // coinvariants of F_p under a.x = a^2 x
  const FinGenAb coinvariants = p <= 3 ? FinGenAb::cyclic(p) : FinGenAb::trivial();
  return {FinGenAb::cyclic(p - 1) + coinvariants, FinGenAb::trivial(), coinvariants};
}

FinGenAb h2_sl2_z1p(Int p) {
  const int rank = static_cast<int>(r_p(p));
  if (p == 2 || p == 3) return FinGenAb::free(1);
  switch (p % 12) {
    case 1: return FinGenAb::free(rank) + FinGenAb::cyclic(6);
    case 5: return FinGenAb::free(rank) + FinGenAb::cyclic(2);
    case 7: return FinGenAb::free(rank) + FinGenAb::cyclic(3);
    default: return FinGenAb::free(rank);
  }
}

std::string to_string(H2Status s) {
  switch (s) {
    case H2Status::Exact: return "exact";
    case H2Status::Conjectural: return "conjectural";
    case H2Status::Partial: return "partial";
  }
  return "unknown";
}

std::vector<Int> admissible_q_primes(Int n) {
  const auto q = scpd(n);
  if (!q || (*q != 5 && *q != 13)) return {};
  return three_mod_four(without(prime_divisors(n), *q));
}

FinGenAb h2_small_prime_case(Int n, std::optional<Int> q_prime) {
  const auto q = scpd(n);
  if (!q) {
    throw DomainError("n = " + std::to_string(n) + " is not divisible by any of 2, 3, 5, 7, 13");
  }
  const auto cofactor = without(prime_divisors(n), *q);
  const auto admissible = admissible_q_primes(n);
  if (q_prime && std::find(admissible.begin(), admissible.end(), *q_prime) == admissible.end()) {
    throw DomainError("q' = " + std::to_string(*q_prime) + " is not an admissible choice for n = " +
                      std::to_string(n));
  }
  const std::optional<Int> chosen =
      q_prime ? q_prime : (admissible.empty() ? std::nullopt : std::optional<Int>(admissible.front()));
  switch (*q) {
    case 2:
    case 3: return FinGenAb::free(1) + unit_groups(cofactor);
    case 7: return FinGenAb::free(1) + FinGenAb::cyclic(3) + unit_groups(cofactor);
    case 5: return split_off_three_mod_four(1, 2, 4, cofactor, chosen);
    default: return split_off_three_mod_four(1, 6, 12, cofactor, chosen);  // 13
  }
}

std::vector<Int> rank_ordered_primes(Int n) {
  require_squarefree(n, "rank_ordered_primes");
  auto primes = prime_divisors(n);
  std::sort(primes.begin(), primes.end(),
            [](Int a, Int b) { return std::pair(r_p(a), a) < std::pair(r_p(b), b); });
  return primes;
}

FinGenAb h2_conjectural(Int n) {
  require_squarefree(n, "h2_conjectural");
  if (has_scpd(n)) throw DomainError("h2_conjectural: n must be coprime to 2730");
  if (is_prime(n)) throw DomainError("h2_conjectural: n must be composite");
  const auto ordered = rank_ordered_primes(n);
  const Int p1 = ordered.front();
  const std::vector<Int> rest(ordered.begin() + 1, ordered.end());
  const int rank = static_cast<int>(r_p(p1));
  const auto candidates = three_mod_four(rest);
  const std::optional<Int> q =
      candidates.empty() ? std::nullopt : std::optional<Int>(*std::min_element(candidates.begin(), candidates.end()));
  switch (p1 % 12) {
    case 11: return FinGenAb::free(rank) + unit_groups(rest);
    case 7: return FinGenAb::free(rank) + FinGenAb::cyclic(3) + unit_groups(rest);
    case 5: return split_off_three_mod_four(rank, 2, 4, rest, q);
    default: return split_off_three_mod_four(rank, 6, 12, rest, q);  // 1 mod 12
  }
}

FinGenAb h2_unit_quotient(Int n) {
  require_squarefree(n, "h2_unit_quotient");
  if (is_prime(n)) throw DomainError("h2_unit_quotient: n must have at least two prime factors");
  const auto ordered = rank_ordered_primes(n);
  return unit_groups({ordered.begin() + 1, ordered.end()});
}

RankBounds rank_bounds(Int n) {
  require_squarefree(n, "rank_bounds");
  if (is_prime(n)) return {r_p(n), r_p(n)};
  Int hi = r_p(prime_divisors(n).front());
  for (Int p : prime_divisors(n)) hi = std::min(hi, r_p(p));
  return {1, hi};
}

H2Result h2_sl2_zn(Int n, bool allow_conjecture) {
  require_squarefree(n, "h2_sl2_zn");
  H2Result r;
  if (is_prime(n)) {
    r.status = H2Status::Exact;
    r.group = h2_sl2_z1p(n);
    r.provenance = "prime level";
  } else if (const auto q = scpd(n)) {
    r.status = H2Status::Exact;
    r.group = h2_small_prime_case(n);
    r.provenance = "scpd=" + std::to_string(*q);
  } else if (allow_conjecture) {
    r.status = H2Status::Conjectural;
    r.group = h2_conjectural(n);
    r.provenance = "conjecture";
  } else {
    r.status = H2Status::Partial;
    r.quotient = h2_unit_quotient(n);
    const auto b = rank_bounds(n);
    r.rank_lo = b.lo;
    r.rank_hi = b.hi;
    r.provenance = "quotient and rank bounds";
  }
  return r;
}

Gamma0H1 h1_gamma0(Int n, Int p) {
  if (n <= 1) throw DomainError("h1_gamma0: n must be > 1");
  require_prime(p, "h1_gamma0");
  if (n % p == 0) {
    throw DomainError("h1_gamma0: p = " + std::to_string(p) + " divides n = " + std::to_string(n));
  }
  // Z[1/n] only depends on the primes of n
  const FinGenAb base = h1_sl2_zn(squarefree_core(n));
  const Int d = d_of(n);
  if (p > 3 && d % p != 0) return {base + FinGenAb::cyclic(p - 1), "p>3"};
  if (p == 3 && d % 3 == 0 && (d / 3) % 3 != 0)
    return {base + FinGenAb::from_cyclic_orders({2, 3}), "p=3"};
  if (p == 2 && d % 8 == 0 && (d / 8) % 2 != 0)
    return {base + FinGenAb::from_cyclic_orders({2, 4}), "p=2"};
  return {std::nullopt, "not-applicable"};
}

bool ConsistencyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

ConsistencyReport consistency_suite(Int n) {
  require_squarefree(n, "consistency_suite");
  ConsistencyReport report;
  report.n = n;
  const auto h2 = h2_sl2_zn(n);
  const bool exact = h2.status == H2Status::Exact;
  const bool composite = !is_prime(n);
  const auto add = [&](std::string name, bool applicable, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), applicable, !applicable || passed, std::move(detail)});
  };

  if (exact && composite) {
    const auto q = h2_unit_quotient(n);
    add("unit-quotient", true, is_quotient(*h2.group, q), to_text(*h2.group) + " ->> " + to_text(q));
  } else {
    add("unit-quotient", false, true);
  }

  if (n % 6 == 0) {
    const auto split = FinGenAb::free(1) + unit_groups(prime_divisors(n));
    add("six-divides-split-form", true, *h2.group == split, to_text(split));
  } else {
    add("six-divides-split-form", false, true);
  }

  if (h2.group) {
    const auto b = rank_bounds(n);
    const Int rank = h2.group->free_rank();
    add("rank-bounds", true, b.lo <= rank && rank <= b.hi,
        "rank " + std::to_string(rank) + " in [" + std::to_string(b.lo) + ", " + std::to_string(b.hi) + "]");
  } else {
    add("rank-bounds", false, true);
  }

  const auto choices = admissible_q_primes(n);
  if (choices.size() >= 2) {
    const auto first = h2_small_prime_case(n, choices.front());
    bool same = true;
    for (Int q : choices) same = same && h2_small_prime_case(n, q) == first;
    add("q-choice-invariance", true, same, std::to_string(choices.size()) + " choices");
  } else {
    add("q-choice-invariance", false, true);
  }

  if (exact && composite) {
    bool ok = true;
    std::string detail;
    const Int tn = h2.group->torsion_order();
    for (Int m : divisors(n)) {
      if (m == 1 || m == n || !has_scpd(m)) continue;
      const Int tm = h2_sl2_zn(m).group->torsion_order();
      if (tn % tm != 0) {
        ok = false;
        detail += "m=" + std::to_string(m) + " ";
      }
    }
    add("divisor-injectivity", true, ok, detail);
  } else {
    add("divisor-injectivity", false, true);
  }
  return report;
}

}  // namespace sl2hom
