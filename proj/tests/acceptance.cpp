// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Every criterion is exact (group isomorphism or integer equality); the only
// numeric tolerance is the wall-clock budget on the oracle agreement check.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sl2hom/arith.hpp"
#include "sl2hom/finite_group.hpp"
#include "sl2hom/homology.hpp"
#include "sl2hom/sl2.hpp"
#include "sl2hom/tame.hpp"

using namespace sl2hom;

namespace {

struct Verdict {
  bool passed;
  std::string detail;
};

FinGenAb g(std::initializer_list<Int> orders, int rank = 0) { return FinGenAb::from_cyclic_orders(orders, rank); }

Verdict exact_values() {
  const std::vector<std::pair<Int, FinGenAb>> expected = {
      {2, FinGenAb::free(1)}, {3, FinGenAb::free(1)}, {5, g({2}, 1)},  {6, g({2}, 1)},
      {13, g({6}, 1)},        {11, FinGenAb::free(3)}, {46, g({22}, 1)}, {30, g({2, 4}, 1)},
      {35, g({4, 3}, 1)},     {65, g({2, 12}, 1)},
  };
  std::string bad;
  for (const auto& [n, group] : expected) {
    const auto r = h2_sl2_zn(n);
    if (r.status != H2Status::Exact || *r.group != group) bad += " n=" + std::to_string(n);
  }
  return {bad.empty(), bad.empty() ? "10 levels, exact isomorphism" : "mismatch:" + bad};
}

Verdict h1_table() {
  int count = 0;
  std::string bad;
  for (Int n = 2; n <= 200; ++n) {
    if (!is_squarefree(n)) continue;
    ++count;
    const bool two = n % 2 == 0, three = n % 3 == 0;
    const FinGenAb expected = two && three ? FinGenAb::trivial()
                              : two        ? FinGenAb::cyclic(3)
                              : three      ? FinGenAb::cyclic(4)
                                           : FinGenAb::cyclic(12);
    if (h1_sl2_zn(n) != expected) bad += " n=" + std::to_string(n);
  }
  return {bad.empty(), std::to_string(count) + " square-free n <= 200" + bad};
}

FinGenAb crt_h1(Int m) {
  FinGenAb out;
  for (const auto& [p, k] : factorize(m)) out = out + h1_sl2_zpk(p, k);
  return out;
}

Verdict oracle_agreement() {
  const auto start = std::chrono::steady_clock::now();
  std::string bad;
  for (Int m : {2, 3, 4, 5, 6, 7, 8, 9, 16, 25, 27})
    if (abelianization(enumerate_sl2(m)) != crt_h1(m)) bad += " SL2(Z/" + std::to_string(m) + ")";
  for (Int p : {2, 3, 5, 7, 11, 13}) {
    const auto expected = h1_finite_levels(p).h1_borel;
    if (abelianization(enumerate_borel(p, BorelSide::Upper)) != expected) bad += " B(F_" + std::to_string(p) + ")";
    if (abelianization(enumerate_borel(p, BorelSide::Lower)) != expected) bad += " B'(F_" + std::to_string(p) + ")";
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_budget = seconds < 10.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s (budget 10 s)", seconds);
  return {bad.empty() && in_budget, std::string(buf) + bad};
}

Verdict order_and_index() {
  std::string bad;
  for (Int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
    const auto [p, k] = factorize(q).front();
    const Int expected = (p * p - 1) * checked_pow(p, static_cast<unsigned>(3 * k - 2));
    if (static_cast<Int>(enumerate_sl2(q).order()) != expected) bad += " |SL2(Z/" + std::to_string(q) + ")|";
  }
  for (const auto& [p, k] : std::vector<std::pair<Int, int>>{{2, 2}, {2, 3}, {3, 2}})
    if (reduction_kernel_order(p, k) != checked_pow(p, static_cast<unsigned>(3 * (k - 1))))
      bad += " kernel(" + std::to_string(p) + "," + std::to_string(k) + ")";
  for (Int p : {2, 3, 5, 7, 11, 13})
    if (enumerate_sl2(p).order() != enumerate_borel(p, BorelSide::Upper).order() * static_cast<std::size_t>(p + 1))
      bad += " index(" + std::to_string(p) + ")";
  return {bad.empty(), "10 orders, 3 kernels, 6 indices" + bad};
}

Verdict generation() {
  int count = 0;
  std::string bad;
  for (Int n : {2, 6, 10})
    for (Int m = 2; m <= 25; ++m) {
      if (std::gcd(m, n) != 1) continue;
      ++count;
      const std::vector<ModMat2> gens = {reduce_mod(e21(NLocalRational(1, 1, n)), m),
                                         reduce_mod(e12(NLocalRational(-1, n, n)), m)};
      if (!generates(enumerate_sl2(m), gens)) bad += " (" + std::to_string(n) + "," + std::to_string(m) + ")";
    }
  return {bad.empty(), std::to_string(count) + " pairs (n, m)" + bad};
}

// Exponent vector of a rational over {-1} and the primes <= 50.
struct Factored {
  Rational value;
  std::vector<std::pair<int, int>> exps;  // (generator index, exponent), nonzero only
};

Verdict tame_properties() {
  const Int bound = 50;
  const std::vector<Int> primes = {3, 5, 7, 11, 13, 17, 19, 23};
  std::vector<Int> gens = {-1};
  for (Int q = 2; q <= bound; ++q)
    if (is_prime(q)) gens.push_back(q);

  std::vector<Factored> xs;
  for (Int den = 1; den <= bound; ++den)
    for (Int num = -bound; num <= bound; ++num) {
      if (num == 0 || std::gcd(num, den) != 1) continue;
      Factored f{Rational(num, den), {}};
      if (num < 0) f.exps.emplace_back(0, 1);
      for (std::size_t i = 1; i < gens.size(); ++i) {
        const int e = oracle::naive_val(gens[i], num < 0 ? -num : num) - oracle::naive_val(gens[i], den);
        if (e != 0) f.exps.emplace_back(static_cast<int>(i), e);
      }
      xs.push_back(std::move(f));
    }

  long steinberg_fail = 0, anti_fail = 0, bilinear_fail = 0, witness_fail = 0;
  long pairs = 0;
  for (Int p : primes) {
    for (const auto& a : xs) {
      if (a.value != Rational(1) && tame_symbol(p, {{a.value, Rational(1) - a.value}}) != 1) ++steinberg_fail;
      if (tame_symbol(p, {{a.value, -a.value}}) != 1) ++anti_fail;
    }
    if (multiplicative_order(tame_symbol(p, {{Rational(p), Rational(surjectivity_witness(p))}}), p) != p - 1)
      ++witness_fail;

    // Bilinearity: the symbol on every pair must equal the bilinear extension of its
    // values on generator pairs. Any a, a', aa' and b in range then satisfy
    // {aa', b} = {a, b}{a', b}, and likewise in the second slot.
    const std::size_t k = gens.size();
    std::vector<Int> table(k * k), inv_table(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        table[i * k + j] = tame_symbol(p, {{Rational(gens[i]), Rational(gens[j])}});
        inv_table[i * k + j] = inverse_mod(table[i * k + j], p);
      }
    const auto power = [p](Int base, Int inv, int e) {
      const Int b = e < 0 ? inv : base;
      Int r = 1;
      for (int i = 0; i < (e < 0 ? -e : e); ++i) r = r * b % p;
      return r;
    };
    // row[h] = prod_g table[g][h]^{e_g(a)}
    std::vector<Int> row(k), row_inv(k);
    for (const auto& a : xs) {
      for (std::size_t h = 0; h < k; ++h) {
        Int r = 1;
        for (const auto& [gi, e] : a.exps) r = r * power(table[gi * k + h], inv_table[gi * k + h], e) % p;
        row[h] = r;
        row_inv[h] = inverse_mod(r, p);
      }
      for (const auto& b : xs) {
        Int expected = 1;
        for (const auto& [hi, f] : b.exps) expected = expected * power(row[hi], row_inv[hi], f) % p;
        if (tame_symbol(p, {{a.value, b.value}}) != expected) ++bilinear_fail;
        ++pairs;
      }
    }
  }
  const bool ok = steinberg_fail == 0 && anti_fail == 0 && bilinear_fail == 0 && witness_fail == 0;
  return {ok, std::to_string(xs.size()) + " rationals, " + std::to_string(pairs) + " pairs over 8 primes; failures: steinberg " +
                  std::to_string(steinberg_fail) + ", antisymmetry " + std::to_string(anti_fail) + ", bilinearity " +
                  std::to_string(bilinear_fail) + ", witness " + std::to_string(witness_fail)};
}

Verdict quotient_consistency() {
  int count = 0;
  std::string bad;
  for (Int n = 2; n <= 1000; ++n) {
    if (!is_squarefree(n) || is_prime(n) || !scpd(n)) continue;
    ++count;
    if (!is_quotient(*h2_sl2_zn(n).group, h2_unit_quotient(n))) bad += " n=" + std::to_string(n);
  }
  return {bad.empty(), std::to_string(count) + " composite levels" + bad};
}

Verdict choice_invariance() {
  int count = 0;
  std::string bad;
  for (Int n = 2; n <= 5000; ++n) {
    if (!is_squarefree(n)) continue;
    const auto choices = admissible_q_primes(n);
    if (choices.size() < 2) continue;
    ++count;
    const auto first = h2_small_prime_case(n, choices.front());
    for (Int q : choices)
      if (h2_small_prime_case(n, q) != first) bad += " n=" + std::to_string(n);
  }
  return {bad.empty() && count > 0, std::to_string(count) + " levels with >= 2 choices" + bad};
}

Verdict rank_facts() {
  bool odd = true;
  std::vector<Int> ones;
  for (Int p = 2; p < 100000; ++p) {
    if (!is_prime(p)) continue;
    odd = odd && r_p(p) % 2 == 1;
    if (r_p(p) == 1) ones.push_back(p);
  }
  int exact = 0;
  std::string bad;
  for (Int n = 2; n <= 1000; ++n) {
    if (!is_squarefree(n)) continue;
    const auto r = h2_sl2_zn(n);
    if (r.status != H2Status::Exact) continue;
    ++exact;
    const auto b = rank_bounds(n);
    if (r.group->free_rank() < b.lo || r.group->free_rank() > b.hi) bad += " n=" + std::to_string(n);
  }
  const bool ones_ok = ones == std::vector<Int>{2, 3, 5, 7, 13};
  return {odd && ones_ok && bad.empty(), std::string("r_p odd: ") + (odd ? "yes" : "no") + ", r_p = 1 set " +
                                             (ones_ok ? "{2,3,5,7,13}" : "differs") + ", " + std::to_string(exact) +
                                             " exact ranks in bounds" + bad};
}

Verdict matrix_identities() {
  const Int n = 6;
  const auto v = [n](Int x) { return NLocalRational(x, 1, n); };
  bool ok = e21(v(-2)) * e12(v(1)) * e21(v(-2)) * e12(v(1)) == Mat2::of(n, -1, 0, 0, -1);
  const Mat2 w = w_matrix(n);
  for (Int l = -3; l <= 3; ++l) ok = ok && w * e21(v(l)) * invert(w) == e12(v(-l));
  return {ok, "exact rational arithmetic, l in [-3, 3]"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"exact H2 values", exact_values},
      {"H1 table", h1_table},
      {"oracle agreement", oracle_agreement},
      {"order and index formulas", order_and_index},
      {"generation", generation},
      {"tame symbol properties", tame_properties},
      {"unit quotient consistency", quotient_consistency},
      {"q' choice invariance", choice_invariance},
      {"rank facts", rank_facts},
      {"matrix identities", matrix_identities},
  };
  bool all = true, first_nine = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v{false, ""};
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %zu. %s: %s\n", v.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.detail.c_str());
    all = all && v.passed;
    if (i < 9) first_nine = first_nine && v.passed;
  }
  // Homology of the infinite groups is never computed directly; the structural
  // inputs are accepted only through the consistency checks of criteria 1-9.
  std::printf("[%s] 11. infinite-group homology only via consistency constraints (criteria 1-9 %s)\n",
              first_nine ? "PASS" : "FAIL", first_nine ? "pass" : "do not all pass");
  all = all && first_nine;
  return all ? 0 : 1;
}
