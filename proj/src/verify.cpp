#include "sl2hom/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "sl2hom/abelian.hpp"
#include "sl2hom/arith.hpp"
#include "sl2hom/finite_group.hpp"
#include "sl2hom/homology.hpp"
#include "sl2hom/serialize.hpp"
#include "sl2hom/sl2.hpp"
#include "sl2hom/tame.hpp"

namespace sl2hom {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  void check(std::string name, bool passed, std::string detail = {}) {
    out_.push_back({suite_, std::move(name), passed, std::move(detail)});
  }

  // Runs body, turning any exception into a failed check.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name, false, std::string("exception: ") + e.what());
    }
  }

  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string suite_;
  std::vector<CheckResult> out_;
};

FinGenAb random_group(std::mt19937_64& rng, int max_rank, int max_summands, Int max_order) {
  std::uniform_int_distribution<int> rank(0, max_rank), count(0, max_summands);
  std::uniform_int_distribution<Int> order(1, max_order);
  std::vector<Int> orders(static_cast<std::size_t>(count(rng)));
  for (auto& o : orders) o = order(rng);
  return FinGenAb::from_cyclic_orders(orders, rank(rng));
}

std::vector<CheckResult> abelian_suite() {
  Recorder r("abelian");
  std::mt19937_64 rng(0xab11);
  r.guarded("permutation-invariance", [&] {
    bool ok = true;
    for (int t = 0; t < 500; ++t) {
      std::vector<Int> orders(static_cast<std::size_t>(rng() % 6));
      for (auto& o : orders) o = 1 + static_cast<Int>(rng() % 60);
      const auto g = FinGenAb::from_cyclic_orders(orders, 1);
      std::shuffle(orders.begin(), orders.end(), rng);
      ok = ok && FinGenAb::from_cyclic_orders(orders, 1) == g;
    }
    r.check("permutation-invariance", ok);
  });
  r.guarded("invariant-factor-round-trip", [&] {
    bool ok = true;
    for (int t = 0; t < 500; ++t) {
      const auto g = random_group(rng, 2, 5, 100);
      const auto d = invariant_factors(g);
      for (std::size_t i = 0; i + 1 < d.size(); ++i) ok = ok && d[i + 1] % d[i] == 0;
      ok = ok && std::all_of(d.begin(), d.end(), [](Int x) { return x > 1; });
      ok = ok && from_invariant_factors(d, g.free_rank()) == g;
    }
    r.check("invariant-factor-round-trip", ok);
  });
  r.guarded("census-round-trip", [&] {
    bool ok = true;
    for (int t = 0; t < 300; ++t) {
      const auto g = random_group(rng, 0, 4, 40);
      ok = ok && from_order_census(order_census(g)) == g;
    }
    r.check("census-round-trip", ok);
  });
  r.guarded("isomorphism-iff-census", [&] {
    bool ok = true;
    for (int t = 0; t < 2000; ++t) {
      const auto a = random_group(rng, 0, 3, 12);
      const auto b = random_group(rng, 0, 3, 12);
      ok = ok && (is_isomorphic(a, b) == (order_census(a) == order_census(b)));
    }
    r.check("isomorphism-iff-census", ok);
  });
  r.guarded("json-round-trip", [&] {
    bool ok = true;
    for (int t = 0; t < 300; ++t) {
      const auto g = random_group(rng, 3, 5, 200);
      const std::string text = to_json(g).dump();
      ok = ok && group_from_json(Json::parse(text)) == g && Json::parse(text).dump() == text;
    }
    r.check("json-round-trip", ok);
  });
  return r.take();
}

std::vector<CheckResult> arith_suite() {
  Recorder r("arith");
  r.guarded("r_p-odd-below-1e5", [&] {
    bool odd = true;
    std::vector<Int> ones;
    for (Int p = 2; p < 100000; ++p) {
      if (!is_prime(p)) continue;
      const Int rp = r_p(p);
      odd = odd && rp % 2 == 1;
      if (rp == 1) ones.push_back(p);
    }
    r.check("r_p-odd-below-1e5", odd);
    r.check("r_p-one-set", ones == std::vector<Int>{2, 3, 5, 7, 13});
  });
  r.guarded("d-divisibility", [&] {
    bool ok = true;
    for (Int n = 2; n <= 1000; ++n) {
      // read with the standing assumption p = 3 (resp. 2) does not divide n
      const Int d = d_of(n);
      if (n % 3 != 0 && (n % 2 == 0 || n % 5 == 0)) ok = ok && d % 3 == 0 && (d / 3) % 3 != 0;
      if (n % 2 != 0 && (n % 3 == 0 || n % 5 == 0)) ok = ok && d % 8 == 0 && (d / 8) % 2 != 0;
    }
    r.check("d-divisibility", ok);
  });
  r.guarded("rank-order-total", [&] {
    // (r_p, p) is injective on primes, hence a strict total order
    std::vector<std::pair<Int, Int>> keys;
    for (Int p = 2; p < 5000; ++p) {
      if (is_prime(p)) keys.emplace_back(r_p(p), p);
    }
    std::sort(keys.begin(), keys.end());
    r.check("rank-order-total", std::adjacent_find(keys.begin(), keys.end()) == keys.end());
  });
  return r.take();
}

// Random product of up to 8 generators drawn from pool.
Mat2 random_word(std::mt19937_64& rng, const std::vector<Mat2>& pool, Int n) {
  Mat2 x = Mat2::identity(n);
  const auto len = rng() % 9;
  for (std::size_t i = 0; i < len; ++i) x = x * pool[rng() % pool.size()];
  return x;
}

std::vector<CheckResult> sl2_suite() {
  Recorder r("sl2");
  r.guarded("matrix-identities", [&] {
    const Int n = 6;
    const auto v = [n](Int x) { return NLocalRational(x, 1, n); };
    const Mat2 minus_i = Mat2::of(n, -1, 0, 0, -1);
    bool ok = e21(v(-2)) * e12(v(1)) * e21(v(-2)) * e12(v(1)) == minus_i;
    const Mat2 w = w_matrix(n);
    for (Int l = -3; l <= 3; ++l) ok = ok && w * e21(v(l)) * invert(w) == e12(v(-l));
    r.check("matrix-identities", ok);
  });

  std::mt19937_64 rng(0x512);
  const Int n = 6, p = 5;
  const auto q = [n](Int num, Int den) { return NLocalRational(num, den, n); };
  const std::vector<Mat2> gamma0_pool = {e12(q(1, 1)), e12(q(-1, 6)), e21(q(5, 1)), e21(q(-5, 3)),
                                         diag(q(2, 1)), diag(q(1, 3)), e12(q(5, 2))};
  std::vector<Mat2> mixed_pool = gamma0_pool;
  mixed_pool.push_back(e21(q(1, 1)));
  mixed_pool.push_back(e21(q(1, 6)));
  mixed_pool.push_back(w_matrix(n));

  r.guarded("membership-chain", [&] {
    bool ok = true;
    int principal = 0;
    for (int t = 0; t < 2000; ++t) {
      const Mat2 x = random_word(rng, mixed_pool, n);
      const bool g = membership(x, GammaPrincipal{p});
      const bool g1 = membership(x, Gamma1{p});
      const bool g0 = membership(x, Gamma0{p});
      ok = ok && (!g || g1) && (!g1 || g0);
      principal += g ? 1 : 0;
    }
    r.check("membership-chain", ok, std::to_string(principal) + " principal samples");
  });
  r.guarded("partner-embed-homomorphism", [&] {
    bool ok = true;
    for (int t = 0; t < 1000; ++t) {
      const Mat2 x = random_word(rng, gamma0_pool, n);
      const Mat2 y = random_word(rng, gamma0_pool, n);
      const Mat2 ex = partner_embed(x, p);
      ok = ok && partner_embed(x * y, p) == ex * partner_embed(y, p) && ex.b().num() % p == 0;
    }
    r.check("partner-embed-homomorphism", ok);
  });
  r.guarded("reduce-mod-homomorphism", [&] {
    bool ok = true;
    for (Int m : {5, 7, 25, 35, 49}) {
      for (int t = 0; t < 300; ++t) {
        const Mat2 x = random_word(rng, mixed_pool, n);
        const Mat2 y = random_word(rng, mixed_pool, n);
        const auto rx = reduce_mod(x, m);
        ok = ok && reduce_mod(x * y, m) == mod_multiply(rx, reduce_mod(y, m)) && rx.det() == 1;
      }
    }
    r.check("reduce-mod-homomorphism", ok);
  });
  return r.take();
}

Int sl2_order_formula(Int m) {
  Int order = m * m * m;
  for (Int p : prime_divisors(m)) order = order / (p * p) * (p * p - 1);
  return order;
}

FinGenAb crt_h1(Int m) {
  FinGenAb g;
  for (const auto& [p, k] : factorize(m)) g = g + h1_sl2_zpk(p, k);
  return g;
}

std::vector<CheckResult> oracle_suite() {
  Recorder r("oracle");
  r.guarded("sl2-order-and-abelianization", [&] {
    bool orders = true, abel = true;
    for (Int m = 2; m <= 16; ++m) {
      const auto g = enumerate_sl2(m);
      orders = orders && static_cast<Int>(g.order()) == sl2_order_formula(m);
      abel = abel && abelianization(g) == crt_h1(m);
    }
    r.check("sl2-order-formula", orders, "m <= 16");
    r.check("sl2-abelianization-crt", abel, "m <= 16");
  });
  r.guarded("borel", [&] {
    bool upper = true, lower = true, index = true, coinv = true;
    for (Int p : {2, 3, 5, 7, 11, 13}) {
      const auto levels = h1_finite_levels(p);
      const auto b = enumerate_borel(p, BorelSide::Upper);
      upper = upper && abelianization(b) == levels.h1_borel;
      lower = lower && abelianization(enumerate_borel(p, BorelSide::Lower)) == levels.h1_borel;
      index = index && enumerate_sl2(p).order() == b.order() * static_cast<std::size_t>(p + 1);
      coinv = coinv && fp_coinvariants(p) == levels.h1_sl2fp &&
              levels.h1_borel == FinGenAb::cyclic(p - 1) + fp_coinvariants(p);
    }
    r.check("borel-abelianization", upper);
    r.check("lower-borel-abelianization", lower);
    r.check("borel-index", index);
    r.check("coinvariants", coinv);
  });
  r.guarded("reduction-kernel", [&] {
    r.check("reduction-kernel", kernel_index_check(2, 2) && kernel_index_check(2, 3) && kernel_index_check(3, 2));
  });
  r.guarded("generation", [&] {
    bool ok = true;
    for (Int n : {2, 6, 10}) {
      for (Int m = 2; m <= 25; ++m) {
        if (std::gcd(m, n) != 1) continue;
        const auto g = enumerate_sl2(m);
        const std::vector<ModMat2> gens = {reduce_mod(e21(NLocalRational(1, 1, n)), m),
                                           reduce_mod(e12(NLocalRational(-1, n, n)), m)};
        ok = ok && generates(g, gens);
      }
    }
    r.check("generation", ok, "E21(1), E12(-1/n) for n in {2,6,10}, m <= 25");
  });
  return r.take();
}

std::vector<Rational> rationals_up_to(Int bound) {
  std::vector<Rational> out;
  for (Int den = 1; den <= bound; ++den)
    for (Int num = -bound; num <= bound; ++num) {
      if (num != 0 && std::gcd(num, den) == 1) out.emplace_back(num, den);
    }
  return out;
}

std::vector<CheckResult> tame_suite() {
  Recorder r("tame");
  const std::vector<Int> primes = {3, 5, 7, 11, 13, 17, 19, 23};
  r.guarded("steinberg-and-antisymmetry", [&] {
    bool steinberg = true, anti = true;
    for (const auto& a : rationals_up_to(20)) {
      for (Int p : primes) {
        if (a != Rational(1)) steinberg = steinberg && tame_symbol(p, {{a, Rational(1) - a}}) == 1;
        anti = anti && tame_symbol(p, {{a, -a}}) == 1;
      }
    }
    r.check("steinberg", steinberg, "|num|,|den| <= 20");
    r.check("antisymmetry", anti, "|num|,|den| <= 20");
  });
  r.guarded("bilinearity", [&] {
    const auto xs = rationals_up_to(5);
    bool ok = true;
    for (Int p : primes)
      for (const auto& a : xs)
        for (const auto& a2 : xs)
          for (const auto& b : xs) {
            const Int ab = tame_symbol(p, {{a, b}});
            ok = ok && tame_symbol(p, {{a * a2, b}}) == ab * tame_symbol(p, {{a2, b}}) % p &&
                 tame_symbol(p, {{b, a * a2}}) == tame_symbol(p, {{b, a}}) * tame_symbol(p, {{b, a2}}) % p;
          }
    r.check("bilinearity", ok, "|num|,|den| <= 5");
  });
  r.guarded("surjectivity-witness", [&] {
    bool ok = true;
    for (Int p : primes) ok = ok && multiplicative_order(tame_symbol(p, {{p, surjectivity_witness(p)}}), p) == p - 1;
    r.check("surjectivity-witness", ok);
  });
  return r.take();
}

std::vector<CheckResult> homology_suite() {
  Recorder r("homology");
  r.guarded("regression", [&] {
    const std::vector<std::pair<Int, FinGenAb>> expected = {
        {2, FinGenAb::free(1)},
        {3, FinGenAb::free(1)},
        {5, FinGenAb::from_cyclic_orders({2}, 1)},
        {6, FinGenAb::from_cyclic_orders({2}, 1)},
        {11, FinGenAb::free(3)},
        {13, FinGenAb::from_cyclic_orders({6}, 1)},
        {30, FinGenAb::from_cyclic_orders({2, 4}, 1)},
        {35, FinGenAb::from_cyclic_orders({12}, 1)},
        {46, FinGenAb::from_cyclic_orders({22}, 1)},
        {65, FinGenAb::from_cyclic_orders({2, 12}, 1)},
    };
    bool ok = true;
    std::string bad;
    for (const auto& [n, g] : expected) {
      const auto h = h2_sl2_zn(n);
      if (h.status != H2Status::Exact || *h.group != g) {
        ok = false;
        bad += std::to_string(n) + " ";
      }
    }
    r.check("h2-regression", ok, bad);
  });
  r.guarded("prime-coherence", [&] {
    bool ok = true;
    for (Int p = 2; p < 2000; ++p) {
      if (is_prime(p)) ok = ok && *h2_sl2_zn(p).group == h2_sl2_z1p(p);
    }
    for (Int q : {2, 3, 5, 7, 13}) ok = ok && h2_small_prime_case(q) == h2_sl2_z1p(q);
    r.check("prime-coherence", ok);
  });
  r.guarded("consistency-suite", [&] {
    int count = 0;
    std::string bad;
    for (Int n = 2; n <= 1000; ++n) {
      if (!is_squarefree(n) || is_prime(n) || !scpd(n)) continue;
      ++count;
      if (!consistency_suite(n).all_passed()) bad += std::to_string(n) + " ";
    }
    r.check("consistency-suite", bad.empty(), bad.empty() ? std::to_string(count) + " levels" : bad);
  });
  r.guarded("q-choice-invariance", [&] {
    bool ok = true;
    int count = 0;
    for (Int n = 2; n <= 5000; ++n) {
      if (!is_squarefree(n)) continue;
      const auto choices = admissible_q_primes(n);
      if (choices.size() < 2) continue;
      ++count;
      for (Int q : choices) ok = ok && h2_small_prime_case(n, q) == h2_small_prime_case(n, choices.front());
    }
    r.check("q-choice-invariance", ok, std::to_string(count) + " levels");
  });
  r.guarded("gamma0-order", [&] {
    bool ok = true;
    for (Int n = 2; n <= 60; ++n)
      for (Int p = 5; p < 50; ++p) {
        if (!is_prime(p) || n % p == 0) continue;
        const auto h = h1_gamma0(n, p);
        if (h.case_tag == "p>3") {
          ok = ok && h.group->torsion_order() == h1_sl2_zn(squarefree_core(n)).torsion_order() * (p - 1);
        }
      }
    r.check("gamma0-order", ok);
  });
  return r.take();
}

using SuiteFn = std::vector<CheckResult> (*)();

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"abelian", abelian_suite}, {"arith", arith_suite},       {"sl2", sl2_suite},
      {"oracle", oracle_suite},   {"tame", tame_suite},         {"homology", homology_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_suite(std::string_view name) {
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto& [suite, fn] : registry()) {
    if (name != "all" && name != suite) continue;
    found = true;
    auto part = fn();
    out.insert(out.end(), part.begin(), part.end());
  }
  if (!found) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  return out;
}

}  // namespace sl2hom
