#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "sl2hom/abelian.hpp"
#include "sl2hom/error.hpp"
#include "sl2hom/serialize.hpp"

using namespace sl2hom;

namespace {

FinGenAb primary(std::vector<PrimaryFactor> f, int r = 0) { return FinGenAb::from_primary(std::move(f), r); }

}  // namespace

TEST_CASE("from_cyclic_orders splits by CRT") {
  CHECK(FinGenAb::from_cyclic_orders({12}, 1) == primary({{2, 2}, {3, 1}}, 1));
  CHECK(FinGenAb::from_cyclic_orders({1}, 0).is_trivial());
  CHECK(FinGenAb::from_cyclic_orders({22}, 1) == primary({{2, 1}, {11, 1}}, 1));
  CHECK(FinGenAb::from_cyclic_orders({}, 3) == FinGenAb::free(3));
  CHECK_THROWS_AS(FinGenAb::from_cyclic_orders({0}), DomainError);
  CHECK_THROWS_AS(FinGenAb::from_cyclic_orders({2}, -1), DomainError);
}

TEST_CASE("from_primary validates") {
  CHECK_THROWS_AS(primary({{4, 1}}), DomainError);
  CHECK_THROWS_AS(primary({{2, 0}}), DomainError);
  CHECK(primary({{3, 1}, {2, 1}}) == primary({{2, 1}, {3, 1}}));
}

TEST_CASE("direct_sum") {
  CHECK(FinGenAb::free(1) + FinGenAb::cyclic(2) == FinGenAb::from_cyclic_orders({2}, 1));
  const auto g = FinGenAb::from_cyclic_orders({6, 10}, 2);
  CHECK(FinGenAb::trivial() + g == g);
  CHECK(FinGenAb::from_cyclic_orders({2, 3}) + FinGenAb::cyclic(4) == primary({{2, 1}, {2, 2}, {3, 1}}));
}

TEST_CASE("invariant factors") {
  CHECK(invariant_factors(primary({{2, 1}, {2, 2}, {3, 1}})) == std::vector<Int>{2, 12});
  CHECK(invariant_factors(FinGenAb::trivial()).empty());
  CHECK(invariant_factors(FinGenAb::from_cyclic_orders({2, 4, 3}, 1)) == std::vector<Int>{2, 12});
  CHECK(invariant_factors(FinGenAb::from_cyclic_orders({6, 4, 9, 5})) == std::vector<Int>{6, 180});
}

TEST_CASE("invariant factors agree with a brute-force census of the cyclic sum") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    std::vector<Int> orders(rng() % 4);
    for (auto& o : orders) o = 1 + static_cast<Int>(rng() % 12);
    const auto g = FinGenAb::from_cyclic_orders(orders);
    const auto d = invariant_factors(g);
    REQUIRE(oracle::brute_census(oracle::Cyclics{orders}) ==
            oracle::brute_census(oracle::Cyclics{std::vector<Int>(d.begin(), d.end())}));
    REQUIRE(oracle::brute_census(oracle::Cyclics{orders}) == order_census(g));
  }
}

TEST_CASE("order census") {
  CHECK(order_census(FinGenAb::cyclic(4)) == std::map<Int, Int>{{1, 1}, {2, 1}, {4, 2}});
  CHECK(order_census(FinGenAb::from_cyclic_orders({2, 2})) == std::map<Int, Int>{{1, 1}, {2, 3}});
  CHECK(order_census(FinGenAb::cyclic(6)) == std::map<Int, Int>{{1, 1}, {2, 1}, {3, 2}, {6, 2}});
  CHECK(order_census(FinGenAb::trivial()) == std::map<Int, Int>{{1, 1}});
  CHECK_THROWS_AS(order_census(FinGenAb::free(1)), DomainError);
}

TEST_CASE("census round trip over every group of order <= 128") {
  for (Int n = 1; n <= 128; ++n)
    for (const auto& g : oracle::groups_of_order(n)) REQUIRE(from_order_census(order_census(g)) == g);
  CHECK_THROWS_AS(from_order_census({{1, 1}, {2, 2}}), DomainError);
  CHECK_THROWS_AS(from_order_census({{2, 1}}), DomainError);
}

TEST_CASE("smith normal form on small matrices") {
  CHECK(smith_diagonal(IntMatrix{{2, 0}, {0, 3}}) == std::vector<Int>{1, 6});
  CHECK(smith_diagonal(IntMatrix{{0, 0}, {0, 0}}).empty());
  CHECK(smith_diagonal(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<Int>{2, 6, 12});
}

TEST_CASE("cokernel examples") {
  CHECK(cokernel_of_relations(IntMatrix{{2, 0}, {0, 3}}) == FinGenAb::from_cyclic_orders({2, 3}));
  CHECK(cokernel_of_relations(IntMatrix{{1}}).is_trivial());
  CHECK(cokernel_of_relations(IntMatrix{{2, 4}, {0, 4}}) == FinGenAb::from_cyclic_orders({2, 4}));
  CHECK(cokernel_of_relations(IntMatrix{{2, 0, 0}}) == FinGenAb::from_cyclic_orders({2}, 2));
  CHECK(cokernel_of_relations(IntMatrix(0, 2)) == FinGenAb::free(2));
}

TEST_CASE("cokernel agrees with determinantal divisors: every 2x2 with entries in [-4, 4]") {
  for (Int a = -4; a <= 4; ++a)
    for (Int b = -4; b <= 4; ++b)
      for (Int c = -4; c <= 4; ++c)
        for (Int d = -4; d <= 4; ++d) {
          const auto expected = oracle::determinantal_cokernel({{a, b}, {c, d}}, 2);
          REQUIRE(cokernel_of_relations(IntMatrix{{a, b}, {c, d}}) == expected);
        }
}

TEST_CASE("cokernel agrees with determinantal divisors: every 2x3 and 3x2 with entries in [-2, 2]") {
  const int values = 5;
  for (int code = 0; code < values * values * values * values * values * values; ++code) {
    std::vector<Int> e(6);
    for (int i = 0, c = code; i < 6; ++i, c /= values) e[i] = c % values - 2;
    REQUIRE(cokernel_of_relations(IntMatrix{{e[0], e[1], e[2]}, {e[3], e[4], e[5]}}) ==
            oracle::determinantal_cokernel({{e[0], e[1], e[2]}, {e[3], e[4], e[5]}}, 3));
    REQUIRE(cokernel_of_relations(IntMatrix{{e[0], e[1]}, {e[2], e[3]}, {e[4], e[5]}}) ==
            oracle::determinantal_cokernel({{e[0], e[1]}, {e[2], e[3]}, {e[4], e[5]}}, 2));
  }
}

TEST_CASE("cokernel agrees with determinantal divisors: sampled 3x3 and 4x4") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<Int> entry(-9, 9);
  for (int t = 0; t < 3000; ++t) {
    const std::size_t k = 3 + static_cast<std::size_t>(t % 2);
    std::vector<std::vector<Int>> a(k, std::vector<Int>(k));
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = a[i][j] = entry(rng) * (rng() % 3 == 0 ? 0 : 1);
    REQUIRE(cokernel_of_relations(m) == oracle::determinantal_cokernel(a, k));
  }
}

TEST_CASE("is_quotient examples") {
  CHECK(is_quotient(FinGenAb::from_cyclic_orders({2}, 1), FinGenAb::cyclic(4)));
  CHECK_FALSE(is_quotient(FinGenAb::from_cyclic_orders({2, 2}), FinGenAb::cyclic(4)));
  CHECK(is_quotient(FinGenAb::from_cyclic_orders({22}, 1), FinGenAb::cyclic(22)));
  // a free summand of the target uses up a free generator of the source
  CHECK_FALSE(is_quotient(FinGenAb::free(1), FinGenAb::from_cyclic_orders({2}, 1)));
  CHECK(is_quotient(FinGenAb::free(2), FinGenAb::from_cyclic_orders({2}, 1)));
  CHECK_FALSE(is_quotient(FinGenAb::cyclic(6), FinGenAb::free(1)));
  CHECK(is_quotient(FinGenAb::free(1), FinGenAb::trivial()));
}

TEST_CASE("is_quotient agrees with homomorphism search on all groups of order <= 48") {
  std::vector<FinGenAb> groups;
  for (Int n = 1; n <= 48; ++n)
    for (const auto& g : oracle::groups_of_order(n)) groups.push_back(g);
  for (const auto& a : groups)
    for (const auto& b : groups) REQUIRE(is_quotient(a, b) == oracle::brute_is_quotient(a, b));
}

TEST_CASE("is_quotient with a free source agrees with homomorphism search") {
  std::vector<FinGenAb> targets;
  for (Int n = 1; n <= 24; ++n)
    for (const auto& g : oracle::groups_of_order(n)) targets.push_back(g);
  std::vector<FinGenAb> sources;
  for (Int n = 1; n <= 8; ++n)
    for (const auto& g : oracle::groups_of_order(n))
      for (int r = 1; r <= 2; ++r) sources.push_back(g + FinGenAb::free(r));
  for (const auto& a : sources)
    for (const auto& b : targets) REQUIRE(is_quotient(a, b) == oracle::brute_is_quotient(a, b));
}

TEST_CASE("is_quotient with infinite target: reduction modulo a large exponent") {
  // a ->> b with b infinite is decided on a/Na ->> b/Nb once every p-part of N
  // exceeds the exponents of the torsion, which N = 8 * 9 does for these groups.
  const Int n = 8 * 9;
  const auto reduce = [n](const FinGenAb& g) {
    std::vector<Int> gens(static_cast<std::size_t>(g.free_rank()), n);
    for (const auto& f : g.primary_factors()) gens.push_back(std::gcd(f.order(), n));
    return gens;
  };
  const std::vector<FinGenAb> small = {FinGenAb::trivial(), FinGenAb::cyclic(2), FinGenAb::cyclic(4),
                                       FinGenAb::from_cyclic_orders({2, 2}), FinGenAb::cyclic(3)};
  for (const auto& ta : small)
    for (const auto& tb : small)
      for (int ra = 0; ra <= 2; ++ra)
        for (int rb = 1; rb <= 1; ++rb) {
          const auto a = ta + FinGenAb::free(ra);
          const auto b = tb + FinGenAb::free(rb);
          const auto gens = reduce(a);
          oracle::Cyclics target{reduce(b)};
          const std::vector<Int> orders(gens.begin(), gens.end());
          REQUIRE(is_quotient(a, b) == oracle::brute_surjects(orders, target));
        }
}

TEST_CASE("permutation invariance and text form") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::vector<Int> orders(rng() % 5);
    for (auto& o : orders) o = 1 + static_cast<Int>(rng() % 40);
    const auto g = FinGenAb::from_cyclic_orders(orders, 2);
    std::shuffle(orders.begin(), orders.end(), rng);
    REQUIRE(FinGenAb::from_cyclic_orders(orders, 2) == g);
  }
  CHECK(to_text(FinGenAb::trivial()) == "0");
  CHECK(to_text(FinGenAb::free(1)) == "Z");
  CHECK(to_text(FinGenAb::free(3)) == "Z^3");
  CHECK(to_text(FinGenAb::from_cyclic_orders({2, 4, 3}, 1)) == "Z + Z/2 + Z/12");
  CHECK(to_text(FinGenAb::cyclic(5)) == "Z/5");
}

TEST_CASE("JSON form round-trips byte for byte") {
  const auto g = FinGenAb::from_cyclic_orders({22}, 1);
  CHECK(to_json(g).dump() == R"({"free_rank":1,"invariant_factors":[22]})");
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    std::vector<Int> orders(rng() % 5);
    for (auto& o : orders) o = 1 + static_cast<Int>(rng() % 100);
    const auto h = FinGenAb::from_cyclic_orders(orders, static_cast<int>(rng() % 3));
    const std::string text = to_json(h).dump();
    REQUIRE(group_from_json(Json::parse(text)) == h);
    REQUIRE(to_json(group_from_json(Json::parse(text))).dump() == text);
  }
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"free_rank":-1,"invariant_factors":[]})")), DomainError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"free_rank":0})")), DomainError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"free_rank":0,"invariant_factors":[0]})")), DomainError);
}

TEST_CASE("torsion order overflows loudly") {
  std::vector<Int> orders(5, 1000003);
  CHECK_THROWS_AS(FinGenAb::from_cyclic_orders(orders).torsion_order(), std::overflow_error);
}
