#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "sl2hom/arith.hpp"
#include "sl2hom/error.hpp"
#include "sl2hom/tame.hpp"

using namespace sl2hom;

namespace {

const std::vector<Int> kPrimes = {3, 5, 7, 11, 13, 17, 19, 23};

std::vector<Rational> rationals_up_to(Int bound) {
  std::vector<Rational> out;
  for (Int den = 1; den <= bound; ++den)
    for (Int num = -bound; num <= bound; ++num)
      if (num != 0 && std::gcd(num, den) == 1) out.emplace_back(num, den);
  return out;
}

}  // namespace

TEST_CASE("tame symbol examples") {
  CHECK(tame_symbol(5, {{Rational(5), Rational(5)}}) == 4);
  CHECK(tame_symbol(7, {{Rational(7), Rational(3)}}) == 3);
  CHECK(tame_symbol(3, {{Rational(2), Rational(5)}}) == 1);
  CHECK(tame_symbol(7, {{Rational(3), Rational(7)}}) == 5);  // 1/3 mod 7
  CHECK(tame_symbol(5, SymbolProduct{}) == 1);
  CHECK(tame_symbol(5, {{Rational(5), Rational(2)}, {Rational(5), Rational(3)}}) == 1);
}

TEST_CASE("tame symbol errors") {
  CHECK_THROWS_AS(tame_symbol(2, {{Rational(2), Rational(3)}}), DomainError);
  CHECK_THROWS_AS(tame_symbol(9, {{Rational(2), Rational(3)}}), DomainError);
  CHECK_THROWS_AS(SymbolProduct{}.add(Rational(0), Rational(3)), DomainError);
}

TEST_CASE("delta tuple") {
  const std::vector<Int> p57 = {5, 7};
  CHECK(delta_tuple(p57, {{Rational(35), Rational(2)}}) == std::vector<Int>{2, 2});
  const std::vector<Int> p3 = {3};
  CHECK(delta_tuple(p3, {{Rational(1), Rational(17, 4)}}) == std::vector<Int>{1});
  const std::vector<Int> p5711 = {5, 7, 11};
  CHECK(delta_tuple(p5711, {{Rational(2), Rational(3)}}) == std::vector<Int>{1, 1, 1});
  const std::vector<Int> dup = {5, 5};
  CHECK_THROWS_AS(delta_tuple(dup, {{Rational(2), Rational(3)}}), DomainError);
}

TEST_CASE("agrees with the definition evaluated naively") {
  const auto xs = rationals_up_to(12);
  for (Int p : kPrimes)
    for (const auto& a : xs)
      for (const auto& b : xs) REQUIRE(tame_symbol(p, {{a, b}}) == oracle::naive_tame(p, a, b));
}

TEST_CASE("Steinberg relation and antisymmetry") {
  for (const auto& a : rationals_up_to(30))
    for (Int p : kPrimes) {
      if (a != Rational(1)) REQUIRE(tame_symbol(p, {{a, Rational(1) - a}}) == 1);
      REQUIRE(tame_symbol(p, {{a, -a}}) == 1);
      REQUIRE(tame_symbol(p, {{a, a}}) == tame_symbol(p, {{a, Rational(-1)}}));
    }
}

TEST_CASE("bilinearity on small rationals") {
  const auto xs = rationals_up_to(4);
  for (Int p : {3, 5, 7, 11})
    for (const auto& a : xs)
      for (const auto& a2 : xs)
        for (const auto& b : xs) {
          REQUIRE(tame_symbol(p, {{a * a2, b}}) == tame_symbol(p, {{a, b}, {a2, b}}));
          REQUIRE(tame_symbol(p, {{b, a * a2}}) == tame_symbol(p, {{b, a}, {b, a2}}));
          REQUIRE(tame_symbol(p, {{a, b}, {b, a}}) == 1);
        }
}

TEST_CASE("surjectivity witness generates the units") {
  for (Int p : kPrimes) {
    const Int b = surjectivity_witness(p);
    CHECK(multiplicative_order(tame_symbol(p, {{Rational(p), Rational(b)}}), p) == p - 1);
    CHECK(b == primitive_root(p));
  }
}
