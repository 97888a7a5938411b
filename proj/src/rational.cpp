#include "sl2hom/rational.hpp"

#include <charconv>
#include <numeric>

#include "sl2hom/error.hpp"

namespace sl2hom {

namespace {

Int parse_int(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("malformed rational '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational::Rational(Int num, Int den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = checked_neg(num);
    den = checked_neg(den);
  }
  const Int g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

Rational operator+(const Rational& x, const Rational& y) {
  const Int g = std::gcd(x.den_, y.den_);
  const Int num = checked_add(checked_mul(x.num_, y.den_ / g), checked_mul(y.num_, x.den_ / g));
  return {num, checked_mul(x.den_, y.den_ / g)};
}

Rational operator*(const Rational& x, const Rational& y) {
  // cross-cancel first to keep intermediates small
  const Int g1 = std::gcd(x.num_, y.den_);
  const Int g2 = std::gcd(y.num_, x.den_);
  const Int a = x.num_ / g1, d = y.den_ / g1;
  const Int c = y.num_ / g2, b = x.den_ / g2;
  return {checked_mul(a, c), checked_mul(b, d)};
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw DomainError("division by zero");
  return x * Rational(y.den_, y.num_);
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

int valuation(Int p, Int x) {
  if (p < 2) throw DomainError("valuation at " + std::to_string(p));
  if (x == 0) throw DomainError("valuation of zero");
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

int valuation(Int p, const Rational& q) {
  if (q.is_zero()) throw DomainError("valuation of zero");
  return valuation(p, q.num()) - valuation(p, q.den());
}

}  // namespace sl2hom
