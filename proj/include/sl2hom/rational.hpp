#pragma once

#include <string>
#include <string_view>

#include "sl2hom/checked.hpp"

namespace sl2hom {

/// Exact rational number in lowest terms with positive denominator.
/// All arithmetic is overflow-checked.
class Rational {
 public:
  Rational() = default;
  Rational(Int num) : num_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den);

  /// Parses "a" or "a/b" (optional sign on a). Throws DomainError on malformed input.
  static Rational parse(std::string_view text);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return {checked_neg(num_), den_}; }
  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  friend bool operator==(const Rational&, const Rational&) = default;

  std::string str() const;

 private:
  Int num_ = 0;
  Int den_ = 1;
};

/// v_p(q) = v_p(num) - v_p(den). Throws DomainError for q = 0.
int valuation(Int p, const Rational& q);

/// v_p of a nonzero integer.
int valuation(Int p, Int x);

}  // namespace sl2hom
