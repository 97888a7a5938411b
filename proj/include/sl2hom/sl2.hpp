#pragma once

#include <array>
#include <string>
#include <variant>

#include "sl2hom/checked.hpp"
#include "sl2hom/rational.hpp"

namespace sl2hom {

/// Element of Z[1/n] for a square-free n >= 1: a rational whose denominator
/// is supported on the primes of n.
class NLocalRational {
 public:
  NLocalRational(Rational value, Int n);
  NLocalRational(Int num, Int den, Int n) : NLocalRational(Rational(num, den), n) {}

  const Rational& value() const { return value_; }
  Int context() const { return n_; }
  Int num() const { return value_.num(); }
  Int den() const { return value_.den(); }
  bool is_zero() const { return value_.is_zero(); }

  /// True iff the element is invertible in Z[1/n], i.e. +-(product of primes of n) up to
  /// the denominator.
  bool is_unit() const;
  /// Throws DomainError unless is_unit().
  NLocalRational unit_inverse() const;

  NLocalRational operator-() const { return {-value_, n_}; }
  friend NLocalRational operator+(const NLocalRational& x, const NLocalRational& y);
  friend NLocalRational operator-(const NLocalRational& x, const NLocalRational& y);
  friend NLocalRational operator*(const NLocalRational& x, const NLocalRational& y);
  friend bool operator==(const NLocalRational&, const NLocalRational&) = default;

 private:
  Rational value_;
  Int n_;
};

/// Determinant-one 2x2 matrix over Z[1/n].
class Mat2 {
 public:
  /// Throws DomainError on mismatched contexts or ad - bc != 1.
  Mat2(NLocalRational a, NLocalRational b, NLocalRational c, NLocalRational d);
  /// Convenience: entries given as rationals over Z[1/n].
  static Mat2 of(Int n, Rational a, Rational b, Rational c, Rational d);
  static Mat2 identity(Int n);

  const NLocalRational& a() const { return a_; }
  const NLocalRational& b() const { return b_; }
  const NLocalRational& c() const { return c_; }
  const NLocalRational& d() const { return d_; }
  Int context() const { return a_.context(); }

  friend bool operator==(const Mat2&, const Mat2&) = default;
  std::string str() const;

 private:
  NLocalRational a_, b_, c_, d_;
};

enum class ElementaryKind { E12, E21, D, W };

/// E12(x) = (1 x; 0 1), E21(x) = (1 0; x 1), D(u) = (u 0; 0 1/u) for a unit u,
/// W = (0 1; -1 0) (argument ignored).
Mat2 elementary(ElementaryKind kind, const NLocalRational& arg);
Mat2 e12(const NLocalRational& x);
Mat2 e21(const NLocalRational& x);
Mat2 diag(const NLocalRational& unit);
Mat2 w_matrix(Int n);

/// Throws DomainError on context mismatch.
Mat2 multiply(const Mat2& x, const Mat2& y);
inline Mat2 operator*(const Mat2& x, const Mat2& y) { return multiply(x, y); }
Mat2 invert(const Mat2& x);

/// Nonzero ideal of Z[1/n], stored as its canonical generator: a positive integer
/// coprime to n.
class Ideal {
 public:
  static Ideal generated_by(const NLocalRational& x);
  static Ideal generated_by(Int x, Int n) { return generated_by(NLocalRational(x, 1, n)); }

  Int generator() const { return generator_; }
  Int context() const { return n_; }
  bool contains(const NLocalRational& x) const;
  Ideal operator*(const Ideal& other) const;

 private:
  Ideal(Int generator, Int n) : generator_(generator), n_(n) {}
  Int generator_;
  Int n_;
};

/// Gamma_0(n,p): p | c.
struct Gamma0 {
  Int p;
};
/// Gamma_1(n,p): p | a-1, d-1, c.
struct Gamma1 {
  Int p;
};
/// Gamma(n,p): p | b, c, a-1, d-1.
struct GammaPrincipal {
  Int p;
};
/// b in I1, c in I2, a-1 and d-1 in I1*I2.
struct GammaTilde {
  Ideal i1;
  Ideal i2;
};
using Subgroup = std::variant<Gamma0, Gamma1, GammaPrincipal, GammaTilde>;

/// Membership test; "p | x" for x in Z[1/n] means v_p(x) >= 1. For the prime-level
/// subgroups p must be prime and p must not divide n (DomainError otherwise).
bool membership(const Mat2& m, const Subgroup& sub);

/// (a b; c d) -> (a pb; c/p d). Throws DomainError unless m lies in Gamma_0(n,p).
Mat2 partner_embed(const Mat2& m, Int p);

/// 2x2 matrix over Z/modulus, entries in [0, modulus).
struct ModMat2 {
  Int modulus;
  std::array<Int, 4> e;  // a b c d

  Int det() const;
  friend bool operator==(const ModMat2&, const ModMat2&) = default;
};

ModMat2 mod_identity(Int m);
ModMat2 mod_multiply(const ModMat2& x, const ModMat2& y);

/// Entrywise reduction. Throws DomainError unless gcd(modulus, n) = 1.
ModMat2 reduce_mod(const Mat2& m, Int modulus);

}  // namespace sl2hom
