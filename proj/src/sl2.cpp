#include "sl2hom/sl2.hpp"

#include <numeric>

#include "sl2hom/arith.hpp"
#include "sl2hom/error.hpp"

namespace sl2hom {

namespace {

// Removes from |x| every prime factor shared with n.
Int strip_primes_of(Int x, Int n) {
  x = x < 0 ? checked_neg(x) : x;
  for (Int g = std::gcd(x, n); g > 1; g = std::gcd(x, n)) x /= g;
  return x;
}

void require_same_context(Int n1, Int n2) {
  if (n1 != n2) {
    throw DomainError("Z[1/n] context mismatch: " + std::to_string(n1) + " vs " + std::to_string(n2));
  }
}

void require_level_prime(Int p, Int n) {
  if (!is_prime(p)) throw DomainError("congruence level must be prime, got " + std::to_string(p));
  if (n % p == 0) {
    throw DomainError("level " + std::to_string(p) + " divides n = " + std::to_string(n));
  }
}

bool divisible(Int p, const NLocalRational& x) { return x.is_zero() || x.num() % p == 0; }

}  // namespace

NLocalRational::NLocalRational(Rational value, Int n) : value_(value), n_(n) {
  if (n < 1 || !is_squarefree(n)) {
    throw DomainError("Z[1/n] needs a square-free n >= 1, got " + std::to_string(n));
  }
  if (strip_primes_of(value_.den(), n) != 1) {
    throw DomainError(value_.str() + " is not in Z[1/" + std::to_string(n) + "]");
  }
}

bool NLocalRational::is_unit() const { return !is_zero() && strip_primes_of(num(), n_) == 1; }

NLocalRational NLocalRational::unit_inverse() const {
  if (!is_unit()) {
    throw DomainError(value_.str() + " is not a unit of Z[1/" + std::to_string(n_) + "]");
  }
  return {Rational(1) / value_, n_};
}

NLocalRational operator+(const NLocalRational& x, const NLocalRational& y) {
  require_same_context(x.n_, y.n_);
  return {x.value_ + y.value_, x.n_};
}

NLocalRational operator-(const NLocalRational& x, const NLocalRational& y) {
  require_same_context(x.n_, y.n_);
  return {x.value_ - y.value_, x.n_};
}

NLocalRational operator*(const NLocalRational& x, const NLocalRational& y) {
  require_same_context(x.n_, y.n_);
  return {x.value_ * y.value_, x.n_};
}

Mat2::Mat2(NLocalRational a, NLocalRational b, NLocalRational c, NLocalRational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const Int n = a_.context();
  require_same_context(n, b_.context());
  require_same_context(n, c_.context());
  require_same_context(n, d_.context());
  const Rational det = a_.value() * d_.value() - b_.value() * c_.value();
  if (det != Rational(1)) throw DomainError("matrix " + str() + " has determinant " + det.str());
}

Mat2 Mat2::of(Int n, Rational a, Rational b, Rational c, Rational d) {
  return {NLocalRational(a, n), NLocalRational(b, n), NLocalRational(c, n), NLocalRational(d, n)};
}

Mat2 Mat2::identity(Int n) { return of(n, 1, 0, 0, 1); }

std::string Mat2::str() const {
  return "(" + a_.value().str() + ", " + b_.value().str() + "; " + c_.value().str() + ", " +
         d_.value().str() + ")";
}

Mat2 elementary(ElementaryKind kind, const NLocalRational& arg) {
  const Int n = arg.context();
  const NLocalRational zero(0, 1, n), one(1, 1, n);
  switch (kind) {
    case ElementaryKind::E12: return {one, arg, zero, one};
    case ElementaryKind::E21: return {one, zero, arg, one};
    case ElementaryKind::D: return {arg, zero, zero, arg.unit_inverse()};
    case ElementaryKind::W: return {zero, one, -one, zero};
  }
  throw DomainError("unknown elementary kind");
}

Mat2 e12(const NLocalRational& x) { return elementary(ElementaryKind::E12, x); }
Mat2 e21(const NLocalRational& x) { return elementary(ElementaryKind::E21, x); }
Mat2 diag(const NLocalRational& unit) { return elementary(ElementaryKind::D, unit); }
Mat2 w_matrix(Int n) { return elementary(ElementaryKind::W, NLocalRational(0, 1, n)); }

Mat2 multiply(const Mat2& x, const Mat2& y) {
  require_same_context(x.context(), y.context());
  return {x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(),
          x.c() * y.a() + x.d() * y.c(), x.c() * y.b() + x.d() * y.d()};
}

Mat2 invert(const Mat2& x) { return {x.d(), -x.b(), -x.c(), x.a()}; }

Ideal Ideal::generated_by(const NLocalRational& x) {
  if (x.is_zero()) throw DomainError("the zero ideal is not supported");
  return {strip_primes_of(x.num(), x.context()), x.context()};
}

bool Ideal::contains(const NLocalRational& x) const {
  require_same_context(n_, x.context());
  return x.is_zero() || x.num() % generator_ == 0;
}

Ideal Ideal::operator*(const Ideal& other) const {
  require_same_context(n_, other.n_);
  return {checked_mul(generator_, other.generator_), n_};
}

bool membership(const Mat2& m, const Subgroup& sub) {
  const Int n = m.context();
  const NLocalRational one(1, 1, n);
  return std::visit(
      [&](const auto& s) -> bool {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, GammaTilde>) {
          require_same_context(n, s.i1.context());
          require_same_context(n, s.i2.context());
          const Ideal both = s.i1 * s.i2;
          return s.i1.contains(m.b()) && s.i2.contains(m.c()) && both.contains(m.a() - one) &&
                 both.contains(m.d() - one);
        } else {
          require_level_prime(s.p, n);
          if constexpr (std::is_same_v<S, Gamma0>) {
            return divisible(s.p, m.c());
          } else if constexpr (std::is_same_v<S, Gamma1>) {
            return divisible(s.p, m.c()) && divisible(s.p, m.a() - one) && divisible(s.p, m.d() - one);
          } else {
            return divisible(s.p, m.b()) && divisible(s.p, m.c()) && divisible(s.p, m.a() - one) &&
                   divisible(s.p, m.d() - one);
          }
        }
      },
      sub);
}

Mat2 partner_embed(const Mat2& m, Int p) {
  if (!membership(m, Gamma0{p})) {
    throw DomainError("partner_embed: " + m.str() + " is not in Gamma_0(" +
                      std::to_string(m.context()) + ", " + std::to_string(p) + ")");
  }
  const Int n = m.context();
  return {m.a(), m.b() * NLocalRational(p, 1, n), NLocalRational(m.c().value() / Rational(p), n),
          m.d()};
}

Int ModMat2::det() const {
  return mod(checked_sub(checked_mul(e[0], e[3]), checked_mul(e[1], e[2])), modulus);
}

ModMat2 mod_identity(Int m) { return {m, {1 % m, 0, 0, 1 % m}}; }

ModMat2 mod_multiply(const ModMat2& x, const ModMat2& y) {
  if (x.modulus != y.modulus) throw DomainError("modulus mismatch");
  const Int m = x.modulus;
  const auto& a = x.e;
  const auto& b = y.e;
  return {m,
          {(a[0] * b[0] + a[1] * b[2]) % m, (a[0] * b[1] + a[1] * b[3]) % m,
           (a[2] * b[0] + a[3] * b[2]) % m, (a[2] * b[1] + a[3] * b[3]) % m}};
}

ModMat2 reduce_mod(const Mat2& m, Int modulus) {
  if (modulus < 2) throw DomainError("reduce_mod: modulus must be >= 2");
  if (std::gcd(modulus, m.context()) != 1) {
    throw DomainError("reduce_mod: modulus " + std::to_string(modulus) + " shares a prime with n = " +
                      std::to_string(m.context()));
  }
  const auto entry = [modulus](const NLocalRational& x) {
    return mod(checked_mul(mod(x.num(), modulus), inverse_mod(x.den(), modulus)), modulus);
  };
  return {modulus, {entry(m.a()), entry(m.b()), entry(m.c()), entry(m.d())}};
}

}  // namespace sl2hom
