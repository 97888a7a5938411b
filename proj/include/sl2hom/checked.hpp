#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace sl2hom {

using Int = std::int64_t;

// Overflow-detecting 64-bit arithmetic. Every exact computation in the
// library goes through these; wrapping is never acceptable.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int checked_pow(Int base, unsigned exp) {
  Int r = 1;
  while (exp-- > 0) r = checked_mul(r, base);
  return r;
}

inline Int checked_lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  const Int g = std::gcd(a, b);
  return checked_mul(a / g, b);
}

// Mathematical (non-negative) residue.
inline Int mod(Int a, Int m) {
  const Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace sl2hom
