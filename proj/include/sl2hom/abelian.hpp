#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sl2hom/checked.hpp"

namespace sl2hom {

/// A cyclic summand Z/p^e with p prime and e >= 1.
struct PrimaryFactor {
  Int prime;
  int exponent;

  Int order() const;
  friend auto operator<=>(const PrimaryFactor&, const PrimaryFactor&) = default;
};

/// Finitely generated abelian group Z^r + (sum of Z/p^e), kept in canonical
/// primary form: factors sorted by (p, e), no trivial factors. Isomorphism is
/// therefore plain equality.
class FinGenAb {
 public:
  FinGenAb() = default;

  static FinGenAb trivial() { return {}; }
  static FinGenAb free(int rank);
  static FinGenAb cyclic(Int order);

  /// Z^free_rank + Z/orders[0] + ... ; orders must be >= 1, order-1 summands vanish.
  static FinGenAb from_cyclic_orders(std::span<const Int> orders, int free_rank = 0);
  static FinGenAb from_cyclic_orders(std::initializer_list<Int> orders, int free_rank = 0) {
    return from_cyclic_orders(std::span<const Int>(orders.begin(), orders.size()), free_rank);
  }
  /// Validates primality of every prime and exponent >= 1, then sorts.
  static FinGenAb from_primary(std::vector<PrimaryFactor> factors, int free_rank = 0);

  int free_rank() const { return free_rank_; }
  const std::vector<PrimaryFactor>& primary_factors() const { return factors_; }

  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
  /// Order of the torsion subgroup (overflow-checked).
  Int torsion_order() const;
  FinGenAb torsion() const;

  friend bool operator==(const FinGenAb&, const FinGenAb&) = default;

 private:
  int free_rank_ = 0;
  std::vector<PrimaryFactor> factors_;
};

FinGenAb direct_sum(const FinGenAb& a, const FinGenAb& b);
inline FinGenAb operator+(const FinGenAb& a, const FinGenAb& b) { return direct_sum(a, b); }

inline bool is_isomorphic(const FinGenAb& a, const FinGenAb& b) { return a == b; }

/// Invariant factors d1 | d2 | ... | dk of the torsion part, each > 1.
std::vector<Int> invariant_factors(const FinGenAb& g);
/// Inverse of invariant_factors; accepts any list of orders >= 1.
FinGenAb from_invariant_factors(std::span<const Int> factors, int free_rank = 0);

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> data_;
};

/// Nonzero diagonal entries of the Smith normal form (positive, each dividing the next).
std::vector<Int> smith_diagonal(IntMatrix m);

/// Z^cols / (row span of relations).
FinGenAb cokernel_of_relations(const IntMatrix& relations);

/// True iff there is a surjective homomorphism a -> b.
bool is_quotient(const FinGenAb& a, const FinGenAb& b);

/// element order -> number of elements of that order. Throws DomainError if g is infinite.
std::map<Int, Int> order_census(const FinGenAb& g);

/// Rebuilds a finite abelian group from its order census. Throws DomainError if the
/// census is not that of any finite abelian group.
FinGenAb from_order_census(const std::map<Int, Int>& census);

/// "Z^r + Z/d1 + Z/d2 ...", "0" for the trivial group, "Z" for rank one.
std::string to_text(const FinGenAb& g);

}  // namespace sl2hom
