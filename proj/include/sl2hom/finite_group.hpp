#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sl2hom/abelian.hpp"
#include "sl2hom/sl2.hpp"

namespace sl2hom {

struct OracleConfig {
  /// Largest modulus any enumeration may use. |SL_2(Z/32)| = 24576.
  Int modulus_bound = 32;
};

enum class BorelSide { Upper, Lower };

class FiniteMatrixGroup;

/// All of SL_2(Z/m), 2 <= m <= cfg.modulus_bound.
FiniteMatrixGroup enumerate_sl2(Int m, const OracleConfig& cfg = {});

/// B(F_p) = {(a b; 0 1/a)} (Upper) or its transpose B'(F_p) (Lower); order p(p-1).
FiniteMatrixGroup enumerate_borel(Int p, BorelSide side, const OracleConfig& cfg = {});

/// Fully enumerated finite group of determinant-one 2x2 matrices over Z/m.
/// Elements are addressed by index; index 0 is always the identity.
class FiniteMatrixGroup {
 public:
  Int modulus() const { return modulus_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<ModMat2>& elements() const { return elements_; }
  const ModMat2& element(std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const ModMat2& x) const;
  bool contains(const ModMat2& x) const { return index_of(x).has_value(); }

  static constexpr std::size_t identity() { return 0; }
  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const;

  /// Subgroup of SL_2(Z/m) generated by gens (closure under multiplication).
  static FiniteMatrixGroup generated_by(Int modulus, std::span<const ModMat2> gens,
                                        const OracleConfig& cfg = {});

 private:
  friend FiniteMatrixGroup enumerate_sl2(Int m, const OracleConfig& cfg);
  friend FiniteMatrixGroup enumerate_borel(Int p, BorelSide side, const OracleConfig& cfg);
  friend FiniteMatrixGroup commutator_subgroup(const FiniteMatrixGroup& g);

  FiniteMatrixGroup(Int modulus, std::vector<ModMat2> elements);
  std::size_t key(const ModMat2& x) const;

  Int modulus_;
  std::vector<ModMat2> elements_;
  std::vector<std::int32_t> slot_;  // key -> index or -1
};

/// A small generating set, found greedily in element order.
std::vector<ModMat2> generating_set(const FiniteMatrixGroup& g);

/// [G, G]. All pairwise commutators when |G| <= 2000, otherwise the normal closure
/// of commutators of a generating set.
FiniteMatrixGroup commutator_subgroup(const FiniteMatrixGroup& g);

/// G/[G,G] decomposed through its order census. Requires |G| <= bound^3.
FinGenAb abelianization(const FiniteMatrixGroup& g, const OracleConfig& cfg = {});

/// (F_p) modulo the span of (a^2 - 1)x, by enumeration.
FinGenAb fp_coinvariants(Int p);

/// True iff gens generate all of g. Throws DomainError if some generator lies outside g.
bool generates(const FiniteMatrixGroup& g, std::span<const ModMat2> gens);

/// |ker(SL_2(Z/p^k) -> SL_2(Z/p))| by enumeration.
Int reduction_kernel_order(Int p, int k, const OracleConfig& cfg = {});

/// True iff the kernel above has order p^(3(k-1)).
bool kernel_index_check(Int p, int k, const OracleConfig& cfg = {});

}  // namespace sl2hom
