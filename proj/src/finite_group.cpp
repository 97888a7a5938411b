#include "sl2hom/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "sl2hom/arith.hpp"
#include "sl2hom/error.hpp"

namespace sl2hom {

namespace {

constexpr std::size_t kPairwiseCommutatorLimit = 2000;

void require_modulus(Int m, const OracleConfig& cfg) {
  if (m < 2) throw DomainError("modulus must be >= 2, got " + std::to_string(m));
  if (m > cfg.modulus_bound) {
    throw BoundExceeded("modulus " + std::to_string(m) + " exceeds oracle bound " +
                        std::to_string(cfg.modulus_bound));
  }
}

ModMat2 mod_inverse(const ModMat2& x) {
  const Int m = x.modulus;
  return {m, {x.e[3], mod(-x.e[1], m), mod(-x.e[2], m), x.e[0]}};
}

// Closure of gens under right multiplication, starting from the identity.
std::vector<ModMat2> closure(Int m, std::span<const ModMat2> gens) {
  const auto key = [m](const ModMat2& x) {
    return static_cast<std::size_t>(((x.e[0] * m + x.e[1]) * m + x.e[2]) * m + x.e[3]);
  };
  std::vector<bool> seen(static_cast<std::size_t>(m * m * m * m), false);
  std::vector<ModMat2> out{mod_identity(m)};
  seen[key(out[0])] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      const ModMat2 y = mod_multiply(out[i], g);
      if (!seen[key(y)]) {
        seen[key(y)] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace

FiniteMatrixGroup::FiniteMatrixGroup(Int modulus, std::vector<ModMat2> elements)
    : modulus_(modulus), elements_(std::move(elements)),
      slot_(static_cast<std::size_t>(modulus * modulus * modulus * modulus), -1) {
  const auto id = std::find(elements_.begin(), elements_.end(), mod_identity(modulus));
  if (id == elements_.end()) throw DomainError("finite matrix group without identity");
  std::iter_swap(elements_.begin(), id);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].modulus != modulus || elements_[i].det() != 1 % modulus)
      throw DomainError("element is not in SL_2(Z/" + std::to_string(modulus) + ")");
    slot_[key(elements_[i])] = static_cast<std::int32_t>(i);
  }
}

std::size_t FiniteMatrixGroup::key(const ModMat2& x) const {
  const Int m = modulus_;
  return static_cast<std::size_t>(((x.e[0] * m + x.e[1]) * m + x.e[2]) * m + x.e[3]);
}

std::optional<std::size_t> FiniteMatrixGroup::index_of(const ModMat2& x) const {
  if (x.modulus != modulus_) return std::nullopt;
  for (Int v : x.e) {
    if (v < 0 || v >= modulus_) return std::nullopt;
  }
  const auto s = slot_[key(x)];
  if (s < 0) return std::nullopt;
  return static_cast<std::size_t>(s);
}

std::size_t FiniteMatrixGroup::multiply(std::size_t i, std::size_t j) const {
  return static_cast<std::size_t>(slot_[key(mod_multiply(elements_[i], elements_[j]))]);
}

std::size_t FiniteMatrixGroup::inverse(std::size_t i) const {
  return static_cast<std::size_t>(slot_[key(mod_inverse(elements_[i]))]);
}

FiniteMatrixGroup FiniteMatrixGroup::generated_by(Int modulus, std::span<const ModMat2> gens,
                                                  const OracleConfig& cfg) {
  require_modulus(modulus, cfg);
  for (const auto& g : gens) {
    if (g.modulus != modulus || g.det() != 1 % modulus)
      throw DomainError("generator is not in SL_2(Z/" + std::to_string(modulus) + ")");
  }
  return {modulus, closure(modulus, gens)};
}

FiniteMatrixGroup enumerate_sl2(Int m, const OracleConfig& cfg) {
  require_modulus(m, cfg);
  std::vector<ModMat2> elems;
  for (Int a = 0; a < m; ++a)
    for (Int b = 0; b < m; ++b)
      for (Int c = 0; c < m; ++c)
        for (Int d = 0; d < m; ++d) {
          if ((a * d - b * c - 1) % m == 0) elems.push_back({m, {a, b, c, d}});
        }
  return {m, std::move(elems)};
}

FiniteMatrixGroup enumerate_borel(Int p, BorelSide side, const OracleConfig& cfg) {
  require_modulus(p, cfg);
  if (!is_prime(p)) throw DomainError("Borel subgroup needs a prime, got " + std::to_string(p));
  std::vector<ModMat2> elems;
  for (Int a = 1; a < p; ++a) {
    const Int ainv = inverse_mod(a, p);
    for (Int x = 0; x < p; ++x) {
      if (side == BorelSide::Upper) {
        elems.push_back({p, {a, x, 0, ainv}});
      } else {
        elems.push_back({p, {a, 0, x, ainv}});
      }
    }
  }
  return {p, std::move(elems)};
}

std::vector<ModMat2> generating_set(const FiniteMatrixGroup& g) {
  std::vector<ModMat2> gens;
  std::vector<ModMat2> span{mod_identity(g.modulus())};
  std::vector<bool> covered(g.order(), false);
  covered[FiniteMatrixGroup::identity()] = true;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (covered[i]) continue;
    gens.push_back(g.element(i));
    span = closure(g.modulus(), gens);
    for (const auto& x : span) covered[*g.index_of(x)] = true;
  }
  return gens;
}

FiniteMatrixGroup commutator_subgroup(const FiniteMatrixGroup& g) {
  const Int m = g.modulus();
  const auto commutator = [&](std::size_t x, std::size_t y) {
    return g.multiply(g.multiply(x, y), g.multiply(g.inverse(x), g.inverse(y)));
  };

  std::vector<bool> in_set(g.order(), false);
  std::vector<ModMat2> gens;
  const auto add_gen = [&](std::size_t c) {
    if (!in_set[c]) {
      in_set[c] = true;
      gens.push_back(g.element(c));
    }
  };

  if (g.order() <= kPairwiseCommutatorLimit) {
    for (std::size_t x = 0; x < g.order(); ++x)
      for (std::size_t y = 0; y < g.order(); ++y) add_gen(commutator(x, y));
    return {m, closure(m, gens)};
  }

  std::vector<std::size_t> ggens;
  for (const auto& x : generating_set(g)) ggens.push_back(*g.index_of(x));
  for (std::size_t x : ggens)
    for (std::size_t y : ggens) add_gen(commutator(x, y));

  // normal closure: grow until conjugation by the generators of G stays inside
  for (;;) {
    const auto sub = closure(m, gens);
    std::vector<bool> member(g.order(), false);
    for (const auto& x : sub) member[*g.index_of(x)] = true;
    bool grew = false;
    const std::size_t count = gens.size();
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t s = *g.index_of(gens[k]);
      for (std::size_t x : ggens) {
        const std::size_t c = g.multiply(g.multiply(x, s), g.inverse(x));
        if (!member[c]) {
          member[c] = true;
          add_gen(c);
          grew = true;
        }
      }
    }
    if (!grew) return {m, sub};
  }
}

FinGenAb abelianization(const FiniteMatrixGroup& g, const OracleConfig& cfg) {
  const Int bound = cfg.modulus_bound;
  if (static_cast<Int>(g.order()) > bound * bound * bound) {
    throw BoundExceeded("group of order " + std::to_string(g.order()) + " exceeds bound^3");
  }
  const auto comm = commutator_subgroup(g);
  std::vector<std::size_t> comm_idx;
  for (const auto& x : comm.elements()) comm_idx.push_back(*g.index_of(x));

  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset(g.order(), kUnassigned);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (coset[i] != kUnassigned) continue;
    for (std::size_t n : comm_idx) coset[g.multiply(i, n)] = reps.size();
    reps.push_back(i);
  }

  std::map<Int, Int> census;
  const std::size_t trivial = coset[FiniteMatrixGroup::identity()];
  for (std::size_t r : reps) {
    Int k = 1;
    for (std::size_t x = r; coset[x] != trivial; x = g.multiply(x, r)) ++k;
    ++census[k];
  }
  return from_order_census(census);
}

FinGenAb fp_coinvariants(Int p) {
  if (!is_prime(p)) throw DomainError("fp_coinvariants needs a prime, got " + std::to_string(p));
  std::vector<bool> in_span(static_cast<std::size_t>(p), false);
  in_span[0] = true;
  std::deque<Int> frontier{0};
  std::vector<Int> relations;
  for (Int a = 1; a < p; ++a)
    for (Int x = 0; x < p; ++x) relations.push_back(mod((a * a - 1) * x, p));
  while (!frontier.empty()) {
    const Int y = frontier.front();
    frontier.pop_front();
    for (Int r : relations) {
      const Int z = (y + r) % p;
      if (!in_span[static_cast<std::size_t>(z)]) {
        in_span[static_cast<std::size_t>(z)] = true;
        frontier.push_back(z);
      }
    }
  }
  const auto span_size = std::count(in_span.begin(), in_span.end(), true);
  return FinGenAb::cyclic(p / span_size);
}

bool generates(const FiniteMatrixGroup& g, std::span<const ModMat2> gens) {
  for (const auto& x : gens) {
    if (!g.contains(x)) throw DomainError("generator is not an element of the group");
  }
  return closure(g.modulus(), gens).size() == g.order();
}

Int reduction_kernel_order(Int p, int k, const OracleConfig& cfg) {
  if (!is_prime(p)) throw DomainError("reduction kernel needs a prime, got " + std::to_string(p));
  if (k < 1) throw DomainError("reduction kernel needs k >= 1");
  const Int m = checked_pow(p, static_cast<unsigned>(k));
  const auto g = enumerate_sl2(m, cfg);
  return static_cast<Int>(std::count_if(g.elements().begin(), g.elements().end(), [p](const ModMat2& x) {
    return x.e[0] % p == 1 % p && x.e[1] % p == 0 && x.e[2] % p == 0 && x.e[3] % p == 1 % p;
  }));
}

bool kernel_index_check(Int p, int k, const OracleConfig& cfg) {
  return reduction_kernel_order(p, k, cfg) == checked_pow(p, static_cast<unsigned>(3 * (k - 1)));
}

}  // namespace sl2hom
