#include "sl2hom/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "sl2hom/arith.hpp"
#include "sl2hom/error.hpp"

namespace sl2hom {

namespace {

void append_cyclic(std::vector<PrimaryFactor>& out, Int order) {
  if (order < 1) throw DomainError("cyclic order must be >= 1, got " + std::to_string(order));
  for (const auto& [p, k] : factorize(order)) out.push_back({p, k});
}

void require_rank(int r) {
  if (r < 0) throw DomainError("free rank must be non-negative, got " + std::to_string(r));
}

// prime -> exponents at that prime, in descending order.
std::map<Int, std::vector<int>> exponents_by_prime(const FinGenAb& g) {
  std::map<Int, std::vector<int>> out;
  for (const auto& f : g.primary_factors()) out[f.prime].push_back(f.exponent);
  for (auto& [p, es] : out) std::sort(es.begin(), es.end(), std::greater<>());
  return out;
}

int count_at_least(const std::vector<int>& exps, int j) {
  return static_cast<int>(std::count_if(exps.begin(), exps.end(), [j](int e) { return e >= j; }));
}

}  // namespace

Int PrimaryFactor::order() const { return checked_pow(prime, static_cast<unsigned>(exponent)); }

FinGenAb FinGenAb::free(int rank) {
  require_rank(rank);
  FinGenAb g;
  g.free_rank_ = rank;
  return g;
}

FinGenAb FinGenAb::cyclic(Int order) { return from_cyclic_orders({order}); }

FinGenAb FinGenAb::from_cyclic_orders(std::span<const Int> orders, int free_rank) {
  require_rank(free_rank);
  FinGenAb g;
  g.free_rank_ = free_rank;
  for (Int o : orders) append_cyclic(g.factors_, o);
  std::sort(g.factors_.begin(), g.factors_.end());
  return g;
}

FinGenAb FinGenAb::from_primary(std::vector<PrimaryFactor> factors, int free_rank) {
  require_rank(free_rank);
  for (const auto& f : factors) {
    if (!is_prime(f.prime)) throw DomainError("primary factor with non-prime " + std::to_string(f.prime));
    if (f.exponent < 1) throw DomainError("primary factor exponent must be >= 1");
  }
  std::sort(factors.begin(), factors.end());
  FinGenAb g;
  g.free_rank_ = free_rank;
  g.factors_ = std::move(factors);
  return g;
}

Int FinGenAb::torsion_order() const {
  Int n = 1;
  for (const auto& f : factors_) n = checked_mul(n, f.order());
  return n;
}

FinGenAb FinGenAb::torsion() const {
  FinGenAb t = *this;
  t.free_rank_ = 0;
  return t;
}

FinGenAb direct_sum(const FinGenAb& a, const FinGenAb& b) {
  std::vector<PrimaryFactor> merged;
  merged.reserve(a.primary_factors().size() + b.primary_factors().size());
  std::merge(a.primary_factors().begin(), a.primary_factors().end(), b.primary_factors().begin(),
             b.primary_factors().end(), std::back_inserter(merged));
  return FinGenAb::from_primary(std::move(merged), a.free_rank() + b.free_rank());
}

std::vector<Int> invariant_factors(const FinGenAb& g) {
  const auto by_prime = exponents_by_prime(g);
  std::size_t k = 0;
  for (const auto& [p, es] : by_prime) k = std::max(k, es.size());
  // i-th largest factor collects the i-th largest power of every prime
  std::vector<Int> out(k, 1);
  for (const auto& [p, es] : by_prime) {
    for (std::size_t i = 0; i < es.size(); ++i) {
      out[k - 1 - i] = checked_mul(out[k - 1 - i], checked_pow(p, static_cast<unsigned>(es[i])));
    }
  }
  return out;
}

FinGenAb from_invariant_factors(std::span<const Int> factors, int free_rank) {
  return FinGenAb::from_cyclic_orders(factors, free_rank);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("IntMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

std::vector<Int> smith_diagonal(IntMatrix m) {
  std::vector<Int> diag;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero |entry| in the trailing block, first in row-major order on ties
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m(i, j) != 0 && (pi == rows || std::llabs(m(i, j)) < std::llabs(m(pi, pj)))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) return diag;
      m.swap_rows(t, pi);
      m.swap_cols(t, pj);
      const Int pivot = m(t, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Int q = m(i, t) / pivot;
        if (q != 0) {
          for (std::size_t j = t; j < cols; ++j) m(i, j) = checked_sub(m(i, j), checked_mul(q, m(t, j)));
        }
        clean = clean && m(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Int q = m(t, j) / pivot;
        if (q != 0) {
          for (std::size_t i = t; i < rows; ++i) m(i, j) = checked_sub(m(i, j), checked_mul(q, m(i, t)));
        }
        clean = clean && m(t, j) == 0;
      }
      if (!clean) continue;  // a smaller remainder now exists; re-pivot

      // pivot must divide the whole trailing block
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m(i, j) % pivot != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      for (std::size_t j = t; j < cols; ++j) m(t, j) = checked_add(m(t, j), m(bad_row, j));
    }
    diag.push_back(std::llabs(m(t, t)));
  }
  return diag;
}

FinGenAb cokernel_of_relations(const IntMatrix& relations) {
  const auto diag = smith_diagonal(relations);
  const int free_rank = static_cast<int>(relations.cols() - diag.size());
  return FinGenAb::from_cyclic_orders(diag, free_rank);
}

bool is_quotient(const FinGenAb& a, const FinGenAb& b) {
  if (b.free_rank() > a.free_rank()) return false;
  // spare free generators of a can cover any cyclic summand of b
  const int spare = a.free_rank() - b.free_rank();
  const auto ea = exponents_by_prime(a);
  const auto eb = exponents_by_prime(b);
  static const std::vector<int> none;
  for (const auto& [p, exps_b] : eb) {
    const auto it = ea.find(p);
    const auto& exps_a = it == ea.end() ? none : it->second;
    for (int j = 1; j <= exps_b.front(); ++j) {
      if (count_at_least(exps_b, j) > count_at_least(exps_a, j) + spare) return false;
    }
  }
  return true;
}

std::map<Int, Int> order_census(const FinGenAb& g) {
  if (!g.is_finite()) throw DomainError("order_census: group has positive free rank");
  std::map<Int, Int> census{{1, 1}};
  for (const auto& [p, exps] : exponents_by_prime(g)) {
    // in the p-part, #{x : p^j x = 0} = p^(sum_i min(e_i, j))
    std::vector<Int> exact;
    Int prev = 1;
    for (int j = 0; j <= exps.front(); ++j) {
      int s = 0;
      for (int e : exps) s += std::min(e, j);
      const Int upto = checked_pow(p, static_cast<unsigned>(s));
      exact.push_back(j == 0 ? 1 : upto - prev);
      prev = upto;
    }
    std::map<Int, Int> next;
    for (const auto& [order, count] : census) {
      Int pj = 1;
      for (std::size_t j = 0; j < exact.size(); ++j) {
        next[checked_mul(order, pj)] += checked_mul(count, exact[j]);
        if (j + 1 < exact.size()) pj = checked_mul(pj, p);
      }
    }
    census = std::move(next);
  }
  return census;
}

FinGenAb from_order_census(const std::map<Int, Int>& census) {
  Int total = 0;
  for (const auto& [order, count] : census) {
    if (order < 1 || count < 0) throw DomainError("from_order_census: malformed census");
    total = checked_add(total, count);
  }
  if (total < 1) throw DomainError("from_order_census: empty census");

  std::vector<PrimaryFactor> factors;
  for (Int p : prime_divisors(total)) {
    // s_j = log_p #{x : x^(p^j) = 1}; s_j - s_(j-1) = #{summands with exponent >= j}
    std::vector<int> at_least;
    Int upto = census.count(1) ? census.at(1) : 0;
    int prev_s = 0;
    Int pj = 1;
    for (int j = 1;; ++j) {
      pj = checked_mul(pj, p);
      const auto it = census.find(pj);
      if (it == census.end() || it->second == 0) break;
      upto = checked_add(upto, it->second);
      int s = 0;
      Int v = upto;
      while (v % p == 0) {
        v /= p;
        ++s;
      }
      if (v != 1) throw DomainError("from_order_census: census is not that of an abelian group");
      at_least.push_back(s - prev_s);
      prev_s = s;
    }
    for (std::size_t j = 0; j < at_least.size(); ++j) {
      const int next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
      for (int c = 0; c < at_least[j] - next; ++c) factors.push_back({p, static_cast<int>(j + 1)});
    }
  }
  auto g = FinGenAb::from_primary(std::move(factors));
  std::map<Int, Int> nonzero;
  for (const auto& [order, count] : census) {
    if (count != 0) nonzero.emplace(order, count);
  }
  if (order_census(g) != nonzero) {
    throw DomainError("from_order_census: census is not that of an abelian group");
  }
  return g;
}

std::string to_text(const FinGenAb& g) {
  if (g.is_trivial()) return "0";
  std::string out;
  if (g.free_rank() == 1) out = "Z";
  if (g.free_rank() > 1) out = "Z^" + std::to_string(g.free_rank());
  for (Int d : invariant_factors(g)) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(d);
  }
  return out;
}

}  // namespace sl2hom
