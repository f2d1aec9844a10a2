#pragma once

#include "klein/bigint.hpp"
#include "klein/errors.hpp"
#include "klein/qseries.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace klein {
namespace oracle {

/// Partition count p(k), by the two-argument recursion
/// p(n, m) = p(n, m-1) + p(n-m, m) memoized over (n, max part). Deliberately
/// a different algorithm from the Euler-product recurrences in qseries.
inline BigInt count_partitions(int k) {
  if (k < 0) return 0;
  std::vector<std::vector<BigInt>> memo(k + 1, std::vector<BigInt>(k + 1, BigInt(-1)));
  auto rec = [&](auto&& self, int n, int m) -> BigInt {
    if (n == 0) return 1;
    if (m == 0) return 0;
    if (m > n) m = n;
    BigInt& slot = memo[n][m];
    if (slot >= 0) return slot;
    slot = self(self, n, m - 1) + self(self, n - m, m);
    return slot;
  };
  return rec(rec, k, k);
}

/// Number of e-tuples of partitions with total size k.
inline BigInt count_colored_partitions(int k, int colors) {
  if (k < 0) return 0;
  if (colors == 0) return k == 0 ? BigInt(1) : BigInt(0);
  std::vector<BigInt> p(k + 1);
  for (int j = 0; j <= k; ++j) p[j] = count_partitions(j);
  std::vector<BigInt> acc(k + 1);
  acc[0] = 1;
  for (int c = 0; c < colors; ++c) {
    std::vector<BigInt> next(k + 1);
    for (int total = 0; total <= k; ++total)
      for (int j = 0; j <= total; ++j) next[total] += acc[total - j] * p[j];
    acc = std::move(next);
  }
  return acc[k];
}

/// The invariant monomial semigroup of the A_{r-1} quotient: pairs
/// (a, b) of nonnegative integers with a = b mod r. Generated by (1,1),
/// (r,0), (0,r).
struct InvariantSemigroup {
  int modulus;

  explicit InvariantSemigroup(int r) : modulus(r) {
    if (r < 2) throw ClassificationError("semigroup modulus must be >= 2");
    if (r > 64) throw BudgetError("semigroup modulus is bounded at 64");
  }

  bool contains(int a, int b) const {
    return a >= 0 && b >= 0 && (a - b) % modulus == 0;
  }

  /// t divides s when s - t stays in the semigroup.
  bool divides(std::pair<int, int> t, std::pair<int, int> s) const {
    return contains(s.first - t.first, s.second - t.second);
  }
};

/// A finite downward-closed subset of the semigroup (the complement of a
/// monomial ideal); its size is the colength.
struct CoIdeal {
  std::vector<std::pair<int, int>> elements;  // sorted by (a+b, a)

  bool downward_closed(const InvariantSemigroup& s) const {
    for (const auto& e : elements)
      for (int a = 0; a <= e.first; ++a)
        for (int b = 0; b <= e.second; ++b) {
          if (!s.contains(a, b)) continue;
          if (!s.divides({a, b}, e)) continue;
          if (!std::binary_search(elements.begin(), elements.end(), std::make_pair(a, b),
                                  [](auto x, auto y) {
                                    return std::make_pair(x.first + x.second, x.first) <
                                           std::make_pair(y.first + y.second, y.first);
                                  }))
            return false;
        }
    return true;
  }
};

namespace detail {

// Candidate pool for co-ideals of size m: every element of such a co-ideal
// has a divisor chain of at most m elements, so it suffices to keep the
// semigroup elements whose longest chain from the origin has length <= m-1.
// (For r = 2 this is exactly coordinate degree <= 2(m-1).) The chain length
// is the longest decomposition into generators, computed by dynamic
// programming over increasing coordinate degree.
inline std::vector<std::pair<int, int>> chain_bounded_pool(const InvariantSemigroup& s, int m) {
  if (m <= 0) return {};
  const int r = s.modulus;
  const int max_deg = (m - 1) * std::max(2, r);
  const std::pair<int, int> gens[3] = {{1, 1}, {r, 0}, {0, r}};
  std::vector<std::pair<int, int>> region;
  for (int a = 0; a <= max_deg; ++a)
    for (int b = 0; a + b <= max_deg; ++b)
      if (s.contains(a, b)) region.emplace_back(a, b);
  std::sort(region.begin(), region.end(), [](auto x, auto y) {
    return std::make_pair(x.first + x.second, x.first) < std::make_pair(y.first + y.second, y.first);
  });
  std::vector<int> longest(region.size(), 0);
  auto index_of = [&](std::pair<int, int> v) -> int {
    auto it = std::lower_bound(region.begin(), region.end(), v, [](auto x, auto y) {
      return std::make_pair(x.first + x.second, x.first) < std::make_pair(y.first + y.second, y.first);
    });
    if (it == region.end() || *it != v) return -1;
    return static_cast<int>(it - region.begin());
  };
  std::vector<std::pair<int, int>> pool;
  for (std::size_t i = 0; i < region.size(); ++i) {
    int best = 0;
    for (const auto& g : gens) {
      std::pair<int, int> prev{region[i].first - g.first, region[i].second - g.second};
      if (!s.contains(prev.first, prev.second)) continue;
      int pi = index_of(prev);
      if (pi >= 0) best = std::max(best, longest[pi] + 1);
    }
    longest[i] = best;
    if (best <= m - 1) pool.push_back(region[i]);
  }
  return pool;
}

// Depth-first generation of downward-closed subsets of exact size m. Elements
// are added in the canonical (degree, a) order, which is a linear extension of
// semigroup divisibility, so every co-ideal is produced exactly once. A
// candidate may be added only when all of its divisors are already present.
template <class OnComplete>
void coideal_dfs(const InvariantSemigroup& s, int m, OnComplete&& done) {
  if (m == 0) {
    done(std::vector<std::pair<int, int>>{});
    return;
  }
  auto pool = chain_bounded_pool(s, m);
  const int n = static_cast<int>(pool.size());
  std::vector<std::vector<int>> divisors(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (s.divides(pool[j], pool[i])) divisors[i].push_back(j);
  std::vector<char> chosen(n, 0);
  std::vector<int> picked;
  picked.reserve(m);
  auto rec = [&](auto&& self, int last, int size) -> void {
    if (size == m) {
      std::vector<std::pair<int, int>> out;
      out.reserve(m);
      for (int idx : picked) out.push_back(pool[idx]);
      done(std::move(out));
      return;
    }
    for (int i = last + 1; i < n; ++i) {
      if (n - i < m - size) break;
      bool closed = true;
      for (int d : divisors[i])
        if (!chosen[d]) {
          closed = false;
          break;
        }
      if (!closed) continue;
      chosen[i] = 1;
      picked.push_back(i);
      self(self, i, size + 1);
      picked.pop_back();
      chosen[i] = 0;
    }
  };
  // pool[0] is the origin; every nonempty co-ideal contains it.
  chosen[0] = 1;
  picked.push_back(0);
  rec(rec, 0, 1);
}

}  // namespace detail

/// Number of torus-fixed ideals of colength m in the A_{r-1} quotient, i.e.
/// downward-closed subsets of size m of the invariant semigroup.
inline BigInt count_typeA_fixed_ideals(int r, int m) {
  if (m < 0) throw ClassificationError("colength must be nonnegative");
  if (m > 16) throw BudgetError("co-ideal search is bounded at colength 16");
  InvariantSemigroup s(r);
  BigInt count = 0;
  detail::coideal_dfs(s, m, [&](std::vector<std::pair<int, int>>&&) { ++count; });
  return count;
}

/// All co-ideals of size m, materialized (test scale only).
inline std::vector<CoIdeal> enumerate_typeA_fixed_ideals(int r, int m) {
  if (m < 0) throw ClassificationError("colength must be nonnegative");
  if (m > 16) throw BudgetError("co-ideal search is bounded at colength 16");
  InvariantSemigroup s(r);
  std::vector<CoIdeal> out;
  detail::coideal_dfs(s, m, [&](std::vector<std::pair<int, int>>&& e) {
    out.push_back(CoIdeal{std::move(e)});
  });
  return out;
}

/// Fixed-point generating series sum_m #{co-ideals of size m} q^m; contracted
/// to agree coefficientwise with the type A_{r-1} local series.
inline QSeries<BigInt> typeA_series_oracle(int r, int truncation) {
  std::vector<BigInt> c;
  c.reserve(truncation + 1);
  for (int m = 0; m <= truncation; ++m) c.push_back(count_typeA_fixed_ideals(r, m));
  return QSeries<BigInt>(truncation, std::move(c));
}

}  // namespace oracle
}  // namespace klein
