#pragma once

#include "klein/bigint.hpp"
#include "klein/cyclotomic.hpp"
#include "klein/dynkin.hpp"
#include "klein/errors.hpp"
#include "klein/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <numeric>
#include <thread>
#include <utility>
#include <vector>

namespace klein {

/// Complete list of integer vectors with Cartan norm <= norm_bound,
/// lexicographically sorted. Contains the zero vector and is closed under
/// negation.
struct GramEnumeration {
  CartanMatrix gram;
  long long norm_bound;
  std::vector<std::vector<int>> vectors;
};

namespace detail {

// ---------------------------------------------------------------------------
// Exact LDL^T factorization over the rationals and the scaled-integer
// enumeration plan derived from it.
//
// With C = L D L^T (L unit lower triangular) the quadratic form splits as
//   x^T C x = sum_j d_j (x_j + c_j)^2,   c_j = sum_{i>j} L_ij x_i,
// which is what the depth-first sweep prunes on, fixing x_{n-1} first.
// Every quantity in the hot loop is an integer over a fixed per-level
// denominator, so there is no floating point and no per-node gcd anywhere;
// bounds on all intermediates are certified at plan time and select the
// narrowest safe integer width.
// ---------------------------------------------------------------------------

struct LdlExact {
  int n = 0;
  std::vector<Rational> d;                 // pivots, all > 0
  std::vector<std::vector<Rational>> low;  // low[i][j] = L_ij for i > j
};

inline bool exact_ldl(const CartanMatrix& c, LdlExact& out) {
  const int n = c.rank();
  out.n = n;
  out.d.assign(n, Rational(0));
  out.low.assign(n, std::vector<Rational>(n, Rational(0)));
  for (int j = 0; j < n; ++j) {
    Rational dj(c.at(j, j));
    for (int k = 0; k < j; ++k) dj -= out.low[j][k] * out.low[j][k] * out.d[k];
    if (dj <= 0) return false;
    out.d[j] = dj;
    for (int i = j + 1; i < n; ++i) {
      Rational v(c.at(i, j));
      for (int k = 0; k < j; ++k) v -= out.low[i][k] * out.low[j][k] * out.d[k];
      out.low[i][j] = v / dj;
    }
  }
  return true;
}

inline BigInt rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline BigInt ceil_to_int(const Rational& r) {
  BigInt q = rational_num(r) / rational_den(r);
  if (Rational(q) < r) ++q;
  return q;
}

// Plan data kept exact; narrowed per engine instantiation.
struct PlanExact {
  int n = 0;
  long long bound = 0;
  std::vector<BigInt> dnum, cden, carry, amul;
  // fixing x_j adjusts the scaled linear forms of lower levels:
  // cnum[target] += coeff * x_j
  std::vector<std::vector<std::pair<int, BigInt>>> c_updates;
  // and the integer linear forms driving the exact norm bookkeeping:
  // lin[target] += gram_entry * x_j
  std::vector<std::vector<std::pair<int, int>>> lin_updates;
  BigInt magnitude_cap;  // certified max of any hot-loop intermediate
};

inline PlanExact build_plan(const CartanMatrix& c, long long bound) {
  LdlExact ldl;
  if (!exact_ldl(c, ldl))
    throw EnumerationError("Gram matrix is not positive definite");
  const int n = c.rank();
  PlanExact p;
  p.n = n;
  p.bound = bound;
  p.dnum.resize(n);
  p.cden.resize(n);
  p.carry.resize(n);
  p.amul.resize(n);
  p.c_updates.assign(n, {});
  p.lin_updates.assign(n, {});

  std::vector<BigInt> dden(n);
  for (int j = 0; j < n; ++j) {
    p.dnum[j] = rational_num(ldl.d[j]);
    dden[j] = rational_den(ldl.d[j]);
    BigInt cd = 1;
    for (int i = j + 1; i < n; ++i)
      cd = boost::multiprecision::lcm(cd, rational_den(ldl.low[i][j]));
    p.cden[j] = cd;
  }
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < j; ++t) {
      if (ldl.low[j][t] != 0) {
        BigInt scaled = rational_num(ldl.low[j][t]) * (p.cden[t] / rational_den(ldl.low[j][t]));
        p.c_updates[j].emplace_back(t, scaled);
      }
      if (c.at(j, t) != 0) p.lin_updates[j].emplace_back(t, c.at(j, t));
    }
  }

  // fixed budget denominators, outermost level first
  std::vector<BigInt> rd(n), rd_child(n);
  rd[n - 1] = 1;
  for (int j = n - 1; j >= 0; --j) {
    BigInt term_den = dden[j] * p.cden[j] * p.cden[j];
    rd_child[j] = boost::multiprecision::lcm(rd[j], term_den);
    p.carry[j] = rd_child[j] / rd[j];
    p.amul[j] = p.dnum[j] * (rd_child[j] / term_den);
    if (j > 0) rd[j - 1] = rd_child[j];
  }

  // Certify magnitudes. |x_i| <= sqrt(B * (C^-1)_ii); the diagonal of the
  // inverse comes from solving C y = e_i through the factorization.
  std::vector<BigInt> xmax(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> z(n, Rational(0));
    z[i] = 1;  // forward: L z = e_i
    for (int a = i + 1; a < n; ++a) {
      Rational s(0);
      for (int b = i; b < a; ++b) s += ldl.low[a][b] * z[b];
      z[a] = -s;
    }
    for (int a = 0; a < n; ++a) z[a] /= ldl.d[a];
    std::vector<Rational> y(n, Rational(0));  // back: L^T y = z
    for (int a = n - 1; a >= 0; --a) {
      Rational s = z[a];
      for (int b = a + 1; b < n; ++b) s -= ldl.low[b][a] * y[b];
      y[a] = s;
    }
    BigInt cap = ceil_to_int(Rational(bound) * y[i]);
    if (cap < 0) cap = 0;
    xmax[i] = boost::multiprecision::sqrt(cap) + 1;
  }
  BigInt cap = 4;  // slack factor
  for (int j = 0; j < n; ++j) {
    Rational csum(0);
    for (int i = j + 1; i < n; ++i)
      csum += boost::multiprecision::abs(ldl.low[i][j]) * Rational(xmax[i]);
    BigInt maxcnum = ceil_to_int(Rational(p.cden[j]) * csum) + 1;
    BigInt smax = p.cden[j] * xmax[j] + maxcnum + p.cden[j];
    BigInt budget_top = BigInt(bound) * rd_child[j];
    BigInt square = (smax + 1) * (smax + 1);
    BigInt term = p.amul[j] * square;
    BigInt worst = budget_top;
    if (term > worst) worst = term;
    if (square > worst) worst = square;
    if (maxcnum > worst) worst = maxcnum;
    worst *= 4;
    if (worst > cap) cap = worst;
  }
  p.magnitude_cap = cap;
  return p;
}

template <class I>
I narrow_checked(const BigInt& v) {
  if constexpr (std::is_same_v<I, BigInt>) {
    return v;
  } else {
    I out = static_cast<I>(v);
    if (BigInt(out) != v) throw InvariantViolation("enumeration plan narrowing overflow");
    return out;
  }
}

template <class I>
I floor_isqrt(I v) {
  if (v <= 0) return 0;
  if constexpr (std::is_same_v<I, BigInt>) {
    return boost::multiprecision::sqrt(v);
  } else {
    I r = static_cast<I>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
  }
}

template <class I>
struct EnginePlan {
  int n = 0;
  long long bound = 0;
  std::vector<I> dnum, cden, carry, amul;
  std::vector<std::vector<std::pair<int, I>>> c_updates;
  std::vector<std::vector<std::pair<int, int>>> lin_updates;

  explicit EnginePlan(const PlanExact& p) : n(p.n), bound(p.bound) {
    auto conv = [](const std::vector<BigInt>& v) {
      std::vector<I> out;
      out.reserve(v.size());
      for (const auto& x : v) out.push_back(narrow_checked<I>(x));
      return out;
    };
    dnum = conv(p.dnum);
    cden = conv(p.cden);
    carry = conv(p.carry);
    amul = conv(p.amul);
    c_updates.resize(p.n);
    for (int j = 0; j < p.n; ++j)
      for (const auto& [t, coeff] : p.c_updates[j])
        c_updates[j].emplace_back(t, narrow_checked<I>(coeff));
    lin_updates = p.lin_updates;
  }
};

template <class I, class Visitor>
class Engine {
 public:
  Engine(const EnginePlan<I>& plan, const CartanMatrix& gram, Visitor& visit)
      : plan_(plan),
        gram_(gram),
        visit_(visit),
        cnum_(plan.n, I(0)),
        lin_(plan.n, 0),
        x_(plan.n, 0) {}

  // Runs the slice of the outermost coordinate range with index congruent to
  // `offset` modulo `stride` (the parallel chunking contract).
  void run(int stride, int offset) {
    const int top = plan_.n - 1;
    I rtop = I(plan_.bound);  // denominator 1 at the top
    I t_budget = rtop * plan_.carry[top];
    long long xlo, xhi;
    if (!level_range(top, t_budget, xlo, xhi)) return;
    for (long long xi = xlo + offset; xi <= xhi; xi += stride) descend(top, static_cast<int>(xi), t_budget);
  }

 private:
  bool level_range(int j, const I& t_budget, long long& xlo, long long& xhi) const {
    I smax = floor_isqrt<I>(t_budget / plan_.amul[j]);
    const I& cd = plan_.cden[j];
    I lo_num = -smax - cnum_[j];
    I hi_num = smax - cnum_[j];
    // ceil(lo_num/cd), floor(hi_num/cd) with positive cd
    I lo = lo_num / cd, hi = hi_num / cd;
    if (lo * cd < lo_num) ++lo;
    if (hi * cd > hi_num) --hi;
    if (lo > hi) return false;
    xlo = static_cast<long long>(lo);
    xhi = static_cast<long long>(hi);
    return true;
  }

  void descend(int j, int xj, const I& t_budget) {
    I s = I(xj) * plan_.cden[j] + cnum_[j];
    I child = t_budget - plan_.amul[j] * s * s;  // >= 0 by the range bound
    x_[j] = xj;
    const long long dn = static_cast<long long>(gram_.at(j, j)) * xj * xj +
                         2LL * xj * lin_[j];
    inorm_ += dn;
    csum_ += xj;
    if (j == 0) {
      if (inorm_ & 1LL)
        throw InvariantViolation("odd Cartan norm: lattice is not even");
      if (inorm_ <= plan_.bound)  // exact integer re-check before acceptance
        visit_(x_.data(), plan_.n, inorm_, csum_);
      else
        throw InvariantViolation("integer norm disagrees with exact pruning");
    } else {
      for (const auto& [t, coeff] : plan_.c_updates[j]) cnum_[t] += coeff * xj;
      for (const auto& [t, coeff] : plan_.lin_updates[j]) lin_[t] += static_cast<long long>(coeff) * xj;
      I t_next = child * plan_.carry[j - 1];
      long long lo, hi;
      if (level_range(j - 1, t_next, lo, hi))
        for (long long xi = lo; xi <= hi; ++xi) descend(j - 1, static_cast<int>(xi), t_next);
      for (const auto& [t, coeff] : plan_.c_updates[j]) cnum_[t] -= coeff * xj;
      for (const auto& [t, coeff] : plan_.lin_updates[j]) lin_[t] -= static_cast<long long>(coeff) * xj;
    }
    inorm_ -= dn;
    csum_ -= xj;
  }

  const EnginePlan<I>& plan_;
  const CartanMatrix& gram_;
  Visitor& visit_;
  std::vector<I> cnum_;
  std::vector<long long> lin_;
  std::vector<int> x_;
  long long inorm_ = 0;
  long long csum_ = 0;
};

template <class I, class Acc, class Visit, class Merge>
Acc run_enumeration(const PlanExact& plan, const CartanMatrix& gram, int workers,
                    const Acc& zero, Visit&& visit, Merge&& merge) {
  EnginePlan<I> eplan(plan);
  if (workers <= 1) {
    Acc acc = zero;
    auto vis = [&](const int* coords, int n, long long norm, long long sum) {
      visit(acc, coords, n, norm, sum);
    };
    Engine<I, decltype(vis)> engine(eplan, gram, vis);
    engine.run(1, 0);
    return acc;
  }
  std::vector<Acc> partial(workers, zero);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        auto vis = [&, w](const int* coords, int n, long long norm, long long sum) {
          visit(partial[w], coords, n, norm, sum);
        };
        Engine<I, decltype(vis)> engine(eplan, gram, vis);
        engine.run(workers, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Acc acc = std::move(partial[0]);
  for (int w = 1; w < workers; ++w) merge(acc, std::move(partial[w]));
  return acc;
}

constexpr const char* kOddBoundMsg = "norm bound must be a nonnegative even integer";

// Dispatches on the certified magnitude bound: machine words when provably
// safe, 128-bit otherwise, arbitrary precision as the last resort.
template <class Acc, class Visit, class Merge>
Acc enumerate_fold(const CartanMatrix& gram, long long bound, int workers,
                   const Acc& zero, Visit&& visit, Merge&& merge) {
  if (bound < 0 || (bound & 1LL)) throw EnumerationError(kOddBoundMsg);
  PlanExact plan = build_plan(gram, bound);
  workers = std::max(1, workers);
  static const BigInt i64_cap = (BigInt(1) << 62);
  static const BigInt i128_cap = (BigInt(1) << 126);
  if (plan.magnitude_cap < i64_cap)
    return run_enumeration<long long>(plan, gram, workers, zero, visit, merge);
  if (plan.magnitude_cap < i128_cap)
    return run_enumeration<__int128>(plan, gram, workers, zero, visit, merge);
  return run_enumeration<BigInt>(plan, gram, workers, zero, visit, merge);
}

}  // namespace detail

/// Complete Fincke-Pohst enumeration of all integer vectors with
/// v^T C v <= bound. The pruning intervals come from an exact rational
/// LDL^T factorization (rescaled to fixed integer denominators); each
/// emitted vector's norm is recomputed in plain integer arithmetic before
/// acceptance. No floating-point value ever decides membership.
inline GramEnumeration enumerate_vectors(const CartanMatrix& gram, long long bound,
                                         int workers = 1) {
  using List = std::vector<std::vector<int>>;
  List got = detail::enumerate_fold<List>(
      gram, bound, workers, List{},
      [](List& acc, const int* coords, int n, long long, long long) {
        acc.emplace_back(coords, coords + n);
      },
      [](List& a, List&& b) {
        a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
      });
  std::sort(got.begin(), got.end());
  return GramEnumeration{gram, bound, std::move(got)};
}

/// Number of lattice vectors per norm shell, as (norm, count) rows for
/// norm = 0, 2, ..., bound.
inline std::vector<std::pair<long long, long long>> shell_counts(const CartanMatrix& gram,
                                                                 long long bound,
                                                                 int workers = 1) {
  using Counts = std::vector<long long>;
  Counts counts = detail::enumerate_fold<Counts>(
      gram, bound, workers, Counts(static_cast<std::size_t>(bound / 2) + 1, 0),
      [](Counts& acc, const int*, int, long long norm, long long) {
        acc[static_cast<std::size_t>(norm / 2)] += 1;
      },
      [](Counts& a, Counts&& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      });
  std::vector<std::pair<long long, long long>> rows;
  rows.reserve(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k)
    rows.emplace_back(static_cast<long long>(2 * k), counts[k]);
  return rows;
}

/// The twisted lattice theta series of Conjecture-type local data:
///   sum over m in Z^n of zeta^{m_1+...+m_n} q^{(m^T C m)/2},
/// truncated at q^N, with zeta of order 1 + h_dual. Vectors are binned by
/// (half norm, coordinate-sum residue); the cyclotomic coefficients are
/// assembled once per degree at the end, so the hot loop is pure integer
/// work. Each per-(degree,residue) counter counts emitted vectors, so it
/// cannot overflow at any enumerable scale.
inline QSeries<CyclotomicInteger> twisted_theta(const DynkinType& t, int truncation,
                                                int workers = 1) {
  const CartanMatrix gram = cartan_matrix(t);
  const int m = zeta_order(t);
  const long long bound = 2LL * truncation;
  using Counts = std::vector<long long>;
  Counts counts = detail::enumerate_fold<Counts>(
      gram, bound, workers,
      Counts(static_cast<std::size_t>(truncation + 1) * m, 0),
      [m](Counts& acc, const int*, int, long long norm, long long sum) {
        long long res = sum % m;
        if (res < 0) res += m;
        acc[static_cast<std::size_t>(norm / 2) * m + res] += 1;
      },
      [](Counts& a, Counts&& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      });
  std::vector<CyclotomicInteger> coeffs;
  coeffs.reserve(truncation + 1);
  for (int k = 0; k <= truncation; ++k) {
    CyclotomicInteger c(m);
    for (int r = 0; r < m; ++r) {
      long long cnt = counts[static_cast<std::size_t>(k) * m + r];
      if (cnt != 0) c += zeta_power(m, r) * BigInt(cnt);
    }
    coeffs.push_back(std::move(c));
  }
  return QSeries<CyclotomicInteger>(truncation, std::move(coeffs));
}

/// Classical (untwisted) root-lattice theta series: the coefficient of q^k
/// counts lattice vectors of Cartan norm 2k.
inline QSeries<BigInt> theta_untwisted(const DynkinType& t, int truncation, int workers = 1) {
  const CartanMatrix gram = cartan_matrix(t);
  auto rows = shell_counts(gram, 2LL * truncation, workers);
  std::vector<BigInt> coeffs;
  coeffs.reserve(truncation + 1);
  for (int k = 0; k <= truncation; ++k) coeffs.emplace_back(rows[static_cast<std::size_t>(k)].second);
  return QSeries<BigInt>(truncation, std::move(coeffs));
}

}  // namespace klein
