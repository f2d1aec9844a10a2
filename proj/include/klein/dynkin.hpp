#pragma once

#include "klein/bigint.hpp"
#include "klein/errors.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace klein {

enum class Series { A, D, E };

inline char series_letter(Series s) {
  switch (s) {
    case Series::A: return 'A';
    case Series::D: return 'D';
    case Series::E: return 'E';
  }
  throw ClassificationError("unknown series");
}

/// A simply-laced Dynkin label: series letter plus rank. Serialized as the
/// letter followed by the decimal rank with no separator ("A1", "D4", "E8").
struct DynkinType {
  Series series;
  int rank;

  DynkinType(Series s, int r) : series(s), rank(r) {
    switch (series) {
      case Series::A:
        if (rank < 1) throw ClassificationError("type A requires rank >= 1");
        break;
      case Series::D:
        if (rank < 4) throw ClassificationError("type D requires rank >= 4");
        break;
      case Series::E:
        if (rank < 6 || rank > 8)
          throw ClassificationError("type E requires rank in {6,7,8}");
        break;
    }
  }

  std::string to_string() const {
    return std::string(1, series_letter(series)) + std::to_string(rank);
  }

  static DynkinType parse(const std::string& text) {
    if (text.size() < 2)
      throw ClassificationError("cannot parse Dynkin type '" + text + "'");
    Series s;
    switch (text[0]) {
      case 'A': s = Series::A; break;
      case 'D': s = Series::D; break;
      case 'E': s = Series::E; break;
      default:
        throw ClassificationError("unknown series letter in '" + text + "'");
    }
    int r = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9')
        throw ClassificationError("bad rank digits in '" + text + "'");
      r = r * 10 + (text[i] - '0');
      if (r > 1000) throw ClassificationError("rank out of range in '" + text + "'");
    }
    return DynkinType(s, r);
  }

  friend bool operator==(const DynkinType& a, const DynkinType& b) {
    return a.series == b.series && a.rank == b.rank;
  }
  friend bool operator<(const DynkinType& a, const DynkinType& b) {
    if (a.series != b.series) return a.series < b.series;
    return a.rank < b.rank;
  }
};

/// Symmetric integer matrix with 2s on the diagonal and 0/-1 off it,
/// positive definite. Row/column order follows the Bourbaki node labels.
class CartanMatrix {
 public:
  CartanMatrix(int n, std::vector<int> entries) : n_(n), e_(std::move(entries)) {
    if (n_ <= 0 || e_.size() != static_cast<std::size_t>(n_) * n_)
      throw NotCartanError("bad Cartan matrix dimensions");
    for (int i = 0; i < n_; ++i) {
      if (at(i, i) != 2) throw NotCartanError("Cartan diagonal entries must be 2");
      for (int j = 0; j < n_; ++j) {
        if (at(i, j) != at(j, i)) throw NotCartanError("Cartan matrix must be symmetric");
        if (i != j && at(i, j) != 0 && at(i, j) != -1)
          throw NotCartanError("off-diagonal Cartan entries must be 0 or -1");
      }
    }
    if (!positive_definite())
      throw NotCartanError("matrix is not positive definite");
  }

  int rank() const { return n_; }
  int at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

  /// Exact Cartan pairing v^T C v. Always even for valid inputs (diagonal 2,
  /// symmetric integer off-diagonal).
  long long norm(const std::vector<int>& v) const {
    long long s = 0;
    for (int i = 0; i < n_; ++i) {
      long long row = 0;
      for (int j = 0; j < n_; ++j) row += static_cast<long long>(at(i, j)) * v[j];
      s += row * v[i];
    }
    return s;
  }

  /// All leading principal minors positive, checked with exact fraction-free
  /// (Bareiss) elimination.
  bool positive_definite() const {
    std::vector<BigInt> m(e_.begin(), e_.end());
    auto at2 = [&](int i, int j) -> BigInt& { return m[static_cast<std::size_t>(i) * n_ + j]; };
    BigInt prev = 1;
    for (int k = 0; k < n_; ++k) {
      if (at2(k, k) <= 0) return false;  // k-th leading minor ratio
      for (int i = k + 1; i < n_; ++i)
        for (int j = k + 1; j < n_; ++j) {
          BigInt num = at2(i, j) * at2(k, k) - at2(i, k) * at2(k, j);
          at2(i, j) = num / prev;  // Bareiss division is exact
        }
      prev = at2(k, k);
    }
    return true;
  }

  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

 private:
  int n_;
  std::vector<int> e_;
};

/// Positive roots in simple-root coordinates, the highest root, and the
/// Coxeter number (equal to the dual Coxeter number in the simply-laced case).
struct RootDatum {
  std::vector<std::vector<int>> positive_roots;
  std::vector<int> highest_root;
  int coxeter_number = 0;
};

/// Cartan matrix of a simply-laced type under the Bourbaki node labels.
///   A_n : path 1-2-...-n
///   D_n : path 1-...-(n-2), nodes n-1 and n both attached to n-2
///   E_n : path 1-3-4-...-n, node 2 attached to node 4
inline CartanMatrix cartan_matrix(const DynkinType& t) {
  const int n = t.rank;
  std::vector<int> e(static_cast<std::size_t>(n) * n, 0);
  auto set_edge = [&](int a, int b) {  // 1-based labels
    e[static_cast<std::size_t>(a - 1) * n + (b - 1)] = -1;
    e[static_cast<std::size_t>(b - 1) * n + (a - 1)] = -1;
  };
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = 2;
  switch (t.series) {
    case Series::A:
      for (int i = 1; i < n; ++i) set_edge(i, i + 1);
      break;
    case Series::D:
      for (int i = 1; i <= n - 3; ++i) set_edge(i, i + 1);
      set_edge(n - 2, n - 1);
      set_edge(n - 2, n);
      break;
    case Series::E:
      set_edge(1, 3);
      set_edge(3, 4);
      set_edge(2, 4);
      for (int i = 4; i < n; ++i) set_edge(i, i + 1);
      break;
  }
  return CartanMatrix(n, std::move(e));
}

namespace detail {

inline bool diagram_connected(const CartanMatrix& c) {
  const int n = c.rank();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (!seen[w] && c.at(v, w) != 0) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](char x) { return x != 0; });
}

}  // namespace detail

/// Enumerates the positive roots of a simply-laced Cartan matrix by closing
/// the simple roots under root-string addition: starting from height 1, a
/// candidate beta + alpha_i of the next height is a root exactly when its
/// Cartan norm is 2. Computes the highest root and the Coxeter number
/// h = 1 + height(highest root); nothing is read from tables.
inline RootDatum root_datum(const CartanMatrix& c) {
  const int n = c.rank();
  if (!c.positive_definite())
    throw NotCartanError("not a Cartan matrix: not positive definite");
  if (!detail::diagram_connected(c))
    throw NotCartanError("Cartan matrix is reducible; expected an irreducible diagram");

  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> level;
  for (int i = 0; i < n; ++i) {
    std::vector<int> alpha(n, 0);
    alpha[i] = 1;
    roots.insert(alpha);
    level.push_back(std::move(alpha));
  }
  int height = 1;
  while (!level.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : level)
      for (int i = 0; i < n; ++i) {
        std::vector<int> cand = beta;
        cand[i] += 1;
        if (roots.count(cand)) continue;
        if (c.norm(cand) == 2) {
          roots.insert(cand);
          next.push_back(std::move(cand));
        }
      }
    if (next.empty()) break;
    level = std::move(next);
    ++height;
  }

  RootDatum rd;
  rd.positive_roots.assign(roots.begin(), roots.end());
  auto ht = [](const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
  };
  std::sort(rd.positive_roots.begin(), rd.positive_roots.end(),
            [&](const auto& a, const auto& b) {
              int ha = ht(a), hb = ht(b);
              if (ha != hb) return ha < hb;
              return a < b;
            });
  int maximal = 0;
  for (const auto& r : rd.positive_roots) maximal = std::max(maximal, ht(r));
  std::vector<const std::vector<int>*> top;
  for (const auto& r : rd.positive_roots)
    if (ht(r) == maximal) top.push_back(&r);
  if (top.size() != 1)
    throw NotCartanError("no unique highest root; input is not an irreducible ADE Cartan matrix");
  rd.highest_root = *top[0];
  rd.coxeter_number = 1 + maximal;
  if (rd.positive_roots.size() * 2 != static_cast<std::size_t>(n) * rd.coxeter_number)
    throw InvariantViolation("positive root count disagrees with n*h/2");
  return rd;
}

/// Order m = 1 + h_dual of the twist root of unity.
inline int zeta_order(const DynkinType& t) {
  return 1 + root_datum(cartan_matrix(t)).coxeter_number;
}

}  // namespace klein
