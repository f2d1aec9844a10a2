#pragma once

#include "klein/bigint.hpp"
#include "klein/cyclotomic.hpp"
#include "klein/dynkin.hpp"
#include "klein/errors.hpp"
#include "klein/lattice.hpp"
#include "klein/qseries.hpp"

#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <vector>

namespace klein {

/// Lattice element in simple-root coordinates.
using ExponentVector = std::vector<int>;

/// Sparse Laurent-monomial coefficient: exponent vector -> multiplicity,
/// with no explicit zero entries.
using LaurentCoefficient = std::map<ExponentVector, BigInt>;

struct CharacterOptions {
  int workers = 1;
  // Term cap derived from the memory budget; each stored support entry
  // costs ~24 bytes.
  std::uint64_t max_support_entries = default_entries(2048);

  static std::uint64_t default_entries(std::uint64_t budget_mb) {
    return budget_mb * 1024 * 1024 / 24;
  }
};

/// Character of the extended basic representation, normalized so the e^{w0}
/// prefactor is dropped: the q^0 coefficient is the single monomial 1.
///
///   char(q; q_1..q_n) = (prod (1-q^m)^{-1})^{n+1} *
///                       sum_{beta} q_1^{beta_1}...q_n^{beta_n} q^{<beta,beta>/2}
///
/// The multivariate data factors exactly: the multiplicity of the monomial
/// beta at degree d equals the (n+1)-colored partition count of
/// d - <beta,beta>/2. The series therefore stores the Euler coefficients
/// once plus the lattice support (each beta with its half norm), and
/// materializes per-degree Laurent coefficients on demand.
class CharacterSeries {
 public:
  static constexpr int max_rank = 16;

  struct SupportEntry {
    std::array<std::int8_t, max_rank> beta{};
    std::int32_t half_norm = 0;
  };

  CharacterSeries(DynkinType type, int truncation, CartanMatrix gram, int zeta_m,
                  QSeries<BigInt> euler, std::vector<SupportEntry> support)
      : type_(type),
        trunc_(truncation),
        gram_(std::move(gram)),
        zeta_m_(zeta_m),
        euler_(std::move(euler)),
        support_(std::move(support)) {}

  const DynkinType& type() const { return type_; }
  int truncation() const { return trunc_; }
  int zeta_order() const { return zeta_m_; }
  std::size_t support_size() const { return support_.size(); }
  const std::vector<SupportEntry>& support() const { return support_; }
  const QSeries<BigInt>& euler_factor() const { return euler_; }

  /// Multiplicity of the monomial q_1^{b_1}...q_n^{b_n} inside the q^d
  /// coefficient: the (n+1)-colored partition count of d - <beta,beta>/2.
  BigInt weight_multiplicity(const ExponentVector& beta, int degree) const {
    if (degree < 0 || degree > trunc_) throw Error("degree out of computed range");
    if (static_cast<int>(beta.size()) != gram_.rank())
      throw Error("exponent vector has wrong rank");
    long long norm = gram_.norm(beta);
    if (norm % 2 != 0) throw InvariantViolation("odd norm on an even lattice");
    long long h = norm / 2;
    if (h > degree) return 0;
    return euler_.coefficient(degree - static_cast<int>(h));
  }

  /// The full q^d coefficient as an explicit Laurent polynomial.
  LaurentCoefficient coefficient(int degree) const {
    if (degree < 0 || degree > trunc_) throw Error("degree out of computed range");
    LaurentCoefficient out;
    const int n = gram_.rank();
    for (const auto& e : support_) {
      if (e.half_norm > degree) continue;
      ExponentVector beta(e.beta.begin(), e.beta.begin() + n);
      out.emplace(std::move(beta), euler_.coefficient(degree - e.half_norm));
    }
    return out;
  }

  /// Substitute q_i -> zeta for every i; each support entry contributes
  /// zeta^{beta_1+...+beta_n} at q^{half norm}, then the Euler factor
  /// multiplies in. An independent accumulation route from twisted_theta.
  QSeries<CyclotomicInteger> specialize_at_zeta() const {
    const int m = zeta_m_;
    std::vector<std::vector<long long>> counts(
        trunc_ + 1, std::vector<long long>(m, 0));
    const int n = gram_.rank();
    for (const auto& e : support_) {
      long long sum = 0;
      for (int i = 0; i < n; ++i) sum += e.beta[i];
      long long res = sum % m;
      if (res < 0) res += m;
      counts[static_cast<std::size_t>(e.half_norm)][static_cast<std::size_t>(res)] += 1;
    }
    std::vector<CyclotomicInteger> theta;
    theta.reserve(trunc_ + 1);
    for (int k = 0; k <= trunc_; ++k) {
      CyclotomicInteger c(m);
      for (int r = 0; r < m; ++r)
        if (counts[k][r] != 0) c += zeta_power(m, r) * BigInt(counts[k][r]);
      theta.push_back(std::move(c));
    }
    return promote_to_cyclotomic(euler_, m) * QSeries<CyclotomicInteger>(trunc_, std::move(theta));
  }

  /// Substitute q_i -> 1 for every i: the Euler factor times the untwisted
  /// lattice theta series.
  QSeries<BigInt> specialize_at_one() const {
    std::vector<BigInt> shell(trunc_ + 1);
    for (const auto& e : support_) shell[static_cast<std::size_t>(e.half_norm)] += 1;
    return euler_ * QSeries<BigInt>(trunc_, std::move(shell));
  }

 private:
  DynkinType type_;
  int trunc_;
  CartanMatrix gram_;
  int zeta_m_;
  QSeries<BigInt> euler_;
  std::vector<SupportEntry> support_;
};

/// Computes the extended basic character to order N. The lattice support is
/// gathered with the same enumeration engine as the theta series, but each
/// vector is retained as an exponent vector instead of being collapsed
/// through a root of unity. Aborts with BudgetError when the support would
/// outgrow the configured budget.
inline CharacterSeries extended_character(const DynkinType& t, int truncation,
                                          const CharacterOptions& opts = {}) {
  if (truncation < 0) throw Error("truncation order must be nonnegative");
  if (t.rank > CharacterSeries::max_rank)
    throw BudgetError("character supports rank <= 16");
  const CartanMatrix gram = cartan_matrix(t);
  const int m = zeta_order(t);
  QSeries<BigInt> euler = euler_factor_inverse_power(t.rank + 1, truncation);

  using Entries = std::vector<CharacterSeries::SupportEntry>;
  std::atomic<std::uint64_t> stored{0};
  const std::uint64_t cap = opts.max_support_entries;
  Entries support = detail::enumerate_fold<Entries>(
      gram, 2LL * truncation, opts.workers, Entries{},
      [&stored, cap](Entries& acc, const int* coords, int n, long long norm, long long) {
        if (stored.fetch_add(1, std::memory_order_relaxed) >= cap)
          throw BudgetError("character support exceeds the term budget");
        CharacterSeries::SupportEntry e;
        for (int i = 0; i < n; ++i) {
          if (coords[i] < -127 || coords[i] > 127)
            throw BudgetError("character exponent exceeds packed range");
          e.beta[i] = static_cast<std::int8_t>(coords[i]);
        }
        e.half_norm = static_cast<std::int32_t>(norm / 2);
        acc.push_back(e);
      },
      [](Entries& a, Entries&& b) {
        a.insert(a.end(), b.begin(), b.end());
      });
  std::sort(support.begin(), support.end(), [](const auto& a, const auto& b) {
    return a.beta < b.beta;
  });
  return CharacterSeries(t, truncation, gram, m, std::move(euler), std::move(support));
}

/// Free-function form of the multiplicity query.
inline BigInt weight_multiplicity(const CharacterSeries& c, const ExponentVector& beta,
                                  int degree) {
  return c.weight_multiplicity(beta, degree);
}

inline QSeries<CyclotomicInteger> specialize_at_zeta(const CharacterSeries& c) {
  return c.specialize_at_zeta();
}

inline QSeries<BigInt> specialize_at_one(const CharacterSeries& c) {
  return c.specialize_at_one();
}

}  // namespace klein
