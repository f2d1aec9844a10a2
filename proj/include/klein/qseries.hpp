#pragma once

#include "klein/bigint.hpp"
#include "klein/cyclotomic.hpp"
#include "klein/errors.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace klein {

namespace detail {

inline BigInt ring_zero_like(const BigInt&) { return BigInt(0); }
inline CyclotomicInteger ring_zero_like(const CyclotomicInteger& a) {
  return CyclotomicInteger(a.order());
}

inline void ring_check_compatible(const BigInt&, const BigInt&) {}
inline void ring_check_compatible(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  if (a.order() != b.order())
    throw IncompatibleRingError("series coefficients live in different cyclotomic rings");
}

}  // namespace detail

/// Truncated formal power series in q with exact coefficients. Exactly N+1
/// coefficients are stored and every one of them is exact; no operation ever
/// extends a truncation order silently (binary ops truncate to the shorter
/// input).
template <class R>
class QSeries {
 public:
  QSeries(int truncation, std::vector<R> coeffs)
      : trunc_(truncation), coeffs_(std::move(coeffs)) {
    if (trunc_ < 0) throw Error("truncation order must be nonnegative");
    if (coeffs_.size() != static_cast<std::size_t>(trunc_) + 1)
      throw Error("series must carry exactly N+1 coefficients");
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      detail::ring_check_compatible(coeffs_[0], coeffs_[i]);
  }

  /// The constant series c0 + 0 q + ... + 0 q^N.
  static QSeries constant(R c0, int truncation) {
    std::vector<R> c;
    c.reserve(truncation + 1);
    R zero = detail::ring_zero_like(c0);
    c.push_back(std::move(c0));
    for (int i = 1; i <= truncation; ++i) c.push_back(zero);
    return QSeries(truncation, std::move(c));
  }

  int truncation() const { return trunc_; }
  const R& coefficient(int k) const {
    if (k < 0 || k > trunc_) throw Error("coefficient degree out of range");
    return coeffs_[static_cast<std::size_t>(k)];
  }
  const std::vector<R>& coefficients() const { return coeffs_; }

  QSeries truncated(int new_order) const {
    if (new_order > trunc_) throw Error("cannot extend a truncated series");
    return QSeries(new_order,
                   std::vector<R>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    detail::ring_check_compatible(a.coeffs_[0], b.coeffs_[0]);
    const int n = std::min(a.trunc_, b.trunc_);
    std::vector<R> c;
    c.reserve(n + 1);
    for (int k = 0; k <= n; ++k) c.push_back(a.coeffs_[k] + b.coeffs_[k]);
    return QSeries(n, std::move(c));
  }

  friend QSeries operator-(const QSeries& a, const QSeries& b) {
    detail::ring_check_compatible(a.coeffs_[0], b.coeffs_[0]);
    const int n = std::min(a.trunc_, b.trunc_);
    std::vector<R> c;
    c.reserve(n + 1);
    for (int k = 0; k <= n; ++k) c.push_back(a.coeffs_[k] - b.coeffs_[k]);
    return QSeries(n, std::move(c));
  }

  /// Cauchy product, exact up to min(a.N, b.N).
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    detail::ring_check_compatible(a.coeffs_[0], b.coeffs_[0]);
    const int n = std::min(a.trunc_, b.trunc_);
    std::vector<R> c;
    c.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
      R acc = a.coeffs_[0] * b.coeffs_[k];
      for (int i = 1; i <= k; ++i) acc += a.coeffs_[i] * b.coeffs_[k - i];
      c.push_back(std::move(acc));
    }
    return QSeries(n, std::move(c));
  }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

 private:
  int trunc_;
  std::vector<R> coeffs_;
};

/// (prod_{m>=1} (1-q^m)^{-1})^e to order N: the generating series of
/// e-colored partitions. Each factor (1-q^m)^{-1} is applied as the exact
/// prefix recurrence c[k] += c[k-m].
inline QSeries<BigInt> euler_factor_inverse_power(int e, int N) {
  if (e < 0) throw Error("negative Euler exponent");
  std::vector<BigInt> c(static_cast<std::size_t>(N) + 1);
  c[0] = 1;
  for (int m = 1; m <= N; ++m)
    for (int rep = 0; rep < e; ++rep)
      for (int k = m; k <= N; ++k) c[k] += c[k - m];
  return QSeries<BigInt>(N, std::move(c));
}

/// Goettsche-type smooth surface series (prod (1-q^m)^{-1})^chi. Negative chi
/// multiplies by the direct Euler product instead; integer coefficients either
/// way.
inline QSeries<BigInt> smooth_surface_series(int chi, int N) {
  if (chi >= 0) return euler_factor_inverse_power(chi, N);
  std::vector<BigInt> c(static_cast<std::size_t>(N) + 1);
  c[0] = 1;
  for (int m = 1; m <= N; ++m)
    for (int rep = 0; rep < -chi; ++rep)
      for (int k = N; k >= m; --k) c[k] -= c[k - m];
  return QSeries<BigInt>(N, std::move(c));
}

/// MacDonald smooth curve series (1-q)^{-chi}.
inline QSeries<BigInt> smooth_curve_series(int chi, int N) {
  std::vector<BigInt> c(static_cast<std::size_t>(N) + 1);
  c[0] = 1;
  if (chi >= 0)
    for (int rep = 0; rep < chi; ++rep)
      for (int k = 1; k <= N; ++k) c[k] += c[k - 1];
  else
    for (int rep = 0; rep < -chi; ++rep)
      for (int k = N; k >= 1; --k) c[k] -= c[k - 1];
  return QSeries<BigInt>(N, std::move(c));
}

inline QSeries<CyclotomicInteger> promote_to_cyclotomic(const QSeries<BigInt>& a, int m) {
  std::vector<CyclotomicInteger> c;
  c.reserve(a.truncation() + 1);
  for (int k = 0; k <= a.truncation(); ++k)
    c.emplace_back(m, a.coefficient(k));
  return QSeries<CyclotomicInteger>(a.truncation(), std::move(c));
}

/// Outcome of an attempted exact demotion to rational-integer coefficients.
/// On failure, carries the first non-rational degree and its coefficient.
struct DemotionResult {
  std::optional<QSeries<BigInt>> series;
  int first_failure_degree = -1;
  std::optional<CyclotomicInteger> offending_coefficient;
  bool ok() const { return series.has_value(); }
};

inline DemotionResult try_demote_to_integer(const QSeries<CyclotomicInteger>& a) {
  DemotionResult out;
  std::vector<BigInt> c;
  c.reserve(a.truncation() + 1);
  for (int k = 0; k <= a.truncation(); ++k) {
    auto v = a.coefficient(k).as_rational_integer();
    if (!v) {
      out.first_failure_degree = k;
      out.offending_coefficient = a.coefficient(k);
      return out;
    }
    c.push_back(std::move(*v));
  }
  out.series = QSeries<BigInt>(a.truncation(), std::move(c));
  return out;
}

/// Throwing variant: ring change must preserve values exactly.
inline QSeries<BigInt> demote_to_integer(const QSeries<CyclotomicInteger>& a) {
  DemotionResult r = try_demote_to_integer(a);
  if (!r.ok())
    throw IntegralityViolationError(
        "coefficient of q^" + std::to_string(r.first_failure_degree) +
            " is not a rational integer",
        r.first_failure_degree);
  return std::move(*r.series);
}

}  // namespace klein
