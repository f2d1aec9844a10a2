#pragma once

#include "klein/bigint.hpp"
#include "klein/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace klein {

namespace detail {

// Exact division of integer polynomials (coefficient index = power).
// Requires the divisor to be monic-leading after trimming and the division
// to be remainder-free; both hold for every use here.
inline std::vector<BigInt> poly_divide_exact(std::vector<BigInt> num,
                                             const std::vector<BigInt>& den) {
  auto degree = [](const std::vector<BigInt>& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d > 0 && p[d] == 0) --d;
    return d;
  };
  const int dn = degree(num);
  const int dd = degree(den);
  if (dd > dn) throw InvariantViolation("polynomial division underflow");
  std::vector<BigInt> quot(dn - dd + 1);
  for (int k = dn - dd; k >= 0; --k) {
    BigInt c = num[k + dd] / den[dd];
    if (c * den[dd] != num[k + dd])
      throw InvariantViolation("polynomial division is not exact");
    quot[k] = c;
    for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
  }
  for (const BigInt& r : num)
    if (r != 0) throw InvariantViolation("polynomial division left a remainder");
  return quot;
}

}  // namespace detail

/// The m-th cyclotomic polynomial, monic of degree phi(m), computed by
/// iterated exact division of x^m - 1 by the cyclotomic polynomials of the
/// proper divisors of m.
class CyclotomicPolynomial {
 public:
  explicit CyclotomicPolynomial(int m) : m_(m) {
    if (m < 1) throw ClassificationError("cyclotomic order must be >= 1");
    std::vector<BigInt> p(m + 1);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d)
      if (m % d == 0) p = detail::poly_divide_exact(std::move(p), CyclotomicPolynomial(d).coefficients());
    coeffs_ = std::move(p);
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  }

  int order() const { return m_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

 private:
  int m_;
  std::vector<BigInt> coeffs_;
};

inline CyclotomicPolynomial cyclotomic_polynomial(int m) { return CyclotomicPolynomial(m); }

namespace detail {

// Shared per-order data: Phi_m, phi(m), the rewrite of x^k (phi <= k < m) in
// powers below phi, and the reduced coefficient vectors of 1, zeta, ...,
// zeta^{m-1}. Contexts are immutable; the registry hands out shared pointers.
struct CyclotomicContext {
  int m;
  int phi;
  CyclotomicPolynomial poly;
  std::vector<std::vector<BigInt>> rewrite;      // rewrite[j] = x^{phi+j} reduced
  std::vector<std::vector<BigInt>> zeta_powers;  // zeta_powers[k] = zeta^k reduced

  explicit CyclotomicContext(int order) : m(order), phi(0), poly(order) {
    phi = poly.degree();
    const auto& f = poly.coefficients();
    // x^phi = -(f[0] + f[1] x + ... + f[phi-1] x^{phi-1}) since Phi_m is monic.
    std::vector<BigInt> row(phi);
    for (int i = 0; i < phi; ++i) row[i] = -f[i];
    const int extra = std::max(0, phi - 1);  // powers phi .. 2*phi-2 arise in products
    const int needed = std::max(extra, m - phi);
    rewrite.reserve(needed);
    rewrite.push_back(row);
    for (int j = 1; j < needed; ++j) {
      const auto& prev = rewrite.back();
      std::vector<BigInt> next(phi);
      // multiply by x, folding the overflow term through row 0
      for (int i = 0; i + 1 < phi; ++i) next[i + 1] = prev[i];
      const BigInt& top = prev[phi - 1];
      if (top != 0)
        for (int i = 0; i < phi; ++i) next[i] += top * rewrite[0][i];
      rewrite.push_back(std::move(next));
    }
    zeta_powers.reserve(m);
    for (int k = 0; k < m; ++k) {
      std::vector<BigInt> v(phi);
      if (k < phi)
        v[k] = 1;
      else
        v = rewrite[k - phi];
      zeta_powers.push_back(std::move(v));
    }
  }
};

inline std::shared_ptr<const CyclotomicContext> cyclotomic_context(int m) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicContext>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(m);
  if (it != registry.end()) return it->second;
  auto ctx = std::make_shared<const CyclotomicContext>(m);
  registry.emplace(m, ctx);
  return ctx;
}

}  // namespace detail

/// An element of Z[zeta_m], stored as the canonical reduced coefficient
/// vector c_0 + c_1 zeta + ... + c_{phi(m)-1} zeta^{phi(m)-1}. Two elements
/// are equal exactly when their orders and coefficient vectors agree.
/// Immutable after construction; all arithmetic is exact.
class CyclotomicInteger {
 public:
  explicit CyclotomicInteger(int m)
      : ctx_(detail::cyclotomic_context(m)), coeffs_(ctx_->phi) {}

  CyclotomicInteger(int m, BigInt constant)
      : ctx_(detail::cyclotomic_context(m)), coeffs_(ctx_->phi) {
    coeffs_[0] = std::move(constant);
  }

  CyclotomicInteger(int m, std::vector<BigInt> reduced_coeffs)
      : ctx_(detail::cyclotomic_context(m)), coeffs_(std::move(reduced_coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(ctx_->phi))
      throw IncompatibleRingError("coefficient vector length must be phi(m)");
  }

  int order() const { return ctx_->m; }
  int degree_bound() const { return ctx_->phi; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  /// The integer c_0 when every higher coefficient vanishes, otherwise empty.
  std::optional<BigInt> as_rational_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_[0];
  }

  /// Image under zeta -> zeta^{-1} (complex conjugation).
  CyclotomicInteger conjugate() const {
    CyclotomicInteger out(ctx_);
    for (int i = 0; i < ctx_->phi; ++i) {
      if (coeffs_[i] == 0) continue;
      const auto& pw = ctx_->zeta_powers[(ctx_->m - i) % ctx_->m];
      for (int j = 0; j < ctx_->phi; ++j) out.coeffs_[j] += coeffs_[i] * pw[j];
    }
    return out;
  }

  CyclotomicInteger& operator+=(const CyclotomicInteger& rhs) {
    check_same_ring(rhs);
    for (int i = 0; i < ctx_->phi; ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  CyclotomicInteger& operator-=(const CyclotomicInteger& rhs) {
    check_same_ring(rhs);
    for (int i = 0; i < ctx_->phi; ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }

  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) {
    a += b;
    return a;
  }
  friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) {
    a -= b;
    return a;
  }
  friend CyclotomicInteger operator-(const CyclotomicInteger& a) {
    CyclotomicInteger out(a.ctx_);
    for (int i = 0; i < a.ctx_->phi; ++i) out.coeffs_[i] = -a.coeffs_[i];
    return out;
  }

  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    a.check_same_ring(b);
    const int phi = a.ctx_->phi;
    std::vector<BigInt> full(2 * phi - 1);
    for (int i = 0; i < phi; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (int j = 0; j < phi; ++j) {
        if (b.coeffs_[j] == 0) continue;
        full[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    CyclotomicInteger out(a.ctx_);
    for (int i = 0; i < phi; ++i) out.coeffs_[i] = std::move(full[i]);
    for (int k = phi; k <= 2 * phi - 2; ++k) {
      if (full[k] == 0) continue;
      const auto& row = a.ctx_->rewrite[k - phi];
      for (int i = 0; i < phi; ++i) out.coeffs_[i] += full[k] * row[i];
    }
    return out;
  }

  CyclotomicInteger& operator*=(const CyclotomicInteger& rhs) {
    *this = *this * rhs;
    return *this;
  }

  /// Scalar multiple by a rational integer.
  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const BigInt& s) {
    CyclotomicInteger out(a.ctx_);
    for (int i = 0; i < a.ctx_->phi; ++i) out.coeffs_[i] = a.coeffs_[i] * s;
    return out;
  }
  friend CyclotomicInteger operator*(const BigInt& s, const CyclotomicInteger& a) {
    return a * s;
  }

  friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    return a.ctx_->m == b.ctx_->m && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    return !(a == b);
  }

 private:
  explicit CyclotomicInteger(std::shared_ptr<const detail::CyclotomicContext> ctx)
      : ctx_(std::move(ctx)), coeffs_(ctx_->phi) {}

  void check_same_ring(const CyclotomicInteger& other) const {
    if (ctx_->m != other.ctx_->m)
      throw IncompatibleRingError("cyclotomic orders differ: " + std::to_string(ctx_->m) +
                                  " vs " + std::to_string(other.ctx_->m));
  }

  std::shared_ptr<const detail::CyclotomicContext> ctx_;
  std::vector<BigInt> coeffs_;
};

/// zeta_m^k, k reduced modulo m, as a reduced ring element.
inline CyclotomicInteger zeta_power(int m, long long k) {
  auto ctx = detail::cyclotomic_context(m);
  long long r = k % m;
  if (r < 0) r += m;
  return CyclotomicInteger(m, ctx->zeta_powers[static_cast<std::size_t>(r)]);
}

}  // namespace klein
