#pragma once

#include "klein/bigint.hpp"
#include "klein/cyclotomic.hpp"
#include "klein/dynkin.hpp"
#include "klein/errors.hpp"
#include "klein/lattice.hpp"
#include "klein/qseries.hpp"

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace klein {

/// A quasiprojective surface described by the Euler characteristic of its
/// smooth locus and the (possibly empty) multiset of its simple singularities.
struct SurfaceSpec {
  int chi_smooth = 0;
  std::vector<DynkinType> singularities;  // kept sorted; multiset semantics

  SurfaceSpec(int chi, std::vector<DynkinType> sing)
      : chi_smooth(chi), singularities(std::move(sing)) {
    std::sort(singularities.begin(), singularities.end());
  }
};

struct IntegralityCertificate {
  bool ok = false;
  int first_failure_degree = -1;
  std::optional<CyclotomicInteger> offending_coefficient;
};

/// The local series of a quotient singularity together with the outcome of
/// the exact demotion from cyclotomic to rational-integer coefficients. When
/// demotion fails the cyclotomic series is returned instead of being hidden:
/// that outcome would falsify the integrality expectation and must be
/// reportable.
struct LocalSeriesResult {
  DynkinType type;
  int truncation;
  std::optional<QSeries<BigInt>> series;                      // set iff certificate.ok
  std::optional<QSeries<CyclotomicInteger>> cyclotomic_series;  // set iff !certificate.ok
  IntegralityCertificate certificate;
};

/// Test seams: mutate the assembled series right before / right after the
/// demotion step. Used by the fault-injection paths of the CLI; never set in
/// normal operation.
struct LocalSeriesHooks {
  std::function<void(QSeries<CyclotomicInteger>&)> pre_demotion;
  std::function<void(QSeries<BigInt>&)> post_demotion;
};

/// Local generating series of the Dynkin type t:
///   (prod (1-q^m)^{-1})^{n+1} * twisted theta(t),
/// computed in Z[zeta], then demoted coefficientwise to rational integers
/// with an explicit certificate.
inline LocalSeriesResult local_series(const DynkinType& t, int truncation, int workers = 1,
                                      const LocalSeriesHooks& hooks = {}) {
  const int m = zeta_order(t);
  QSeries<CyclotomicInteger> euler =
      promote_to_cyclotomic(euler_factor_inverse_power(t.rank + 1, truncation), m);
  QSeries<CyclotomicInteger> theta = twisted_theta(t, truncation, workers);
  QSeries<CyclotomicInteger> product = euler * theta;
  if (hooks.pre_demotion) hooks.pre_demotion(product);

  LocalSeriesResult out{t, truncation, std::nullopt, std::nullopt, {}};
  DemotionResult dem = try_demote_to_integer(product);
  if (!dem.ok()) {
    out.certificate.ok = false;
    out.certificate.first_failure_degree = dem.first_failure_degree;
    out.certificate.offending_coefficient = dem.offending_coefficient;
    out.cyclotomic_series = std::move(product);
    return out;
  }
  out.certificate.ok = true;
  if (hooks.post_demotion) hooks.post_demotion(*dem.series);
  out.series = std::move(*dem.series);
  return out;
}

struct SurfaceSeriesResult {
  SurfaceSpec spec;
  int truncation;
  std::optional<QSeries<BigInt>> series;
  // On integrality failure: which singular point's local factor failed.
  std::optional<DynkinType> failed_type;
  IntegralityCertificate certificate;
};

/// Global surface series as the product of the smooth-locus factor and one
/// local factor per singular point. Local factors for repeated types are
/// computed once.
inline SurfaceSeriesResult surface_series_result(const SurfaceSpec& s, int truncation,
                                                 int workers = 1,
                                                 const LocalSeriesHooks& hooks = {}) {
  SurfaceSeriesResult out{s, truncation, std::nullopt, std::nullopt, {}};
  QSeries<BigInt> acc = smooth_surface_series(s.chi_smooth, truncation);
  std::map<DynkinType, QSeries<BigInt>> factor_cache;
  for (const auto& t : s.singularities) {
    auto it = factor_cache.find(t);
    if (it == factor_cache.end()) {
      LocalSeriesResult local = local_series(t, truncation, workers, hooks);
      if (!local.certificate.ok) {
        out.failed_type = t;
        out.certificate = local.certificate;
        return out;
      }
      it = factor_cache.emplace(t, std::move(*local.series)).first;
    }
    acc = acc * it->second;
  }
  out.certificate.ok = true;
  out.series = std::move(acc);
  return out;
}

/// Throwing wrapper: most callers treat an integrality failure as exceptional.
inline QSeries<BigInt> surface_series(const SurfaceSpec& s, int truncation, int workers = 1) {
  SurfaceSeriesResult r = surface_series_result(s, truncation, workers);
  if (!r.series)
    throw IntegralityViolationError(
        "local factor " + r.failed_type->to_string() + " failed integrality at degree " +
            std::to_string(r.certificate.first_failure_degree),
        r.certificate.first_failure_degree);
  return std::move(*r.series);
}

/// Re-derives the surface series by summing over all distributions of the
/// subscheme length across the smooth part and the singular points (an
/// explicit multi-convolution over compositions), and compares with the
/// product route. Desk-scale verification; at most two singular points.
inline bool stratification_check(const SurfaceSpec& s, int truncation, int workers = 1) {
  if (s.singularities.size() > 2)
    throw Error("stratification check is desk scale: at most 2 singular points");
  std::vector<QSeries<BigInt>> factors;
  factors.push_back(smooth_surface_series(s.chi_smooth, truncation));
  for (const auto& t : s.singularities) {
    LocalSeriesResult local = local_series(t, truncation, workers);
    if (!local.certificate.ok)
      throw IntegralityViolationError("local factor failed integrality",
                                      local.certificate.first_failure_degree);
    factors.push_back(std::move(*local.series));
  }

  QSeries<BigInt> via_product = surface_series(s, truncation, workers);

  // sum over (m_0, ..., m_k) with sum m_i = m of prod_i factors[i][m_i]
  std::vector<BigInt> via_convolution(truncation + 1);
  auto rec = [&](auto&& self, std::size_t idx, int remaining, const BigInt& partial,
                 int total) -> void {
    if (idx + 1 == factors.size()) {
      via_convolution[total] += partial * factors[idx].coefficient(remaining);
      return;
    }
    for (int take = 0; take <= remaining; ++take)
      self(self, idx + 1, remaining - take, partial * factors[idx].coefficient(take), total);
  };
  for (int m = 0; m <= truncation; ++m) rec(rec, 0, m, BigInt(1), m);

  return QSeries<BigInt>(truncation, std::move(via_convolution)) == via_product;
}

}  // namespace klein
