#pragma once

#include "klein/bigint.hpp"
#include "klein/character.hpp"
#include "klein/cyclotomic.hpp"
#include "klein/dynkin.hpp"
#include "klein/qseries.hpp"
#include "klein/zeta_series.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace klein {

// Field order is fixed by insertion, so serialized output is deterministic.
using Json = nlohmann::ordered_json;

inline Json to_json(const CyclotomicInteger& c) {
  Json coeffs = Json::array();
  for (const auto& v : c.coefficients()) coeffs.push_back(to_decimal(v));
  return Json{{"m", c.order()}, {"coeffs", std::move(coeffs)}};
}

inline Json to_json(const QSeries<BigInt>& s) {
  Json coeffs = Json::array();
  for (const auto& v : s.coefficients()) coeffs.push_back(to_decimal(v));
  return Json{{"variable", "q"},
              {"truncation", s.truncation()},
              {"ring", "Z"},
              {"coeffs", std::move(coeffs)}};
}

inline Json to_json(const QSeries<CyclotomicInteger>& s) {
  Json coeffs = Json::array();
  int m = s.coefficient(0).order();
  for (const auto& v : s.coefficients()) coeffs.push_back(to_json(v));
  return Json{{"variable", "q"},
              {"truncation", s.truncation()},
              {"ring", Json{{"cyclotomic", m}}},
              {"coeffs", std::move(coeffs)}};
}

inline Json to_json(const SurfaceSpec& s) {
  Json sing = Json::array();
  for (const auto& t : s.singularities) sing.push_back(t.to_string());
  return Json{{"chi_smooth", s.chi_smooth}, {"singularities", std::move(sing)}};
}

inline Json to_json(const IntegralityCertificate& c) {
  Json out{{"ok", c.ok}};
  if (!c.ok) {
    out["first_failure_degree"] = c.first_failure_degree;
    if (c.offending_coefficient) out["coefficient"] = to_json(*c.offending_coefficient);
  }
  return out;
}

/// Primary result document for a local-series computation.
inline Json to_json(const LocalSeriesResult& r) {
  Json out{{"input", r.type.to_string()}, {"truncation", r.truncation}};
  if (r.series)
    out["series"] = to_json(*r.series);
  else
    out["series"] = to_json(*r.cyclotomic_series);
  out["integrality"] = to_json(r.certificate);
  return out;
}

/// Primary result document for a surface computation.
inline Json to_json(const SurfaceSeriesResult& r) {
  Json out{{"input", to_json(r.spec)}, {"truncation", r.truncation}};
  if (r.series) out["series"] = to_json(*r.series);
  Json cert = to_json(r.certificate);
  if (r.failed_type) cert["failed_type"] = r.failed_type->to_string();
  out["integrality"] = std::move(cert);
  return out;
}

/// Full character dump: per degree, the Laurent coefficient as sorted
/// (beta, multiplicity) terms.
inline Json to_json(const CharacterSeries& c) {
  Json degrees = Json::array();
  for (int d = 0; d <= c.truncation(); ++d) {
    Json terms = Json::array();
    for (const auto& [beta, mult] : c.coefficient(d)) {
      Json b = Json::array();
      for (int x : beta) b.push_back(x);
      terms.push_back(Json{{"beta", std::move(b)}, {"mult", to_decimal(mult)}});
    }
    degrees.push_back(Json{{"degree", d}, {"terms", std::move(terms)}});
  }
  return Json{{"type", c.type().to_string()},
              {"truncation", c.truncation()},
              {"degrees", std::move(degrees)}};
}

inline std::string to_csv(const QSeries<BigInt>& s) {
  std::string out = "degree,coefficient\n";
  for (int k = 0; k <= s.truncation(); ++k) {
    out += std::to_string(k);
    out += ',';
    out += to_decimal(s.coefficient(k));
    out += '\n';
  }
  return out;
}

inline std::string to_plain(const QSeries<BigInt>& s) {
  std::string out;
  for (int k = 0; k <= s.truncation(); ++k) {
    out += std::to_string(k);
    out += ' ';
    out += to_decimal(s.coefficient(k));
    out += '\n';
  }
  return out;
}

inline std::string shells_to_csv(const std::vector<std::pair<long long, long long>>& rows) {
  std::string out = "norm,count\n";
  for (const auto& [norm, count] : rows) {
    out += std::to_string(norm);
    out += ',';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

}  // namespace klein
