// klein: computes, verifies, caches, and exports the exact generating series
// of Euler characteristics of Hilbert schemes of points for surfaces with
// simple (ADE) singularities.
//
// Exit codes: 0 success, 2 usage error, 3 integrality violation,
// 4 budget exhaustion, 5 verification mismatch.

#include "klein/cache.hpp"
#include "klein/character.hpp"
#include "klein/dynkin.hpp"
#include "klein/lattice.hpp"
#include "klein/oracle.hpp"
#include "klein/serialize.hpp"
#include "klein/version.hpp"
#include "klein/zeta_series.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIntegrality = 3;
constexpr int kExitBudget = 4;
constexpr int kExitMismatch = 5;

struct CommonOpts {
  int workers = 1;
  std::string cache_dir;
  long long budget_mb = 2048;
  std::string format = "json";
  int fault_zeta_degree = -1;    // test hook: corrupt the cyclotomic series
  int fault_offby1_degree = -1;  // test hook: corrupt the demoted series
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--workers", o.workers, "worker thread count")
      ->envname("KLEIN_WORKERS")
      ->check(CLI::Range(1, 256));
  cmd->add_option("--cache-dir", o.cache_dir, "result cache directory (empty: no cache)")
      ->envname("KLEIN_CACHE_DIR");
  cmd->add_option("--budget-mb", o.budget_mb, "memory budget in MiB")
      ->envname("KLEIN_BUDGET_MB")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  // deliberate fault injection, exercised by the integration tests only
  cmd->add_option("--fault-zeta", o.fault_zeta_degree)->group("");
  cmd->add_option("--fault-offby1", o.fault_offby1_degree)->group("");
}

klein::LocalSeriesHooks hooks_from(const CommonOpts& o) {
  klein::LocalSeriesHooks hooks;
  if (o.fault_zeta_degree >= 0) {
    int d = o.fault_zeta_degree;
    hooks.pre_demotion = [d](klein::QSeries<klein::CyclotomicInteger>& s) {
      if (d > s.truncation()) return;
      std::vector<klein::CyclotomicInteger> c = s.coefficients();
      c[d] += klein::zeta_power(c[d].order(), 1);
      s = klein::QSeries<klein::CyclotomicInteger>(s.truncation(), std::move(c));
    };
  }
  if (o.fault_offby1_degree >= 0) {
    int d = o.fault_offby1_degree;
    hooks.post_demotion = [d](klein::QSeries<klein::BigInt>& s) {
      if (d > s.truncation()) return;
      std::vector<klein::BigInt> c = s.coefficients();
      c[d] += 1;
      s = klein::QSeries<klein::BigInt>(s.truncation(), std::move(c));
    };
  }
  return hooks;
}

bool faulted(const CommonOpts& o) {
  return o.fault_zeta_degree >= 0 || o.fault_offby1_degree >= 0;
}

klein::DynkinType parse_type_capped(const std::string& text, int cap_a, int cap_d) {
  klein::DynkinType t = klein::DynkinType::parse(text);
  if (t.series == klein::Series::A && t.rank > cap_a)
    throw klein::ClassificationError("type A rank cap is " + std::to_string(cap_a));
  if (t.series == klein::Series::D && t.rank > cap_d)
    throw klein::ClassificationError("type D rank cap is " + std::to_string(cap_d));
  return t;
}

std::vector<klein::DynkinType> parse_type_list(const std::string& csv, int cap_a, int cap_d) {
  std::vector<klein::DynkinType> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(parse_type_capped(item, cap_a, cap_d));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    out.push_back(std::stoi(item, &pos));
    if (pos != item.size()) throw klein::ClassificationError("bad integer '" + item + "'");
  }
  return out;
}

// Renders a payload document; the same function serves both fresh results and
// cache hits, so the bytes agree.
void emit_series_doc(const klein::Json& doc, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  const auto& series = doc.at("series");
  bool integral = series.at("ring").is_string();
  if (!integral) {
    // cyclotomic fallback: only the JSON document is meaningful
    std::cout << doc.dump(2) << "\n";
    return;
  }
  const auto& coeffs = series.at("coeffs");
  if (format == "csv") {
    std::cout << "degree,coefficient\n";
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      std::cout << k << ',' << coeffs[k].get<std::string>() << "\n";
  } else {
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      std::cout << k << ' ' << coeffs[k].get<std::string>() << "\n";
  }
}

// Computes (or replays) a payload document under a cache key.
template <class Compute>
klein::Json cached_doc(const CommonOpts& o, const std::string& key, Compute&& compute) {
  if (o.cache_dir.empty() || faulted(o)) return compute();
  klein::ResultCache cache(o.cache_dir);
  if (auto hit = cache.lookup(key)) return klein::Json::parse(*hit);
  klein::Json doc = compute();
  cache.store(key, doc.dump(2));
  return doc;
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

struct SeriesArgs {
  CommonOpts common;
  std::string type;
  int order = 50;
  int cap_a = 30, cap_d = 12;
  std::string shells_path;
};

int run_series(const SeriesArgs& a) {
  klein::DynkinType t = parse_type_capped(a.type, a.cap_a, a.cap_d);
  std::string key = std::string("klein|") + klein::version + "|series|" + t.to_string() +
                    "|N=" + std::to_string(a.order);
  klein::Json doc = cached_doc(a.common, key, [&] {
    auto r = klein::local_series(t, a.order, a.common.workers, hooks_from(a.common));
    return klein::to_json(r);
  });
  if (!a.shells_path.empty()) {
    auto rows = klein::shell_counts(klein::cartan_matrix(t), 2LL * a.order, a.common.workers);
    std::ofstream out(a.shells_path, std::ios::binary | std::ios::trunc);
    out << klein::shells_to_csv(rows);
  }
  emit_series_doc(doc, a.common.format);
  return doc.at("integrality").at("ok").get<bool>() ? kExitOk : kExitIntegrality;
}

// ---------------------------------------------------------------------------
// surface
// ---------------------------------------------------------------------------

struct SurfaceArgs {
  CommonOpts common;
  int chi0 = 0;
  std::string sing;
  int order = 50;
  int cap_a = 30, cap_d = 12;
};

int run_surface(const SurfaceArgs& a) {
  klein::SurfaceSpec spec(a.chi0, parse_type_list(a.sing, a.cap_a, a.cap_d));
  std::string key = std::string("klein|") + klein::version + "|surface|chi0=" +
                    std::to_string(spec.chi_smooth) + "|sing=";
  for (const auto& t : spec.singularities) key += t.to_string() + ";";
  key += "|N=" + std::to_string(a.order);
  klein::Json doc = cached_doc(a.common, key, [&] {
    auto r = klein::surface_series_result(spec, a.order, a.common.workers, hooks_from(a.common));
    return klein::to_json(r);
  });
  if (!doc.at("integrality").at("ok").get<bool>()) {
    std::cout << doc.dump(2) << "\n";
    return kExitIntegrality;
  }
  emit_series_doc(doc, a.common.format);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// character
// ---------------------------------------------------------------------------

struct CharacterArgs {
  CommonOpts common;
  std::string type;
  int order = -1;
  std::string beta;
  int degree = -1;
  bool check_specialization = false;
  bool dump = false;
  int cap_a = 30, cap_d = 12;
};

int run_character(const CharacterArgs& a) {
  klein::DynkinType t = parse_type_capped(a.type, a.cap_a, a.cap_d);
  const bool weight_query = !a.beta.empty() || a.degree >= 0;
  int modes = int(weight_query) + int(a.check_specialization) + int(a.dump);
  if (modes != 1)
    throw klein::ClassificationError(
        "choose exactly one of: --beta/--degree, --check-specialization, --dump");

  klein::CharacterOptions opts;
  opts.workers = a.common.workers;
  opts.max_support_entries =
      klein::CharacterOptions::default_entries(static_cast<std::uint64_t>(a.common.budget_mb));

  if (weight_query) {
    if (a.beta.empty() || a.degree < 0)
      throw klein::ClassificationError("a weight query needs both --beta and --degree");
    std::vector<int> beta = parse_int_list(a.beta);
    int order = a.order >= 0 ? a.order : a.degree;
    if (a.degree > order)
      throw klein::ClassificationError("--degree exceeds --order");
    auto c = klein::extended_character(t, order, opts);
    klein::BigInt mult = c.weight_multiplicity(beta, a.degree);
    if (a.common.format == "json") {
      klein::Json b = klein::Json::array();
      for (int x : beta) b.push_back(x);
      klein::Json doc{{"type", t.to_string()},
                      {"beta", std::move(b)},
                      {"degree", a.degree},
                      {"multiplicity", klein::to_decimal(mult)}};
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << klein::to_decimal(mult) << "\n";
    }
    return kExitOk;
  }

  int order = a.order >= 0 ? a.order : 10;
  auto c = klein::extended_character(t, order, opts);

  if (a.dump) {
    std::cout << klein::to_json(c).dump(2) << "\n";
    return kExitOk;
  }

  // --check-specialization: the character route against the direct route
  auto dem = klein::try_demote_to_integer(klein::specialize_at_zeta(c));
  if (!dem.ok()) {
    std::cout << "FAIL specialization demotion at degree " << dem.first_failure_degree
              << "\n";
    return kExitIntegrality;
  }
  auto direct = klein::local_series(t, order, a.common.workers, hooks_from(a.common));
  if (!direct.certificate.ok) {
    std::cout << "FAIL direct route integrality at degree "
              << direct.certificate.first_failure_degree << "\n";
    return kExitIntegrality;
  }
  bool match = (*dem.series == *direct.series);
  if (a.common.format == "json") {
    klein::Json doc{{"type", t.to_string()},
                    {"truncation", order},
                    {"specialization_matches", match}};
    if (!match) {
      for (int k = 0; k <= order; ++k)
        if (dem.series->coefficient(k) != direct.series->coefficient(k)) {
          doc["first_mismatch_degree"] = k;
          break;
        }
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << (match ? "PASS" : "FAIL") << " specialization identity for "
              << t.to_string() << " at order " << order << "\n";
  }
  return match ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs {
  CommonOpts common;
  int rmax = 4;
  int mmax = 8;
};

int run_verify(const VerifyArgs& a) {
  if (a.rmax < 2) throw klein::ClassificationError("--rmax must be at least 2");
  if (a.mmax < 0) throw klein::ClassificationError("--mmax must be nonnegative");
  struct Row {
    int r;
    std::string type;
    int degree;
    klein::BigInt formula, oracle;
    bool match;
  };
  std::vector<Row> rows;
  bool all_match = true;
  for (int r = 2; r <= a.rmax; ++r) {
    klein::DynkinType t(klein::Series::A, r - 1);
    auto formula = klein::local_series(t, a.mmax, a.common.workers, hooks_from(a.common));
    if (!formula.certificate.ok) {
      std::cout << "FAIL integrality of " << t.to_string() << " at degree "
                << formula.certificate.first_failure_degree << "\n";
      return kExitIntegrality;
    }
    auto counts = klein::oracle::typeA_series_oracle(r, a.mmax);
    for (int m = 0; m <= a.mmax; ++m) {
      Row row{r, t.to_string(), m, formula.series->coefficient(m), counts.coefficient(m),
              formula.series->coefficient(m) == counts.coefficient(m)};
      all_match &= row.match;
      rows.push_back(std::move(row));
    }
  }
  if (a.common.format == "json") {
    klein::Json jrows = klein::Json::array();
    for (const auto& row : rows)
      jrows.push_back(klein::Json{{"r", row.r},
                                  {"type", row.type},
                                  {"degree", row.degree},
                                  {"formula", klein::to_decimal(row.formula)},
                                  {"oracle", klein::to_decimal(row.oracle)},
                                  {"match", row.match}});
    klein::Json doc{{"rmax", a.rmax}, {"mmax", a.mmax}, {"rows", std::move(jrows)},
                    {"all_match", all_match}};
    std::cout << doc.dump(2) << "\n";
  } else if (a.common.format == "csv") {
    std::cout << "r,type,degree,formula,oracle,match\n";
    for (const auto& row : rows)
      std::cout << row.r << ',' << row.type << ',' << row.degree << ','
                << klein::to_decimal(row.formula) << ',' << klein::to_decimal(row.oracle)
                << ',' << (row.match ? 1 : 0) << "\n";
  } else {
    for (const auto& row : rows)
      std::cout << row.type << " m=" << row.degree << " formula=" << klein::to_decimal(row.formula)
                << " oracle=" << klein::to_decimal(row.oracle)
                << (row.match ? " ok" : " MISMATCH") << "\n";
    std::cout << (all_match ? "all coefficients match\n" : "MISMATCH detected\n");
  }
  return all_match ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// integrality
// ---------------------------------------------------------------------------

struct IntegralityArgs {
  CommonOpts common;
  std::string types = "A1,A2,A3,A4,A5,A6,A7,A8,D4,D5,D6,D7,D8,E6,E7,E8";
  int order = 50;
  int cap_a = 30, cap_d = 12;
};

int run_integrality(const IntegralityArgs& a) {
  auto types = parse_type_list(a.types, a.cap_a, a.cap_d);
  if (types.empty()) throw klein::ClassificationError("empty type list");
  bool all_ok = true;
  klein::Json jrows = klein::Json::array();
  for (const auto& t : types) {
    auto r = klein::local_series(t, a.order, a.common.workers, hooks_from(a.common));
    all_ok &= r.certificate.ok;
    if (a.common.format == "json") {
      klein::Json row{{"type", t.to_string()}, {"ok", r.certificate.ok}};
      if (!r.certificate.ok) {
        row["first_failure_degree"] = r.certificate.first_failure_degree;
        row["coefficient"] = klein::to_json(*r.certificate.offending_coefficient);
      }
      jrows.push_back(std::move(row));
    } else if (a.common.format == "csv") {
      std::cout << t.to_string() << ',' << (r.certificate.ok ? 1 : 0) << "\n";
    } else {
      std::cout << t.to_string() << (r.certificate.ok ? " integral up to q^" : " FAILS at q^")
                << (r.certificate.ok ? std::to_string(a.order)
                                     : std::to_string(r.certificate.first_failure_degree))
                << "\n";
    }
  }
  if (a.common.format == "json") {
    klein::Json doc{{"order", a.order}, {"rows", std::move(jrows)}, {"all_ok", all_ok}};
    std::cout << doc.dump(2) << "\n";
  }
  return all_ok ? kExitOk : kExitIntegrality;
}

// ---------------------------------------------------------------------------
// selfcheck
// ---------------------------------------------------------------------------

int selfcheck_box_norm(const klein::CartanMatrix& c, const std::vector<int>& v) {
  return static_cast<int>(c.norm(v));
}

std::vector<std::vector<int>> selfcheck_box_enumerate(const klein::CartanMatrix& c,
                                                      long long bound, int halfside) {
  const int n = c.rank();
  std::vector<std::vector<int>> found;
  std::vector<int> v(n, -halfside);
  while (true) {
    if (c.norm(v) <= bound) found.push_back(v);
    int i = 0;
    while (i < n && v[i] == halfside) v[i++] = -halfside;
    if (i == n) break;
    ++v[i];
  }
  std::sort(found.begin(), found.end());
  return found;
}

int run_selfcheck(const CommonOpts& common) {
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  // ring axioms on pseudorandom elements
  {
    std::mt19937_64 rng(4242);
    bool ok = true;
    for (int m : {3, 7, 13}) {
      int phi = klein::CyclotomicInteger(m).degree_bound();
      auto rand_elem = [&] {
        std::uniform_int_distribution<int> d(-4, 4);
        std::vector<klein::BigInt> coeffs(phi);
        for (auto& x : coeffs) x = d(rng);
        return klein::CyclotomicInteger(m, std::move(coeffs));
      };
      for (int i = 0; i < 20; ++i) {
        auto a = rand_elem(), b = rand_elem(), c = rand_elem();
        ok &= ((a + b) + c == a + (b + c));
        ok &= (a * b == b * a);
        ok &= ((a * b) * c == a * (b * c));
        ok &= (a * (b + c) == a * b + a * c);
      }
    }
    report("cyclotomic ring axioms", ok);
  }

  // vanishing geometric sums
  {
    bool ok = true;
    for (int m : {3, 4, 7, 10, 13, 19, 31}) {
      klein::CyclotomicInteger acc(m);
      for (int k = 0; k < m; ++k) acc += klein::zeta_power(m, k);
      ok &= acc.is_zero();
    }
    report("roots of unity sum to zero", ok);
  }

  // enumeration completeness against the box oracle
  {
    bool ok = true;
    for (const char* name : {"A1", "A2", "A3", "A4", "D4"}) {
      auto gram = klein::cartan_matrix(klein::DynkinType::parse(name));
      for (long long b : {2LL, 8LL, 12LL}) {
        auto fp = klein::enumerate_vectors(gram, b, common.workers);
        ok &= (fp.vectors == selfcheck_box_enumerate(gram, b, static_cast<int>(b)));
      }
    }
    report("lattice enumeration matches box search", ok);
  }

  // classical Coxeter data recomputed from scratch
  {
    bool ok = true;
    struct Expect {
      const char* name;
      int h;
      int positive_roots;
    } table[] = {{"A1", 2, 1},  {"A2", 3, 3},   {"A5", 6, 15}, {"D4", 6, 12},
                 {"D6", 10, 30}, {"E6", 12, 36}, {"E7", 18, 63}, {"E8", 30, 120}};
    for (const auto& e : table) {
      auto rd = klein::root_datum(klein::cartan_matrix(klein::DynkinType::parse(e.name)));
      ok &= (rd.coxeter_number == e.h);
      ok &= (static_cast<int>(rd.positive_roots.size()) == e.positive_roots);
    }
    report("root data reproduces classical values", ok);
  }

  // oracle ties
  {
    bool ok = true;
    for (int e = 0; e <= 3; ++e)
      for (int k = 0; k <= 10; ++k)
        ok &= (klein::euler_factor_inverse_power(e, 10).coefficient(k) ==
               klein::oracle::count_colored_partitions(k, e));
    for (int r = 2; r <= 3; ++r) {
      auto f = klein::local_series(klein::DynkinType(klein::Series::A, r - 1), 5,
                                   common.workers);
      ok &= f.certificate.ok &&
            (*f.series == klein::oracle::typeA_series_oracle(r, 5));
    }
    report("series coefficients tie to counting oracles", ok);
  }

  // character specialization identity at desk scale
  {
    bool ok = true;
    for (const char* name : {"A1", "A2", "A3", "D4"}) {
      auto t = klein::DynkinType::parse(name);
      klein::CharacterOptions opts;
      opts.workers = common.workers;
      auto dem = klein::try_demote_to_integer(
          klein::specialize_at_zeta(klein::extended_character(t, 8, opts)));
      auto direct = klein::local_series(t, 8, common.workers);
      ok &= dem.ok() && direct.certificate.ok && (*dem.series == *direct.series);
    }
    report("character specialization equals the direct series", ok);
  }

  // stratification identity
  {
    klein::DynkinType a1(klein::Series::A, 1);
    bool ok = klein::stratification_check(klein::SurfaceSpec(1, {a1, a1}), 6, common.workers);
    report("stratification identity", ok);
  }

  return failures == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hilbert-scheme Euler characteristic series for ADE-singular surfaces"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file");

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "local series of one singularity type");
  series->add_option("--type", series_args.type, "Dynkin type, e.g. A1, D4, E8")->required();
  series->add_option("--order,-N", series_args.order, "truncation order")
      ->check(CLI::NonNegativeNumber);
  series->add_option("--rank-cap-a", series_args.cap_a, "maximum accepted type A rank");
  series->add_option("--rank-cap-d", series_args.cap_d, "maximum accepted type D rank");
  series->add_option("--shells", series_args.shells_path,
                     "also dump vector counts per norm shell to this CSV file");
  add_common(series, series_args.common);

  SurfaceArgs surface_args;
  auto* surface = app.add_subcommand("surface", "global series of a singular surface");
  surface->add_option("--chi0", surface_args.chi0,
                      "Euler characteristic of the smooth locus")
      ->required();
  surface->add_option("--sing", surface_args.sing,
                      "comma-separated singularity types (may be empty)");
  surface->add_option("--order,-N", surface_args.order, "truncation order")
      ->check(CLI::NonNegativeNumber);
  surface->add_option("--rank-cap-a", surface_args.cap_a, "maximum accepted type A rank");
  surface->add_option("--rank-cap-d", surface_args.cap_d, "maximum accepted type D rank");
  add_common(surface, surface_args.common);

  CharacterArgs character_args;
  auto* character = app.add_subcommand("character", "extended basic character queries");
  character->add_option("--type", character_args.type, "Dynkin type")->required();
  character->add_option("--order,-N", character_args.order, "truncation order");
  character->add_option("--beta", character_args.beta,
                        "comma-separated root-lattice coordinates for a weight query");
  character->add_option("--degree", character_args.degree, "q-degree for a weight query");
  character->add_flag("--check-specialization", character_args.check_specialization,
                      "verify the specialization identity against the direct series");
  character->add_flag("--dump", character_args.dump, "emit the full character as JSON");
  character->add_option("--rank-cap-a", character_args.cap_a, "maximum accepted type A rank");
  character->add_option("--rank-cap-d", character_args.cap_d, "maximum accepted type D rank");
  add_common(character, character_args.common);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "type A formula against brute-force counts");
  verify->add_option("--rmax", verify_args.rmax, "largest quotient order r (types A1..A_{r-1})");
  verify->add_option("--mmax", verify_args.mmax, "largest colength");
  add_common(verify, verify_args.common);

  IntegralityArgs integrality_args;
  auto* integrality = app.add_subcommand("integrality", "certify integer coefficients");
  integrality->add_option("--types", integrality_args.types, "comma-separated type list");
  integrality->add_option("--order,-N", integrality_args.order, "truncation order")
      ->check(CLI::NonNegativeNumber);
  add_common(integrality, integrality_args.common);

  CommonOpts selfcheck_args;
  auto* selfcheck = app.add_subcommand("selfcheck", "run the desk-scale invariant suite");
  add_common(selfcheck, selfcheck_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (series->parsed()) return run_series(series_args);
    if (surface->parsed()) return run_surface(surface_args);
    if (character->parsed()) return run_character(character_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (integrality->parsed()) return run_integrality(integrality_args);
    if (selfcheck->parsed()) return run_selfcheck(selfcheck_args);
  } catch (const klein::ClassificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const klein::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const klein::IntegralityViolationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIntegrality;
  } catch (const klein::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
