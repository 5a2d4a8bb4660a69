#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permpoly/cli.hpp"
#include "permpoly/families.hpp"
#include "permpoly/gf.hpp"
#include "permpoly/localmethod.hpp"
#include "permpoly/poly.hpp"
#include "permpoly/scan.hpp"
#include "permpoly/tower.hpp"

namespace permpoly::cli {

using families::Family;
using families::FamilyParams;
using gf::Code;
using json = nlohmann::ordered_json;

namespace {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::unique_ptr<gf::ModulusCache> open_cache(const CommonOptions& common) {
  if (common.modulus_cache) return std::make_unique<gf::ModulusCache>(*common.modulus_cache);
  if (const char* env = std::getenv("PERMPOLY_MODULUS_CACHE"); env && *env) {
    return std::make_unique<gf::ModulusCache>(env);
  }
  return nullptr;
}

tower::Tower build_tower(std::uint32_t p, unsigned m, const CommonOptions& common) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (!gf::is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (gf::checked_pow(p, 3ull * m, gf::kMaxOrder) == 0) {
    throw std::invalid_argument("field order p^(3m) exceeds the cap of 2^24");
  }
  auto cache = open_cache(common);
  return tower::Tower::make(p, m, cache.get());
}

FamilyParams build_params(const FamilyOptions& opts, const CommonOptions& common) {
  const Family family = families::parse_family(opts.family);
  auto t = build_tower(opts.p, opts.m, common);
  const Code A = tower::resolve_selector(t, opts.selector);
  return FamilyParams::make(family, std::move(t), A);
}

json field_json(const tower::Tower& t) {
  const auto& f = t.field();
  return json{{"p", t.p()},
              {"m", t.m()},
              {"q", t.q()},
              {"k", f.degree()},
              {"order", f.order()},
              {"modulus", f.modulus()}};
}

json a_json(const FamilyParams& fp, const std::string& selector) {
  return json{{"selector", selector}, {"code", fp.A()}, {"coeffs", fp.field().to_string(fp.A())}};
}

json header(const std::string& command, const CommonOptions& common) {
  json r;
  r["command"] = command;
  r["argv"] = common.argv;
  return r;
}

/// Applies `--no-timings` and sets the status fields.
Outcome finish(json report, json timings, int status, const CommonOptions& common) {
  report["status"] = status == kPass ? "PASS" : "FAIL";
  report["exit_status"] = status;
  if (common.timings) report["timings_ms"] = std::move(timings);
  return {std::move(report), status};
}

json opt_element(const gf::Field& f, std::optional<Code> x) {
  return x ? json(f.to_string(*x)) : json(nullptr);
}

json suite(const std::string& name, bool passed) {
  return json{{"name", name}, {"status", passed ? "pass" : "fail"}};
}

json skipped(const std::string& name, const std::string& reason) {
  return json{{"name", name}, {"status", "skipped"}, {"reason", reason}};
}

bool applies_to(const std::string& suite_name, Family family) {
  if (family != Family::f3) return true;
  return suite_name != "discriminant" && suite_name != "identity_abc" && suite_name != "gcd";
}

scan::PointMap as_map(const poly::SparsePoly& f) {
  return [&f](Code x) { return f.eval(x); };
}

// ---- verify suites -------------------------------------------------------

json suite_bijectivity(const FamilyParams& fp, bool predicted) {
  const auto& f = fp.field();
  const auto poly = families::family_poly(fp);
  const auto report = poly::is_permutation(poly);
  json s = suite("bijectivity", false);
  s["expected_permutation"] = predicted;
  s["is_permutation"] = report.is_permutation;
  s["root_count"] = report.root_count;
  if (report.collision) {
    s["collision"] = {f.to_string(report.collision->first), f.to_string(report.collision->second)};
  } else {
    s["collision"] = nullptr;
  }
  bool ok = report.is_permutation == predicted;

  const auto normalized = poly.normalized();
  const auto norm_bad = scan::first_mismatch(f, as_map(poly), as_map(normalized));
  s["normalized_form"] = normalized.to_string();
  s["normalized_agrees"] = !norm_bad.has_value();
  ok = ok && !norm_bad;

  if (predicted) {
    ok = ok && report.root_count == 1;
  } else if (fp.family() == Family::f3) {
    const Code A = fp.A();
    json witnesses = json::array();
    if (f.add(f.add(f.mul(A, A), A), 1) == 0) {
      const bool holds = poly.eval(0) == 0 && poly.eval(1) == 0;
      witnesses.push_back({{"kind", "f(0) = f(1) = 0"}, {"holds", holds}});
      ok = ok && holds;
    }
    if (A == 1) {
      const auto beta = scan::first_failure(f, [&](Code x) { return x == 0 || poly.eval(x) != 0; });
      witnesses.push_back({{"kind", "nonzero root"}, {"beta", opt_element(f, beta)}});
      ok = ok && beta.has_value();
    }
    s["witnesses"] = std::move(witnesses);
  }
  s["status"] = ok ? "pass" : "fail";
  return s;
}

json describe_inverse_check(const gf::Field& f, const scan::InverseCheck& c) {
  json j{{"ok", c.ok}};
  if (!c.ok) {
    j["failing_input"] = opt_element(f, c.failing_input);
    j["direction"] = c.direction == scan::InverseCheck::Direction::g_after_f ? "g(f(x))" : "f(g(y))";
  }
  return j;
}

json suite_inverse(const FamilyParams& fp) {
  const auto& f = fp.field();
  const auto poly = families::family_poly(fp);
  json s = suite("inverse", false);
  const auto brute_table = poly::brute_inverse_table(poly);
  const scan::PointMap brute = [&brute_table](Code y) { return brute_table[y]; };
  const auto piecewise = families::InverseForm::piecewise(fp);
  const auto rational = families::InverseForm::rational(fp);
  const scan::PointMap pw = [&piecewise](Code y) { return piecewise(y); };
  const scan::PointMap ra = [&rational](Code y) { return rational(y); };

  bool ok = true;
  try {
    const auto pw_check = poly::verify_inverse(poly, pw);
    const auto ra_check = poly::verify_inverse(poly, ra);
    const auto pw_ra = scan::first_mismatch(f, pw, ra);
    const auto pw_brute = scan::first_mismatch(f, pw, brute);
    const auto ra_brute = scan::first_mismatch(f, ra, brute);
    s["piecewise"] = describe_inverse_check(f, pw_check);
    s["rational"] = describe_inverse_check(f, ra_check);
    s["piecewise_vs_rational_mismatch"] = opt_element(f, pw_ra);
    s["piecewise_vs_brute_mismatch"] = opt_element(f, pw_brute);
    s["rational_vs_brute_mismatch"] = opt_element(f, ra_brute);
    ok = pw_check.ok && ra_check.ok && !pw_ra && !pw_brute && !ra_brute;
  } catch (const families::ContractViolation& e) {
    s["contract_violation"] = e.what();
    ok = false;
  }
  s["status"] = ok ? "pass" : "fail";
  return s;
}

json suite_branches(const FamilyParams& fp) {
  const auto& f = fp.field();
  const auto form = families::InverseForm::piecewise(fp);
  json s = suite("branches", false);
  try {
    const auto branches = scan::evaluate_all(
        f, [&form](Code y) { return static_cast<Code>(form.eval(y).branch); });
    std::uint64_t counts[4] = {0, 0, 0, 0};
    for (Code b : branches) ++counts[b];
    json c = json::object();
    for (int b = 0; b < 4; ++b) {
      if (counts[b] == 0) continue;
      c[std::string(families::name(static_cast<families::Branch>(b)))] = counts[b];
    }
    s["counts"] = std::move(c);
    s["status"] = "pass";
  } catch (const families::ContractViolation& e) {
    s["contract_violation"] = e.what();
  }
  return s;
}

json suite_discriminant(const FamilyParams& fp, bool predicted) {
  const auto r = localmethod::discriminant_nonvanishing(fp);
  json s = suite("discriminant", r.holds == predicted);
  s["expected_nonvanishing"] = predicted;
  s["nonvanishing"] = r.holds;
  s["witness"] = opt_element(fp.field(), r.witness);
  return s;
}

json suite_identity_abc(const FamilyParams& fp) {
  const auto r = localmethod::identity_abc_check(fp);
  json s = suite("identity_abc", r.holds);
  s["holds"] = r.holds;
  s["witness"] = opt_element(fp.field(), r.witness);
  return s;
}

json suite_lemma(const FamilyParams& fp, bool predicted) {
  const auto& f = fp.field();
  const auto scheme = localmethod::frobenius_scheme(fp.tower(), families::family_poly(fp),
                                                    localmethod::theorem_combiner(fp));
  const auto cert = localmethod::lemma_certify(scheme);
  json s = suite("lemma", false);
  s["expected_certified"] = predicted;
  s["certified"] = cert.certified;
  s["counterexample"] = opt_element(f, cert.counterexample);
  bool ok = cert.certified == predicted;
  if (cert.certified) {
    const auto induced = localmethod::induced_inverse(scheme);
    const auto brute = poly::brute_inverse_table(scheme.f);
    std::optional<Code> bad;
    for (Code y = 0; y < induced.size(); ++y) {
      if (induced[y] != brute[y]) {
        bad = y;
        break;
      }
    }
    s["induced_vs_brute_mismatch"] = opt_element(f, bad);
    ok = ok && !bad;
  }
  s["status"] = ok ? "pass" : "fail";
  return s;
}

json suite_gcd(const FamilyParams& fp, bool predicted) {
  const auto g = localmethod::gcd_chain_value(fp.tower().m(), fp.family());
  json s = suite("gcd", (g == 1) == predicted);
  s["gcd"] = g.str();
  s["expected_coprime"] = predicted;
  return s;
}

}  // namespace

Outcome cmd_verify(const VerifyOptions& opts, const CommonOptions& common) {
  const auto fp = build_params(opts.family, common);
  const bool predicted = families::predicted_pp(fp);

  auto names = opts.suites.empty() ? kAllSuites : opts.suites;
  for (const auto& n : names) {
    if (std::find(kAllSuites.begin(), kAllSuites.end(), n) == kAllSuites.end()) {
      throw std::invalid_argument("unknown suite '" + n + "'");
    }
  }

  json report = header("verify", common);
  report["field"] = field_json(fp.tower());
  report["family"] = std::string(families::name(fp.family()));
  report["A"] = a_json(fp, opts.family.selector);
  report["predicted_pp"] = predicted;

  json suites = json::array();
  json timings = json::object();
  bool all_ok = true;
  for (const auto& n : kAllSuites) {
    if (std::find(names.begin(), names.end(), n) == names.end()) continue;
    Stopwatch sw;
    json s;
    if (!applies_to(n, fp.family())) {
      s = skipped(n, "not defined for f3");
    } else if (n == "bijectivity") {
      s = suite_bijectivity(fp, predicted);
    } else if (n == "inverse") {
      s = predicted ? suite_inverse(fp) : skipped(n, "no inverse: not a permutation");
    } else if (n == "branches") {
      s = predicted ? suite_branches(fp) : skipped(n, "no inverse: not a permutation");
    } else if (n == "discriminant") {
      s = suite_discriminant(fp, predicted);
    } else if (n == "identity_abc") {
      s = suite_identity_abc(fp);
    } else if (n == "lemma") {
      s = suite_lemma(fp, predicted);
    } else if (n == "gcd") {
      s = suite_gcd(fp, predicted);
    }
    all_ok = all_ok && s["status"] != "fail";
    timings[n] = sw.ms();
    suites.push_back(std::move(s));
  }
  report["suites"] = std::move(suites);
  return finish(std::move(report), std::move(timings), all_ok ? kPass : kContradiction, common);
}

Outcome cmd_invert(const InvertOptions& opts, const CommonOptions& common) {
  const auto fp = build_params(opts.family, common);
  if (!families::predicted_pp(fp)) {
    throw std::invalid_argument("these parameters do not give a permutation; no inverse exists");
  }
  const auto& f = fp.field();
  const auto kind = families::parse_inverse_kind(opts.form);
  Code y = poly::parse_element(f, opts.value);
  json report = header("invert", common);
  report["field"] = field_json(fp.tower());
  report["family"] = std::string(families::name(fp.family()));
  report["A"] = a_json(fp, opts.family.selector);
  report["form"] = std::string(families::name(kind));
  if (opts.of_image) {
    report["x"] = f.to_string(y);
    y = families::family_poly(fp).eval(y);
  }
  report["value"] = f.to_string(y);

  Stopwatch sw;
  auto form = kind == families::InverseForm::Kind::piecewise_theorem ? families::InverseForm::piecewise(fp)
              : kind == families::InverseForm::Kind::rational_remark ? families::InverseForm::rational(fp)
                                                                      : families::InverseForm::brute(fp);
  const auto result = form.eval(y);
  report["inverse"] = f.to_string(result.value);
  report["branch"] = std::string(families::name(result.branch));
  const bool round_trip = families::family_poly(fp).eval(result.value) == y;
  report["round_trip"] = round_trip;
  json timings{{"invert", sw.ms()}};
  return finish(std::move(report), std::move(timings), round_trip ? kPass : kContradiction, common);
}

Outcome cmd_enumerate(const EnumerateOptions& opts, const CommonOptions& common) {
  const Family family = families::parse_family(opts.family);
  json report = header("enumerate", common);
  report["family"] = std::string(families::name(family));

  struct Row {
    std::uint32_t p;
    unsigned m;
    std::vector<std::string> selectors;
  };
  std::vector<Row> rows;
  if (family == Family::f3) {
    if (opts.max_q > 256) throw std::invalid_argument("max-q above 256 exceeds the 2^24 field cap");
    report["max_q"] = opts.max_q;
    for (std::uint64_t q = 2; q <= opts.max_q; ++q) {
      for (std::uint32_t p = 2; p <= q; ++p) {
        if (!gf::is_prime(p)) continue;
        unsigned m = 0;
        std::uint64_t v = 1;
        while (v < q) v *= p, ++m;
        if (v != q) continue;
        std::vector<std::string> sel;
        for (std::uint64_t j = 0; j + 1 < q; ++j) sel.push_back("unit:" + std::to_string(j));
        rows.push_back({p, m, std::move(sel)});
      }
    }
  } else {
    if (opts.max_m > 8) throw std::invalid_argument("max-m above 8 exceeds the 2^24 field cap");
    report["max_m"] = opts.max_m;
    for (unsigned m = 1; m <= opts.max_m; ++m) {
      rows.push_back({2, m, {}});
    }
  }

  json table = json::array();
  json timings = json::array();
  bool all_ok = true;
  for (const auto& row : rows) {
    Stopwatch sw;
    const auto t = build_tower(row.p, row.m, common);
    auto selectors = row.selectors;
    if (family != Family::f3) {
      const auto roots = tower::cube_roots_of_unity(t);
      for (std::size_t j = 0; j < roots.size(); ++j) selectors.push_back("unity3:" + std::to_string(j));
    }
    for (const auto& sel : selectors) {
      const Code A = tower::resolve_selector(t, sel);
      // Only cube roots of unity lying in F_q are valid for f1/f2.
      if (family != Family::f3 && !t.field().in_subfield(A, t.q())) continue;
      const auto fp = FamilyParams::make(family, t, A);
      const bool predicted = families::predicted_pp(fp);
      const bool verified = poly::is_permutation(families::family_poly(fp)).is_permutation;
      all_ok = all_ok && predicted == verified;
      table.push_back({{"p", row.p},
                       {"m", row.m},
                       {"q", t.q()},
                       {"A", sel},
                       {"A_coeffs", t.field().to_string(A)},
                       {"predicted_pp", predicted},
                       {"verified", verified},
                       {"match", predicted == verified}});
    }
    timings.push_back({{"q", t.q()}, {"ms", sw.ms()}});
  }
  report["rows"] = std::move(table);
  return finish(std::move(report), std::move(timings), all_ok ? kPass : kContradiction, common);
}

Outcome cmd_resultant_check(const ResultantOptions& opts, const CommonOptions& common) {
  const auto fp = build_params(opts.family, common);
  const auto& f = fp.field();
  json report = header("resultant-check", common);
  report["field"] = field_json(fp.tower());
  report["family"] = std::string(families::name(fp.family()));
  report["A"] = a_json(fp, opts.family.selector);
  report["seed"] = opts.seed;
  report["samples"] = opts.samples;

  Stopwatch sw;
  // Raw engine output reduced mod the range keeps draws identical across
  // standard libraries, unlike std::uniform_int_distribution.
  std::mt19937_64 rng(opts.seed);
  const std::uint64_t order = f.order();
  const std::uint64_t max_draws = 50 * opts.samples + 100;
  std::uint64_t equal = 0, unequal = 0, degenerate = 0, draws = 0;
  json first_unequal = nullptr;
  while (equal + unequal < opts.samples && draws < max_draws) {
    ++draws;
    const Code value = static_cast<Code>(rng() % order);
    const Code a = static_cast<Code>(1 + rng() % (order - 1));
    const auto check = families::remark_resultant_identity(fp, value, a);
    switch (check.status) {
      case families::IdentityCheck::Status::equal: ++equal; break;
      case families::IdentityCheck::Status::degenerate: ++degenerate; break;
      case families::IdentityCheck::Status::unequal:
        if (unequal++ == 0) {
          first_unequal = {{"value", f.to_string(value)},
                           {"a", f.to_string(a)},
                           {"resultant", f.to_string(check.resultant)},
                           {"factored", f.to_string(check.factored)}};
        }
        break;
    }
  }
  report["equal"] = equal;
  report["unequal"] = unequal;
  report["degenerate_skipped"] = degenerate;
  report["draws"] = draws;
  report["first_unequal"] = std::move(first_unequal);
  const bool complete = equal + unequal == opts.samples;
  report["complete"] = complete;
  json timings{{"resultant_check", sw.ms()}};
  const int status = unequal == 0 && complete ? kPass : kContradiction;
  return finish(std::move(report), std::move(timings), status, common);
}

Outcome cmd_interpolate(const InterpolateOptions& opts, const CommonOptions& common) {
  auto t = build_tower(opts.family.p, opts.family.m, common);
  const gf::FieldRef field = t.field_ref();
  const auto& f = *field;
  if (f.order() > poly::kInterpolationGuard) {
    throw std::invalid_argument("field order " + std::to_string(f.order()) +
                                " exceeds the interpolation guard of " +
                                std::to_string(poly::kInterpolationGuard));
  }
  json report = header("interpolate", common);
  report["field"] = field_json(t);

  std::optional<FamilyParams> fp;
  std::optional<poly::SparsePoly> target;
  if (opts.poly) {
    target = poly::parse_sparse(field, *opts.poly);
    report["input"] = target->to_string();
  } else if (opts.family.family == "identity") {
    target = poly::SparsePoly(field, {{1, 1}});
    report["family"] = "identity";
  } else {
    const Code A = tower::resolve_selector(t, opts.family.selector);
    fp = FamilyParams::make(families::parse_family(opts.family.family), t, A);
    target = families::family_poly(*fp);
    report["family"] = std::string(families::name(fp->family()));
    report["A"] = a_json(*fp, opts.family.selector);
  }

  Stopwatch sw;
  std::vector<Code> table;
  try {
    table = poly::brute_inverse_table(*target);
  } catch (const scan::NotPermutation&) {
    throw std::invalid_argument("polynomial is not a permutation of the field; it has no inverse");
  }
  std::vector<std::pair<Code, Code>> points;
  points.reserve(table.size());
  for (Code y = 0; y < table.size(); ++y) points.emplace_back(y, table[y]);
  const auto inverse = poly::lagrange_interpolate(field, points);
  const scan::PointMap inv = [&inverse](Code y) { return inverse.eval(y); };

  bool ok = true;
  const auto composed = scan::first_failure(f, [&](Code x) { return inverse.eval(target->eval(x)) == x; });
  report["composition_failure"] = opt_element(f, composed);
  ok = ok && !composed;
  if (fp) {
    const auto pw = families::InverseForm::piecewise(*fp);
    const auto ra = families::InverseForm::rational(*fp);
    try {
      const auto pw_bad = scan::first_mismatch(f, inv, [&pw](Code y) { return pw(y); });
      const auto ra_bad = scan::first_mismatch(f, inv, [&ra](Code y) { return ra(y); });
      report["piecewise_mismatch"] = opt_element(f, pw_bad);
      report["rational_mismatch"] = opt_element(f, ra_bad);
      ok = ok && !pw_bad && !ra_bad;
    } catch (const families::ContractViolation& e) {
      report["contract_violation"] = e.what();
      ok = false;
    }
  }
  report["degree"] = inverse.degree();
  report["inverse"] = inverse.to_string();
  json timings{{"interpolate", sw.ms()}};
  return finish(std::move(report), std::move(timings), ok ? kPass : kContradiction, common);
}

}  // namespace permpoly::cli
