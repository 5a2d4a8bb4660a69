// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracle.hpp"
#include "permpoly/cli.hpp"
#include "permpoly/families.hpp"
#include "permpoly/localmethod.hpp"
#include "permpoly/poly.hpp"

using namespace permpoly;
using families::Family;
using families::FamilyParams;
using gf::Code;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string case_name(const FamilyParams& fp) {
  std::ostringstream s;
  s << families::name(fp.family()) << " p=" << fp.tower().p() << " m=" << fp.tower().m()
    << " A=" << fp.field().to_string(fp.A());
  return s.str();
}

std::vector<FamilyParams> f12_cases(Family fam, std::initializer_list<unsigned> ms) {
  std::vector<FamilyParams> out;
  for (unsigned m : ms) {
    const auto t = tower::Tower::make(2, m);
    for (Code A : tower::cube_roots_of_unity(t)) out.push_back(FamilyParams::make(fam, t, A));
  }
  return out;
}

std::vector<FamilyParams> f3_cases() {
  const std::pair<std::uint32_t, unsigned> qs[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};
  std::vector<FamilyParams> out;
  for (auto [p, m] : qs) {
    const auto t = tower::Tower::make(p, m);
    for (Code A : tower::subfield_units(t)) out.push_back(FamilyParams::make(Family::f3, t, A));
  }
  return out;
}

// Values of the trinomial computed with oracle arithmetic only.
std::vector<std::uint32_t> oracle_values(const FamilyParams& fp) {
  const auto& f = fp.field();
  const std::uint64_t q = fp.tower().q(), q2 = q * q;
  const std::uint32_t A = static_cast<std::uint32_t>(fp.A());
  std::uint64_t e_mid = 0, e_last = 0;
  switch (fp.family()) {
    case Family::f1: e_mid = q2 - q + 1, e_last = q2 + q - 1; break;
    case Family::f2: e_mid = q2 * q - q2 + q, e_last = q2 + q - 1; break;
    case Family::f3: e_mid = q2 - q + 1, e_last = q2; break;
  }
  std::vector<std::uint32_t> out(f.order());
  auto fill = [&](const auto& o, auto add) {
    const std::uint32_t last_coeff = fp.family() == Family::f3 ? o.mul(A, A) : 1;
    for (std::uint32_t x = 0; x < f.order(); ++x) {
      out[x] = add(add(x, o.mul(A, o.pow(x, e_mid))), o.mul(last_coeff, o.pow(x, e_last)));
    }
  };
  if (f.characteristic() == 2) {
    const oracle::Gf2n o{f.degree(), oracle::bitmask(f.modulus())};
    fill(o, [](std::uint32_t a, std::uint32_t b) { return a ^ b; });
  } else {
    const oracle::GfPk o{f.characteristic(), f.modulus()};
    fill(o, [&](std::uint32_t a, std::uint32_t b) { return o.add(a, b); });
  }
  return out;
}

bool oracle_bijective(const std::vector<std::uint32_t>& values) {
  std::vector<bool> seen(values.size());
  for (auto v : values) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::uint64_t oracle_roots(const std::vector<std::uint32_t>& values) {
  std::uint64_t n = 0;
  for (auto v : values) n += v == 0;
  return n;
}

// Full-field check of one inverse form against the oracle's inverse table.
void check_inverse_form(Outcome& o, const FamilyParams& fp, const families::InverseForm& g,
                        const std::vector<std::uint32_t>& values, const char* label) {
  const auto poly = families::family_poly(fp);
  try {
    const auto check = poly::verify_inverse(poly, [&](Code y) { return g(y); });
    o.require(check.ok, case_name(fp) + ": " + label + " is not a two-sided inverse");
    std::vector<Code> inv(values.size());
    for (Code x = 0; x < values.size(); ++x) inv[values[x]] = x;
    for (Code y = 0; y < values.size(); ++y) {
      if (g(y) != inv[y]) {
        o.require(false, case_name(fp) + ": " + label + " disagrees with the oracle at " +
                             fp.field().to_string(y));
        break;
      }
    }
  } catch (const families::ContractViolation& e) {
    o.require(false, case_name(fp) + ": " + label + " hit a zero denominator (" + e.what() + ")");
  }
}

// Criteria (1)-(3) for one family with the given positive and negative towers.
void check_family_pp(Outcome& o, const std::vector<FamilyParams>& positive) {
  for (const auto& fp : positive) {
    const auto values = oracle_values(fp);
    const auto report = poly::is_permutation(families::family_poly(fp));
    o.require(families::predicted_pp(fp), case_name(fp) + ": not predicted");
    o.require(report.is_permutation, case_name(fp) + ": library scan finds no bijection");
    o.require(oracle_bijective(values), case_name(fp) + ": oracle finds no bijection");
  }
}

void check_family_non_pp(Outcome& o, const std::vector<FamilyParams>& negative, std::string& roots) {
  for (const auto& fp : negative) {
    const auto values = oracle_values(fp);
    const auto report = poly::is_permutation(families::family_poly(fp));
    o.require(!families::predicted_pp(fp), case_name(fp) + ": predicted a permutation");
    o.require(!report.is_permutation && report.collision.has_value(),
              case_name(fp) + ": no collision reported");
    o.require(!oracle_bijective(values), case_name(fp) + ": oracle finds a bijection");
    if (report.collision) {
      const auto [x1, x2] = *report.collision;
      o.require(x1 != x2 && values[x1] == values[x2], case_name(fp) + ": collision does not collide");
    }
    o.require(report.root_count == oracle_roots(values), case_name(fp) + ": root count differs from oracle");
    o.require(report.root_count == 1, case_name(fp) + ": root_count = " + std::to_string(report.root_count) +
                                          ", expected 1");
    roots += (roots.empty() ? "" : ", ") + std::string("m=") + std::to_string(fp.tower().m()) +
             " A=" + fp.field().to_string(fp.A()) + ":" + std::to_string(report.root_count);
  }
}

void check_inverses(Outcome& o, const std::vector<FamilyParams>& positive) {
  for (const auto& fp : positive) {
    const auto values = oracle_values(fp);
    const auto pw = families::InverseForm::piecewise(fp);
    const auto ra = families::InverseForm::rational(fp);
    const auto br = families::InverseForm::brute(fp);
    check_inverse_form(o, fp, pw, values, "piecewise");
    check_inverse_form(o, fp, ra, values, "rational");
    check_inverse_form(o, fp, br, values, "brute table");
  }
}

Outcome criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto cases = f12_cases(Family::f1, {1, 3, 4, 6});
  o.require(cases.size() == 8, "expected 8 parameter sets, got " + std::to_string(cases.size()));
  for (const auto& fp : cases) {
    const auto report = poly::is_permutation(families::family_poly(fp));
    o.require(report.is_permutation, case_name(fp) + ": not a bijection");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 60.0, "exhaustive scans took " + std::to_string(secs) + " s");
  check_family_pp(o, cases);
  if (o.pass) {
    std::ostringstream s;
    s << "f1 bijective for m in {1,3,4,6}, 8 (m, A) sets, library scan " << static_cast<int>(secs * 1000)
      << " ms, oracle agrees";
    o.detail = s.str();
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::string roots;
  check_family_non_pp(o, f12_cases(Family::f1, {2, 5}), roots);
  if (o.pass) o.detail = "f1 not bijective for m in {2,5}, collisions reported, single root 0";
  else o.detail += " [observed roots " + roots + "]";
  return o;
}

Outcome criterion3() {
  Outcome o;
  check_inverses(o, f12_cases(Family::f1, {1, 3, 4, 6}));
  if (o.pass) o.detail = "piecewise, rational and brute inverses agree with the oracle on all 8 f1 sets";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto positive = f12_cases(Family::f2, {2, 3, 5, 6});
  check_family_pp(o, positive);
  check_inverses(o, positive);
  std::string roots;
  Outcome neg;
  check_family_non_pp(neg, f12_cases(Family::f2, {1, 4}), roots);
  for (const auto& fp : positive) {
    const auto raw = families::family_poly(fp);
    const auto norm = raw.normalized();
    bool same = true;
    for (Code x : fp.field().elements()) same = same && raw.eval(x) == norm.eval(x);
    o.require(same, case_name(fp) + ": raw and normalized forms differ");
  }
  if (!neg.pass) o.require(false, neg.detail + " [observed roots " + roots + "]");
  if (o.pass) o.detail = "f2 positive m in {2,3,5,6} (8 sets) with inverses; negative m in {1,4}";
  return o;
}

Outcome criterion5() {
  Outcome o;
  int pp = 0, non_pp = 0;
  for (const auto& fp : f3_cases()) {
    const auto& f = fp.field();
    const Code A = fp.A();
    const std::uint64_t q = fp.tower().q();
    const auto values = oracle_values(fp);
    const auto poly = families::family_poly(fp);
    const bool cube_one = f.pow(A, 3) == 1;
    o.require(families::predicted_pp(fp) == !cube_one, case_name(fp) + ": prediction mismatch");
    o.require(poly::is_permutation(poly).is_permutation == !cube_one, case_name(fp) + ": scan mismatch");
    o.require(oracle_bijective(values) == !cube_one, case_name(fp) + ": oracle mismatch");
    if (!cube_one) {
      ++pp;
      const auto g = [&](Code y) {
        const Code s = f.add(f.add(f.mul(f.mul(A, A), y), f.pow(y, q)), f.mul(A, f.pow(y, q * q)));
        return f.mul(f.pow(s, q * q * q - 2), f.pow(y, q + 1));
      };
      o.require(poly::verify_inverse(poly, g).ok, case_name(fp) + ": inverse formula fails");
      for (Code x = 0; x < f.order(); ++x) {
        if (g(values[x]) != x) {
          o.require(false, case_name(fp) + ": inverse formula disagrees with the oracle");
          break;
        }
      }
      for (Code y : f.elements()) {
        if (families::f3_inverse_eval(fp, y) != g(y) || families::f3_inverse_rational_eval(fp, y) != g(y)) {
          o.require(false, case_name(fp) + ": library inverse differs from the formula");
          break;
        }
      }
    } else {
      ++non_pp;
      if (f.add(f.add(f.mul(A, A), A), 1) == 0) {
        o.require(values[0] == 0 && values[1] == 0, case_name(fp) + ": f(0) = f(1) = 0 fails");
      }
      if (A == 1) {
        Code beta = 0;
        for (Code x = 1; x < f.order() && beta == 0; ++x)
          if (values[x] == 0) beta = x;
        o.require(beta != 0 && poly.eval(beta) == 0, case_name(fp) + ": no nonzero root");
      }
    }
  }
  if (o.pass) {
    o.detail = "q in {2,3,4,5,7,8,9}: " + std::to_string(pp) + " permutations with inverse formula, " +
               std::to_string(non_pp) + " non-permutations with witnesses";
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  int compared = 0, skipped = 0;
  const std::pair<std::uint32_t, unsigned> fields[] = {{2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {2, 4}, {7, 1}};
  std::mt19937_64 rng(cli::kDefaultSeed);
  auto random_poly = [&](const gf::FieldRef& f, int degree) {
    std::vector<Code> c(degree + 1);
    for (auto& x : c) x = rng() % f->order();
    while (c.back() == 0) c.back() = rng() % f->order();
    return poly::DensePoly(f, c);
  };
  for (auto [p, k] : fields) {
    const auto f = gf::Field::make(p, k);
    for (int got = 0; got < 30;) {
      const auto a = random_poly(f, 1 + rng() % 4);
      const auto b = random_poly(f, 1 + rng() % 4);
      const auto oracle = poly::resultant_by_roots(a, b);
      if (!oracle) {
        ++skipped;
        continue;
      }
      ++got;
      ++compared;
      o.require(poly::sylvester_resultant(a, b) == *oracle, "mismatch over GF(" + std::to_string(f->order()) + ")");
    }
  }
  o.require(compared >= 200, "only " + std::to_string(compared) + " pairs compared");
  const auto f = gf::Field::make(2, 6);
  int shared = 0, disjoint = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Code r = rng() % f->order();
    const poly::DensePoly root(f, {r, 1});
    const auto a = root * random_poly(f, rng() % 3);
    const auto b = root * random_poly(f, rng() % 3);
    shared += poly::sylvester_resultant(a, b) == 0;
    const Code r1 = rng() % 32, r2 = 32 + rng() % 32;
    const poly::DensePoly c(f, {r1, 1}), d(f, {r2, 1});
    disjoint += poly::sylvester_resultant(c * c, d * poly::DensePoly(f, {r2 ^ 1, 1})) != 0;
  }
  o.require(shared == 50, std::to_string(50 - shared) + " shared-root cases gave a nonzero resultant");
  o.require(disjoint == 50, std::to_string(50 - disjoint) + " disjoint-root cases gave zero");
  if (o.pass) {
    o.detail = std::to_string(compared) + " pairs match the product-formula oracle (" + std::to_string(skipped) +
               " beyond its cap redrawn); 50/50 shared-root zeros, 50/50 disjoint nonzero";
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  struct Run {
    const char* family;
    const char* m;
    const char* sel;
  };
  const Run runs[] = {{"f1", "1", "unity3:0"}, {"f2", "2", "unity3:0"}, {"f2", "2", "unity3:1"},
                      {"f2", "2", "unity3:2"}, {"f3", "1", "unit:1"}};
  std::string summary;
  for (const auto& r : runs) {
    const char* p = std::string(r.family) == "f3" ? "3" : "2";
    const char* argv[] = {"permpoly", "--no-timings", "resultant-check", "--family", r.family, "--p", p,
                          "--m", r.m, "--A", r.sel, "--samples", "500"};
    std::ostringstream out, err;
    const int status = cli::run(static_cast<int>(std::size(argv)), argv, out, err);
    const std::string tag = std::string(r.family) + " " + r.sel;
    if (status != 0) {
      o.require(false, tag + ": exit status " + std::to_string(status) + " " + err.str());
      continue;
    }
    const auto j = nlohmann::json::parse(out.str());
    o.require(j["equal"] == 500 && j["unequal"] == 0,
              tag + ": equal=" + j["equal"].dump() + " unequal=" + j["unequal"].dump());
    summary += (summary.empty() ? "" : ", ") + tag + " 500 equal (" + j["degenerate_skipped"].dump() +
               " degenerate)";
  }
  if (o.pass) o.detail = summary;
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto cases = f12_cases(Family::f1, {1, 3, 4, 6});
  for (auto& fp : f12_cases(Family::f2, {2, 3, 5, 6})) cases.push_back(fp);
  for (auto& fp : f3_cases())
    if (families::predicted_pp(fp)) cases.push_back(fp);
  for (const auto& fp : cases) {
    const auto scheme = localmethod::frobenius_scheme(fp.tower(), families::family_poly(fp),
                                                      localmethod::theorem_combiner(fp));
    const auto cert = localmethod::lemma_certify(scheme);
    o.require(cert.certified, case_name(fp) + ": not certified");
    if (!cert.certified) continue;
    const auto values = oracle_values(fp);
    const auto induced = localmethod::induced_inverse(scheme);
    bool same = true;
    for (Code x = 0; x < values.size(); ++x) same = same && induced[values[x]] == x;
    o.require(same, case_name(fp) + ": induced table differs from the inverse table");
  }
  if (o.pass) o.detail = std::to_string(cases.size()) + " parameter sets certified, induced tables exact";
  return o;
}

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b) {
    const auto r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Outcome criterion9() {
  Outcome o;
  int towers = 0;
  for (unsigned m = 1; m <= 4; ++m) {
    for (const auto& fp : f12_cases(Family::f1, {m})) {
      ++towers;
      o.require(localmethod::identity_abc_check(fp).holds, case_name(fp) + ": identity_abc fails");
    }
  }
  auto positive = f12_cases(Family::f1, {1, 3, 4, 6});
  for (auto& fp : f12_cases(Family::f2, {2, 3, 5, 6})) positive.push_back(fp);
  for (const auto& fp : positive) {
    o.require(localmethod::discriminant_nonvanishing(fp).holds, case_name(fp) + ": discriminant vanishes");
  }
  for (const auto& fp : f12_cases(Family::f1, {2})) {
    o.require(!localmethod::discriminant_nonvanishing(fp).holds, case_name(fp) + ": no vanishing witness");
  }
  for (const auto& fp : f12_cases(Family::f2, {1})) {
    o.require(!localmethod::discriminant_nonvanishing(fp).holds, case_name(fp) + ": no vanishing witness");
  }
  int qualifying = 0;
  for (unsigned m = 1; m <= 30; ++m) {
    const unsigned __int128 q = static_cast<unsigned __int128>(1) << m, big = q * q * q - 1;
    if (m % 3 != 2) {
      ++qualifying;
      o.require(localmethod::gcd_sanity(m, Family::f1) && gcd128(2 * q - 1, big) == 1,
                "f1 gcd at m=" + std::to_string(m));
    }
    if (m % 3 != 1) {
      ++qualifying;
      o.require(localmethod::gcd_sanity(m, Family::f2) && gcd128(q - 2, big) == 1,
                "f2 gcd at m=" + std::to_string(m));
    }
  }
  if (o.pass) {
    o.detail = "identity_abc on " + std::to_string(towers) + " f1 sets (m<=4), discriminant nonzero on " +
               std::to_string(positive.size()) + " positive sets, witnesses at f1 m=2 and f2 m=1, gcd = 1 on " +
               std::to_string(qualifying) + " qualifying (family, m)";
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  const auto t = tower::Tower::make(2, 1);
  const auto fp = FamilyParams::make(Family::f1, t, 1);
  const auto values = oracle_values(fp);
  std::vector<std::pair<Code, Code>> points;
  for (Code x = 0; x < values.size(); ++x) points.emplace_back(values[x], x);
  const auto inv = poly::lagrange_interpolate(t.field_ref(), points);
  o.require(inv.degree() <= 7, "degree " + std::to_string(inv.degree()));
  const auto pw = families::InverseForm::piecewise(fp);
  const auto ra = families::InverseForm::rational(fp);
  for (Code y : t.field().elements()) {
    o.require(inv.eval(y) == pw(y), "differs from the piecewise form at " + t.field().to_string(y));
    o.require(inv.eval(y) == ra(y), "differs from the rational form at " + t.field().to_string(y));
  }
  for (Code x : t.field().elements()) o.require(inv.eval(values[x]) == x, "composition fails");
  if (o.pass) o.detail = "inverse " + inv.to_string() + " (degree " + std::to_string(inv.degree()) + ")";
  return o;
}

}  // namespace

int main() {
  const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                               criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%s criterion %zu: %s\n", o.pass ? "PASS" : "FAIL", i + 1, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
