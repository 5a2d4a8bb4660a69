#include <exception>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "permpoly/cli.hpp"
#include "permpoly/gf.hpp"

namespace permpoly::cli {

using json = nlohmann::ordered_json;

namespace {

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void render_object_line(std::ostringstream& os, const json& obj) {
  bool first = true;
  for (const auto& [k, v] : obj.items()) {
    if (!first) os << "  ";
    first = false;
    os << k << '=' << (v.is_structured() ? v.dump() : scalar(v));
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  for (const auto& [key, value] : report.items()) {
    if (key == "argv") continue;
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      os << key << ":\n";
      for (const auto& row : value) {
        os << "  ";
        render_object_line(os, row);
        os << '\n';
      }
    } else if (value.is_object()) {
      os << key << ": ";
      render_object_line(os, value);
      os << '\n';
    } else {
      os << key << ": " << (value.is_array() ? value.dump() : scalar(value)) << '\n';
    }
  }
  return os.str();
}

namespace {

void add_family_flags(CLI::App* cmd, FamilyOptions& fo, bool allow_identity = false) {
  auto* fam = cmd->add_option("--family", fo.family, allow_identity ? "f1 | f2 | f3 | identity" : "f1 | f2 | f3");
  fam->check(CLI::IsMember(allow_identity ? std::vector<std::string>{"f1", "f2", "f3", "identity"}
                                          : std::vector<std::string>{"f1", "f2", "f3"}));
  if (!allow_identity) fam->required();
  cmd->add_option("--p", fo.p, "characteristic")->capture_default_str();
  cmd->add_option("--m", fo.m, "q = p^m")->capture_default_str();
  cmd->add_option("--A", fo.selector, "unity3:j | unit:j | coeffs:c0,c1,...")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation trinomials over F_{q^3}: verification and inverses"};
  app.require_subcommand(1);

  CommonOptions common;
  for (int i = 1; i < argc; ++i) common.argv.emplace_back(argv[i]);
  app.add_option("--format", common.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--modulus-cache", common.modulus_cache,
                 "modulus cache file (default: $PERMPOLY_MODULUS_CACHE)");
  bool no_timings = false;
  app.add_flag("--no-timings", no_timings, "omit timings so reports compare byte for byte");

  VerifyOptions verify;
  auto* c_verify = app.add_subcommand("verify", "run the verification suites for one family member");
  add_family_flags(c_verify, verify.family);
  c_verify->add_option("--suites", verify.suites, "subset of: bijectivity inverse branches discriminant identity_abc lemma gcd")
      ->delimiter(',');

  InvertOptions invert;
  auto* c_invert = app.add_subcommand("invert", "evaluate an inverse formula at one element");
  add_family_flags(c_invert, invert.family);
  c_invert->add_option("--value", invert.value, "element: c0:c1:... or g^j")->required();
  c_invert->add_option("--form", invert.form, "piecewise | rational | brute")
      ->check(CLI::IsMember({"piecewise", "rational", "brute"}))
      ->capture_default_str();
  c_invert->add_flag("--of-image", invert.of_image, "invert f(value) rather than value");

  EnumerateOptions enumerate;
  auto* c_enum = app.add_subcommand("enumerate", "predicted vs verified permutation property per tower");
  c_enum->add_option("--family", enumerate.family, "f1 | f2 | f3")
      ->required()
      ->check(CLI::IsMember({"f1", "f2", "f3"}));
  c_enum->add_option("--max-m", enumerate.max_m, "f1/f2: towers q = 2^m, m <= max-m")->capture_default_str();
  c_enum->add_option("--max-q", enumerate.max_q, "f3: prime powers q <= max-q")->capture_default_str();

  ResultantOptions resultant;
  auto* c_res = app.add_subcommand("resultant-check", "sample the resultant factorization identity");
  add_family_flags(c_res, resultant.family);
  c_res->add_option("--samples", resultant.samples, "non-degenerate draws")->capture_default_str();
  c_res->add_option("--seed", resultant.seed, "RNG seed")->capture_default_str();

  InterpolateOptions interp;
  auto* c_interp = app.add_subcommand("interpolate", "interpolate the inverse polynomial (field order <= 4096)");
  add_family_flags(c_interp, interp.family, true);
  c_interp->add_option("--poly", interp.poly, "explicit polynomial, e.g. 'x^5 + g^3*x^2'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }
  common.timings = !no_timings;

  Outcome outcome;
  try {
    if (c_verify->parsed()) {
      outcome = cmd_verify(verify, common);
    } else if (c_invert->parsed()) {
      outcome = cmd_invert(invert, common);
    } else if (c_enum->parsed()) {
      outcome = cmd_enumerate(enumerate, common);
    } else if (c_res->parsed()) {
      outcome = cmd_resultant_check(resultant, common);
    } else {
      if (!interp.poly && interp.family.family.empty()) {
        err << "interpolate: give --family or --poly\n";
        return kUsage;
      }
      outcome = cmd_interpolate(interp, common);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const gf::FieldError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (common.format == "text") {
    out << render_text(outcome.report);
  } else {
    out << outcome.report.dump(2) << '\n';
  }
  return outcome.status;
}

}  // namespace permpoly::cli
