#pragma once

// Command implementations behind the `permpoly` executable. Each command
// returns a JSON report plus an exit status:
//   0  every check matched what the permutation criteria predict
//   1  an observation contradicts a prediction
//   2  usage error (bad flags, parameters out of range, unknown selector)

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace permpoly::cli {

enum ExitStatus : int { kPass = 0, kContradiction = 1, kUsage = 2 };

/// Seed used by randomized commands when --seed is not given.
inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct CommonOptions {
  std::string format = "json";  ///< json | text
  std::optional<std::string> modulus_cache;
  bool timings = true;
  std::vector<std::string> argv;  ///< echoed into the report
};

struct FamilyOptions {
  std::string family;  ///< f1 | f2 | f3
  std::uint32_t p = 2;
  unsigned m = 1;
  std::string selector = "unity3:0";
};

/// Suites run by `verify`; empty means all that apply to the family.
inline const std::vector<std::string> kAllSuites{
    "bijectivity", "inverse", "branches", "discriminant", "identity_abc", "lemma", "gcd"};

struct VerifyOptions {
  FamilyOptions family;
  std::vector<std::string> suites;
};

struct InvertOptions {
  FamilyOptions family;
  std::string value;         ///< element literal: c0:c1:... or g^j
  std::string form = "piecewise";
  bool of_image = false;     ///< invert f(value) instead of value
};

struct EnumerateOptions {
  std::string family;
  unsigned max_m = 4;        ///< f1/f2 towers q = 2^m, m <= max_m
  std::uint64_t max_q = 9;   ///< f3 towers, prime powers q <= max_q
};

struct ResultantOptions {
  FamilyOptions family;
  std::uint64_t samples = 500;
  std::uint64_t seed = kDefaultSeed;
};

struct InterpolateOptions {
  FamilyOptions family;      ///< family may also be "identity"
  std::optional<std::string> poly;  ///< explicit polynomial instead of a family
};

struct Outcome {
  nlohmann::ordered_json report;
  int status = kPass;
};

Outcome cmd_verify(const VerifyOptions& opts, const CommonOptions& common);
Outcome cmd_invert(const InvertOptions& opts, const CommonOptions& common);
Outcome cmd_enumerate(const EnumerateOptions& opts, const CommonOptions& common);
Outcome cmd_resultant_check(const ResultantOptions& opts, const CommonOptions& common);
Outcome cmd_interpolate(const InterpolateOptions& opts, const CommonOptions& common);

/// Human-readable rendering of a report.
std::string render_text(const nlohmann::ordered_json& report);

/// Parses argv, runs the command, writes the report to `out` and diagnostics
/// to `err`. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace permpoly::cli
