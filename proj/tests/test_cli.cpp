#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "permpoly/cli.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "permpoly");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = permpoly::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

const json& suite(const json& report, const std::string& name) {
  for (const auto& s : report["suites"])
    if (s["name"] == name) return s;
  throw std::runtime_error("no suite " + name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify f1 over GF(8) passes as a permutation") {
  const auto r = run({"verify", "--family", "f1", "--p", "2", "--m", "1", "--A", "unity3:0"});
  CHECK(r.status == 0);
  const auto j = r.report();
  CHECK(j["status"] == "PASS");
  CHECK(j["predicted_pp"] == true);
  CHECK(suite(j, "bijectivity")["is_permutation"] == true);
  CHECK(j["field"]["modulus"] == json::array({1, 1, 0, 1}));
  for (const auto& s : j["suites"]) CHECK(s["status"] == "pass");
}

TEST_CASE("verify f1 at m = 2 is a correctly predicted non-permutation") {
  const auto r = run({"verify", "--family", "f1", "--p", "2", "--m", "2", "--A", "unity3:0"});
  CHECK(r.status == 0);
  const auto j = r.report();
  const auto& b = suite(j, "bijectivity");
  CHECK(b["is_permutation"] == false);
  CHECK(b["collision"].is_array());
  CHECK(b["root_count"] == 10);
  CHECK(suite(j, "inverse")["status"] == "skipped");
  CHECK(suite(j, "discriminant")["witness"].is_string());
}

TEST_CASE("verify f3 over GF(27): unit:1 permutes, unit:0 does not") {
  const auto pass = run({"verify", "--family", "f3", "--p", "3", "--m", "1", "--A", "unit:1"});
  CHECK(pass.status == 0);
  const auto pj = pass.report();
  CHECK(suite(pj, "bijectivity")["is_permutation"] == true);
  const auto fail = run({"verify", "--family", "f3", "--p", "3", "--m", "1", "--A", "unit:0"});
  CHECK(fail.status == 0);
  const auto fj = fail.report();
  const auto& b = suite(fj, "bijectivity");
  CHECK(b["is_permutation"] == false);
  CHECK(b["witnesses"].size() == 2);
}

TEST_CASE("suite selection and unknown suites") {
  const auto r = run({"verify", "--family", "f2", "--p", "2", "--m", "2", "--A", "unity3:1", "--suites", "gcd,lemma"});
  CHECK(r.status == 0);
  CHECK(r.report()["suites"].size() == 2);
  CHECK(run({"verify", "--family", "f2", "--p", "2", "--m", "2", "--suites", "nope"}).status == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).status == 2);
  CHECK(run({"verify", "--family", "f9"}).status == 2);
  CHECK(run({"verify", "--family", "f1", "--p", "2", "--m", "1", "--A", "unity3:1"}).status == 2);
  CHECK(run({"verify", "--family", "f1", "--p", "2", "--m", "9"}).status == 2);
  CHECK(run({"verify", "--family", "f1", "--p", "4", "--m", "1"}).status == 2);
  CHECK(run({"verify", "--family", "f1", "--p", "3", "--m", "1", "--A", "unit:0"}).status == 2);
  CHECK(run({"invert", "--family", "f1", "--p", "2", "--m", "2", "--value", "1"}).status == 2);
  CHECK(run({"invert", "--family", "f1", "--p", "2", "--m", "1", "--value", "5"}).status == 2);
  CHECK(run({"interpolate", "--family", "f3", "--p", "17", "--m", "1", "--A", "unit:1"}).status == 2);
  CHECK(run({"interpolate", "--p", "2", "--m", "1"}).status == 2);
  CHECK(run({"enumerate", "--family", "f1", "--max-m", "9"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("invert") {
  auto r = run({"invert", "--family", "f3", "--p", "3", "--m", "1", "--A", "unit:1", "--value", "0:1", "--of-image"});
  CHECK(r.status == 0);
  auto j = r.report();
  CHECK(j["inverse"] == "0:1:0");
  for (const char* form : {"piecewise", "rational", "brute"}) {
    r = run({"invert", "--family", "f1", "--p", "2", "--m", "1", "--value", "0", "--form", form});
    CHECK(r.report()["inverse"] == "0:0:0");
  }
  // 0:1:1 = t + t^2 has trace zero in GF(8) with modulus t^3 + t + 1.
  r = run({"invert", "--family", "f1", "--p", "2", "--m", "1", "--value", "0:1:1"});
  CHECK(r.report()["branch"] == "linear_kernel");
  CHECK(r.report()["round_trip"] == true);
}

TEST_CASE("enumerate") {
  auto r = run({"--no-timings", "enumerate", "--family", "f1", "--max-m", "4"});
  CHECK(r.status == 0);
  auto rows = r.report()["rows"];
  CHECK(rows.size() == 1 + 3 + 1 + 3);
  int m4 = 0;
  for (const auto& row : rows) {
    CHECK(row["match"] == true);
    m4 += row["m"] == 4;
  }
  CHECK(m4 == 3);
  r = run({"--no-timings", "enumerate", "--family", "f3", "--max-q", "9"});
  CHECK(r.status == 0);
  std::vector<std::uint64_t> qs;
  const auto j = r.report();
  for (const auto& row : j["rows"]) {
    const std::uint64_t q = row["q"];
    if (qs.empty() || qs.back() != q) qs.push_back(q);
  }
  CHECK(qs == std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9});
}

TEST_CASE("resultant-check is reproducible from its seed") {
  const std::vector<std::string> args{"--no-timings", "resultant-check", "--family", "f3", "--p", "3",
                                      "--m", "1", "--A", "unit:1", "--samples", "200", "--seed", "42"};
  const auto a = run(args), b = run(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto j = a.report();
  CHECK(j["equal"] == 200);
  CHECK(j["unequal"] == 0);
  CHECK(j["seed"] == 42);
  CHECK(j.contains("timings_ms") == false);
  const auto def = run({"resultant-check", "--family", "f1", "--p", "2", "--m", "1"});
  CHECK(def.report()["seed"] == permpoly::cli::kDefaultSeed);
  CHECK(def.report()["equal"] == 500);
}

TEST_CASE("interpolate") {
  auto r = run({"interpolate", "--family", "f1", "--p", "2", "--m", "1"});
  CHECK(r.status == 0);
  auto j = r.report();
  CHECK(j["degree"].get<int>() <= 7);
  CHECK(j["composition_failure"].is_null());
  CHECK(j["piecewise_mismatch"].is_null());
  r = run({"interpolate", "--family", "identity", "--p", "2", "--m", "1"});
  CHECK(r.report()["inverse"] == "x");
  r = run({"interpolate", "--poly", "x^3", "--p", "2", "--m", "1"});
  CHECK(r.report()["inverse"] == "x^5");
  CHECK(run({"interpolate", "--poly", "x^7", "--p", "2", "--m", "1"}).status == 2);
}

TEST_CASE("text format") {
  const auto r = run({"--format", "text", "verify", "--family", "f1", "--p", "2", "--m", "1"});
  CHECK(r.status == 0);
  CHECK(r.out.find("status: PASS") != std::string::npos);
  CHECK(r.out.find("name=bijectivity") != std::string::npos);
}

TEST_CASE("modulus cache via flag and environment") {
  const auto path = std::filesystem::temp_directory_path() / "permpoly_cli_cache.txt";
  {
    std::ofstream out(path);
    out << "2 3: 1 0 1 1\n";
  }
  auto r = run({"--modulus-cache", path.string(), "verify", "--family", "f1", "--p", "2", "--m", "1"});
  CHECK(r.status == 0);
  CHECK(r.report()["field"]["modulus"] == json::array({1, 0, 1, 1}));
  setenv("PERMPOLY_MODULUS_CACHE", path.c_str(), 1);
  r = run({"verify", "--family", "f1", "--p", "2", "--m", "1"});
  unsetenv("PERMPOLY_MODULUS_CACHE");
  CHECK(r.report()["field"]["modulus"] == json::array({1, 0, 1, 1}));
  {
    std::ofstream out(path);
    out << "2 3: 1 0 0 1\n";
  }
  CHECK(run({"--modulus-cache", path.string(), "verify", "--family", "f1", "--p", "2", "--m", "1"}).status == 2);
  std::filesystem::remove(path);
}

}  // TEST_SUITE
