#pragma once

// Exhaustive whole-field scans. Every kernel comes in two builds: `serial`,
// a plain loop kept as the reference, and `parallel`, the OpenMP version.
// Both return identical results; counterexamples are always the first in
// code order regardless of how the range is partitioned.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permpoly/gf.hpp"

namespace permpoly::scan {

using gf::Code;
using PointMap = std::function<Code(Code)>;

struct PermCheckReport {
  bool is_permutation = false;
  /// First x2 (in code order) whose value was already taken, paired with
  /// the earlier x1.
  std::optional<std::pair<Code, Code>> collision;
  std::uint64_t root_count = 0;
};

struct InverseCheck {
  enum class Direction { g_after_f, f_after_g };
  bool ok = true;
  /// First failing input and the direction it failed in.
  std::optional<Code> failing_input;
  Direction direction = Direction::g_after_f;
};

/// A map that was expected to be a bijection is not.
class NotPermutation : public std::runtime_error {
 public:
  NotPermutation(Code x1, Code x2)
      : std::runtime_error("map is not a permutation"), collision(x1, x2) {}
  std::pair<Code, Code> collision;
};

namespace serial {
std::vector<Code> evaluate_all(const gf::Field& field, const PointMap& f);
PermCheckReport is_permutation(const gf::Field& field, const PointMap& f);
std::uint64_t count_roots(const gf::Field& field, const PointMap& f);
std::vector<Code> brute_inverse_table(const gf::Field& field, const PointMap& f);
InverseCheck verify_inverse(const gf::Field& field, const PointMap& f, const PointMap& g);
/// First x with lhs(x) != rhs(x).
std::optional<Code> first_mismatch(const gf::Field& field, const PointMap& lhs,
                                   const PointMap& rhs);
/// First x with pred(x) false.
std::optional<Code> first_failure(const gf::Field& field, const std::function<bool(Code)>& pred);
}  // namespace serial

namespace parallel {
std::vector<Code> evaluate_all(const gf::Field& field, const PointMap& f);
PermCheckReport is_permutation(const gf::Field& field, const PointMap& f);
std::uint64_t count_roots(const gf::Field& field, const PointMap& f);
std::vector<Code> brute_inverse_table(const gf::Field& field, const PointMap& f);
InverseCheck verify_inverse(const gf::Field& field, const PointMap& f, const PointMap& g);
std::optional<Code> first_mismatch(const gf::Field& field, const PointMap& lhs,
                                   const PointMap& rhs);
std::optional<Code> first_failure(const gf::Field& field, const std::function<bool(Code)>& pred);
}  // namespace parallel

using parallel::brute_inverse_table;
using parallel::count_roots;
using parallel::evaluate_all;
using parallel::first_failure;
using parallel::first_mismatch;
using parallel::is_permutation;
using parallel::verify_inverse;

/// Builds the report from a complete value table (shared by both builds).
PermCheckReport permutation_report(const gf::Field& field, const std::vector<Code>& values);
/// Inverts a complete value table; throws NotPermutation on a collision.
std::vector<Code> invert_table(const gf::Field& field, const std::vector<Code>& values);

}  // namespace permpoly::scan
