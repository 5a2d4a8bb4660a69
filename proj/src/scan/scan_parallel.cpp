#include <exception>

#include "permpoly/scan.hpp"

namespace permpoly::scan::parallel {

namespace {

// Runs body(x) for x in [0, n) and returns the smallest x for which it
// returned false. An exception thrown for a smaller x than any failure is
// rethrown instead, so the outcome matches a serial loop exactly.
template <class Body>
std::optional<Code> first_false(std::int64_t n, const Body& body) {
  std::int64_t first = n;
  std::int64_t first_throw = n;
  std::exception_ptr error;
#pragma omp parallel
  {
    std::int64_t local = n;
    std::int64_t local_throw = n;
    std::exception_ptr local_error;
#pragma omp for schedule(static) nowait
    for (std::int64_t x = 0; x < n; ++x) {
      // Static chunks are ascending within a thread: nothing later can win.
      if (x > local || x > local_throw) continue;
      try {
        if (!body(static_cast<Code>(x))) local = x;
      } catch (...) {
        local_throw = x;
        local_error = std::current_exception();
      }
    }
#pragma omp critical(permpoly_scan_merge)
    {
      if (local < first) first = local;
      if (local_throw < first_throw) {
        first_throw = local_throw;
        error = local_error;
      }
    }
  }
  if (first_throw < first) std::rethrow_exception(error);
  if (first < n) return static_cast<Code>(first);
  return std::nullopt;
}

}  // namespace

std::vector<Code> evaluate_all(const gf::Field& field, const PointMap& f) {
  std::vector<Code> values(field.order());
  first_false(field.order(), [&](Code x) {
    values[x] = f(x);
    return true;
  });
  return values;
}

PermCheckReport is_permutation(const gf::Field& field, const PointMap& f) {
  return permutation_report(field, evaluate_all(field, f));
}

std::uint64_t count_roots(const gf::Field& field, const PointMap& f) {
  const std::int64_t n = field.order();
  std::uint64_t count = 0;
  std::int64_t first_throw = n;
  std::exception_ptr error;
#pragma omp parallel
  {
    std::int64_t local_throw = n;
    std::exception_ptr local_error;
#pragma omp for schedule(static) reduction(+ : count)
    for (std::int64_t x = 0; x < n; ++x) {
      if (x > local_throw) continue;
      try {
        count += f(static_cast<Code>(x)) == 0;
      } catch (...) {
        local_throw = x;
        local_error = std::current_exception();
      }
    }
#pragma omp critical(permpoly_scan_merge)
    if (local_throw < first_throw) {
      first_throw = local_throw;
      error = local_error;
    }
  }
  if (error) std::rethrow_exception(error);
  return count;
}

std::vector<Code> brute_inverse_table(const gf::Field& field, const PointMap& f) {
  return invert_table(field, evaluate_all(field, f));
}

InverseCheck verify_inverse(const gf::Field& field, const PointMap& f, const PointMap& g) {
  const auto bad = first_false(field.order(), [&](Code x) { return g(f(x)) == x && f(g(x)) == x; });
  if (!bad) return {};
  const auto direction = g(f(*bad)) != *bad ? InverseCheck::Direction::g_after_f
                                            : InverseCheck::Direction::f_after_g;
  return {false, bad, direction};
}

std::optional<Code> first_mismatch(const gf::Field& field, const PointMap& lhs,
                                   const PointMap& rhs) {
  return first_false(field.order(), [&](Code x) { return lhs(x) == rhs(x); });
}

std::optional<Code> first_failure(const gf::Field& field, const std::function<bool(Code)>& pred) {
  return first_false(field.order(), pred);
}

}  // namespace permpoly::scan::parallel
