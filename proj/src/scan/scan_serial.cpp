#include "permpoly/scan.hpp"

namespace permpoly::scan::serial {

std::vector<Code> evaluate_all(const gf::Field& field, const PointMap& f) {
  std::vector<Code> values(field.order());
  for (Code x = 0; x < field.order(); ++x) values[x] = f(x);
  return values;
}

PermCheckReport is_permutation(const gf::Field& field, const PointMap& f) {
  return permutation_report(field, evaluate_all(field, f));
}

std::uint64_t count_roots(const gf::Field& field, const PointMap& f) {
  std::uint64_t n = 0;
  for (Code x = 0; x < field.order(); ++x) n += f(x) == 0;
  return n;
}

std::vector<Code> brute_inverse_table(const gf::Field& field, const PointMap& f) {
  return invert_table(field, evaluate_all(field, f));
}

InverseCheck verify_inverse(const gf::Field& field, const PointMap& f, const PointMap& g) {
  for (Code x = 0; x < field.order(); ++x) {
    if (g(f(x)) != x) return {false, x, InverseCheck::Direction::g_after_f};
    if (f(g(x)) != x) return {false, x, InverseCheck::Direction::f_after_g};
  }
  return {};
}

std::optional<Code> first_mismatch(const gf::Field& field, const PointMap& lhs,
                                   const PointMap& rhs) {
  for (Code x = 0; x < field.order(); ++x) {
    if (lhs(x) != rhs(x)) return x;
  }
  return std::nullopt;
}

std::optional<Code> first_failure(const gf::Field& field, const std::function<bool(Code)>& pred) {
  for (Code x = 0; x < field.order(); ++x) {
    if (!pred(x)) return x;
  }
  return std::nullopt;
}

}  // namespace permpoly::scan::serial
