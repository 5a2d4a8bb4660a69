#include <limits>

#include "permpoly/scan.hpp"

namespace permpoly::scan {

namespace {
constexpr Code kUnset = std::numeric_limits<Code>::max();
}

PermCheckReport permutation_report(const gf::Field& field, const std::vector<Code>& values) {
  PermCheckReport report;
  std::vector<Code> preimage(field.order(), kUnset);
  for (Code x = 0; x < values.size(); ++x) {
    const Code v = values[x];
    if (v == 0) ++report.root_count;
    if (preimage[v] == kUnset) {
      preimage[v] = x;
    } else if (!report.collision) {
      report.collision = std::make_pair(preimage[v], x);
    }
  }
  report.is_permutation = !report.collision;
  return report;
}

std::vector<Code> invert_table(const gf::Field& field, const std::vector<Code>& values) {
  std::vector<Code> inverse(field.order(), kUnset);
  for (Code x = 0; x < values.size(); ++x) {
    const Code v = values[x];
    if (inverse[v] != kUnset) throw NotPermutation(inverse[v], x);
    inverse[v] = x;
  }
  return inverse;
}

}  // namespace permpoly::scan
