#ifndef LIGHTFRAME_CHECK_HPP
#define LIGHTFRAME_CHECK_HPP

#include <string>
#include <vector>

#include "lightframe/tensor.hpp"

namespace lightframe {

// Outcome of one verification item. `anchor` restates the identity being
// tested; `witness` pinpoints the first failure (empty when the check holds).
struct CheckResult {
  std::string id;
  bool passed = false;
  std::string anchor;
  std::string witness;
};

CheckResult check_pass(std::string id, std::string anchor);
CheckResult check_fail(std::string id, std::string anchor, std::string witness);

// Exact componentwise comparison; the witness names the first differing
// component with the chart's coordinate names.
CheckResult compare_fields(std::string id, std::string anchor, const TensorField& got,
                           const TensorField& want);

// Convenience for fields that should vanish identically.
CheckResult expect_zero(std::string id, std::string anchor, const TensorField& field);

// Exact scalar comparison with the same witness format.
CheckResult compare_scalars(std::string id, std::string anchor, const RationalExpr& got,
                            const RationalExpr& want, const std::vector<std::string>& names);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace lightframe

#endif
