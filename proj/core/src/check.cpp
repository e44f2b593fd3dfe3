#include "lightframe/check.hpp"

namespace lightframe {

namespace {

std::string index_names(const std::vector<std::size_t>& idx, const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t p = 0; p < idx.size(); ++p) {
    if (p) out += ",";
    out += names[idx[p]];
  }
  out += ")";
  return out;
}

}  // namespace

CheckResult check_pass(std::string id, std::string anchor) {
  return CheckResult{std::move(id), true, std::move(anchor), ""};
}

CheckResult check_fail(std::string id, std::string anchor, std::string witness) {
  return CheckResult{std::move(id), false, std::move(anchor), std::move(witness)};
}

CheckResult compare_fields(std::string id, std::string anchor, const TensorField& got,
                           const TensorField& want) {
  if (got.contravariant_rank() != want.contravariant_rank() ||
      got.covariant_rank() != want.covariant_rank() || !(got.chart() == want.chart())) {
    return check_fail(std::move(id), std::move(anchor), "field type mismatch");
  }
  const auto& names = got.chart().coordinates();
  std::vector<std::size_t> idx(got.rank(), 0);
  do {
    if (got.at(idx) != want.at(idx)) {
      std::string witness = "component " + index_names(idx, names) + ": got " +
                            got.at(idx).to_string(names) + ", want " +
                            want.at(idx).to_string(names);
      return check_fail(std::move(id), std::move(anchor), std::move(witness));
    }
  } while (advance_multi_index(idx, got.dim()));
  return check_pass(std::move(id), std::move(anchor));
}

CheckResult expect_zero(std::string id, std::string anchor, const TensorField& field) {
  const auto& names = field.chart().coordinates();
  std::vector<std::size_t> idx(field.rank(), 0);
  do {
    if (!field.at(idx).is_zero()) {
      std::string witness =
          "component " + index_names(idx, names) + " = " + field.at(idx).to_string(names);
      return check_fail(std::move(id), std::move(anchor), std::move(witness));
    }
  } while (advance_multi_index(idx, field.dim()));
  return check_pass(std::move(id), std::move(anchor));
}

CheckResult compare_scalars(std::string id, std::string anchor, const RationalExpr& got,
                            const RationalExpr& want, const std::vector<std::string>& names) {
  if (got == want) return check_pass(std::move(id), std::move(anchor));
  std::string witness = "got " + got.to_string(names) + ", want " + want.to_string(names);
  return check_fail(std::move(id), std::move(anchor), std::move(witness));
}

bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

}  // namespace lightframe
