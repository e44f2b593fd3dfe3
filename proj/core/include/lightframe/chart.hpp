#ifndef LIGHTFRAME_CHART_HPP
#define LIGHTFRAME_CHART_HPP

#include <string>
#include <vector>

#include "lightframe/rational_expr.hpp"

namespace lightframe {

// Coordinate chart: an ordered list of distinct coordinate names. The order
// fixes the variable indexing of every expression and tensor on the chart.
class Chart {
 public:
  Chart() = default;
  Chart(std::string name, std::vector<std::string> coordinates);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return coords_.size(); }
  const std::vector<std::string>& coordinates() const { return coords_; }

  // Parses text over this chart's coordinates.
  RationalExpr parse(const std::string& text) const;
  RationalExpr zero() const { return RationalExpr::zero(dim()); }
  RationalExpr one() const { return RationalExpr::one(dim()); }
  RationalExpr scalar(const Rat& value) const { return RationalExpr::constant(dim(), value); }
  RationalExpr coordinate(std::size_t i) const { return RationalExpr::variable(dim(), i); }

  bool operator==(const Chart& rhs) const = default;

 private:
  std::string name_;
  std::vector<std::string> coords_;
};

}  // namespace lightframe

#endif
