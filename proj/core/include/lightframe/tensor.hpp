#ifndef LIGHTFRAME_TENSOR_HPP
#define LIGHTFRAME_TENSOR_HPP

#include <vector>

#include "lightframe/chart.hpp"
#include "lightframe/rational_expr.hpp"

namespace lightframe {

// Dense coordinate tensor field on a chart. Slots are ordered with all
// contravariant indices before all covariant ones; components are stored
// row-major over that slot order.
class TensorField {
 public:
  TensorField() = default;
  TensorField(Chart chart, std::size_t contravariant, std::size_t covariant);
  static TensorField scalar(Chart chart, RationalExpr value);

  const Chart& chart() const { return chart_; }
  std::size_t contravariant_rank() const { return r_; }
  std::size_t covariant_rank() const { return s_; }
  std::size_t rank() const { return r_ + s_; }
  std::size_t dim() const { return chart_.dim(); }

  const RationalExpr& at(const std::vector<std::size_t>& idx) const;
  RationalExpr& at(const std::vector<std::size_t>& idx);
  template <typename... I>
  RationalExpr& operator()(I... i) {
    return at(std::vector<std::size_t>{static_cast<std::size_t>(i)...});
  }
  template <typename... I>
  const RationalExpr& operator()(I... i) const {
    return at(std::vector<std::size_t>{static_cast<std::size_t>(i)...});
  }

  const std::vector<RationalExpr>& components() const { return comps_; }
  std::vector<RationalExpr>& components() { return comps_; }

  bool is_zero() const;
  TensorField operator-() const;
  friend TensorField operator+(const TensorField& a, const TensorField& b);
  friend TensorField operator-(const TensorField& a, const TensorField& b);
  // f * T, componentwise.
  TensorField scaled(const RationalExpr& f) const;
  bool operator==(const TensorField& rhs) const = default;

  // Contracts one contravariant slot against one covariant slot. Slot numbers
  // run over the combined list, so upper_slot < contravariant_rank() <=
  // lower_slot < rank().
  TensorField contract(std::size_t upper_slot, std::size_t lower_slot) const;
  friend TensorField tensor_product(const TensorField& a, const TensorField& b);

 private:
  std::size_t linear_index(const std::vector<std::size_t>& idx) const;

  Chart chart_;
  std::size_t r_ = 0;
  std::size_t s_ = 0;
  std::vector<RationalExpr> comps_;
};

TensorField tensor_product(const TensorField& a, const TensorField& b);

// Rank-specific constructors.
TensorField vector_field(const Chart& chart, std::vector<RationalExpr> comps);
TensorField one_form(const Chart& chart, std::vector<RationalExpr> comps);

// Pairings written out to avoid rank-0 contraction chains at call sites.
RationalExpr scalar_value(const TensorField& t);                  // rank-0 extract
RationalExpr one_form_on(const TensorField& w, const TensorField& x);
RationalExpr bilinear_on(const TensorField& g, const TensorField& x, const TensorField& y);
TensorField endo_on(const TensorField& t, const TensorField& x);  // (1,1) applied to (1,0)
RationalExpr directional(const TensorField& x, const RationalExpr& f);  // x(f)

// Evaluates every component; throws MathError at poles.
std::vector<Rat> evaluate_at_point(const TensorField& t, const std::vector<Rat>& point);

// Odometer increment over rank many indices in [0, dim); returns false on wrap.
bool advance_multi_index(std::vector<std::size_t>& idx, std::size_t dim);

}  // namespace lightframe

#endif
