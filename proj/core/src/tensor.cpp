#include "lightframe/tensor.hpp"

#include <cassert>

#include "lightframe/error.hpp"

namespace lightframe {

namespace {

std::size_t pow_size(std::size_t base, std::size_t exp) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < exp; ++i) n *= base;
  return n;
}

}  // namespace

TensorField::TensorField(Chart chart, std::size_t contravariant, std::size_t covariant)
    : chart_(std::move(chart)), r_(contravariant), s_(covariant) {
  comps_.assign(pow_size(chart_.dim(), rank()), chart_.zero());
}

TensorField TensorField::scalar(Chart chart, RationalExpr value) {
  TensorField t(std::move(chart), 0, 0);
  t.comps_[0] = std::move(value);
  return t;
}

std::size_t TensorField::linear_index(const std::vector<std::size_t>& idx) const {
  assert(idx.size() == rank());
  std::size_t lin = 0;
  for (std::size_t i : idx) {
    assert(i < dim());
    lin = lin * dim() + i;
  }
  return lin;
}

const RationalExpr& TensorField::at(const std::vector<std::size_t>& idx) const {
  return comps_[linear_index(idx)];
}

RationalExpr& TensorField::at(const std::vector<std::size_t>& idx) {
  return comps_[linear_index(idx)];
}

bool TensorField::is_zero() const {
  for (const RationalExpr& c : comps_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

TensorField TensorField::operator-() const {
  TensorField t = *this;
  for (RationalExpr& c : t.comps_) c = -c;
  return t;
}

TensorField operator+(const TensorField& a, const TensorField& b) {
  if (a.chart_ != b.chart_ || a.r_ != b.r_ || a.s_ != b.s_) {
    throw MathError("tensor sum shape mismatch");
  }
  TensorField t = a;
  for (std::size_t i = 0; i < t.comps_.size(); ++i) t.comps_[i] += b.comps_[i];
  return t;
}

TensorField operator-(const TensorField& a, const TensorField& b) {
  if (a.chart_ != b.chart_ || a.r_ != b.r_ || a.s_ != b.s_) {
    throw MathError("tensor difference shape mismatch");
  }
  TensorField t = a;
  for (std::size_t i = 0; i < t.comps_.size(); ++i) t.comps_[i] -= b.comps_[i];
  return t;
}

TensorField TensorField::scaled(const RationalExpr& f) const {
  TensorField t = *this;
  for (RationalExpr& c : t.comps_) c *= f;
  return t;
}

bool advance_multi_index(std::vector<std::size_t>& idx, std::size_t dim) {
  for (std::size_t pos = idx.size(); pos-- > 0;) {
    if (++idx[pos] < dim) return true;
    idx[pos] = 0;
  }
  return false;
}

TensorField TensorField::contract(std::size_t upper_slot, std::size_t lower_slot) const {
  if (upper_slot >= r_ || lower_slot < r_ || lower_slot >= rank()) {
    throw MathError("contraction needs one contravariant and one covariant slot");
  }
  TensorField result(chart_, r_ - 1, s_ - 1);
  std::vector<std::size_t> out(rank() - 2, 0);
  std::vector<std::size_t> src(rank(), 0);
  do {
    RationalExpr sum = chart_.zero();
    for (std::size_t k = 0; k < dim(); ++k) {
      std::size_t o = 0;
      for (std::size_t pos = 0; pos < rank(); ++pos) {
        src[pos] = (pos == upper_slot || pos == lower_slot) ? k : out[o++];
      }
      sum += at(src);
    }
    result.at(out) = std::move(sum);
  } while (advance_multi_index(out, dim()));
  return result;
}

TensorField tensor_product(const TensorField& a, const TensorField& b) {
  if (a.chart_ != b.chart_) throw MathError("tensor product chart mismatch");
  TensorField result(a.chart_, a.r_ + b.r_, a.s_ + b.s_);
  std::vector<std::size_t> out(result.rank(), 0);
  std::vector<std::size_t> ia(a.rank());
  std::vector<std::size_t> ib(b.rank());
  do {
    // Slot layout: a-contra, b-contra, a-cov, b-cov.
    std::size_t o = 0;
    for (std::size_t i = 0; i < a.r_; ++i) ia[i] = out[o++];
    for (std::size_t i = 0; i < b.r_; ++i) ib[i] = out[o++];
    for (std::size_t i = 0; i < a.s_; ++i) ia[a.r_ + i] = out[o++];
    for (std::size_t i = 0; i < b.s_; ++i) ib[b.r_ + i] = out[o++];
    result.at(out) = a.at(ia) * b.at(ib);
  } while (advance_multi_index(out, result.dim()));
  return result;
}

TensorField vector_field(const Chart& chart, std::vector<RationalExpr> comps) {
  if (comps.size() != chart.dim()) throw MathError("vector field component count mismatch");
  TensorField t(chart, 1, 0);
  t.components() = std::move(comps);
  return t;
}

TensorField one_form(const Chart& chart, std::vector<RationalExpr> comps) {
  if (comps.size() != chart.dim()) throw MathError("one-form component count mismatch");
  TensorField t(chart, 0, 1);
  t.components() = std::move(comps);
  return t;
}

RationalExpr scalar_value(const TensorField& t) {
  if (t.rank() != 0) throw MathError("scalar_value needs a rank-0 tensor");
  return t.components()[0];
}

RationalExpr one_form_on(const TensorField& w, const TensorField& x) {
  if (w.covariant_rank() != 1 || w.contravariant_rank() != 0 ||
      x.contravariant_rank() != 1 || x.covariant_rank() != 0 || w.chart() != x.chart()) {
    throw MathError("one_form_on needs a (0,1) and a (1,0) field on one chart");
  }
  RationalExpr sum = w.chart().zero();
  for (std::size_t i = 0; i < w.dim(); ++i) sum += w.components()[i] * x.components()[i];
  return sum;
}

RationalExpr bilinear_on(const TensorField& g, const TensorField& x, const TensorField& y) {
  if (g.covariant_rank() != 2 || g.contravariant_rank() != 0 ||
      x.contravariant_rank() != 1 || y.contravariant_rank() != 1 ||
      x.covariant_rank() != 0 || y.covariant_rank() != 0 ||
      g.chart() != x.chart() || g.chart() != y.chart()) {
    throw MathError("bilinear_on needs a (0,2) and two (1,0) fields on one chart");
  }
  RationalExpr sum = g.chart().zero();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      sum += g(i, j) * x.components()[i] * y.components()[j];
    }
  }
  return sum;
}

TensorField endo_on(const TensorField& t, const TensorField& x) {
  if (t.contravariant_rank() != 1 || t.covariant_rank() != 1 ||
      x.contravariant_rank() != 1 || x.covariant_rank() != 0 || t.chart() != x.chart()) {
    throw MathError("endo_on needs a (1,1) and a (1,0) field on one chart");
  }
  std::vector<RationalExpr> comps(t.dim(), t.chart().zero());
  for (std::size_t i = 0; i < t.dim(); ++i) {
    for (std::size_t j = 0; j < t.dim(); ++j) comps[i] += t(i, j) * x.components()[j];
  }
  return vector_field(t.chart(), std::move(comps));
}

RationalExpr directional(const TensorField& x, const RationalExpr& f) {
  if (x.contravariant_rank() != 1 || x.covariant_rank() != 0) {
    throw MathError("directional needs a (1,0) field");
  }
  RationalExpr sum = x.chart().zero();
  for (std::size_t i = 0; i < x.dim(); ++i) sum += x.components()[i] * f.derivative(i);
  return sum;
}

std::vector<Rat> evaluate_at_point(const TensorField& t, const std::vector<Rat>& point) {
  std::vector<Rat> out;
  out.reserve(t.components().size());
  for (const RationalExpr& c : t.components()) out.push_back(c.evaluate(point));
  return out;
}

}  // namespace lightframe
