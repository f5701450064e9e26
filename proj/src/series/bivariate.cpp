#include "mercator/series/bivariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace mercator::series {

BivariateSeries::BivariateSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("BivariateSeries: negative order");
  rows_.resize(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) rows_[i].assign(static_cast<std::size_t>(order - i) + 1, BigRational(0));
}

BivariateSeries BivariateSeries::in_x(const UnivariateSeries& f) {
  BivariateSeries r(f.order());
  for (int i = 0; i <= f.order(); ++i) r.at(i, 0) = f[i];
  return r;
}

BivariateSeries BivariateSeries::in_y(const UnivariateSeries& f) {
  BivariateSeries r(f.order());
  for (int j = 0; j <= f.order(); ++j) r.at(0, j) = f[j];
  return r;
}

const BigRational& BivariateSeries::at(int i, int j) const {
  if (i < 0 || j < 0 || i + j > order_) throw std::out_of_range("BivariateSeries: index out of range");
  return rows_[i][j];
}

BigRational& BivariateSeries::at(int i, int j) {
  if (i < 0 || j < 0 || i + j > order_) throw std::out_of_range("BivariateSeries: index out of range");
  return rows_[i][j];
}

BivariateSeries BivariateSeries::truncated(int order) const {
  if (order < 0 || order > order_) throw std::invalid_argument("BivariateSeries::truncated: order out of range");
  BivariateSeries r(order);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) r.rows_[i][j] = rows_[i][j];
  return r;
}

BivariateSeries BivariateSeries::swapped() const {
  BivariateSeries r(order_);
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; i + j <= order_; ++j) r.rows_[j][i] = rows_[i][j];
  return r;
}

UnivariateSeries BivariateSeries::restrict_to_x() const {
  UnivariateSeries r(order_);
  for (int i = 0; i <= order_; ++i) r[i] = rows_[i][0];
  return r;
}

UnivariateSeries BivariateSeries::restrict_to_y() const {
  return UnivariateSeries(rows_[0]);
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& rhs) {
  if (rhs.order_ < order_) *this = truncated(rhs.order_);
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; i + j <= order_; ++j) rows_[i][j] += rhs.rows_[i][j];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& rhs) {
  if (rhs.order_ < order_) *this = truncated(rhs.order_);
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; i + j <= order_; ++j) rows_[i][j] -= rhs.rows_[i][j];
  return *this;
}

BivariateSeries& BivariateSeries::operator*=(const BigRational& scalar) {
  for (auto& row : rows_)
    for (auto& c : row) c *= scalar;
  return *this;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  const int order = std::min(a.order_, b.order_);
  BivariateSeries r(order);
  for (int i1 = 0; i1 <= order; ++i1) {
    for (int j1 = 0; i1 + j1 <= order; ++j1) {
      const BigRational& x = a.rows_[i1][j1];
      if (x.is_zero()) continue;
      for (int i2 = 0; i1 + j1 + i2 <= order; ++i2) {
        for (int j2 = 0; i1 + j1 + i2 + j2 <= order; ++j2) {
          const BigRational& y = b.rows_[i2][j2];
          if (!y.is_zero()) r.rows_[i1 + i2][j1 + j2] += x * y;
        }
      }
    }
  }
  return r;
}

BivariateSeries series_compose(const UnivariateSeries& outer, const BivariateSeries& inner) {
  if (!inner.at(0, 0).is_zero()) {
    throw std::invalid_argument("series_compose: inner series has a nonzero constant term");
  }
  const int order = std::min(outer.order(), inner.order());
  const BivariateSeries g = inner.truncated(order);
  BivariateSeries r(order);
  r.at(0, 0) = outer[order];
  for (int k = order - 1; k >= 0; --k) {
    r = r * g;
    r.at(0, 0) += outer[k];
  }
  return r;
}

}  // namespace mercator::series
