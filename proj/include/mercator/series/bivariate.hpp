#pragma once

#include <vector>

#include "mercator/series/big_rational.hpp"
#include "mercator/series/univariate.hpp"

namespace mercator::series {

/// Truncated series sum c[i][j] X^i Y^j over i + j <= N (total degree).
class BivariateSeries {
 public:
  explicit BivariateSeries(int order);

  /// f(X) viewed as a series in X and Y.
  static BivariateSeries in_x(const UnivariateSeries& f);
  /// f(Y) viewed as a series in X and Y.
  static BivariateSeries in_y(const UnivariateSeries& f);

  int order() const { return order_; }
  const BigRational& at(int i, int j) const;
  BigRational& at(int i, int j);

  BivariateSeries truncated(int order) const;
  /// F(Y, X).
  BivariateSeries swapped() const;
  /// F(X, 0).
  UnivariateSeries restrict_to_x() const;
  /// F(0, Y), as a series in Y.
  UnivariateSeries restrict_to_y() const;

  BivariateSeries& operator+=(const BivariateSeries& rhs);
  BivariateSeries& operator-=(const BivariateSeries& rhs);
  BivariateSeries& operator*=(const BigRational& scalar);

  friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
  friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
  friend BivariateSeries operator*(BivariateSeries a, const BigRational& s) { return a *= s; }
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);

  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b) = default;

 private:
  int order_;
  std::vector<std::vector<BigRational>> rows_;  // rows_[i][j], j <= order_ - i
};

/// outer(inner(X, Y)); inner must have zero constant term.
BivariateSeries series_compose(const UnivariateSeries& outer, const BivariateSeries& inner);

}  // namespace mercator::series
