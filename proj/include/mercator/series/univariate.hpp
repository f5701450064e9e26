#pragma once

#include <vector>

#include "mercator/series/big_rational.hpp"

namespace mercator::series {

/// Truncated power series a_0 + a_1 x + ... + a_N x^N over the rationals.
/// Every result of a binary operation is truncated at the smaller of the
/// two input orders.
class UnivariateSeries {
 public:
  /// The zero series of the given truncation order.
  explicit UnivariateSeries(int order);
  /// Order is coefficients.size() - 1; the vector must be non-empty.
  explicit UnivariateSeries(std::vector<BigRational> coefficients);

  /// The series x, truncated at `order`.
  static UnivariateSeries variable(int order);
  static UnivariateSeries constant(const BigRational& c, int order);

  int order() const { return static_cast<int>(coefficients_.size()) - 1; }
  const BigRational& operator[](int n) const { return coefficients_.at(n); }
  BigRational& operator[](int n) { return coefficients_.at(n); }
  const std::vector<BigRational>& coefficients() const { return coefficients_; }

  /// Drops every term above `order`; `order` may not exceed the current one.
  UnivariateSeries truncated(int order) const;

  UnivariateSeries& operator+=(const UnivariateSeries& rhs);
  UnivariateSeries& operator-=(const UnivariateSeries& rhs);
  UnivariateSeries& operator*=(const BigRational& scalar);

  friend UnivariateSeries operator+(UnivariateSeries a, const UnivariateSeries& b) { return a += b; }
  friend UnivariateSeries operator-(UnivariateSeries a, const UnivariateSeries& b) { return a -= b; }
  friend UnivariateSeries operator*(UnivariateSeries a, const BigRational& s) { return a *= s; }
  friend UnivariateSeries operator*(const UnivariateSeries& a, const UnivariateSeries& b);
  UnivariateSeries operator-() const;

  friend bool operator==(const UnivariateSeries& a, const UnivariateSeries& b) = default;

 private:
  std::vector<BigRational> coefficients_;
};

/// Cauchy product truncated at min(order(a), order(b)).
UnivariateSeries series_multiply(const UnivariateSeries& a, const UnivariateSeries& b);

/// outer(inner(x)); throws std::invalid_argument unless inner(0) == 0.
UnivariateSeries series_compose(const UnivariateSeries& outer, const UnivariateSeries& inner);

/// g with f(g(x)) = x = g(f(x)); requires f = x + O(x^2), throws
/// std::invalid_argument otherwise.
UnivariateSeries series_invert_composition(const UnivariateSeries& f);

/// 1/f; requires f(0) != 0 (std::invalid_argument otherwise).
UnivariateSeries series_reciprocal(const UnivariateSeries& f);

/// Term-by-term antiderivative with zero constant; order grows by one.
UnivariateSeries series_integrate(const UnivariateSeries& f);

/// Term-by-term derivative; order shrinks by one (order 0 gives the zero
/// series of order 0).
UnivariateSeries series_differentiate(const UnivariateSeries& f);

}  // namespace mercator::series
