#include "mercator/series/univariate.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mercator::series {

UnivariateSeries::UnivariateSeries(int order) {
  if (order < 0) throw std::invalid_argument("UnivariateSeries: negative order");
  coefficients_.assign(static_cast<std::size_t>(order) + 1, BigRational(0));
}

UnivariateSeries::UnivariateSeries(std::vector<BigRational> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw std::invalid_argument("UnivariateSeries: no coefficients");
}

UnivariateSeries UnivariateSeries::variable(int order) {
  UnivariateSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

UnivariateSeries UnivariateSeries::constant(const BigRational& c, int order) {
  UnivariateSeries s(order);
  s[0] = c;
  return s;
}

UnivariateSeries UnivariateSeries::truncated(int order) const {
  if (order < 0 || order > this->order()) {
    throw std::invalid_argument("UnivariateSeries::truncated: order out of range");
  }
  return UnivariateSeries(std::vector<BigRational>(coefficients_.begin(),
                                                   coefficients_.begin() + order + 1));
}

UnivariateSeries& UnivariateSeries::operator+=(const UnivariateSeries& rhs) {
  coefficients_.resize(static_cast<std::size_t>(std::min(order(), rhs.order())) + 1);
  for (int n = 0; n <= order(); ++n) coefficients_[n] += rhs[n];
  return *this;
}

UnivariateSeries& UnivariateSeries::operator-=(const UnivariateSeries& rhs) {
  coefficients_.resize(static_cast<std::size_t>(std::min(order(), rhs.order())) + 1);
  for (int n = 0; n <= order(); ++n) coefficients_[n] -= rhs[n];
  return *this;
}

UnivariateSeries& UnivariateSeries::operator*=(const BigRational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

UnivariateSeries UnivariateSeries::operator-() const {
  UnivariateSeries r = *this;
  for (auto& c : r.coefficients_) c = -c;
  return r;
}

UnivariateSeries operator*(const UnivariateSeries& a, const UnivariateSeries& b) {
  const int order = std::min(a.order(), b.order());
  UnivariateSeries r(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

UnivariateSeries series_multiply(const UnivariateSeries& a, const UnivariateSeries& b) {
  return a * b;
}

UnivariateSeries series_compose(const UnivariateSeries& outer, const UnivariateSeries& inner) {
  if (!inner[0].is_zero()) {
    throw std::invalid_argument("series_compose: inner series has a nonzero constant term");
  }
  const int order = std::min(outer.order(), inner.order());
  const UnivariateSeries g = inner.truncated(order);
  // Horner in the inner series.
  UnivariateSeries r = UnivariateSeries::constant(outer[order], order);
  for (int k = order - 1; k >= 0; --k) {
    r = r * g;
    r[0] += outer[k];
  }
  return r;
}

UnivariateSeries series_invert_composition(const UnivariateSeries& f) {
  if (f.order() < 1 || !f[0].is_zero() || f[1] != BigRational(1)) {
    throw std::invalid_argument(
        "series_invert_composition: series must have the form x + O(x^2)");
  }
  const int order = f.order();
  UnivariateSeries g = UnivariateSeries::variable(order);
  // f(g + d x^n) = f(g) + d x^n + O(x^{n+1}), so each step fixes one coefficient.
  for (int n = 2; n <= order; ++n) {
    const UnivariateSeries fg = series_compose(f.truncated(n), g.truncated(n));
    g[n] -= fg[n];
  }
  return g;
}

UnivariateSeries series_reciprocal(const UnivariateSeries& f) {
  if (f[0].is_zero()) {
    throw std::invalid_argument("series_reciprocal: zero constant term");
  }
  const int order = f.order();
  UnivariateSeries r(order);
  const BigRational inv0 = f[0].inverse();
  r[0] = inv0;
  for (int n = 1; n <= order; ++n) {
    BigRational acc(0);
    for (int k = 1; k <= n; ++k) acc += f[k] * r[n - k];
    r[n] = -acc * inv0;
  }
  return r;
}

UnivariateSeries series_integrate(const UnivariateSeries& f) {
  UnivariateSeries r(f.order() + 1);
  for (int n = 0; n <= f.order(); ++n) r[n + 1] = f[n] / BigRational(n + 1);
  return r;
}

UnivariateSeries series_differentiate(const UnivariateSeries& f) {
  if (f.order() == 0) return UnivariateSeries(0);
  UnivariateSeries r(f.order() - 1);
  for (int n = 1; n <= f.order(); ++n) r[n - 1] = f[n] * BigRational(n);
  return r;
}

}  // namespace mercator::series
