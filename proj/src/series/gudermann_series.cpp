#include "mercator/series/gudermann_series.hpp"

#include <stdexcept>

namespace mercator::series {

std::vector<std::string> EulerSequence::to_strings() const {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

namespace elementary {

namespace {
void require_order(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
}
}  // namespace

UnivariateSeries sin_series(int order) {
  require_order(order);
  UnivariateSeries s(order);
  BigRational term(1);  // x^n / n!
  for (int n = 1; n <= order; ++n) {
    term /= BigRational(n);
    if (n % 2 == 1) s[n] = (n % 4 == 1) ? term : -term;
  }
  return s;
}

UnivariateSeries cos_series(int order) {
  require_order(order);
  UnivariateSeries s(order);
  BigRational term(1);
  s[0] = 1;
  for (int n = 1; n <= order; ++n) {
    term /= BigRational(n);
    if (n % 2 == 0) s[n] = (n % 4 == 0) ? term : -term;
  }
  return s;
}

UnivariateSeries sinh_series(int order) {
  require_order(order);
  UnivariateSeries s(order);
  BigRational term(1);
  for (int n = 1; n <= order; ++n) {
    term /= BigRational(n);
    if (n % 2 == 1) s[n] = term;
  }
  return s;
}

UnivariateSeries cosh_series(int order) {
  require_order(order);
  UnivariateSeries s(order);
  BigRational term(1);
  s[0] = 1;
  for (int n = 1; n <= order; ++n) {
    term /= BigRational(n);
    if (n % 2 == 0) s[n] = term;
  }
  return s;
}

UnivariateSeries sec_series(int order) { return series_reciprocal(cos_series(order)); }

UnivariateSeries tanh_series(int order) {
  return sinh_series(order) * series_reciprocal(cosh_series(order));
}

UnivariateSeries arctanh_series(int order) {
  require_order(order);
  UnivariateSeries s(order);
  for (int n = 1; n <= order; n += 2) s[n] = BigRational(1, n);
  return s;
}

UnivariateSeries arcsin_series(int order) {
  require_order(order);
  // (2k)! / (4^k (k!)^2 (2k+1)) x^{2k+1}; the central-binomial factor is
  // advanced by (2k-1)/(2k) per step.
  UnivariateSeries s(order);
  BigRational central(1);
  for (int k = 0; 2 * k + 1 <= order; ++k) {
    if (k > 0) central *= BigRational(2 * k - 1, 2 * k);
    s[2 * k + 1] = central / BigRational(2 * k + 1);
  }
  return s;
}

UnivariateSeries geometric_series(int order) {
  require_order(order);
  UnivariateSeries s(order);
  for (int n = 0; n <= order; ++n) s[n] = (n % 2 == 0) ? 1 : -1;
  return s;
}

}  // namespace elementary

EulerSequence euler_numbers(int m) {
  if (m < 0) throw std::invalid_argument("euler_numbers: negative count");
  const UnivariateSeries sec = elementary::sec_series(2 * m);
  EulerSequence e;
  e.values.reserve(static_cast<std::size_t>(m) + 1);
  BigRational fact(1);
  for (int n = 0; n <= m; ++n) {
    if (n > 0) fact *= BigRational(static_cast<long>(2 * n - 1) * (2 * n));
    BigRational en = sec[2 * n] * fact;
    if (!en.is_integer() || en.sign() <= 0) {
      throw std::logic_error("euler_numbers: non-integral secant coefficient");
    }
    e.values.push_back(std::move(en));
  }
  return e;
}

namespace {

UnivariateSeries odd_euler_series(int order, bool alternating) {
  if (order < 1) throw std::invalid_argument("series order must be at least 1");
  const EulerSequence e = euler_numbers((order - 1) / 2);
  UnivariateSeries s(order);
  BigRational fact(1);  // (2n+1)!
  for (int n = 0; 2 * n + 1 <= order; ++n) {
    if (n > 0) fact *= BigRational(static_cast<long>(2 * n) * (2 * n + 1));
    BigRational c = e.values[n] / fact;
    s[2 * n + 1] = (alternating && n % 2 == 1) ? -c : c;
  }
  return s;
}

}  // namespace

UnivariateSeries gudermann_log_series(int order) { return odd_euler_series(order, false); }

UnivariateSeries gudermann_exp_series(int order) { return odd_euler_series(order, true); }

BivariateSeries mercator_group_law(int order) {
  if (order < 1) throw std::invalid_argument("mercator_group_law: order must be at least 1");
  const UnivariateSeries log = gudermann_log_series(order);
  const BivariateSeries sum = BivariateSeries::in_x(log) + BivariateSeries::in_y(log);
  return series_compose(gudermann_exp_series(order), sum);
}

}  // namespace mercator::series
