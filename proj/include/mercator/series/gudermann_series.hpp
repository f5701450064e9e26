#pragma once

#include <string>
#include <vector>

#include "mercator/series/bivariate.hpp"
#include "mercator/series/univariate.hpp"

namespace mercator::series {

/// Secant numbers E_0..E_m: sec x = sum E_n x^{2n} / (2n)!.
struct EulerSequence {
  std::vector<BigRational> values;  // all integral

  std::vector<std::string> to_strings() const;
};

/// Computed as the exact reciprocal of the cosine series.
EulerSequence euler_numbers(int m);

/// Maclaurin series of elementary functions, truncated at `order`.
namespace elementary {
UnivariateSeries sin_series(int order);
UnivariateSeries cos_series(int order);
UnivariateSeries sinh_series(int order);
UnivariateSeries cosh_series(int order);
UnivariateSeries sec_series(int order);
UnivariateSeries tanh_series(int order);
UnivariateSeries arctanh_series(int order);
UnivariateSeries arcsin_series(int order);
/// 1 / (1 + x)
UnivariateSeries geometric_series(int order);
}  // namespace elementary

/// lambda(x) = arctanh(sin x) = sum E_n x^{2n+1} / (2n+1)!.
UnivariateSeries gudermann_log_series(int order);

/// lambda^{-1}(x) = arcsin(tanh x) = sum (-1)^n E_n x^{2n+1} / (2n+1)!.
UnivariateSeries gudermann_exp_series(int order);

/// F(X, Y) = lambda^{-1}(lambda(X) + lambda(Y)), truncated at total degree `order`.
BivariateSeries mercator_group_law(int order);

}  // namespace mercator::series
