#pragma once

#include <string>
#include <string_view>

#include "mercator/series/bivariate.hpp"
#include "mercator/series/univariate.hpp"

namespace mercator::series {

// JSON layout:
//   {"order":N,"coefficients":[{"n":d,"value":"p/q"},...]}
//   {"order":N,"coefficients":[{"i":a,"j":b,"value":"p/q"},...]}
// Zero coefficients are omitted; entries are sorted by degree, then by i.

std::string to_json(const UnivariateSeries& s);
std::string to_json(const BivariateSeries& s);
std::string to_csv(const UnivariateSeries& s);
std::string to_csv(const BivariateSeries& s);

UnivariateSeries univariate_from_json(std::string_view text);
BivariateSeries bivariate_from_json(std::string_view text);

}  // namespace mercator::series
