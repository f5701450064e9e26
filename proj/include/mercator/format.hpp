#pragma once

#include <cstdio>
#include <string>

namespace mercator {

/// Shortest-safe round-trip rendering of a double: 17 significant digits.
inline std::string format_g17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace mercator
