#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace mercator::series {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value);  // NOLINT: implicit on purpose, integers are rationals
  BigRational(long numerator, long denominator);

  /// Parses "p" or "p/q" (q != 0) and canonicalizes.
  static BigRational parse(std::string_view text);

  /// Integer from decimal digits, e.g. factorials too large for long.
  static BigRational from_integer_string(std::string_view digits);

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  /// Throws std::domain_error on division by zero.
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b);
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

  BigRational inverse() const;
  bool is_zero() const;
  bool is_integer() const;
  int sign() const;

  std::string numerator_string() const;
  std::string denominator_string() const;
  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;
  double to_double() const;

 private:
  explicit BigRational(mpq_class value);
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

/// n! as an exact integer.
BigRational factorial(unsigned n);

}  // namespace mercator::series
