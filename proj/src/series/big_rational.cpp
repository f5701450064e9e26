#include "mercator/series/big_rational.hpp"

#include <stdexcept>
#include <utility>

namespace mercator::series {

BigRational::BigRational(long value) : value_(value) {}

BigRational::BigRational(long numerator, long denominator) {
  if (denominator == 0) {
    throw std::domain_error("BigRational: zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  mpz_class num, den(1);
  auto read = [](mpz_class& out, const std::string& digits) {
    if (digits.empty() || out.set_str(digits, 10) != 0) {
      throw std::invalid_argument("BigRational: malformed rational '" + digits + "'");
    }
  };
  if (slash == std::string::npos) {
    read(num, s);
  } else {
    read(num, s.substr(0, slash));
    read(den, s.substr(slash + 1));
    if (den == 0) {
      throw std::domain_error("BigRational: zero denominator");
    }
  }
  return BigRational(mpq_class(num, den));
}

BigRational BigRational::from_integer_string(std::string_view digits) {
  if (digits.find('/') != std::string_view::npos) {
    throw std::invalid_argument("BigRational: expected an integer");
  }
  return parse(digits);
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("BigRational: division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigRational BigRational::inverse() const { return BigRational(1) / *this; }

bool BigRational::is_zero() const { return sgn(value_) == 0; }

bool BigRational::is_integer() const { return value_.get_den() == 1; }

int BigRational::sign() const { return sgn(value_); }

std::string BigRational::numerator_string() const { return value_.get_num().get_str(); }

std::string BigRational::denominator_string() const { return value_.get_den().get_str(); }

std::string BigRational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

double BigRational::to_double() const { return value_.get_d(); }

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

BigRational factorial(unsigned n) {
  BigRational f(1);
  for (unsigned k = 2; k <= n; ++k) f *= BigRational(static_cast<long>(k));
  return f;
}

}  // namespace mercator::series
