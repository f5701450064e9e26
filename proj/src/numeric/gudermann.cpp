#include "mercator/numeric/gudermann.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mercator/error.hpp"
#include "mercator/numeric/tolerances.hpp"

namespace mercator::numeric {

namespace {

constexpr double kTwoPi = 2 * kPi;
constexpr double kInf = std::numeric_limits<double>::infinity();

bool within_one_ulp(double r, double target) {
  return r == target || r == std::nextafter(target, 0.0) ||
         r == std::nextafter(target, 2 * target);
}

// pi/2 - kHalfPi, the part of pi/2 a double cannot hold.
constexpr double kHalfPiLow = 6.123233995736766e-17;

// 1 - |sin r| without the cancellation that sin(r) -> 1 causes near +-pi/2.
double one_minus_abs_sin(double r) {
  const double d = (kHalfPi - std::fabs(r)) + kHalfPiLow;  // Sterbenz-exact for |r| >= pi/4
  const double h = std::sin(d / 2);
  return 2 * h * h;
}

// 1 +- sin r with whichever side cancels taken from one_minus_abs_sin.
double one_plus_sin(double r) {
  const double s = std::sin(r);
  return s < -0.5 ? one_minus_abs_sin(r) : 1.0 + s;
}
double one_minus_sin(double r) {
  const double s = std::sin(r);
  return s > 0.5 ? one_minus_abs_sin(r) : 1.0 - s;
}

}  // namespace

LambdaFormula parse_lambda_formula(std::string_view name) {
  if (name == "arctanh-sin") return LambdaFormula::ArctanhSin;
  if (name == "log-tan-sec") return LambdaFormula::LogTanSec;
  if (name == "half-log-ratio") return LambdaFormula::HalfLogRatio;
  throw std::invalid_argument("unknown lambda formula '" + std::string(name) + "'");
}

double reduce_angle(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::remainder(x, kTwoPi);  // exact, in [-pi, pi]
  if (r <= -kPi) r += kTwoPi;
  return r;
}

int singular_sign(double x) {
  const double r = reduce_angle(x);
  if (within_one_ulp(r, kHalfPi)) return 1;
  if (within_one_ulp(r, -kHalfPi)) return -1;
  return 0;
}

double lambda_num(double x, LambdaFormula formula) {
  if (const int s = singular_sign(x); s != 0) return s * kInf;
  const double r = reduce_angle(x);
  switch (formula) {
    case LambdaFormula::ArctanhSin: {
      const double s = std::sin(r);
      if (std::fabs(s) <= 0.5) return std::atanh(s);
      // atanh a = 1/2 log1p(2a / (1 - a))
      return std::copysign(0.5 * std::log1p(2 * std::fabs(s) / one_minus_abs_sin(r)), s);
    }
    case LambdaFormula::LogTanSec: {
      // evaluated at |r| so that tan + sec never cancels, then odd-extended
      const double a = std::fabs(r);
      return std::copysign(std::log(std::fabs(std::tan(a) + 1.0 / std::cos(a))), r);
    }
    case LambdaFormula::HalfLogRatio:
      return 0.5 * std::log(one_plus_sin(r) / one_minus_sin(r));
  }
  throw std::logic_error("lambda_num: unhandled formula");
}

double lambda_inv_num(double y) {
  if (std::isinf(y)) return y > 0 ? kHalfPi : -kHalfPi;
  // atan(sinh y) equals arcsin(tanh y) and stays accurate as tanh y -> 1.
  return std::atan(std::sinh(y));
}

double mercator_add(double x, double y) {
  const int sx = singular_sign(x);
  const int sy = singular_sign(y);
  if (sx != 0 && sx == -sy) {
    throw PunctureError("mercator_add: (" + std::string(sx > 0 ? "pi/2, -pi/2" : "-pi/2, pi/2") +
                        ") is a puncture of the torus");
  }
  const double rx = reduce_angle(x);
  const double ry = reduce_angle(y);
  return reduce_angle(2.0 * std::atan2(std::sin(0.5 * (rx + ry)), std::cos(0.5 * (rx - ry))));
}

std::complex<double> cayley_lambda(double x) {
  using namespace std::complex_literals;
  const std::complex<double> z = std::polar(1.0, x);
  const std::complex<double> cayley = (z - 1i) / (z + 1i);
  return -std::log(1i * cayley);
}

double cayley_lambda_check(double x) {
  if (singular_sign(x) != 0) {
    throw DomainError("cayley_lambda_check: x is a singularity of lambda");
  }
  const double r = reduce_angle(x);
  if (std::fabs(r) > kHalfPi) {
    // i C(e^{ix}) is negative there and the principal log picks up i*pi.
    throw DomainError("cayley_lambda_check: defined for reduced |x| < pi/2");
  }
  const std::complex<double> value = cayley_lambda(r);
  if (std::fabs(value.imag()) > kRoundTripTolerance) {
    throw std::runtime_error("cayley_lambda_check: imaginary part does not vanish");
  }
  return std::fabs(value.real() - lambda_num(r));
}

double aberration_sine(double x, double y) {
  const double sx = std::sin(x);
  const double sy = std::sin(y);
  const double den = 1.0 + sx * sy;
  const int gx = singular_sign(x);
  const int gy = singular_sign(y);
  if (den == 0.0 || (gx != 0 && gx == -gy)) {
    throw PunctureError("aberration_sine: vanishing denominator at a puncture");
  }
  return (sx + sy) / den;
}

}  // namespace mercator::numeric
