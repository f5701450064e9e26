#pragma once

#include <complex>
#include <string_view>

namespace mercator::numeric {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2;

/// Equivalent closed forms of lambda(x) = arctanh(sin x).
enum class LambdaFormula {
  ArctanhSin,    // arctanh(sin x)
  LogTanSec,     // log|tan x + sec x|
  HalfLogRatio,  // 1/2 log|(1 + sin x) / (1 - sin x)|
};

/// Parses "arctanh-sin", "log-tan-sec", "half-log-ratio"; throws
/// std::invalid_argument otherwise.
LambdaFormula parse_lambda_formula(std::string_view name);

/// Representative of x mod 2pi in (-pi, pi].
double reduce_angle(double x);

/// +1 when x = pi/2 mod 2pi, -1 when x = -pi/2 mod 2pi (each within one ulp
/// of the reduced argument), 0 otherwise.
int singular_sign(double x);

/// The inverse Gudermannian lambda(x); returns +-infinity at x = +-pi/2 mod 2pi.
double lambda_num(double x, LambdaFormula formula = LambdaFormula::ArctanhSin);

/// The Gudermannian gd(y) = arcsin(tanh y) in [-pi/2, pi/2]; +-inf map to +-pi/2.
double lambda_inv_num(double y);

/// Circle-valued Mercator addition 2 atan2(sin((x+y)/2), cos((x-y)/2)),
/// reduced to (-pi, pi]. Throws PunctureError at (+-pi/2, -+pi/2).
double mercator_add(double x, double y);

/// -log(i C(e^{ix})) with the Cayley transform C(z) = (z - i)/(z + i).
std::complex<double> cayley_lambda(double x);

/// |Re cayley_lambda(x) - lambda_num(x)|. Throws DomainError when x is
/// singular, and std::runtime_error if the imaginary part exceeds the
/// round-trip tolerance.
double cayley_lambda_check(double x);

/// (sin x + sin y) / (1 + sin x sin y); throws PunctureError when the
/// denominator vanishes.
double aberration_sine(double x, double y);

}  // namespace mercator::numeric
