#include "mercator/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>

#include "mercator/numeric/gudermann.hpp"
#include "mercator/numeric/tolerances.hpp"
#include "mercator/parallel.hpp"
#include "mercator/series/axioms.hpp"
#include "mercator/series/gudermann_series.hpp"
#include "mercator/terrell/rotation.hpp"

namespace mercator::cli {

namespace {

using namespace mercator::series;
using namespace mercator::numeric;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

CheckOutcome tolerance_check(std::string name, double worst, double tolerance) {
  return {std::move(name), worst < tolerance, "max error " + sci(worst) + " < " + sci(tolerance)};
}

CheckOutcome exact_check(std::string name, bool ok, std::string what) {
  return {std::move(name), ok, ok ? what : "violated: " + what};
}

/// n points strictly inside (lo, hi).
std::vector<double> open_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int k = 0; k < n; ++k) g[k] = lo + (hi - lo) * (k + 0.5) / n;
  return g;
}

double evaluate(const BivariateSeries& f, double x, double y) {
  double sum = 0;
  for (int d = f.order(); d >= 0; --d)
    for (int i = 0; i <= d; ++i) {
      const BigRational& c = f.at(i, d - i);
      if (!c.is_zero()) sum += c.to_double() * std::pow(x, i) * std::pow(y, d - i);
    }
  return sum;
}

double circle_distance(double a, double b) { return std::fabs(reduce_angle(a - b)); }

std::vector<std::function<CheckOutcome()>> build_checks(const VerifySettings& s) {
  const int N = s.order;
  const int grid = s.grid;
  std::vector<std::function<CheckOutcome()>> checks;

  checks.push_back([N] {
    const auto log = gudermann_log_series(N);
    using namespace elementary;
    const bool ok = log == series_compose(arctanh_series(N), sin_series(N)) &&
                    log == series_integrate(sec_series(N - 1));
    return exact_check("series.dual_construction", ok,
                       "lambda == arctanh o sin == integral of sec, order " + std::to_string(N));
  });
  checks.push_back([N] {
    const auto log = gudermann_log_series(N);
    const auto exp = gudermann_exp_series(N);
    const auto x = UnivariateSeries::variable(N);
    const bool ok = exp == series_invert_composition(log) && series_compose(log, exp) == x &&
                    series_compose(exp, log) == x;
    return exact_check("series.compositional_inverse", ok, "lambda o lambda^-1 == x both ways");
  });
  checks.push_back([N] {
    const auto full = gudermann_log_series(N);
    bool ok = true;
    for (int k = 1; k < N; ++k) ok = ok && full.truncated(k) == gudermann_log_series(k);
    const auto law = mercator_group_law(N);
    for (int k = 1; k < N; ++k) ok = ok && law.truncated(k) == mercator_group_law(k);
    return exact_check("series.truncation_stability", ok, "lower orders reproduced exactly");
  });
  checks.push_back([N] {
    const auto report = check_group_law_axioms(mercator_group_law(N));
    std::string detail;
    for (const auto& c : report.checks) {
      detail += c.axiom + (c.passed ? " ok" : " FAIL at " + c.first_offending->to_string()) + "; ";
    }
    return CheckOutcome{"series.group_law_axioms", report.all_passed(), detail};
  });
  checks.push_back([N] {
    const auto law = mercator_group_law(N);
    const bool inverse_ok = evaluate_at_negation(law) == UnivariateSeries(N);
    bool parity_ok = true;
    for (int i = 0; i <= N; ++i)
      for (int j = 0; i + j <= N; ++j)
        if ((i + j) % 2 == 0 && !law.at(i, j).is_zero()) parity_ok = false;
    return exact_check("series.parity_and_inverse", inverse_ok && parity_ok,
                       "F(-X,-Y) == -F(X,Y) and F(X,-X) == 0");
  });
  checks.push_back([N] {
    const auto r = check_involution_coefficients(N);
    return exact_check("series.involution", r.passed,
                       "[x^(2n+1)] lambda^-1 == (-1)^n [x^(2n+1)] lambda");
  });

  checks.push_back([grid] {
    double worst = 0;
    for (double x : open_grid(-1.5, 1.5, 10 * grid)) {
      const double a = lambda_num(x, LambdaFormula::ArctanhSin);
      const double scale = std::max(1.0, std::fabs(a));
      worst = std::max({worst, std::fabs(a - lambda_num(x, LambdaFormula::LogTanSec)) / scale,
                        std::fabs(a - lambda_num(x, LambdaFormula::HalfLogRatio)) / scale});
    }
    return tolerance_check("numeric.representations", worst, kCoreTolerance);
  });
  checks.push_back([grid] {
    double worst = 0;
    for (double x : open_grid(-1.5, 1.5, 10 * grid)) {
      worst = std::max(worst, std::fabs(lambda_num(x + kPi) + lambda_num(x)));
      worst = std::max(worst, std::fabs(lambda_num(-x) + lambda_num(x)));
    }
    return tolerance_check("numeric.antiperiodic_odd", worst, kRoundTripTolerance);
  });
  checks.push_back([grid] {
    double worst = 0;
    const auto g = open_grid(-1.4, 1.4, grid);
    for (double x : g)
      for (double y : g)
        worst = std::max(worst, std::fabs(mercator_add(x, y) -
                                          lambda_inv_num(lambda_num(x) + lambda_num(y))));
    return tolerance_check("numeric.closed_form_vs_lambda_route", worst, kCoreTolerance);
  });
  checks.push_back([grid] {
    double worst = 0;
    for (double x : open_grid(-1.4, 1.4, 2 * grid)) {
      worst = std::max(worst, cayley_lambda_check(x));
      worst = std::max(worst, std::fabs(lambda_inv_num(lambda_num(x)) - x));
    }
    return tolerance_check("numeric.cayley_and_round_trip", worst, kRoundTripTolerance);
  });
  checks.push_back([grid] {
    double worst = 0;
    const auto g = open_grid(-1.5, 1.5, grid);
    for (double x : g)
      for (double y : g)
        worst = std::max(worst, std::fabs(aberration_sine(x, y) - std::sin(mercator_add(x, y))));
    return tolerance_check("numeric.aberration_sine", worst, kCoreTolerance);
  });
  checks.push_back([grid, seed = s.seed] {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-1.5, 1.5);
    double worst = 0;
    for (int k = 0; k < 10 * grid; ++k) {
      const double x = angle(rng), y = angle(rng), z = angle(rng);
      worst = std::max({worst,
                        circle_distance(mercator_add(mercator_add(x, y), z),
                                        mercator_add(x, mercator_add(y, z))),
                        std::fabs(mercator_add(x, y) - mercator_add(y, x)),
                        std::fabs(mercator_add(x, 0.0) - x), std::fabs(mercator_add(x, -x)),
                        circle_distance(mercator_add(-x, -y), -mercator_add(x, y))});
    }
    return tolerance_check("numeric.group_structure", worst, 1e-11);
  });
  checks.push_back([N, grid] {
    // Compare against the leading omitted terms, read off the order N+2 law.
    const auto law = mercator_group_law(N);
    const auto next = mercator_group_law(N + 2);
    BivariateSeries remainder(N + 2);
    for (int d = N + 1; d <= N + 2; ++d)
      for (int i = 0; i <= d; ++i) remainder.at(i, d - i) = next.at(i, d - i);
    double worst = 0, leading = 0;
    const auto g = open_grid(-0.3, 0.3, std::max(grid / 4, 2));
    for (double x : g)
      for (double y : g) {
        worst = std::max(worst, std::fabs(mercator_add(x, y) - evaluate(law, x, y)));
        leading = std::max(leading, std::fabs(evaluate(remainder, x, y)));
      }
    return tolerance_check("numeric.series_consistency", worst, 2 * leading + 1e-14);
  });
  checks.push_back([] {
    double worst = 0;
    for (int i = 1; i <= 19; ++i)
      for (int j = 0; j <= 56; ++j) {
        const terrell::Velocity v(0.05 * i);
        const terrell::SightAngle st(-1.4 + 0.05 * j);
        worst = std::max(worst, std::fabs(terrell::rotation_taylor(v, st.psi()).phi -
                                          terrell::rotation_fgl(v, st).phi));
      }
    return tolerance_check("terrell.route_equivalence", worst, kCoreTolerance);
  });
  checks.push_back([] {
    double worst = 0;
    for (int i = 1; i <= 9; ++i) {
      const terrell::Velocity v(0.1 * i);
      const double expected = std::asin(0.1 * i);
      worst = std::max({worst, std::fabs(terrell::rotation_fgl(v, terrell::SightAngle(0.0)).phi - expected),
                        std::fabs(terrell::rotation_taylor(v, kHalfPi).phi - expected)});
    }
    return tolerance_check("terrell.closest_approach", worst, kClosestApproachTolerance);
  });
  checks.push_back([grid] {
    double worst = 0;
    for (double t : open_grid(-1.4, 1.4, grid)) {
      worst = std::max(worst, std::fabs(terrell::rotation_fgl(terrell::Velocity(0.0), terrell::SightAngle(t)).phi));
      for (double v : {0.2, 0.5, 0.9}) {
        const double a = terrell::rotation_fgl(terrell::Velocity(-v), terrell::SightAngle(t)).phi;
        const double b = terrell::rotation_fgl(terrell::Velocity(v), terrell::SightAngle(-t)).phi;
        worst = std::max(worst, std::fabs(a + b));
      }
    }
    return tolerance_check("terrell.zero_velocity_and_reflection", worst, kCoreTolerance);
  });
  return checks;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

void VerifyReport::print(std::ostream& out) const {
  out << "verify order=" << settings.order << " grid=" << settings.grid << " seed=" << settings.seed
      << '\n';
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  }
  const auto passed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  out << passed << '/' << checks.size() << " checks passed\n";
}

VerifyReport run_verify(const VerifySettings& settings) {
  if (settings.order < 1) throw std::invalid_argument("verify: order must be at least 1");
  if (settings.grid < 2) throw std::invalid_argument("verify: grid must be at least 2");
  const auto checks = build_checks(settings);
  VerifyReport report;
  report.settings = settings;
  report.checks.resize(checks.size());
  parallel_chunks(checks.size(), settings.workers, [&](std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e; ++k) {
      try {
        report.checks[k] = checks[k]();
      } catch (const std::exception& ex) {
        report.checks[k] = {"check #" + std::to_string(k), false, std::string("threw: ") + ex.what()};
      }
    }
  });
  return report;
}

}  // namespace mercator::cli
