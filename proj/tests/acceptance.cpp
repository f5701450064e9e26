// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mercator/cli/commands.hpp"
#include "mercator/numeric/gudermann.hpp"
#include "mercator/render/trace.hpp"
#include "mercator/series/axioms.hpp"
#include "mercator/series/gudermann_series.hpp"
#include "mercator/terrell/rotation.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace mercator;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // <= 0 means untimed
  std::function<Outcome()> body;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// 1 ---------------------------------------------------------------------------
Outcome exact_series() {
  Outcome o;
  const auto e = series::euler_numbers(8);
  const auto rec = oracle::secant_numbers_recurrence(8);
  bool euler = e.values.size() == 9 && e.values[8].to_string() == "19391512145";
  for (int n = 0; euler && n <= 8; ++n) euler &= e.values[n].to_string() == std::to_string(rec[n]);

  const auto log = series::gudermann_log_series(13);
  const bool via_composition =
      log == series::series_compose(series::elementary::arctanh_series(13),
                                    series::elementary::sin_series(13));
  const bool via_antiderivative = log == series::series_integrate(series::elementary::sec_series(12));
  const auto exp = series::gudermann_exp_series(13);
  const bool via_inverse = exp == series::series_invert_composition(log);
  o.passed = euler && via_composition && via_antiderivative && via_inverse;
  o.detail = std::string("E_0..E_8 ") + (euler ? "match" : "differ") +
             "; log==arctanh.sin: " + (via_composition ? "yes" : "no") +
             ", log==int sec: " + (via_antiderivative ? "yes" : "no") +
             ", exp==inverse(log): " + (via_inverse ? "yes" : "no");
  return o;
}

// 2 ---------------------------------------------------------------------------
Outcome group_law_axioms() {
  Outcome o;
  const auto law = series::mercator_group_law(13);
  const auto report = series::check_group_law_axioms(law);
  const auto other = oracle::group_law_via_aberration(13);
  const series::BigRational half(-1, 2);
  const bool coefficients = law.at(2, 1) == half && law.at(1, 2) == half &&
                            other.at(2, 1) == half && other.at(1, 2) == half;
  o.passed = report.all_passed() && coefficients && law == other;
  o.detail = "unit/commutativity/associativity " + std::string(report.all_passed() ? "exact" : "FAILED") +
             "; c21=" + law.at(2, 1).to_string() + " c12=" + law.at(1, 2).to_string() +
             "; second expansion path " + (law == other ? "agrees" : "disagrees");
  return o;
}

// 3 ---------------------------------------------------------------------------
Outcome involution() {
  const auto r = series::check_involution_coefficients(13);
  return {r.passed, r.passed ? "order 13 coefficient identity holds"
                             : "first offending degree " + std::to_string(r.first_offending_degree.value_or(-1))};
}

// 4 ---------------------------------------------------------------------------
Outcome representations() {
  using numeric::LambdaFormula;
  double worst_formula = 0, worst_anti = 0;
  for (int k = 0; k < 1000; ++k) {
    const double x = -1.5 + 3.0 * (k + 0.5) / 1000;
    const double a = numeric::lambda_num(x, LambdaFormula::ArctanhSin);
    worst_formula = std::max({worst_formula, std::abs(numeric::lambda_num(x, LambdaFormula::LogTanSec) - a),
                              std::abs(numeric::lambda_num(x, LambdaFormula::HalfLogRatio) - a)});
    worst_anti = std::max(worst_anti, std::abs(numeric::lambda_num(x + numeric::kPi) + a));
  }
  return {worst_formula < 1e-12 && worst_anti < 1e-10,
          "max formula spread " + fmt("%.3g", worst_formula) + " (tol 1e-12), antiperiodicity " +
              fmt("%.3g", worst_anti) + " (tol 1e-10)"};
}

// 5 ---------------------------------------------------------------------------
Outcome closed_form() {
  double worst = 0;
  for (int i = 0; i < 100; ++i)
    for (int j = 0; j < 100; ++j) {
      const double x = -1.4 + 2.8 * (i + 0.5) / 100, y = -1.4 + 2.8 * (j + 0.5) / 100;
      const double route = numeric::lambda_inv_num(numeric::lambda_num(x) + numeric::lambda_num(y));
      worst = std::max(worst, std::abs(numeric::mercator_add(x, y) - route));
    }
  double cayley = 0;
  for (int k = 0; k < 200; ++k)
    cayley = std::max(cayley, numeric::cayley_lambda_check(-1.5 + 3.0 * (k + 0.5) / 200));
  return {worst < 1e-12 && cayley < 1e-10, "closed form vs lambda route " + fmt("%.3g", worst) +
                                               " (tol 1e-12), Cayley residual " + fmt("%.3g", cayley) +
                                               " (tol 1e-10)"};
}

// 6 ---------------------------------------------------------------------------
Outcome route_equivalence() {
  double worst = 0;
  for (int i = 1; i <= 19; ++i)
    for (int k = 0; k <= 56; ++k) {
      const double v = 0.05 * i, t = -1.4 + 0.05 * k;
      const double a = terrell::rotation_taylor(terrell::Velocity(v), t + numeric::kHalfPi).phi;
      const double b = terrell::rotation_fgl(terrell::Velocity(v), terrell::SightAngle(t)).phi;
      worst = std::max(worst, std::abs(a - b));
    }
  return {worst < 1e-12, "19x57 grid max |phi_taylor - phi_fgl| " + fmt("%.3g", worst) + " (tol 1e-12)"};
}

// 7 ---------------------------------------------------------------------------
Outcome closest_approach() {
  double worst = 0;
  for (int k = 1; k <= 9; ++k) {
    const double v = 0.1 * k;
    const double phi = terrell::rotation_fgl(terrell::Velocity(v), terrell::SightAngle(0)).phi;
    const double taylor = terrell::rotation_taylor(terrell::Velocity(v), numeric::kHalfPi).phi;
    worst = std::max({worst, std::abs(phi - std::asin(v)), std::abs(taylor - std::asin(v))});
  }
  return {worst < 1e-13, "max |phi(v,0) - arcsin v| " + fmt("%.3g", worst) + " (tol 1e-13)"};
}

// 8 ---------------------------------------------------------------------------
Outcome convergence() {
  const render::Camera camera({0, 1, 0}, {0, 0, 1}, 1.0);
  const auto cube = render::Mesh::unit_cube();
  std::vector<double> mismatch;
  for (double y0 : {50.0, 100.0, 200.0, 400.0}) {
    render::MotionState m;
    m.v = 0.6;
    m.y0 = y0;
    const terrell::SightAngle st(0);
    const auto timing = render::time_for_sight_angle(m, st);
    mismatch.push_back(render::frame_mismatch(render::render_apparent(cube, m, camera, timing.observation_time),
                                              render::render_rotated_oracle(cube, m, camera, st)));
  }
  Outcome o;
  o.passed = mismatch.back() < 0.02;
  o.detail = "mismatch";
  for (double x : mismatch) o.detail += " " + fmt("%.4g", x);
  o.detail += "; ratios";
  for (std::size_t k = 1; k < mismatch.size(); ++k) {
    const double ratio = mismatch[k - 1] / mismatch[k];
    o.passed &= mismatch[k] < mismatch[k - 1] && ratio >= 1.5 && ratio <= 3.0;
    o.detail += " " + fmt("%.3f", ratio);
  }
  o.detail += " (band [1.5, 3.0]); observed order " +
              fmt("%.2f", std::log2(mismatch[mismatch.size() - 2] / mismatch.back()));
  return o;
}

// 9 ---------------------------------------------------------------------------
std::string run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return std::to_string(code) + "\n" + out.str();
}

std::map<std::string, std::string> render_files(const std::string& mode, const std::string& jobs, int tag) {
  const fs::path dir = fs::temp_directory_path() / ("mercator_acceptance_" + mode + jobs + std::to_string(tag));
  fs::remove_all(dir);
  run_cli({"render", "--v", "0.8", "--y0", "100", "--mesh", "cube", "--sight-angles", "-1..1/0.25",
           "--mode", mode, "--oracle", "--subdivide", "3", "--out", dir.string(), "--jobs", jobs});
  std::map<std::string, std::string> files;
  if (fs::exists(dir))
    for (const auto& entry : fs::directory_iterator(dir)) {
      std::ifstream in(entry.path(), std::ios::binary);
      files[entry.path().filename().string()] = {std::istreambuf_iterator<char>(in), {}};
    }
  fs::remove_all(dir);
  return files;
}

Outcome determinism() {
  const std::string v1 = run_cli({"verify", "--jobs", "1"});
  const std::string v1b = run_cli({"verify", "--jobs", "1"});
  const std::string v4 = run_cli({"verify", "--jobs", "4"});
  const bool verify_ok = v1 == v1b && v1 == v4 && v1.rfind("0\n", 0) == 0;
  bool render_ok = true;
  std::size_t file_count = 0;
  for (const std::string mode : {"svg", "ppm"}) {
    const auto a = render_files(mode, "1", 0), b = render_files(mode, "1", 1), c = render_files(mode, "4", 2);
    render_ok &= !a.empty() && a == b && a == c;
    file_count += a.size();
  }
  return {verify_ok && render_ok, std::string("verify output ") + (verify_ok ? "identical" : "DIFFERS") +
                                      " across runs and jobs {1,4}; render " + std::to_string(file_count) +
                                      " files " + (render_ok ? "identical" : "DIFFER")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact series suite", 2.0, exact_series},
      {2, "group-law axioms", 10.0, group_law_axioms},
      {3, "involution identity", 0, involution},
      {4, "representation agreement", 0, representations},
      {5, "closed form vs lambda route", 0, closed_form},
      {6, "rotation route equivalence", 0, route_equivalence},
      {7, "closest-approach law", 0, closest_approach},
      {8, "Terrell convergence", 60.0, convergence},
      {9, "determinism", 0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = fmt("%.2f s", seconds);
    if (c.time_limit_s > 0) {
      timing += fmt(" of %.0f s", c.time_limit_s);
      if (seconds > c.time_limit_s) {
        o.passed = false;
        timing += " EXCEEDED";
      }
    }
    failures += !o.passed;
    std::printf("%s criterion %d (%s): %s [%s]\n", o.passed ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), timing.c_str());
  }
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
