#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "mercator/error.hpp"
#include "mercator/numeric/gudermann.hpp"
#include "mercator/terrell/rotation.hpp"
#include "oracles.hpp"

using namespace mercator::terrell;
using mercator::numeric::kHalfPi;
using mercator::numeric::kPi;

TEST_CASE("to_psi_tilde") {
  CHECK(to_psi_tilde(kHalfPi).radians() == 0.0);
  CHECK(to_psi_tilde(kHalfPi + 0.3).radians() == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(to_psi_tilde(kHalfPi + 0.3).psi() == doctest::Approx(kHalfPi + 0.3).epsilon(1e-15));
  CHECK_THROWS_AS(to_psi_tilde(3.2), mercator::DomainError);
  CHECK_THROWS_AS(to_psi_tilde(0.0), mercator::DomainError);
  CHECK_THROWS_AS(to_psi_tilde(kPi), mercator::DomainError);
  CHECK_THROWS_AS(SightAngle{kHalfPi}, mercator::DomainError);
  CHECK_THROWS_AS(SightAngle{std::nan("")}, mercator::DomainError);
}

TEST_CASE("Velocity") {
  CHECK(Velocity(0.5).rapidity_angle() == doctest::Approx(kPi / 6).epsilon(1e-15));
  CHECK_THROWS_AS(Velocity(1.0), mercator::VelocityError);
  CHECK_THROWS_AS(Velocity(-1.0), mercator::VelocityError);
  CHECK_THROWS_AS(Velocity(1.5), mercator::VelocityError);
  CHECK_THROWS_AS(Velocity{std::nan("")}, mercator::VelocityError);
}

TEST_CASE("rotation_taylor examples") {
  for (double psi : {0.1, 1.0, 2.5}) CHECK(std::abs(rotation_taylor(Velocity(0), psi).phi) < 1e-15);
  CHECK(rotation_taylor(Velocity(0.5), kHalfPi).phi == doctest::Approx(std::asin(0.5)).epsilon(1e-15));
  const auto r = rotation_taylor(Velocity(0.8), kHalfPi + 0.3);
  CHECK(r.route == Route::Taylor);
  CHECK(std::abs(r.phi - 0.788743010707527498) < 1e-14);  // 50-digit reference
  CHECK(std::abs(r.phi - oracle::taylor_phi_by_bisection(0.8, kHalfPi + 0.3)) < 1e-13);
  CHECK(r.apparent_angle == doctest::Approx(r.phi + 0.3));
  CHECK_THROWS_AS(rotation_taylor(Velocity(0.5), 0.0), mercator::DomainError);
  CHECK_THROWS_AS(rotation_taylor(Velocity(0.5), 3.5), mercator::DomainError);
}

TEST_CASE("rotation_taylor matches bisection on the defining relation") {
  for (double v : {-0.9, -0.3, 0.2, 0.7, 0.95})
    for (double psi : {0.2, 0.9, 1.6, 2.4, 2.9})
      CHECK(std::abs(rotation_taylor(Velocity(v), psi).phi - oracle::taylor_phi_by_bisection(v, psi)) <
            1e-12);
}

TEST_CASE("rotation_fgl examples") {
  const auto r = rotation_fgl(Velocity(0.5), SightAngle(0));
  CHECK(r.route == Route::FormalGroupLaw);
  CHECK(std::abs(r.phi - std::asin(0.5)) < 1e-15);
  CHECK(rotation_fgl(Velocity(0), SightAngle(0.7)).phi == doctest::Approx(0.0));
  CHECK(std::abs(rotation_fgl(Velocity(0.8), SightAngle(0.3)).phi -
                 rotation_taylor(Velocity(0.8), 0.3 + kHalfPi).phi) < 1e-12);
  CHECK(rotation_fgl(Velocity(0.8), SightAngle(0.3)).apparent_angle ==
        mercator::numeric::mercator_add(std::asin(0.8), 0.3));
}

TEST_CASE("route equivalence over the full grid") {
  for (int i = 1; i <= 19; ++i)
    for (int k = 0; k <= 56; ++k) {
      const double v = 0.05 * i, t = -1.4 + 0.05 * k;
      for (double sv : {v, -v}) {
        const double a = rotation_taylor(Velocity(sv), t + kHalfPi).phi;
        const double b = rotation_fgl(Velocity(sv), SightAngle(t)).phi;
        CHECK(std::abs(a - b) < 1e-12);
      }
    }
}

TEST_CASE("closest approach, symmetry, monotonicity, limit") {
  double previous = -1;
  for (int k = 0; k <= 99; ++k) {
    const double v = 0.01 * k;
    const double phi = rotation_fgl(Velocity(v), SightAngle(0)).phi;
    CHECK(std::abs(phi - std::asin(v)) < 1e-13);
    CHECK(std::abs(rotation_taylor(Velocity(v), kHalfPi).phi - std::asin(v)) < 1e-13);
    CHECK(phi > previous);
    previous = phi;
  }
  for (double v : {0.1, 0.45, 0.9})
    for (double t : {-1.3, -0.2, 0.6}) {
      CHECK(std::abs(rotation_fgl(Velocity(-v), SightAngle(t)).phi +
                     rotation_fgl(Velocity(v), SightAngle(-t)).phi) < 1e-12);
      CHECK(std::abs(rotation_taylor(Velocity(-v), kHalfPi + t).phi +
                     rotation_taylor(Velocity(v), kHalfPi - t).phi) < 1e-12);
    }
  for (double t : {-1.0, 0.0, 1.2}) CHECK(rotation_fgl(Velocity(0), SightAngle(t)).phi == 0.0);
  CHECK(std::abs(rotation_fgl(Velocity(1 - 1e-9), SightAngle(0)).phi - kHalfPi) < 1e-3);
  CHECK(std::abs(rotation_taylor(Velocity(1 - 1e-9), kHalfPi).phi - kHalfPi) < 1e-3);
}

TEST_CASE("apparent angle stays inside (-pi/2, pi/2)") {
  for (double v : {-0.99, -0.5, 0.5, 0.99})
    for (double t : {-1.5, -0.5, 0.5, 1.5}) {
      const double a = rotation_fgl(Velocity(v), SightAngle(t)).apparent_angle;
      CHECK(a > -kHalfPi);
      CHECK(a < kHalfPi);
    }
}

TEST_CASE("rotation_table") {
  const std::vector<double> one_v{0.5}, one_t{0.0};
  const auto rows = rotation_table(one_v, one_t);
  REQUIRE(rows.size() == 1);
  CHECK(std::abs(rows[0].phi_taylor - 0.5235987756) < 1e-10);
  CHECK(std::abs(rows[0].phi_fgl - 0.5235987756) < 1e-10);
  CHECK(rows[0].nu == doctest::Approx(std::asin(0.5)));

  CHECK(rotation_table({}, {}).empty());

  std::vector<double> vs, ts;
  for (int k = 1; k <= 9; ++k) vs.push_back(0.1 * k);
  for (int k = 0; k <= 24; ++k) ts.push_back(-1.2 + 0.1 * k);
  const auto grid = rotation_table(vs, ts);
  REQUIRE(grid.size() == vs.size() * ts.size());
  double worst = 0;
  for (const auto& row : grid) worst = std::max(worst, row.abs_diff);
  CHECK(worst < 1e-12);
  // velocities outermost
  CHECK(grid[0].v == vs[0]);
  CHECK(grid[1].v == vs[0]);
  CHECK(grid[ts.size()].v == vs[1]);
  CHECK(grid[1].psi_tilde == ts[1]);
}

TEST_CASE("rotation_table errors name the row") {
  const std::vector<double> vs{0.2, 1.0}, ts{0.1};
  try {
    rotation_table(vs, ts);
    FAIL("expected VelocityError");
  } catch (const mercator::VelocityError& e) {
    CHECK(std::string(e.what()).rfind("row 1: ", 0) == 0);
  }
  const std::vector<double> bad_t{2.0};
  CHECK_THROWS_AS(rotation_table(std::vector<double>{0.3}, bad_t), mercator::DomainError);
}

TEST_CASE("write_rotation_csv") {
  const std::vector<double> vs{0.5}, ts{0.0};
  std::ostringstream out;
  write_rotation_csv(out, rotation_table(vs, ts));
  const std::string text = out.str();
  CHECK(text.rfind("v,nu,psi_tilde,phi_taylor,phi_fgl,abs_diff\n", 0) == 0);
  CHECK(text.find("0.5,0.52359877559829893,0,") != std::string::npos);
  CHECK(text.back() == '\n');
  CHECK(text.find('\r') == std::string::npos);
}
