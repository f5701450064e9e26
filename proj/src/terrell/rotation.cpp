#include "mercator/terrell/rotation.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "mercator/error.hpp"
#include "mercator/format.hpp"
#include "mercator/numeric/gudermann.hpp"

namespace mercator::terrell {

using numeric::kHalfPi;
using numeric::kPi;

Velocity::Velocity(double v) : v_(v) {
  if (!(std::fabs(v) < 1.0)) {
    throw VelocityError("velocity " + std::to_string(v) + " must satisfy |v| < 1");
  }
}

double Velocity::rapidity_angle() const { return std::asin(v_); }

SightAngle::SightAngle(double psi_tilde) : psi_tilde_(psi_tilde) {
  if (!(psi_tilde > -kHalfPi && psi_tilde < kHalfPi)) {
    throw DomainError("sight angle " + std::to_string(psi_tilde) + " outside (-pi/2, pi/2)");
  }
}

double SightAngle::psi() const { return psi_tilde_ + kHalfPi; }

SightAngle to_psi_tilde(double psi) {
  if (!(psi > 0.0 && psi < kPi)) {
    throw DomainError("observation angle " + std::to_string(psi) + " outside (0, pi)");
  }
  return SightAngle(psi - kHalfPi);
}

RotationResult rotation_taylor(Velocity v, double psi) {
  if (!(psi > 0.0 && psi < kPi)) {
    throw DomainError("observation angle " + std::to_string(psi) + " outside (0, pi)");
  }
  const double c = std::cos(psi);
  // Right side lies in (-1, 1), so phi + psi in (0, pi) is the unique solution.
  const double total = std::acos((c - v.value()) / (1.0 - v.value() * c));
  RotationResult r;
  r.phi = total - psi;
  r.apparent_angle = total - kHalfPi;
  r.route = Route::Taylor;
  return r;
}

RotationResult rotation_fgl(Velocity v, SightAngle st) {
  RotationResult r;
  r.apparent_angle = numeric::mercator_add(v.rapidity_angle(), st.radians());
  r.phi = r.apparent_angle - st.radians();
  r.route = Route::FormalGroupLaw;
  return r;
}

std::vector<RotationRow> rotation_table(std::span<const double> velocities,
                                        std::span<const double> sight_angles) {
  std::vector<RotationRow> rows;
  rows.reserve(velocities.size() * sight_angles.size());
  std::size_t index = 0;
  for (double vv : velocities) {
    for (double t : sight_angles) {
      try {
        const Velocity v(vv);
        const SightAngle st(t);
        RotationRow row;
        row.v = vv;
        row.nu = v.rapidity_angle();
        row.psi_tilde = t;
        row.phi_taylor = rotation_taylor(v, st.psi()).phi;
        row.phi_fgl = rotation_fgl(v, st).phi;
        row.abs_diff = std::fabs(row.phi_taylor - row.phi_fgl);
        rows.push_back(row);
      } catch (const VelocityError& e) {
        throw VelocityError("row " + std::to_string(index) + ": " + e.what());
      } catch (const DomainError& e) {
        throw DomainError("row " + std::to_string(index) + ": " + e.what());
      }
      ++index;
    }
  }
  return rows;
}

void write_rotation_csv(std::ostream& out, std::span<const RotationRow> rows) {
  out << "v,nu,psi_tilde,phi_taylor,phi_fgl,abs_diff\n";
  for (const auto& r : rows) {
    out << format_g17(r.v) << ',' << format_g17(r.nu) << ',' << format_g17(r.psi_tilde) << ','
        << format_g17(r.phi_taylor) << ',' << format_g17(r.phi_fgl) << ',' << format_g17(r.abs_diff)
        << '\n';
  }
}

}  // namespace mercator::terrell
