#pragma once

#include <iosfwd>
#include <span>
#include <vector>

namespace mercator::terrell {

/// Speed in units of c, strictly inside (-1, 1).
class Velocity {
 public:
  /// Throws VelocityError unless |v| < 1.
  explicit Velocity(double v);

  double value() const { return v_; }
  /// nu = arcsin v, the velocity expressed as an angle.
  double rapidity_angle() const;

 private:
  double v_;
};

/// psi_tilde = psi - pi/2 in (-pi/2, pi/2); zero at closest approach.
class SightAngle {
 public:
  /// Throws DomainError outside (-pi/2, pi/2).
  explicit SightAngle(double psi_tilde);

  double radians() const { return psi_tilde_; }
  /// Observation angle psi = psi_tilde + pi/2.
  double psi() const;

 private:
  double psi_tilde_;
};

/// psi in (0, pi) -> psi - pi/2; DomainError otherwise.
SightAngle to_psi_tilde(double psi);

enum class Route { Taylor, FormalGroupLaw };

struct RotationResult {
  double phi = 0;             // apparent counterclockwise rotation
  double apparent_angle = 0;  // phi + psi_tilde
  Route route = Route::Taylor;
};

/// phi = arccos((cos psi - v) / (1 - v cos psi)) - psi, principal arccos branch.
/// psi outside (0, pi) raises DomainError.
RotationResult rotation_taylor(Velocity v, double psi);

/// phi + psi_tilde = arcsin(v) +_M psi_tilde.
RotationResult rotation_fgl(Velocity v, SightAngle st);

struct RotationRow {
  double v = 0;
  double nu = 0;
  double psi_tilde = 0;
  double phi_taylor = 0;
  double phi_fgl = 0;
  double abs_diff = 0;
};

/// One row per (v, psi_tilde) pair, velocities outermost. Invalid inputs
/// raise the element's error with the row index prepended to the message.
std::vector<RotationRow> rotation_table(std::span<const double> velocities,
                                        std::span<const double> sight_angles);

/// CSV `v,nu,psi_tilde,phi_taylor,phi_fgl,abs_diff`, 17 significant digits.
void write_rotation_csv(std::ostream& out, std::span<const RotationRow> rows);

}  // namespace mercator::terrell
