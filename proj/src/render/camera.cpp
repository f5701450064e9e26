#include <cmath>
#include <stdexcept>

#include "mercator/render/geometry.hpp"

namespace mercator::render {

Camera::Camera(Vec3 forward, Vec3 up, double field_of_view, int width, int height)
    : fov_(field_of_view), width_(width), height_(height) {
  if (!(field_of_view > 0.0 && field_of_view < 3.14159265358979323846)) {
    throw std::invalid_argument("camera field of view must lie in (0, pi)");
  }
  if (width <= 0 || height <= 0) throw std::invalid_argument("camera resolution must be positive");
  const double fn = norm(forward);
  if (!(fn > 0.0) || !std::isfinite(fn)) throw std::invalid_argument("camera forward vector is degenerate");
  forward_ = normalized(forward);
  const Vec3 orth = up - dot(up, forward_) * forward_;
  const double un = norm(orth);
  if (!(un > 1e-12 * norm(up))) throw std::invalid_argument("camera up vector is parallel to forward");
  up_ = normalized(orth);
  right_ = cross(forward_, up_);
  focal_scale_ = 1.0 / std::tan(0.5 * fov_);
}

Camera Camera::looking_at(Vec3 direction, double field_of_view, int width, int height) {
  const Vec3 d = normalized(direction);
  const Vec3 up = std::fabs(d.z) > 0.9 ? Vec3{0, 1, 0} : Vec3{0, 0, 1};
  return Camera(d, up, field_of_view, width, height);
}

}  // namespace mercator::render
