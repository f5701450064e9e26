#pragma once

#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

namespace mercator::render {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(Vec3 a) { return (1.0 / norm(a)) * a; }

/// Angle between two directions, stable for nearly parallel vectors.
inline double angle_between(Vec3 a, Vec3 b) { return std::atan2(norm(cross(a, b)), dot(a, b)); }

struct Vec2 {
  double x = 0, y = 0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Rest-frame wireframe, coordinates relative to the object center.
struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 2>> edges;

  /// Throws std::invalid_argument on an empty vertex list or bad edge index.
  void validate() const;

  /// Unit cube centered at the origin, side 1, 12 edges.
  static Mesh unit_cube();

  friend bool operator==(const Mesh&, const Mesh&) = default;
};

/// {"vertices": [[x,y,z],...], "edges": [[i,j],...]}
std::string mesh_to_json(const Mesh& mesh);
Mesh mesh_from_json(std::string_view text);

/// Points plus the polylines ("chains") that connect them. Each mesh edge
/// becomes one chain; subdivision inserts interior points along it.
struct Wireframe {
  std::vector<Vec3> points;
  std::vector<std::vector<int>> chains;
};

Wireframe make_wireframe(const Mesh& mesh, int subdivide = 0);

/// Uniform motion along +x at height y0 (> 0) above the observer.
struct MotionState {
  double v = 0;
  double y0 = 1;
  double z_offset = 0;

  /// Throws VelocityError for |v| >= 1, std::invalid_argument for y0 <= 0.
  void validate() const;
};

/// Pinhole camera at the origin.
class Camera {
 public:
  /// Orthonormalizes `up` against `forward`. Throws std::invalid_argument
  /// for degenerate vectors or fov outside (0, pi).
  Camera(Vec3 forward, Vec3 up, double field_of_view, int width = 512, int height = 512);

  /// Looking along `direction` with +z (or +y when looking along z) as up.
  static Camera looking_at(Vec3 direction, double field_of_view, int width = 512, int height = 512);

  Vec3 forward() const { return forward_; }
  Vec3 up() const { return up_; }
  Vec3 right() const { return right_; }
  double field_of_view() const { return fov_; }
  int width() const { return width_; }
  int height() const { return height_; }
  /// 1 / tan(fov / 2): image-plane coordinates at the fov edge map to +-1.
  double focal_scale() const { return focal_scale_; }

 private:
  Vec3 forward_, up_, right_;
  double fov_;
  double focal_scale_;
  int width_, height_;
};

}  // namespace mercator::render
