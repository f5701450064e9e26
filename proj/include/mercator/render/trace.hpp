#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mercator/render/geometry.hpp"
#include "mercator/terrell/rotation.hpp"

namespace mercator::render {

/// World position at time t of the point with rest offset a:
/// (v t + a_x sqrt(1 - v^2), y0 + a_y, z_offset + a_z).
Vec3 world_vertex_position(Vec3 a, const MotionState& motion, double t);

/// Emission time t_e <= T with |world_vertex_position(a, t_e)| = T - t_e.
double retarded_emission_time(Vec3 a, const MotionState& motion, double observation_time);

struct SightTiming {
  double emission_time = 0;     // t_e of the object center
  double observation_time = 0;  // T
  Vec3 center;                  // retarded center position
};

/// Observation time at which the center is seen at sight angle psi_tilde,
/// i.e. its retarded position is (y0 tan psi_tilde, y0, z_offset). With
/// v = 0 only psi_tilde = 0 is reachable; others raise DomainError.
SightTiming time_for_sight_angle(const MotionState& motion, terrell::SightAngle st);

struct FrameMetadata {
  double v = 0;
  double psi_tilde = 0;
  double observation_time = 0;
  double phi_predicted = 0;
  std::vector<std::string> warnings;
};

/// Apparent image of a wireframe: one entry per wireframe point.
struct Frame {
  std::vector<Vec3> directions;   // unit apparent directions from the observer
  std::vector<Vec2> projected;    // gnomonic image coordinates
  std::vector<std::uint8_t> visible;  // 0 when behind the camera
  std::vector<double> emission_times;  // empty for oracle frames
  std::vector<std::vector<int>> chains;  // polylines, split at hidden points
  FrameMetadata metadata;
};

struct RenderOptions {
  int subdivide = 0;
  int workers = 1;
};

/// Light-travel-time image of the moving mesh at observation time T.
Frame render_apparent(const Mesh& mesh, const MotionState& motion, const Camera& camera,
                      double observation_time, const RenderOptions& options = {});

/// The rest mesh rotated counterclockwise about z by rotation_fgl(v, psi_tilde).phi
/// and placed at the retarded center position.
Frame render_rotated_oracle(const Mesh& mesh, const MotionState& motion, const Camera& camera,
                            terrell::SightAngle st, const RenderOptions& options = {});

/// Largest angular separation of corresponding points, divided by the
/// largest pairwise angular separation within `b`. Throws
/// std::invalid_argument when the frames do not share topology.
double frame_mismatch(const Frame& a, const Frame& b);

/// Largest pairwise angular separation between the points of a frame.
double angular_size(const Frame& frame);

struct FramePair {
  Frame apparent;
  Frame oracle;
  Camera camera;
};

struct MismatchRow {
  double psi_tilde = 0;
  double observation_time = 0;
  double mismatch = 0;
  double phi_predicted = 0;
};

struct SequenceSettings {
  RenderOptions options;
  /// Fixed camera; when empty each frame gets a camera aimed at the
  /// retarded center with a field of view of `auto_fov_factor` times the
  /// oracle's angular size.
  std::optional<Camera> camera;
  double auto_fov_factor = 2.0;
  int width = 512;
  int height = 512;
};

struct Sequence {
  std::vector<FramePair> frames;
  std::vector<MismatchRow> rows;
};

/// Frames are rendered in parallel (settings.options.workers) and assembled
/// in input order; errors name the offending angle index.
Sequence render_sequence(const Mesh& mesh, const MotionState& motion,
                         std::span<const double> sight_angles, const SequenceSettings& settings);

/// CSV `psi_tilde,T,mismatch,phi_predicted`, 17 significant digits.
void write_mismatch_csv(std::ostream& out, std::span<const MismatchRow> rows);

}  // namespace mercator::render
