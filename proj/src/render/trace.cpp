#include "mercator/render/trace.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <string>

#include "mercator/error.hpp"
#include "mercator/format.hpp"
#include "mercator/parallel.hpp"
#include "mercator/render/kernels.hpp"

namespace mercator::render {

namespace {

kernels::MotionParams motion_params(const MotionState& motion, double observation_time) {
  return {motion.v, std::sqrt(1.0 - motion.v * motion.v), motion.y0, motion.z_offset,
          observation_time};
}

kernels::CameraBasis camera_basis(const Camera& camera) {
  const Vec3 r = camera.right(), u = camera.up(), f = camera.forward();
  return {{r.x, r.y, r.z}, {u.x, u.y, u.z}, {f.x, f.y, f.z}, camera.focal_scale()};
}

struct SoA {
  std::vector<double> x, y, z;
  explicit SoA(std::size_t n) : x(n), y(n), z(n) {}
  kernels::Points view(std::size_t b, std::size_t e) const {
    return {std::span(x).subspan(b, e - b), std::span(y).subspan(b, e - b),
            std::span(z).subspan(b, e - b)};
  }
  kernels::MutablePoints mutable_view(std::size_t b, std::size_t e) {
    return {std::span(x).subspan(b, e - b), std::span(y).subspan(b, e - b),
            std::span(z).subspan(b, e - b)};
  }
};

/// Projects world points into `frame` and splits the chains at hidden points.
void project_into(Frame& frame, const SoA& world, const Camera& camera,
                  const std::vector<std::vector<int>>& chains, int workers) {
  const std::size_t n = world.x.size();
  const kernels::CameraBasis basis = camera_basis(camera);
  std::vector<double> u(n), w(n), depth(n);
  SoA dir(n);
  parallel_chunks(n, workers, [&](std::size_t b, std::size_t e) {
    kernels::project(basis, world.view(b, e), std::span(u).subspan(b, e - b),
                     std::span(w).subspan(b, e - b), std::span(depth).subspan(b, e - b),
                     dir.mutable_view(b, e));
  });

  frame.directions.resize(n);
  frame.projected.resize(n);
  frame.visible.resize(n);
  std::size_t hidden = 0;
  for (std::size_t i = 0; i < n; ++i) {
    frame.directions[i] = {dir.x[i], dir.y[i], dir.z[i]};
    frame.visible[i] = depth[i] > 0.0 ? 1 : 0;
    frame.projected[i] = frame.visible[i] ? Vec2{u[i], w[i]} : Vec2{0.0, 0.0};
    if (!frame.visible[i]) ++hidden;
  }
  frame.chains.clear();
  for (const auto& chain : chains) {
    std::vector<int> run;
    for (int p : chain) {
      if (frame.visible[p]) {
        run.push_back(p);
      } else {
        if (run.size() > 1) frame.chains.push_back(run);
        run.clear();
      }
    }
    if (run.size() > 1) frame.chains.push_back(std::move(run));
  }
  if (hidden > 0) {
    frame.metadata.warnings.push_back(std::to_string(hidden) +
                                      " point(s) behind the camera; their edges were dropped");
  }
}

SoA rest_offsets(const Wireframe& wire) {
  SoA rest(wire.points.size());
  for (std::size_t i = 0; i < wire.points.size(); ++i) {
    rest.x[i] = wire.points[i].x;
    rest.y[i] = wire.points[i].y;
    rest.z[i] = wire.points[i].z;
  }
  return rest;
}

}  // namespace

Vec3 world_vertex_position(Vec3 a, const MotionState& motion, double t) {
  motion.validate();
  return {motion.v * t + a.x * std::sqrt(1.0 - motion.v * motion.v), motion.y0 + a.y,
          motion.z_offset + a.z};
}

double retarded_emission_time(Vec3 a, const MotionState& motion, double observation_time) {
  motion.validate();
  double t = 0, px = 0, py = 0, pz = 0;
  kernels::retarded_positions_scalar(motion_params(motion, observation_time),
                                     {std::span(&a.x, 1), std::span(&a.y, 1), std::span(&a.z, 1)},
                                     std::span(&t, 1),
                                     {std::span(&px, 1), std::span(&py, 1), std::span(&pz, 1)});
  return t;
}

SightTiming time_for_sight_angle(const MotionState& motion, terrell::SightAngle st) {
  motion.validate();
  SightTiming timing;
  if (motion.v == 0.0) {
    if (st.radians() != 0.0) {
      throw DomainError("a resting object is only ever seen at sight angle 0");
    }
    timing.emission_time = 0.0;
  } else {
    timing.emission_time = motion.y0 * std::tan(st.radians()) / motion.v;
  }
  timing.center = {motion.y0 * std::tan(st.radians()), motion.y0, motion.z_offset};
  timing.observation_time = timing.emission_time + norm(timing.center);
  return timing;
}

Frame render_apparent(const Mesh& mesh, const MotionState& motion, const Camera& camera,
                      double observation_time, const RenderOptions& options) {
  motion.validate();
  const Wireframe wire = make_wireframe(mesh, options.subdivide);
  const std::size_t n = wire.points.size();
  const SoA rest = rest_offsets(wire);
  const kernels::MotionParams params = motion_params(motion, observation_time);

  Frame frame;
  frame.emission_times.resize(n);
  SoA world(n);
  parallel_chunks(n, options.workers, [&](std::size_t b, std::size_t e) {
    kernels::retarded_positions(params, rest.view(b, e),
                                std::span(frame.emission_times).subspan(b, e - b),
                                world.mutable_view(b, e));
  });
  project_into(frame, world, camera, wire.chains, options.workers);

  const double t_center = retarded_emission_time({0, 0, 0}, motion, observation_time);
  const Vec3 center = world_vertex_position({0, 0, 0}, motion, t_center);
  const double psi_tilde = std::atan(center.x / motion.y0);
  frame.metadata.v = motion.v;
  frame.metadata.psi_tilde = psi_tilde;
  frame.metadata.observation_time = observation_time;
  frame.metadata.phi_predicted =
      terrell::rotation_fgl(terrell::Velocity(motion.v), terrell::SightAngle(psi_tilde)).phi;
  return frame;
}

Frame render_rotated_oracle(const Mesh& mesh, const MotionState& motion, const Camera& camera,
                            terrell::SightAngle st, const RenderOptions& options) {
  motion.validate();
  const SightTiming timing = time_for_sight_angle(motion, st);
  const double phi = terrell::rotation_fgl(terrell::Velocity(motion.v), st).phi;
  const double c = std::cos(phi), s = std::sin(phi);

  const Wireframe wire = make_wireframe(mesh, options.subdivide);
  const std::size_t n = wire.points.size();
  SoA world(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 a = wire.points[i];
    world.x[i] = timing.center.x + (c * a.x - s * a.y);
    world.y[i] = timing.center.y + (s * a.x + c * a.y);
    world.z[i] = timing.center.z + a.z;
  }
  Frame frame;
  project_into(frame, world, camera, wire.chains, options.workers);
  frame.metadata.v = motion.v;
  frame.metadata.psi_tilde = st.radians();
  frame.metadata.observation_time = timing.observation_time;
  frame.metadata.phi_predicted = phi;
  return frame;
}

double angular_size(const Frame& frame) {
  double size = 0;
  for (std::size_t i = 0; i < frame.directions.size(); ++i)
    for (std::size_t j = i + 1; j < frame.directions.size(); ++j)
      size = std::max(size, angle_between(frame.directions[i], frame.directions[j]));
  return size;
}

double frame_mismatch(const Frame& a, const Frame& b) {
  if (a.directions.size() != b.directions.size()) {
    throw std::invalid_argument("frame_mismatch: frames do not share mesh topology");
  }
  double worst = 0;
  for (std::size_t i = 0; i < a.directions.size(); ++i) {
    worst = std::max(worst, angle_between(a.directions[i], b.directions[i]));
  }
  if (worst == 0.0) return 0.0;
  const double size = angular_size(b);
  if (!(size > 0.0)) throw std::invalid_argument("frame_mismatch: reference frame has zero angular size");
  return worst / size;
}

namespace {

[[noreturn]] void rethrow_with_index(const std::exception_ptr& error, std::size_t index) {
  const std::string prefix = "sight angle " + std::to_string(index) + ": ";
  try {
    std::rethrow_exception(error);
  } catch (const PunctureError& e) {
    throw PunctureError(prefix + e.what());
  } catch (const VelocityError& e) {
    throw VelocityError(prefix + e.what());
  } catch (const DomainError& e) {
    throw DomainError(prefix + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(prefix + e.what());
  } catch (const std::exception& e) {
    throw std::runtime_error(prefix + e.what());
  }
}

}  // namespace

Sequence render_sequence(const Mesh& mesh, const MotionState& motion,
                         std::span<const double> sight_angles, const SequenceSettings& settings) {
  motion.validate();
  mesh.validate();
  const std::size_t n = sight_angles.size();
  std::vector<std::optional<FramePair>> pairs(n);
  std::vector<std::exception_ptr> errors(n);
  RenderOptions per_frame = settings.options;
  per_frame.workers = 1;

  parallel_chunks(n, settings.options.workers, [&](std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e; ++k) {
      try {
        const terrell::SightAngle st(sight_angles[k]);
        const SightTiming timing = time_for_sight_angle(motion, st);
        Camera camera = settings.camera.value_or(
            Camera::looking_at(timing.center, 1.0, settings.width, settings.height));
        if (!settings.camera) {
          const double size = angular_size(render_rotated_oracle(mesh, motion, camera, st, per_frame));
          const double fov = std::clamp(settings.auto_fov_factor * size, 1e-9, 3.0);
          camera = Camera::looking_at(timing.center, fov, settings.width, settings.height);
        }
        Frame oracle = render_rotated_oracle(mesh, motion, camera, st, per_frame);
        Frame apparent = render_apparent(mesh, motion, camera, timing.observation_time, per_frame);
        // Report the requested angle rather than the one recovered from the
        // traced center, which can differ in the last bit.
        apparent.metadata.psi_tilde = oracle.metadata.psi_tilde;
        apparent.metadata.phi_predicted = oracle.metadata.phi_predicted;
        pairs[k].emplace(FramePair{std::move(apparent), std::move(oracle), camera});
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  });

  for (std::size_t k = 0; k < n; ++k)
    if (errors[k]) rethrow_with_index(errors[k], k);

  Sequence seq;
  for (std::size_t k = 0; k < n; ++k) {
    FramePair& p = *pairs[k];
    seq.rows.push_back({sight_angles[k], p.oracle.metadata.observation_time,
                        frame_mismatch(p.apparent, p.oracle), p.oracle.metadata.phi_predicted});
    seq.frames.push_back(std::move(p));
  }
  return seq;
}

void write_mismatch_csv(std::ostream& out, std::span<const MismatchRow> rows) {
  out << "psi_tilde,T,mismatch,phi_predicted\n";
  for (const auto& r : rows) {
    out << format_g17(r.psi_tilde) << ',' << format_g17(r.observation_time) << ','
        << format_g17(r.mismatch) << ',' << format_g17(r.phi_predicted) << '\n';
  }
}

}  // namespace mercator::render
