#include <cmath>

#include "mercator/render/kernels.hpp"

namespace mercator::render::kernels {

void retarded_positions_scalar(const MotionParams& m, Points rest, std::span<double> emission_time,
                               MutablePoints position) {
  const double a = 1.0 - m.v * m.v;
  const double T = m.observation_time;
  for (std::size_t i = 0; i < rest.x.size(); ++i) {
    const double c = rest.x[i] * m.contraction;
    const double yy = m.y0 + rest.y[i];
    const double zz = m.z_offset + rest.z[i];
    const double transverse = yy * yy + zz * zz;
    // a t^2 - 2 b t + c0 = 0, discriminant written as a sum of squares.
    const double b = m.v * c + T;
    const double c0 = T * T - (c * c + transverse);
    const double vtc = m.v * T + c;
    const double root = std::sqrt(vtc * vtc + a * transverse);
    // Smaller root; take it from the product of roots when b > 0.
    const double t = b > 0.0 ? c0 / (b + root) : (b - root) / a;
    emission_time[i] = t;
    position.x[i] = m.v * t + c;
    position.y[i] = yy;
    position.z[i] = zz;
  }
}

void project_scalar(const CameraBasis& cam, Points world, std::span<double> u, std::span<double> w,
                    std::span<double> depth, MutablePoints direction) {
  for (std::size_t i = 0; i < world.x.size(); ++i) {
    const double px = world.x[i], py = world.y[i], pz = world.z[i];
    const double f = px * cam.forward[0] + py * cam.forward[1] + pz * cam.forward[2];
    const double r = px * cam.right[0] + py * cam.right[1] + pz * cam.right[2];
    const double up = px * cam.up[0] + py * cam.up[1] + pz * cam.up[2];
    u[i] = r / f * cam.focal_scale;
    w[i] = up / f * cam.focal_scale;
    depth[i] = f;
    const double len = std::sqrt(px * px + py * py + pz * pz);
    direction.x[i] = px / len;
    direction.y[i] = py / len;
    direction.z[i] = pz / len;
  }
}

}  // namespace mercator::render::kernels
