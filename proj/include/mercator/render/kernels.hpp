#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Batch kernels for the ray tracer. Each kernel has a scalar reference
// implementation and an AVX2 variant; both perform the same IEEE operations
// in the same order, so results are bit-identical and the variant is picked
// at runtime.

namespace mercator::render::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);
/// "scalar", "avx2", or "auto" (best supported); std::invalid_argument otherwise.
Isa parse_isa(std::string_view name);

/// True when the variant is compiled in and the CPU supports it.
bool isa_supported(Isa isa);
Isa best_supported_isa();
/// ISA used by the dispatching entry points. Defaults to the best supported one.
Isa active_isa();
/// Throws std::invalid_argument if the ISA is not supported here.
void set_active_isa(Isa isa);

struct MotionParams {
  double v;
  double contraction;  // sqrt(1 - v^2)
  double y0;
  double z_offset;
  double observation_time;  // T
};

/// Structure-of-arrays 3-vectors.
struct Points {
  std::span<const double> x, y, z;
};
struct MutablePoints {
  std::span<double> x, y, z;
};

/// For rest offsets a: solves |p(t)| = T - t on the past light cone, with
/// p(t) = (v t + a_x sqrt(1-v^2), y0 + a_y, z_offset + a_z). Writes t_e and p(t_e).
void retarded_positions_scalar(const MotionParams& m, Points rest, std::span<double> emission_time,
                               MutablePoints position);
void retarded_positions_avx2(const MotionParams& m, Points rest, std::span<double> emission_time,
                             MutablePoints position);
void retarded_positions(const MotionParams& m, Points rest, std::span<double> emission_time,
                        MutablePoints position);

struct CameraBasis {
  double right[3];
  double up[3];
  double forward[3];
  double focal_scale;
};

/// Gnomonic projection of world points seen from the origin: image (u, w),
/// depth along forward, and the unit direction to each point.
void project_scalar(const CameraBasis& cam, Points world, std::span<double> u, std::span<double> w,
                    std::span<double> depth, MutablePoints direction);
void project_avx2(const CameraBasis& cam, Points world, std::span<double> u, std::span<double> w,
                  std::span<double> depth, MutablePoints direction);
void project(const CameraBasis& cam, Points world, std::span<double> u, std::span<double> w,
             std::span<double> depth, MutablePoints direction);

}  // namespace mercator::render::kernels
