#include <atomic>
#include <stdexcept>
#include <string>

#include "mercator/render/kernels.hpp"

namespace mercator::render::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(MERCATOR_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{best_supported_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

Isa parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::Scalar;
  if (name == "avx2") return Isa::Avx2;
  if (name == "auto") return best_supported_isa();
  throw std::invalid_argument("unknown kernel ISA '" + std::string(name) + "'");
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return cpu_has_avx2();
  }
  return false;
}

Isa best_supported_isa() { return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("kernel ISA '" + std::string(isa_name(isa)) + "' is not supported here");
  }
  active().store(isa, std::memory_order_relaxed);
}

void retarded_positions(const MotionParams& m, Points rest, std::span<double> emission_time,
                        MutablePoints position) {
  if (active_isa() == Isa::Avx2) {
    retarded_positions_avx2(m, rest, emission_time, position);
  } else {
    retarded_positions_scalar(m, rest, emission_time, position);
  }
}

void project(const CameraBasis& cam, Points world, std::span<double> u, std::span<double> w,
             std::span<double> depth, MutablePoints direction) {
  if (active_isa() == Isa::Avx2) {
    project_avx2(cam, world, u, w, depth, direction);
  } else {
    project_scalar(cam, world, u, w, depth, direction);
  }
}

}  // namespace mercator::render::kernels
