#include "mercator/render/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace mercator::render::kernels {

#if defined(__AVX2__)

namespace {
constexpr std::size_t kLanes = 4;

struct Basis3 {
  __m256d x, y, z;
};
}  // namespace

void retarded_positions_avx2(const MotionParams& m, Points rest, std::span<double> emission_time,
                             MutablePoints position) {
  const std::size_t n = rest.x.size();
  const std::size_t simd_end = n / kLanes * kLanes;
  const __m256d v = _mm256_set1_pd(m.v);
  const __m256d a = _mm256_set1_pd(1.0 - m.v * m.v);
  const __m256d T = _mm256_set1_pd(m.observation_time);
  const __m256d TT = _mm256_set1_pd(m.observation_time * m.observation_time);
  const __m256d vT = _mm256_set1_pd(m.v * m.observation_time);
  const __m256d contraction = _mm256_set1_pd(m.contraction);
  const __m256d y0 = _mm256_set1_pd(m.y0);
  const __m256d z0 = _mm256_set1_pd(m.z_offset);
  const __m256d zero = _mm256_setzero_pd();

  for (std::size_t i = 0; i < simd_end; i += kLanes) {
    const __m256d c = _mm256_mul_pd(_mm256_loadu_pd(&rest.x[i]), contraction);
    const __m256d yy = _mm256_add_pd(y0, _mm256_loadu_pd(&rest.y[i]));
    const __m256d zz = _mm256_add_pd(z0, _mm256_loadu_pd(&rest.z[i]));
    const __m256d transverse = _mm256_add_pd(_mm256_mul_pd(yy, yy), _mm256_mul_pd(zz, zz));
    const __m256d b = _mm256_add_pd(_mm256_mul_pd(v, c), T);
    const __m256d c0 = _mm256_sub_pd(TT, _mm256_add_pd(_mm256_mul_pd(c, c), transverse));
    const __m256d vtc = _mm256_add_pd(vT, c);
    const __m256d root =
        _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(vtc, vtc), _mm256_mul_pd(a, transverse)));
    const __m256d t_product = _mm256_div_pd(c0, _mm256_add_pd(b, root));
    const __m256d t_direct = _mm256_div_pd(_mm256_sub_pd(b, root), a);
    const __m256d positive = _mm256_cmp_pd(b, zero, _CMP_GT_OQ);
    const __m256d t = _mm256_blendv_pd(t_direct, t_product, positive);
    _mm256_storeu_pd(&emission_time[i], t);
    _mm256_storeu_pd(&position.x[i], _mm256_add_pd(_mm256_mul_pd(v, t), c));
    _mm256_storeu_pd(&position.y[i], yy);
    _mm256_storeu_pd(&position.z[i], zz);
  }

  if (simd_end < n) {
    const auto tail = [&](auto s) { return s.subspan(simd_end); };
    retarded_positions_scalar(m, {tail(rest.x), tail(rest.y), tail(rest.z)}, tail(emission_time),
                              {tail(position.x), tail(position.y), tail(position.z)});
  }
}

void project_avx2(const CameraBasis& cam, Points world, std::span<double> u, std::span<double> w,
                  std::span<double> depth, MutablePoints direction) {
  const std::size_t n = world.x.size();
  const std::size_t simd_end = n / kLanes * kLanes;
  const auto splat3 = [](const double (&v)[3]) {
    return Basis3{_mm256_set1_pd(v[0]), _mm256_set1_pd(v[1]), _mm256_set1_pd(v[2])};
  };
  const auto fwd = splat3(cam.forward);
  const auto rgt = splat3(cam.right);
  const auto upv = splat3(cam.up);
  const __m256d scale = _mm256_set1_pd(cam.focal_scale);
  const auto dot3 = [](__m256d x, __m256d y, __m256d z, const Basis3& b) {
    return _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(x, b.x), _mm256_mul_pd(y, b.y)),
                         _mm256_mul_pd(z, b.z));
  };

  for (std::size_t i = 0; i < simd_end; i += kLanes) {
    const __m256d px = _mm256_loadu_pd(&world.x[i]);
    const __m256d py = _mm256_loadu_pd(&world.y[i]);
    const __m256d pz = _mm256_loadu_pd(&world.z[i]);
    const __m256d f = dot3(px, py, pz, fwd);
    const __m256d r = dot3(px, py, pz, rgt);
    const __m256d up = dot3(px, py, pz, upv);
    _mm256_storeu_pd(&u[i], _mm256_mul_pd(_mm256_div_pd(r, f), scale));
    _mm256_storeu_pd(&w[i], _mm256_mul_pd(_mm256_div_pd(up, f), scale));
    _mm256_storeu_pd(&depth[i], f);
    const __m256d len = _mm256_sqrt_pd(_mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(px, px), _mm256_mul_pd(py, py)), _mm256_mul_pd(pz, pz)));
    _mm256_storeu_pd(&direction.x[i], _mm256_div_pd(px, len));
    _mm256_storeu_pd(&direction.y[i], _mm256_div_pd(py, len));
    _mm256_storeu_pd(&direction.z[i], _mm256_div_pd(pz, len));
  }

  if (simd_end < n) {
    const auto tail = [&](auto s) { return s.subspan(simd_end); };
    project_scalar(cam, {tail(world.x), tail(world.y), tail(world.z)}, tail(u), tail(w), tail(depth),
                   {tail(direction.x), tail(direction.y), tail(direction.z)});
  }
}

#else

void retarded_positions_avx2(const MotionParams& m, Points rest, std::span<double> emission_time,
                             MutablePoints position) {
  retarded_positions_scalar(m, rest, emission_time, position);
}

void project_avx2(const CameraBasis& cam, Points world, std::span<double> u, std::span<double> w,
                  std::span<double> depth, MutablePoints direction) {
  project_scalar(cam, world, u, w, depth, direction);
}

#endif

}  // namespace mercator::render::kernels
