#include "plancherel/kernels.hpp"

#include <immintrin.h>

#include <cmath>

// Compiled with -mavx2 -mfma. Only reached after a CPUID check.

namespace plancherel::kernels::avx2 {
namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
//
// For a product a·b we keep two accumulators:
//   straight += a * b          -> [ar*br, ai*bi, ...]
//   crossed  += a * swap(b)    -> [ar*bi, ai*br, ...]
// so that re = Σ(straight even) − Σ(straight odd), im = Σ crossed.
inline cplx reduce(__m256d straight, __m256d crossed) noexcept {
  alignas(32) double s[4];
  alignas(32) double c[4];
  _mm256_store_pd(s, straight);
  _mm256_store_pd(c, crossed);
  return {(s[0] + s[2]) - (s[1] + s[3]), (c[0] + c[2]) + (c[1] + c[3])};
}

inline __m256d load2(const cplx* p) noexcept {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

inline __m256d load2_gather(const cplx* src, std::uint32_t i0, std::uint32_t i1) noexcept {
  const __m128d lo = _mm_loadu_pd(reinterpret_cast<const double*>(src + i0));
  const __m128d hi = _mm_loadu_pd(reinterpret_cast<const double*>(src + i1));
  return _mm256_set_m128d(hi, lo);
}

}  // namespace

cplx dot(const cplx* a, const cplx* b, std::size_t n) noexcept {
  __m256d straight0 = _mm256_setzero_pd(), crossed0 = _mm256_setzero_pd();
  __m256d straight1 = _mm256_setzero_pd(), crossed1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va0 = load2(a + i), vb0 = load2(b + i);
    const __m256d va1 = load2(a + i + 2), vb1 = load2(b + i + 2);
    straight0 = _mm256_fmadd_pd(va0, vb0, straight0);
    crossed0 = _mm256_fmadd_pd(va0, _mm256_permute_pd(vb0, 0b0101), crossed0);
    straight1 = _mm256_fmadd_pd(va1, vb1, straight1);
    crossed1 = _mm256_fmadd_pd(va1, _mm256_permute_pd(vb1, 0b0101), crossed1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d va = load2(a + i), vb = load2(b + i);
    straight0 = _mm256_fmadd_pd(va, vb, straight0);
    crossed0 = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), crossed0);
  }
  cplx acc = reduce(_mm256_add_pd(straight0, straight1), _mm256_add_pd(crossed0, crossed1));
  if (i < n) acc += scalar::dot(a + i, b + i, n - i);
  return acc;
}

cplx gather_dot(const cplx* w, const cplx* src, const std::uint32_t* idx, std::size_t n) noexcept {
  __m256d straight = _mm256_setzero_pd(), crossed = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d vw = load2(w + k);
    const __m256d vs = load2_gather(src, idx[k], idx[k + 1]);
    straight = _mm256_fmadd_pd(vw, vs, straight);
    crossed = _mm256_fmadd_pd(vw, _mm256_permute_pd(vs, 0b0101), crossed);
  }
  cplx acc = reduce(straight, crossed);
  if (k < n) acc += scalar::gather_dot(w + k, src, idx + k, n - k);
  return acc;
}

double abs_sum(const cplx* a, std::size_t n) noexcept {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v0 = load2(a + i);
    const __m256d v1 = load2(a + i + 2);
    // hadd -> [|a0|², |a2|², |a1|², |a3|²]
    const __m256d sq = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
    acc = _mm256_add_pd(acc, _mm256_sqrt_pd(sq));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) total += std::sqrt(a[i].real() * a[i].real() + a[i].imag() * a[i].imag());
  return total;
}

}  // namespace plancherel::kernels::avx2
