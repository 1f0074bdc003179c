#include "plancherel/kernels.hpp"

#include <cmath>

namespace plancherel::kernels::scalar {

// Plain left-to-right accumulation; this is the reference the SIMD variants
// are tested against.

cplx dot(const cplx* a, const cplx* b, std::size_t n) noexcept {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br - ai * bi;
    im += ar * bi + ai * br;
  }
  return {re, im};
}

cplx gather_dot(const cplx* w, const cplx* src, const std::uint32_t* idx, std::size_t n) noexcept {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const cplx s = src[idx[k]];
    re += w[k].real() * s.real() - w[k].imag() * s.imag();
    im += w[k].real() * s.imag() + w[k].imag() * s.real();
  }
  return {re, im};
}

double abs_sum(const cplx* a, std::size_t n) noexcept {
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += std::hypot(a[i].real(), a[i].imag());
  return total;
}

}  // namespace plancherel::kernels::scalar
