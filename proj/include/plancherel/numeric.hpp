#pragma once

#include <complex>
#include <cstdint>

namespace plancherel {

using cplx = std::complex<double>;

/// Neumaier-compensated running sum of complex terms, accumulated in the order
/// terms are added.
class CompensatedSum {
public:
  void add(cplx term) noexcept {
    add_part(sum_re_, comp_re_, term.real());
    add_part(sum_im_, comp_im_, term.imag());
  }
  cplx value() const noexcept { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

private:
  static void add_part(double& sum, double& comp, double x) noexcept {
    const double t = sum + x;
    if ((sum >= 0 ? sum : -sum) >= (x >= 0 ? x : -x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double sum_re_ = 0.0, comp_re_ = 0.0;
  double sum_im_ = 0.0, comp_im_ = 0.0;
};

/// Counter-based random stream. Every draw is a pure function of the key
/// words, so values do not depend on call order, thread count or platform.
namespace rng {

constexpr std::uint64_t mix(std::uint64_t z) noexcept {
  // splitmix64 finalizer
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t hash(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                             std::uint64_t c = 0) noexcept {
  std::uint64_t h = mix(seed + 0x9e3779b97f4a7c15ULL);
  h = mix(h ^ (a + 0x9e3779b97f4a7c15ULL));
  h = mix(h ^ (b + 0x7f4a7c159e3779b9ULL));
  h = mix(h ^ (c + 0x3c6ef372fe94f82bULL));
  return h;
}

/// Uniform double in [0, 1) with 53 random bits.
constexpr double unit(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Uniform double in [-1, 1).
constexpr double symmetric(std::uint64_t bits) noexcept { return 2.0 * unit(bits) - 1.0; }

}  // namespace rng
}  // namespace plancherel
