#include "plancherel/kernels.hpp"

#include <atomic>
#include <cassert>
#include <cstdlib>
#include <string>

namespace plancherel::kernels {
namespace {

struct KernelSet {
  cplx (*dot)(const cplx*, const cplx*, std::size_t) noexcept;
  cplx (*gather_dot)(const cplx*, const cplx*, const std::uint32_t*, std::size_t) noexcept;
  double (*abs_sum)(const cplx*, std::size_t) noexcept;
};

constexpr KernelSet kScalar{&scalar::dot, &scalar::gather_dot, &scalar::abs_sum};
#if defined(PLANCHEREL_HAVE_AVX2)
constexpr KernelSet kAvx2{&avx2::dot, &avx2::gather_dot, &avx2::abs_sum};
#endif

bool cpu_has_avx2() noexcept {
#if defined(PLANCHEREL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa detect() noexcept {
  if (const char* env = std::getenv("PLANCHEREL_ISA")) {
    const std::string want(env);
    if (want == "scalar") return Isa::Scalar;
    if (want == "avx2" && cpu_has_avx2()) return Isa::Avx2;
  }
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& active() noexcept {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

const KernelSet& current() noexcept {
#if defined(PLANCHEREL_HAVE_AVX2)
  if (active().load(std::memory_order_relaxed) == Isa::Avx2) return kAvx2;
#endif
  return kScalar;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

bool isa_supported(Isa isa) noexcept {
  return isa == Isa::Scalar || cpu_has_avx2();
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

bool set_isa(Isa isa) noexcept {
  if (!isa_supported(isa)) return false;
  active().store(isa, std::memory_order_relaxed);
  return true;
}

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
  assert(a.size() == b.size());
  return current().dot(a.data(), b.data(), a.size());
}

cplx gather_dot(std::span<const cplx> w, const cplx* src, std::span<const std::uint32_t> idx) {
  assert(w.size() == idx.size());
  return current().gather_dot(w.data(), src, idx.data(), w.size());
}

double abs_sum(std::span<const cplx> a) { return current().abs_sum(a.data(), a.size()); }

}  // namespace plancherel::kernels
