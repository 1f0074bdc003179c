#pragma once

// Inner-loop arithmetic shared by the harmonic-analysis code: complex dot
// products, index-gathered dot products and L1 norms. Each kernel has a
// scalar reference and (on x86-64) an AVX2+FMA variant; the variant is picked
// once at startup from CPUID and can be overridden with PLANCHEREL_ISA=scalar
// or through set_isa() in tests.
//
// The SIMD variants reassociate the sums, so they agree with the scalar
// reference to rounding, not bit-for-bit. Callers that need bit-identical
// results between two computations must route both through the same kernel.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace plancherel::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

/// True if this build contains the variant and the running CPU supports it.
bool isa_supported(Isa isa) noexcept;

Isa active_isa() noexcept;

/// Switches the process-wide kernel set. Returns false (and leaves the active
/// set untouched) if the ISA is unsupported. Not thread-safe against
/// concurrent kernel calls; intended for tests and the CLI.
bool set_isa(Isa isa) noexcept;

// Σ a[i]·b[i] (no conjugation).
cplx dot(std::span<const cplx> a, std::span<const cplx> b);

// Σ w[k]·src[idx[k]].
cplx gather_dot(std::span<const cplx> w, const cplx* src, std::span<const std::uint32_t> idx);

// Σ |a[i]|.
double abs_sum(std::span<const cplx> a);

namespace scalar {
cplx dot(const cplx* a, const cplx* b, std::size_t n) noexcept;
cplx gather_dot(const cplx* w, const cplx* src, const std::uint32_t* idx, std::size_t n) noexcept;
double abs_sum(const cplx* a, std::size_t n) noexcept;
}  // namespace scalar

namespace avx2 {
cplx dot(const cplx* a, const cplx* b, std::size_t n) noexcept;
cplx gather_dot(const cplx* w, const cplx* src, const std::uint32_t* idx, std::size_t n) noexcept;
double abs_sum(const cplx* a, std::size_t n) noexcept;
}  // namespace avx2

}  // namespace plancherel::kernels
