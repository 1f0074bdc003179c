#pragma once

// Oracles for the derivation of the generalized Plancherel formula (order of
// summation, truncated characters ψ_n = ψ·1_{K_n}) and an empirical probe of
// the ratio Φ_π^ψ(f) / Θ_π(f) against mult(π, c-Ind_U^G ψ).
//
// The probe reports what it measures. It does not assert that the ratio is
// constant or equal to the multiplicity.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "plancherel/harmonic.hpp"
#include "plancherel/induction.hpp"

namespace plancherel {

struct FubiniValues {
  /// Σ_g Σ_u θ_π(g) f(u⁻¹g) ψ(u), g outermost.
  cplx g_outer;
  /// Same double sum with u outermost.
  cplx u_outer;
  /// Σ_u Σ_x θ_π(u·x) f(x) ψ(u), after substituting g = u·x.
  cplx substituted;

  double max_disagreement() const noexcept;
};

/// Evaluates the double sum three ways with plain scalar loops (independent of
/// the SIMD kernels). The seed picks the traversal order of U in the
/// u-outer sum and of G in the substituted sum.
FubiniValues fubini_interchange_oracle(const CharacterTable& table, std::size_t pi,
                                       const Subgroup& subgroup, const LinearCharacter& psi,
                                       const GroupFunction& f, std::uint64_t seed);

struct TruncationStep {
  std::vector<Element> support;  // K_n
  GroupFunction kernel;          // conj(ψ_n) ∗_U θ_π
  double sup_distance_to_final = 0.0;
};

/// Kernels for ψ_n = ψ·1_{K_n} along a chain K_1 ⊆ … ⊆ K_m = U of symmetric
/// sets containing the identity. The last kernel goes through the same
/// convolution as whittaker_kernel and matches it bit for bit.
///
/// Throws ChainNotNested, ChainNotSymmetric or ChainNotExhaustive.
std::vector<TruncationStep> truncation_demo(const Subgroup& subgroup, const LinearCharacter& psi,
                                            const CharacterTable& table, std::size_t pi,
                                            const std::vector<std::vector<Element>>& chain);

inline constexpr double kThetaFloor = 1e-6;
inline constexpr int kProbeRetryBudget = 32;
inline constexpr double kRatioRelTol = 1e-6;

struct ProbeRow {
  std::uint32_t multiplicity = 0;
  std::uint32_t degree = 0;
  cplx kernel_at_identity;
  /// |U|·m_π / dim π, reported beside the ratios for comparison.
  double scaled_multiplicity = 0.0;
  /// Φ/Θ per sample; empty where Θ_π(f) ≈ 0.
  std::vector<std::optional<cplx>> ratio_samples;
  std::vector<bool> theta_zero_flags;
  bool ratio_constant = false;
  /// Retry budget ran out for at least one random sample.
  bool degenerate = false;
};

struct ConjectureProbeReport {
  std::vector<ProbeRow> per_pi;
  IdentityCheck identity;
  bool identity_check = false;
};

/// Ratios over explicitly given test functions (no resampling; zero Θ
/// samples are flagged).
ConjectureProbeReport conjecture_probe(const CharacterTable& table, const SubgroupPtr& subgroup,
                                       const LinearCharacter& psi, std::span<const GroupFunction> functions,
                                       double tol = 1e-8);

/// Sample 0 is δ_e; samples 1..num_test_functions are seeded random
/// functions drawn per π from the substream (seed, π). A random sample with
/// |Θ_π(f)| ≤ kThetaFloor is redrawn up to kProbeRetryBudget times, then
/// flagged.
ConjectureProbeReport conjecture_probe(const CharacterTable& table, const SubgroupPtr& subgroup,
                                       const LinearCharacter& psi, std::size_t num_test_functions,
                                       std::uint64_t seed, double tol = 1e-8);

/// Seeded random function with real and imaginary parts uniform in [-1, 1),
/// keyed by (seed, stream, element index).
GroupFunction random_group_function(const GroupPtr& group, std::uint64_t seed, std::uint64_t stream);

}  // namespace plancherel
