#pragma once

// Harmonic analysis on a finite group under counting measure:
//
//   (g ∗_U f)(x)   = Σ_{u∈U} g(u) f(u⁻¹x)
//   Θ_π(f)         = Σ_{x∈G} f(x) χ_π(x)
//   f(e)           = Σ_π μ_π Θ_π(f),            μ_π = dim π / |G|
//   W_ψ f          = ψ ∗_U f                     (lands in c-Ind_U^G ψ)
//   φ_π^ψ          = ψ̄ ∗_U χ_π                   (Whittaker kernel)
//   Φ_π^ψ(f)       = Σ_{g∈G} f(g) φ_π^ψ(g)
//   (W_ψ f)(e)     = Σ_π μ_π Φ_π^ψ(f)
//
// Ĝ is finite, so the Plancherel integral is a sum with no exceptional
// null set. To evaluate the generalized formula at a point g rather than at
// the identity, pass right_translate(f, g): (W_ψ f)(g) = (W_ψ f_g)(e).

#include <complex>
#include <span>
#include <vector>

#include "plancherel/characters.hpp"
#include "plancherel/group.hpp"
#include "plancherel/numeric.hpp"

namespace plancherel {

/// A complex function on G, one value per element index.
struct GroupFunction {
  GroupPtr group;
  std::vector<cplx> values;

  static GroupFunction zeros(GroupPtr group);
  static GroupFunction delta(GroupPtr group, Element at);
  /// Indicator of a conjugacy class.
  static GroupFunction class_indicator(GroupPtr group, std::size_t cls);
  static GroupFunction from_values(GroupPtr group, std::vector<cplx> values);

  cplx operator()(Element x) const noexcept { return values[x]; }
  std::size_t size() const noexcept { return values.size(); }
  double l1_norm() const;
};

/// x ↦ f(x·g).
GroupFunction right_translate(const GroupFunction& f, Element g);

/// x ↦ Σ_{u∈U} weights(u)·f(u⁻¹x). weights is aligned with U.members().
/// Throws GroupMismatch if f lives on another group.
GroupFunction convolve_over_subgroup(std::span<const cplx> weights, const Subgroup& subgroup,
                                     const GroupFunction& f);

/// Θ_π(f). Throws IndexOutOfRange for a bad π, GroupMismatch on wiring.
cplx theta(const CharacterTable& table, std::size_t pi, const GroupFunction& f);

/// Σ_π μ_π Θ_π(f), compensated and accumulated in ascending π. Should equal
/// f(e).
cplx plancherel_invert_at_identity(const CharacterTable& table, const GroupFunction& f);

/// W_ψ f = ψ ∗_U f. Throws SubgroupMismatch if ψ belongs to another subgroup.
GroupFunction whittaker_transform(const Subgroup& subgroup, const LinearCharacter& psi,
                                  const GroupFunction& f);

/// φ_π^ψ = ψ̄ ∗_U χ_π with χ_π expanded to G.
GroupFunction whittaker_kernel(const CharacterTable& table, std::size_t pi, const Subgroup& subgroup,
                               const LinearCharacter& psi);

/// Φ_π^ψ(f) = Σ_g f(g) φ_π^ψ(g).
cplx phi(const CharacterTable& table, std::size_t pi, const Subgroup& subgroup,
         const LinearCharacter& psi, const GroupFunction& f);

struct PiTerm {
  double mu = 0.0;
  cplx theta;
  cplx phi;
  std::uint32_t multiplicity = 0;
};

/// Both sides of (W_ψ f)(e) = Σ_π μ_π Φ_π^ψ(f).
struct WhittakerCheckRecord {
  cplx lhs;
  std::vector<PiTerm> per_pi;
  cplx rhs;
  double abs_error = 0.0;
  double f_l1 = 0.0;

  /// abs_error ≤ rel_tol·(1 + ‖f‖₁).
  bool passes(double rel_tol = 1e-8) const noexcept { return abs_error <= rel_tol * (1.0 + f_l1); }
};

/// Precomputes the Whittaker kernels and multiplicities for one (table, U, ψ)
/// so that many test functions can be checked cheaply.
class WhittakerChecker {
public:
  WhittakerChecker(const CharacterTable& table, SubgroupPtr subgroup, LinearCharacter psi);

  WhittakerCheckRecord check(const GroupFunction& f) const;

  const GroupFunction& kernel(std::size_t pi) const { return kernels_.at(pi); }
  const std::vector<std::uint32_t>& multiplicities() const noexcept { return multiplicities_; }
  const LinearCharacter& psi() const noexcept { return psi_; }
  const Subgroup& subgroup() const noexcept { return *subgroup_; }

private:
  const CharacterTable* table_;
  SubgroupPtr subgroup_;
  LinearCharacter psi_;
  std::vector<GroupFunction> kernels_;
  std::vector<std::uint32_t> multiplicities_;
};

WhittakerCheckRecord generalized_plancherel_check(const CharacterTable& table,
                                                  const SubgroupPtr& subgroup,
                                                  const LinearCharacter& psi, const GroupFunction& f);

/// max over u ∈ U, g ∈ G of |W(u·g) − ψ(u)·W(g)|.
double equivariance_defect(const Subgroup& subgroup, const LinearCharacter& psi, const GroupFunction& w);

/// Numerical rank of {W_ψ δ_g : g ∈ G}. Equals [G:U] when f ↦ W_ψ f is onto
/// the equivariant space.
std::size_t whittaker_image_rank(const Subgroup& subgroup, const LinearCharacter& psi,
                                 double tol = 1e-9);

}  // namespace plancherel
