#pragma once

// Compact induction from a linear character of a subgroup: multiplicities by
// Frobenius reciprocity, the induced character, explicit monomial matrices on
// functions on U\G, and the kernel/multiplicity identity at the identity.

#include <cstdint>
#include <vector>

#include "plancherel/characters.hpp"
#include "plancherel/harmonic.hpp"

namespace plancherel {

/// Largest index [G:U] for which explicit induced matrices are built.
inline constexpr std::size_t kMaxInducedIndex = 64;

/// mult(π, c-Ind_U^G ψ) = (1/|U|) Σ_{u∈U} χ_π(u) conj ψ(u).
/// Throws NonIntegralMultiplicity if the inner product is not within 1e-6 of
/// a nonnegative integer.
std::uint32_t multiplicity_frobenius(const CharacterTable& table, std::size_t pi,
                                     const Subgroup& subgroup, const LinearCharacter& psi);

struct InducedCharacter {
  /// Class-function values of Ind_U^G ψ.
  std::vector<cplx> class_values;
  /// Coefficient of each irrep (table row order).
  std::vector<std::uint32_t> multiplicities;
  std::size_t dimension = 0;
};

/// χ(g) = (1/|U|) Σ_{x∈G, x⁻¹gx∈U} ψ(x⁻¹gx), decomposed against the table.
InducedCharacter induced_character(const Subgroup& subgroup, const LinearCharacter& psi,
                                   const CharacterTable& table);

/// Decomposes an arbitrary class function against the table, rounding each
/// coefficient to an integer (NonIntegralMultiplicity if any is off by more
/// than 1e-6).
std::vector<std::uint32_t> decompose_class_function(const CharacterTable& table,
                                                    std::span<const cplx> class_values);

/// Ind_U^G ψ realized on functions on U\G. With coset representatives r_i
/// (smallest index per coset U·g), M(g)_{ij} = ψ(u) when r_i·g = u·r_j.
/// Each M(g) is monomial, so it is stored as (column, entry) per row.
class InducedRep {
public:
  std::size_t dimension() const noexcept { return dimension_; }
  const GroupPtr& group() const noexcept { return group_; }

  /// Column of the nonzero entry in row i of M(g), and its value.
  std::uint32_t column(Element g, std::size_t i) const noexcept { return columns_[g * dimension_ + i]; }
  cplx entry(Element g, std::size_t i) const noexcept { return entries_[g * dimension_ + i]; }

  /// Dense M(g), row-major dimension×dimension.
  std::vector<cplx> dense(Element g) const;
  cplx trace(Element g) const;

  /// Trace on each class (at the class representative).
  std::vector<cplx> character() const;

  /// max over g, h of ‖M(g)M(h) − M(gh)‖_max.
  double homomorphism_defect() const;

private:
  friend InducedRep induced_rep_matrices(const Subgroup&, const LinearCharacter&);
  GroupPtr group_;
  std::size_t dimension_ = 0;
  std::vector<std::uint32_t> columns_;
  std::vector<cplx> entries_;
};

/// Throws IndexTooLarge if [G:U] > kMaxInducedIndex, SubgroupMismatch on
/// wiring.
InducedRep induced_rep_matrices(const Subgroup& subgroup, const LinearCharacter& psi);

struct IdentityCheck {
  bool pass = false;
  /// |(ψ̄ ∗_U θ_π)(1) − |U|·mult(π, c-Ind ψ)| per π.
  std::vector<double> residuals;
  double max_residual = 0.0;
  std::vector<cplx> kernel_at_identity;
  std::vector<std::uint32_t> multiplicities;
  /// The same comparison against |U|·mult(π̄, c-Ind ψ), the contragredient.
  /// Always holds exactly; differs from residuals only when ψ and χ_π are both
  /// non-real on U.
  std::vector<double> dual_residuals;
  double max_dual_residual = 0.0;
};

/// Checks (ψ̄ ∗_U θ_π)(1) = |U|·mult(π, c-Ind_U^G ψ) for every π.
IdentityCheck kernel_multiplicity_identity_check(const CharacterTable& table, const Subgroup& subgroup,
                                                 const LinearCharacter& psi, double tol = 1e-8);

}  // namespace plancherel
