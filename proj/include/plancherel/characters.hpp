#pragma once

// The unitary dual of a finite group as a character table, the Plancherel
// weights dim(π)/|G| that make pointwise inversion hold under counting
// measure, and the one-dimensional characters of a subgroup.

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "plancherel/group.hpp"
#include "plancherel/numeric.hpp"

namespace plancherel {

inline constexpr double kDefaultTol = 1e-9;

class CharacterTable {
public:
  const GroupPtr& group() const noexcept { return group_; }
  std::size_t num_irreps() const noexcept { return degrees_.size(); }
  std::size_t num_classes() const noexcept { return group_->num_classes(); }

  /// χ_π on class c.
  cplx value(std::size_t pi, std::size_t c) const noexcept { return values_[pi * num_classes() + c]; }
  std::span<const cplx> row(std::size_t pi) const noexcept {
    return {values_.data() + pi * num_classes(), num_classes()};
  }
  /// χ_π expanded to a function on G (one entry per element index).
  std::span<const cplx> expanded(std::size_t pi) const noexcept {
    return {expanded_.data() + pi * group_->order(), group_->order()};
  }
  /// χ_π(x) for a group element.
  cplx at(std::size_t pi, Element x) const noexcept { return expanded_[pi * group_->order() + x]; }

  const std::vector<std::uint32_t>& degrees() const noexcept { return degrees_; }
  const std::vector<double>& plancherel_weights() const noexcept { return weights_; }

  /// Index of the contragredient irrep (row equal to the conjugate row).
  std::size_t dual(std::size_t pi) const noexcept { return dual_[pi]; }

  /// Builds a table from raw rows. Rows are taken as given (no sorting); the
  /// weights, expansions and duals are derived. Used by the engine and by
  /// tests that need to inject faults.
  static CharacterTable from_rows(GroupPtr group, std::vector<std::uint32_t> degrees,
                                  std::vector<cplx> values);

private:
  GroupPtr group_;
  std::vector<std::uint32_t> degrees_;
  std::vector<cplx> values_;
  std::vector<cplx> expanded_;
  std::vector<double> weights_;
  std::vector<std::size_t> dual_;
};

/// All irreducible characters by simultaneous diagonalization of the class-sum
/// matrices (Burnside). A seeded random complex combination of the class
/// matrices separates the common eigenvectors; on a failed split the next
/// seed is tried, up to 16 retries (EigensplitFailure after that). The result
/// is certified with verify_orthogonality(tol) and Σ dim² = |G|
/// (ToleranceViolation otherwise).
///
/// Rows are sorted by degree ascending, then by class values compared
/// lexicographically by (real, imag) descending after quantizing to 1e-9; this
/// puts the trivial character first. Identical (group, seed) inputs give
/// bit-identical tables.
CharacterTable character_table(const GroupPtr& group, std::uint64_t seed = 0,
                               double tol = kDefaultTol);

struct OrthogonalityReport {
  double max_row_deviation = 0.0;
  double max_column_deviation = 0.0;
  bool degrees_square_sum_ok = false;
  bool pass = false;

  double max_deviation() const noexcept {
    return max_row_deviation > max_column_deviation ? max_row_deviation : max_column_deviation;
  }
};

/// Row relations (1/|G|) Σ_c |c| χ_i(c) conj χ_j(c) = δ_ij and column
/// relations Σ_π χ_π(c) conj χ_π(c') = δ_cc' |G|/|c|, as absolute deviations.
/// Also checks Σ dim² = |G| and χ_π(e) = dim π.
OrthogonalityReport verify_orthogonality(const CharacterTable& table, double tol = kDefaultTol);

/// A one-dimensional unitary character of a subgroup. Values are kept as
/// exact phases: value(u) = exp(2πi·phase/modulus).
class LinearCharacter {
public:
  LinearCharacter(SubgroupPtr subgroup, std::uint32_t modulus, std::vector<std::uint32_t> phases);

  const SubgroupPtr& subgroup() const noexcept { return subgroup_; }
  /// Values aligned with subgroup()->members().
  const std::vector<cplx>& values() const noexcept { return values_; }
  const std::vector<std::uint32_t>& phases() const noexcept { return phases_; }
  std::uint32_t modulus() const noexcept { return modulus_; }

  /// ψ(u) for a parent element index u ∈ U.
  cplx at(Element u) const noexcept { return values_[static_cast<std::size_t>(subgroup_->slot(u))]; }

  /// Pointwise conjugate ψ̄ (values aligned with members()).
  std::vector<cplx> conjugate_values() const;

  bool is_trivial() const noexcept;
  bool is_real() const noexcept;

private:
  SubgroupPtr subgroup_;
  std::uint32_t modulus_;
  std::vector<std::uint32_t> phases_;
  std::vector<cplx> values_;
};

/// All |U/[U,U]| linear characters of U. The abelianization is built up as a
/// tower of cyclic extensions; each step adjoins one element and extends
/// every character in k ways (k the relative order). The trivial character
/// comes first.
std::vector<LinearCharacter> linear_characters(const SubgroupPtr& subgroup);

/// The commutator subgroup [U, U] as a subgroup of U's parent.
SubgroupPtr commutator_subgroup(const Subgroup& subgroup);

}  // namespace plancherel
