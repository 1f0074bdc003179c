#pragma once

// Finite groups given by full multiplication tables, their conjugacy classes,
// and embedded subgroups with right-coset decompositions U\G.
//
// Haar measure is counting measure on G and on every subgroup, so every
// integral over G or U in the harmonic layer is a plain finite sum.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace plancherel {

using Element = std::uint32_t;

/// Largest group any builder will produce.
inline constexpr std::size_t kMaxGroupOrder = 1000;

/// Hard cap for exhaustive subgroup enumeration.
inline constexpr std::size_t kMaxEnumerationOrder = 48;

class FiniteGroup;
class Subgroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;
using SubgroupPtr = std::shared_ptr<const Subgroup>;

/// Immutable finite group. Element 0 is always the identity.
///
/// Conjugacy classes are ordered ascending by (size, smallest member), so the
/// identity class is class 0. Members inside a class are sorted.
class FiniteGroup {
public:
  /// Builds a group from a row-major multiplication table (mul[a*n+b] = a·b).
  /// The table must describe a group with identity 0; inverses and classes
  /// are derived. Use check_group_axioms() to validate untrusted tables.
  static GroupPtr from_table(std::string label, std::size_t order, std::vector<Element> mul,
                             std::vector<Element> generators = {});

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * order_ + b]; }
  Element inv(Element a) const noexcept { return inv_[a]; }
  Element conjugate(Element g, Element x) const noexcept { return mul(mul(g, x), inv(g)); }

  /// Row a of the table: b ↦ a·b.
  std::span<const Element> row(Element a) const noexcept {
    return {mul_.data() + a * order_, order_};
  }

  std::size_t num_classes() const noexcept { return classes_.size(); }
  const std::vector<std::vector<Element>>& classes() const noexcept { return classes_; }
  std::size_t class_of(Element x) const noexcept { return class_of_[x]; }
  std::size_t class_size(std::size_t c) const noexcept { return classes_[c].size(); }
  Element class_representative(std::size_t c) const noexcept { return classes_[c].front(); }

  const std::vector<Element>& generators() const noexcept { return generators_; }
  const std::string& label() const noexcept { return label_; }

  /// Order of a single element.
  std::size_t element_order(Element x) const noexcept;

private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<std::vector<Element>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<Element> generators_;
  std::string label_;
};

/// Exhaustive check of associativity, identity and inverses, and of class
/// invariance under conjugation. O(n³); meant for tests and small groups.
bool check_group_axioms(const FiniteGroup& group);

/// Permutation on {0..degree-1} in image form: p[i] is the image of i.
using Permutation = std::vector<std::uint32_t>;

/// Closure of the generators under composition. Elements are indexed in
/// lexicographic order of their image tuples (identity first). Composition is
/// (p·q)(i) = p(q(i)).
///
/// Throws InvalidPermutation if a generator is not a bijection of
/// {0..degree-1}, ClosureExceedsCap if the group outgrows order_cap.
GroupPtr build_from_permutations(std::size_t degree, std::span<const Permutation> generators,
                                 std::size_t order_cap, std::string label = {});

/// Direct product A×B; element (a, b) has index a·|B| + b.
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// A subgroup embedded in a parent group. members are sorted parent element
/// indices. left_coset_reps holds one representative per coset U·g (the
/// smallest element index in the coset), in ascending order.
class Subgroup {
public:
  Subgroup(GroupPtr parent, std::vector<Element> members);

  const GroupPtr& parent() const noexcept { return parent_; }
  std::size_t order() const noexcept { return members_.size(); }
  std::size_t index() const noexcept { return parent_->order() / members_.size(); }
  const std::vector<Element>& members() const noexcept { return members_; }
  const std::vector<Element>& left_coset_reps() const noexcept { return coset_reps_; }

  bool contains(Element x) const noexcept { return slot_[x] >= 0; }
  /// Position of parent element x in members(), or -1.
  std::int32_t slot(Element x) const noexcept { return slot_[x]; }

  /// Which coset U·rep the parent element x lies in (index into
  /// left_coset_reps()).
  std::size_t coset_of(Element x) const noexcept { return coset_of_[x]; }

  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == parent_->order(); }

private:
  GroupPtr parent_;
  std::vector<Element> members_;
  std::vector<std::int32_t> slot_;
  std::vector<Element> coset_reps_;
  std::vector<std::size_t> coset_of_;
};

/// Smallest subgroup containing the seeds.
SubgroupPtr subgroup_closure(const GroupPtr& group, std::span<const Element> seeds);

/// All subgroups of a group of order ≤ kMaxEnumerationOrder, deduplicated by
/// member set and sorted by (order, members lexicographically).
/// Throws OrderTooLarge above the cap.
std::vector<SubgroupPtr> enumerate_subgroups(const GroupPtr& group);

}  // namespace plancherel
