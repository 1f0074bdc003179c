#include "plancherel/harmonic.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "plancherel/errors.hpp"
#include "plancherel/induction.hpp"
#include "plancherel/kernels.hpp"

namespace plancherel {

namespace {

void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* what) {
  if (a.get() != b.get()) throw Error(ErrorKind::GroupMismatch, what);
}

void require_psi_on(const Subgroup& subgroup, const LinearCharacter& psi) {
  const Subgroup& own = *psi.subgroup();
  if (&own == &subgroup) return;
  if (own.parent().get() != subgroup.parent().get() || own.members() != subgroup.members()) {
    throw Error(ErrorKind::SubgroupMismatch, "character belongs to a different subgroup");
  }
}

void require_pi(const CharacterTable& table, std::size_t pi) {
  if (pi >= table.num_irreps()) {
    throw Error(ErrorKind::IndexOutOfRange, "irrep index " + std::to_string(pi) + " of " +
                                                std::to_string(table.num_irreps()));
  }
}

}  // namespace

GroupFunction GroupFunction::zeros(GroupPtr group) {
  const std::size_t n = group->order();
  return {std::move(group), std::vector<cplx>(n)};
}

GroupFunction GroupFunction::delta(GroupPtr group, Element at) {
  auto f = zeros(std::move(group));
  f.values.at(at) = 1.0;
  return f;
}

GroupFunction GroupFunction::class_indicator(GroupPtr group, std::size_t cls) {
  auto f = zeros(std::move(group));
  for (Element x : f.group->classes().at(cls)) f.values[x] = 1.0;
  return f;
}

GroupFunction GroupFunction::from_values(GroupPtr group, std::vector<cplx> values) {
  if (values.size() != group->order()) {
    throw Error(ErrorKind::GroupMismatch, "function length does not match group order");
  }
  return {std::move(group), std::move(values)};
}

double GroupFunction::l1_norm() const { return kernels::abs_sum(values); }

GroupFunction right_translate(const GroupFunction& f, Element g) {
  auto out = GroupFunction::zeros(f.group);
  for (Element x = 0; x < f.group->order(); ++x) out.values[x] = f.values[f.group->mul(x, g)];
  return out;
}

GroupFunction convolve_over_subgroup(std::span<const cplx> weights, const Subgroup& subgroup,
                                     const GroupFunction& f) {
  require_same_group(f.group, subgroup.parent(), "function and subgroup live on different groups");
  if (weights.size() != subgroup.order()) {
    throw Error(ErrorKind::SubgroupMismatch, "weights must have one entry per subgroup member");
  }
  const FiniteGroup& g = *f.group;
  std::vector<Element> inverses;
  inverses.reserve(subgroup.order());
  for (Element u : subgroup.members()) inverses.push_back(g.inv(u));

  auto out = GroupFunction::zeros(f.group);
  std::vector<std::uint32_t> idx(subgroup.order());
  for (Element x = 0; x < g.order(); ++x) {
    for (std::size_t k = 0; k < inverses.size(); ++k) idx[k] = g.mul(inverses[k], x);
    out.values[x] = kernels::gather_dot(weights, f.values.data(), idx);
  }
  return out;
}

cplx theta(const CharacterTable& table, std::size_t pi, const GroupFunction& f) {
  require_pi(table, pi);
  require_same_group(f.group, table.group(), "function and table live on different groups");
  return kernels::dot(f.values, table.expanded(pi));
}

cplx plancherel_invert_at_identity(const CharacterTable& table, const GroupFunction& f) {
  CompensatedSum sum;
  for (std::size_t pi = 0; pi < table.num_irreps(); ++pi) {
    sum.add(table.plancherel_weights()[pi] * theta(table, pi, f));
  }
  return sum.value();
}

GroupFunction whittaker_transform(const Subgroup& subgroup, const LinearCharacter& psi,
                                  const GroupFunction& f) {
  require_psi_on(subgroup, psi);
  return convolve_over_subgroup(psi.values(), subgroup, f);
}

GroupFunction whittaker_kernel(const CharacterTable& table, std::size_t pi, const Subgroup& subgroup,
                               const LinearCharacter& psi) {
  require_pi(table, pi);
  require_psi_on(subgroup, psi);
  require_same_group(table.group(), subgroup.parent(), "table and subgroup live on different groups");
  const auto chi = table.expanded(pi);
  const auto theta_pi =
      GroupFunction::from_values(table.group(), std::vector<cplx>(chi.begin(), chi.end()));
  const auto weights = psi.conjugate_values();
  return convolve_over_subgroup(weights, subgroup, theta_pi);
}

cplx phi(const CharacterTable& table, std::size_t pi, const Subgroup& subgroup,
         const LinearCharacter& psi, const GroupFunction& f) {
  require_same_group(f.group, table.group(), "function and table live on different groups");
  const auto kernel = whittaker_kernel(table, pi, subgroup, psi);
  return kernels::dot(f.values, kernel.values);
}

WhittakerChecker::WhittakerChecker(const CharacterTable& table, SubgroupPtr subgroup,
                                   LinearCharacter psi)
    : table_(&table), subgroup_(std::move(subgroup)), psi_(std::move(psi)) {
  require_psi_on(*subgroup_, psi_);
  require_same_group(table.group(), subgroup_->parent(), "table and subgroup live on different groups");
  kernels_.reserve(table.num_irreps());
  multiplicities_.reserve(table.num_irreps());
  for (std::size_t pi = 0; pi < table.num_irreps(); ++pi) {
    kernels_.push_back(whittaker_kernel(table, pi, *subgroup_, psi_));
    multiplicities_.push_back(multiplicity_frobenius(table, pi, *subgroup_, psi_));
  }
}

WhittakerCheckRecord WhittakerChecker::check(const GroupFunction& f) const {
  const CharacterTable& table = *table_;
  require_same_group(f.group, table.group(), "function and table live on different groups");
  WhittakerCheckRecord rec;

  // (ψ ∗_U f)(e) = Σ_u ψ(u) f(u⁻¹).
  const FiniteGroup& g = *table.group();
  std::vector<std::uint32_t> idx;
  idx.reserve(subgroup_->order());
  for (Element u : subgroup_->members()) idx.push_back(g.inv(u));
  rec.lhs = kernels::gather_dot(psi_.values(), f.values.data(), idx);

  CompensatedSum rhs;
  rec.per_pi.reserve(table.num_irreps());
  for (std::size_t pi = 0; pi < table.num_irreps(); ++pi) {
    PiTerm term;
    term.mu = table.plancherel_weights()[pi];
    term.theta = kernels::dot(f.values, table.expanded(pi));
    term.phi = kernels::dot(f.values, kernels_[pi].values);
    term.multiplicity = multiplicities_[pi];
    rhs.add(term.mu * term.phi);
    rec.per_pi.push_back(term);
  }
  rec.rhs = rhs.value();
  rec.abs_error = std::abs(rec.lhs - rec.rhs);
  rec.f_l1 = f.l1_norm();
  return rec;
}

WhittakerCheckRecord generalized_plancherel_check(const CharacterTable& table,
                                                  const SubgroupPtr& subgroup,
                                                  const LinearCharacter& psi, const GroupFunction& f) {
  return WhittakerChecker(table, subgroup, psi).check(f);
}

double equivariance_defect(const Subgroup& subgroup, const LinearCharacter& psi, const GroupFunction& w) {
  require_psi_on(subgroup, psi);
  const FiniteGroup& g = *subgroup.parent();
  double worst = 0.0;
  for (std::size_t k = 0; k < subgroup.order(); ++k) {
    const Element u = subgroup.members()[k];
    for (Element x = 0; x < g.order(); ++x) {
      worst = std::max(worst, std::abs(w.values[g.mul(u, x)] - psi.values()[k] * w.values[x]));
    }
  }
  return worst;
}

std::size_t whittaker_image_rank(const Subgroup& subgroup, const LinearCharacter& psi, double tol) {
  const GroupPtr& group = subgroup.parent();
  const auto n = static_cast<Eigen::Index>(group->order());
  Eigen::MatrixXcd images(n, n);
  for (Element x = 0; x < group->order(); ++x) {
    const auto w = whittaker_transform(subgroup, psi, GroupFunction::delta(group, x));
    for (Eigen::Index i = 0; i < n; ++i) images(i, x) = w.values[static_cast<std::size_t>(i)];
  }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(images);
  lu.setThreshold(tol);
  return static_cast<std::size_t>(lu.rank());
}

}  // namespace plancherel
