#include "plancherel/probe.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <functional>
#include <set>

#include "plancherel/errors.hpp"
#include "plancherel/kernels.hpp"
#include "plancherel/numeric.hpp"

namespace plancherel {

namespace {

// Fisher–Yates driven by the counter-based stream.
std::vector<std::size_t> seeded_order(std::size_t n, std::uint64_t seed, std::uint64_t stream) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng::hash(seed, stream, i) % i);
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

}  // namespace

double FubiniValues::max_disagreement() const noexcept {
  return std::max({std::abs(g_outer - u_outer), std::abs(g_outer - substituted),
                   std::abs(u_outer - substituted)});
}

FubiniValues fubini_interchange_oracle(const CharacterTable& table, std::size_t pi,
                                       const Subgroup& subgroup, const LinearCharacter& psi,
                                       const GroupFunction& f, std::uint64_t seed) {
  if (pi >= table.num_irreps()) throw Error(ErrorKind::IndexOutOfRange, "irrep index");
  if (f.group.get() != table.group().get() || subgroup.parent().get() != table.group().get()) {
    throw Error(ErrorKind::GroupMismatch, "oracle inputs live on different groups");
  }
  const FiniteGroup& g = *table.group();
  const auto& members = subgroup.members();
  auto psi_at = [&](std::size_t k) { return psi.values()[k]; };
  auto theta_at = [&](Element x) { return table.at(pi, x); };

  FubiniValues out;
  cplx acc = 0.0;
  for (Element x = 0; x < g.order(); ++x) {
    for (std::size_t k = 0; k < members.size(); ++k) {
      acc += theta_at(x) * f.values[g.mul(g.inv(members[k]), x)] * psi_at(k);
    }
  }
  out.g_outer = acc;

  acc = 0.0;
  for (std::size_t k : seeded_order(members.size(), seed, 0)) {
    for (Element x = 0; x < g.order(); ++x) {
      acc += theta_at(x) * f.values[g.mul(g.inv(members[k]), x)] * psi_at(k);
    }
  }
  out.u_outer = acc;

  acc = 0.0;
  const auto elements = seeded_order(g.order(), seed, 1);
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (std::size_t e : elements) {
      const auto x = static_cast<Element>(e);
      acc += theta_at(g.mul(members[k], x)) * f.values[x] * psi_at(k);
    }
  }
  out.substituted = acc;
  return out;
}

std::vector<TruncationStep> truncation_demo(const Subgroup& subgroup, const LinearCharacter& psi,
                                            const CharacterTable& table, std::size_t pi,
                                            const std::vector<std::vector<Element>>& chain) {
  if (chain.empty()) throw Error(ErrorKind::ChainNotExhaustive, "empty chain");
  const FiniteGroup& g = *subgroup.parent();
  std::set<Element> previous;
  std::vector<std::set<Element>> sets;
  for (const auto& k : chain) {
    std::set<Element> s(k.begin(), k.end());
    for (Element x : s) {
      if (x >= g.order() || !subgroup.contains(x)) {
        throw Error(ErrorKind::ChainNotNested, "chain set leaves the subgroup");
      }
      if (!s.contains(g.inv(x))) throw Error(ErrorKind::ChainNotSymmetric, "chain set not closed under inverse");
    }
    if (!s.contains(g.identity())) throw Error(ErrorKind::ChainNotSymmetric, "chain set misses the identity");
    if (!std::includes(s.begin(), s.end(), previous.begin(), previous.end())) {
      throw Error(ErrorKind::ChainNotNested, "chain sets are not nested");
    }
    previous = s;
    sets.push_back(std::move(s));
  }
  if (sets.back().size() != subgroup.order()) {
    throw Error(ErrorKind::ChainNotExhaustive, "last chain set is not the whole subgroup");
  }

  const auto chi = table.expanded(pi);
  const auto theta_pi = GroupFunction::from_values(table.group(), std::vector<cplx>(chi.begin(), chi.end()));
  const auto full_weights = psi.conjugate_values();

  std::vector<TruncationStep> steps;
  for (const auto& s : sets) {
    std::vector<cplx> weights(subgroup.order(), cplx{0.0, 0.0});
    for (std::size_t k = 0; k < subgroup.order(); ++k) {
      if (s.contains(subgroup.members()[k])) weights[k] = full_weights[k];
    }
    steps.push_back({std::vector<Element>(s.begin(), s.end()),
                     convolve_over_subgroup(weights, subgroup, theta_pi), 0.0});
  }
  const auto& last = steps.back().kernel.values;
  for (auto& step : steps) {
    double d = 0.0;
    for (std::size_t x = 0; x < last.size(); ++x) d = std::max(d, std::abs(step.kernel.values[x] - last[x]));
    step.sup_distance_to_final = d;
  }
  return steps;
}

GroupFunction random_group_function(const GroupPtr& group, std::uint64_t seed, std::uint64_t stream) {
  auto f = GroupFunction::zeros(group);
  for (Element x = 0; x < group->order(); ++x) {
    f.values[x] = {rng::symmetric(rng::hash(seed, stream, x, 0)),
                   rng::symmetric(rng::hash(seed, stream, x, 1))};
  }
  return f;
}

namespace {

ConjectureProbeReport probe_impl(const CharacterTable& table, const SubgroupPtr& subgroup,
                                 const LinearCharacter& psi, double tol,
                                 const std::function<std::vector<GroupFunction>(std::size_t, const GroupFunction&,
                                                                                bool&)>& samples_for) {
  const WhittakerChecker checker(table, subgroup, psi);
  ConjectureProbeReport report;
  report.identity = kernel_multiplicity_identity_check(table, *subgroup, psi, tol);
  report.identity_check = report.identity.pass;

  for (std::size_t pi = 0; pi < table.num_irreps(); ++pi) {
    ProbeRow row;
    row.multiplicity = checker.multiplicities()[pi];
    row.degree = table.degrees()[pi];
    row.kernel_at_identity = checker.kernel(pi).values[0];
    row.scaled_multiplicity =
        static_cast<double>(subgroup->order()) * row.multiplicity / static_cast<double>(row.degree);
    const auto functions = samples_for(pi, checker.kernel(pi), row.degenerate);
    for (const auto& f : functions) {
      const cplx th = theta(table, pi, f);
      const cplx ph = kernels::dot(f.values, checker.kernel(pi).values);
      if (std::abs(th) <= kThetaFloor) {
        row.ratio_samples.emplace_back(std::nullopt);
        row.theta_zero_flags.push_back(true);
      } else {
        row.ratio_samples.emplace_back(ph / th);
        row.theta_zero_flags.push_back(false);
      }
    }
    std::optional<cplx> first;
    row.ratio_constant = true;
    for (const auto& r : row.ratio_samples) {
      if (!r) continue;
      if (!first) {
        first = r;
        continue;
      }
      if (std::abs(*r - *first) > kRatioRelTol * std::max(1.0, std::abs(*first))) row.ratio_constant = false;
    }
    if (!first) row.ratio_constant = false;
    report.per_pi.push_back(std::move(row));
  }
  return report;
}

}  // namespace

ConjectureProbeReport conjecture_probe(const CharacterTable& table, const SubgroupPtr& subgroup,
                                       const LinearCharacter& psi, std::span<const GroupFunction> functions,
                                       double tol) {
  std::vector<GroupFunction> fs(functions.begin(), functions.end());
  return probe_impl(table, subgroup, psi, tol,
                    [&](std::size_t, const GroupFunction&, bool&) { return fs; });
}

ConjectureProbeReport conjecture_probe(const CharacterTable& table, const SubgroupPtr& subgroup,
                                       const LinearCharacter& psi, std::size_t num_test_functions,
                                       std::uint64_t seed, double tol) {
  if (num_test_functions == 0) throw Error(ErrorKind::InvalidConfig, "num_test_functions must be >= 1");
  const GroupPtr& group = table.group();
  return probe_impl(table, subgroup, psi, tol, [&](std::size_t pi, const GroupFunction&, bool& degenerate) {
    std::vector<GroupFunction> fs{GroupFunction::delta(group, group->identity())};
    const std::uint64_t substream = rng::hash(seed, pi);
    for (std::size_t s = 0; s < num_test_functions; ++s) {
      GroupFunction f = random_group_function(group, substream, s * kProbeRetryBudget);
      for (int attempt = 1; attempt < kProbeRetryBudget && std::abs(theta(table, pi, f)) <= kThetaFloor;
           ++attempt) {
        f = random_group_function(group, substream, s * kProbeRetryBudget + static_cast<std::uint64_t>(attempt));
      }
      if (std::abs(theta(table, pi, f)) <= kThetaFloor) degenerate = true;
      fs.push_back(std::move(f));
    }
    return fs;
  });
}

}  // namespace plancherel
