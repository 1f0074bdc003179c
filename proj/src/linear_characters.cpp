#include <algorithm>
#include <cmath>
#include <numbers>

#include "plancherel/characters.hpp"
#include "plancherel/errors.hpp"

namespace plancherel {

namespace {

cplx root_of_unity(std::uint32_t phase, std::uint32_t modulus) {
  phase %= modulus;
  // Quarter turns exactly, everything else through sin/cos.
  if ((4ull * phase) % modulus == 0) {
    switch ((4ull * phase) / modulus) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(modulus);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

LinearCharacter::LinearCharacter(SubgroupPtr subgroup, std::uint32_t modulus,
                                 std::vector<std::uint32_t> phases)
    : subgroup_(std::move(subgroup)), modulus_(modulus), phases_(std::move(phases)) {
  if (modulus_ == 0 || phases_.size() != subgroup_->order()) {
    throw Error(ErrorKind::InvalidConfig, "linear character needs one phase per subgroup member");
  }
  values_.reserve(phases_.size());
  for (auto p : phases_) values_.push_back(root_of_unity(p, modulus_));
}

std::vector<cplx> LinearCharacter::conjugate_values() const {
  std::vector<cplx> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = std::conj(values_[i]);
  return out;
}

bool LinearCharacter::is_trivial() const noexcept {
  for (auto p : phases_) {
    if (p % modulus_ != 0) return false;
  }
  return true;
}

bool LinearCharacter::is_real() const noexcept {
  for (auto p : phases_) {
    if ((2ull * p) % modulus_ != 0) return false;
  }
  return true;
}

SubgroupPtr commutator_subgroup(const Subgroup& subgroup) {
  const FiniteGroup& g = *subgroup.parent();
  std::vector<Element> seeds;
  for (Element a : subgroup.members()) {
    for (Element b : subgroup.members()) {
      seeds.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    }
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  return subgroup_closure(subgroup.parent(), seeds);
}

std::vector<LinearCharacter> linear_characters(const SubgroupPtr& subgroup) {
  const FiniteGroup& g = *subgroup->parent();
  const auto derived = commutator_subgroup(*subgroup);

  // Label each member of U by its coset of [U,U]; labels follow the first
  // (smallest) member of each coset, so the identity coset is label 0.
  const std::size_t n = g.order();
  constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> label(n, kNone);
  std::vector<Element> reps;
  for (Element u : subgroup->members()) {
    if (label[u] != kNone) continue;
    const auto q = static_cast<std::uint32_t>(reps.size());
    reps.push_back(u);
    for (Element d : derived->members()) label[g.mul(u, d)] = q;
  }
  const auto m = static_cast<std::uint32_t>(reps.size());
  auto qmul = [&](std::uint32_t a, std::uint32_t b) { return label[g.mul(reps[a], reps[b])]; };

  // Tower H_0 = {1} ⊂ H_1 ⊂ … ⊂ Q. Characters are phase vectors over Q
  // (meaningful on the current H only), phases mod m.
  std::vector<bool> in_h(m, false);
  std::vector<std::uint32_t> h_elems{0};
  in_h[0] = true;
  std::vector<std::vector<std::uint32_t>> chars{std::vector<std::uint32_t>(m, 0)};

  while (h_elems.size() < m) {
    std::uint32_t q = 0;
    while (in_h[q]) ++q;
    // Smallest k with q^k ∈ H, and the powers q^0..q^(k-1).
    std::vector<std::uint32_t> powers{0};
    std::uint32_t power = q;
    while (!in_h[power]) {
      powers.push_back(power);
      power = qmul(power, q);
    }
    const auto k = static_cast<std::uint32_t>(powers.size());
    const std::uint32_t qk = power;

    std::vector<std::uint32_t> new_elems;
    for (std::uint32_t j = 0; j < k; ++j) {
      for (auto h : h_elems) new_elems.push_back(qmul(powers[j], h));
    }

    std::vector<std::vector<std::uint32_t>> extended;
    for (const auto& chi : chars) {
      const std::uint32_t a = chi[qk];
      std::uint32_t b0 = 0;
      while (b0 < m && (static_cast<std::uint64_t>(k) * b0) % m != a) ++b0;
      if (b0 == m) throw Error(ErrorKind::ToleranceViolation, "character does not extend");
      for (std::uint32_t s = 0; s < k; ++s) {
        const std::uint32_t b = (b0 + s * (m / k)) % m;
        std::vector<std::uint32_t> next(m, 0);
        for (std::uint32_t j = 0; j < k; ++j) {
          for (auto h : h_elems) next[qmul(powers[j], h)] = (j * b + chi[h]) % m;
        }
        extended.push_back(std::move(next));
      }
    }
    chars = std::move(extended);
    for (auto e : new_elems) in_h[e] = true;
    h_elems = std::move(new_elems);
  }

  std::vector<LinearCharacter> out;
  out.reserve(chars.size());
  for (const auto& chi : chars) {
    std::vector<std::uint32_t> phases;
    phases.reserve(subgroup->order());
    for (Element u : subgroup->members()) phases.push_back(chi[label[u]]);
    out.emplace_back(subgroup, m, std::move(phases));
  }
  return out;
}

}  // namespace plancherel
