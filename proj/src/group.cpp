#include "plancherel/group.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "plancherel/errors.hpp"

namespace plancherel {

GroupPtr FiniteGroup::from_table(std::string label, std::size_t order, std::vector<Element> mul,
                                 std::vector<Element> generators) {
  if (order == 0 || mul.size() != order * order) {
    throw Error(ErrorKind::InvalidConfig, "multiplication table has wrong shape");
  }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = order;
  g->mul_ = std::move(mul);
  g->generators_ = std::move(generators);
  g->label_ = std::move(label);

  g->inv_.assign(order, 0);
  for (Element a = 0; a < order; ++a) {
    const auto r = g->row(a);
    const auto it = std::find(r.begin(), r.end(), Element{0});
    if (it == r.end()) throw Error(ErrorKind::InvalidConfig, "element without inverse");
    g->inv_[a] = static_cast<Element>(it - r.begin());
  }

  // Orbits under conjugation, then canonical ordering.
  std::vector<std::int64_t> seen(order, -1);
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < order; ++x) {
    if (seen[x] >= 0) continue;
    std::vector<Element> cls;
    for (Element h = 0; h < order; ++h) {
      const Element y = g->conjugate(h, x);
      if (seen[y] < 0) {
        seen[y] = static_cast<std::int64_t>(classes.size());
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  g->class_of_.assign(order, 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (Element x : classes[c]) g->class_of_[x] = c;
  }
  g->classes_ = std::move(classes);
  return g;
}

std::size_t FiniteGroup::element_order(Element x) const noexcept {
  std::size_t k = 1;
  for (Element y = x; y != identity(); y = mul(y, x)) ++k;
  return k;
}

bool check_group_axioms(const FiniteGroup& group) {
  const std::size_t n = group.order();
  for (Element a = 0; a < n; ++a) {
    if (group.mul(0, a) != a || group.mul(a, 0) != a) return false;
    if (group.mul(a, group.inv(a)) != 0 || group.mul(group.inv(a), a) != 0) return false;
    for (Element b = 0; b < n; ++b) {
      const Element ab = group.mul(a, b);
      if (ab >= n) return false;
      for (Element c = 0; c < n; ++c) {
        if (group.mul(ab, c) != group.mul(a, group.mul(b, c))) return false;
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element g = 0; g < n; ++g) {
      if (group.class_of(group.conjugate(g, x)) != group.class_of(x)) return false;
    }
  }
  return true;
}

namespace {

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

}  // namespace

GroupPtr build_from_permutations(std::size_t degree, std::span<const Permutation> generators,
                                 std::size_t order_cap, std::string label) {
  if (order_cap == 0) throw Error(ErrorKind::InvalidConfig, "order_cap must be at least 1");
  for (const auto& p : generators) {
    if (p.size() != degree) {
      throw Error(ErrorKind::InvalidPermutation, "generator has length " + std::to_string(p.size()) +
                                                     ", degree is " + std::to_string(degree));
    }
    std::vector<bool> hit(degree, false);
    for (auto v : p) {
      if (v >= degree || hit[v]) throw Error(ErrorKind::InvalidPermutation, "generator is not a bijection");
      hit[v] = true;
    }
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Permutation> found{id};
  std::deque<Permutation> frontier{id};
  while (!frontier.empty()) {
    Permutation p = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : generators) {
      Permutation q = compose(p, s);
      if (found.insert(q).second) {
        if (found.size() > order_cap) {
          throw Error(ErrorKind::ClosureExceedsCap,
                      "generated group exceeds order cap " + std::to_string(order_cap));
        }
        frontier.push_back(std::move(q));
      }
    }
  }

  // std::set iterates lexicographically; the identity is the least tuple.
  const std::vector<Permutation> elems(found.begin(), found.end());
  std::map<Permutation, Element> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<Element>(i));

  const std::size_t n = elems.size();
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = index.at(compose(elems[a], elems[b]));
  }
  std::vector<Element> gens;
  for (const auto& s : generators) gens.push_back(index.at(s));
  if (label.empty()) label = "perm:" + std::to_string(degree);
  return FiniteGroup::from_table(std::move(label), n, std::move(mul), std::move(gens));
}

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > kMaxGroupOrder) {
    throw Error(ErrorKind::UnsupportedParameter,
                "product order " + std::to_string(n) + " exceeds " + std::to_string(kMaxGroupOrder));
  }
  std::vector<Element> mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element pa = a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      const Element pb = b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      mul[x * n + y] = static_cast<Element>(pa * nb + pb);
    }
  }
  std::vector<Element> gens;
  for (Element g : a.generators()) gens.push_back(static_cast<Element>(g * nb));
  for (Element g : b.generators()) gens.push_back(g);
  return FiniteGroup::from_table("product:" + a.label() + "*" + b.label(), n, std::move(mul),
                                 std::move(gens));
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const std::size_t n = parent_->order();
  slot_.assign(n, -1);
  for (std::size_t i = 0; i < members_.size(); ++i) slot_[members_[i]] = static_cast<std::int32_t>(i);

  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  coset_of_.assign(n, kUnassigned);
  for (Element g = 0; g < n; ++g) {
    if (coset_of_[g] != kUnassigned) continue;
    const std::size_t c = coset_reps_.size();
    coset_reps_.push_back(g);  // ascending scan: g is the least element of U·g
    for (Element u : members_) coset_of_[parent_->mul(u, g)] = c;
  }
}

SubgroupPtr subgroup_closure(const GroupPtr& group, std::span<const Element> seeds) {
  const std::size_t n = group->order();
  std::vector<bool> in(n, false);
  std::vector<Element> members{0};
  in[0] = true;
  std::vector<Element> gens;
  for (Element s : seeds) {
    if (s >= n) throw Error(ErrorKind::IndexOutOfRange, "seed element " + std::to_string(s));
    gens.push_back(s);
  }
  // Multiply every member by every generator until stable; in a finite group
  // this is closed under inverses too.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : gens) {
      const Element y = group->mul(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  return std::make_shared<const Subgroup>(group, std::move(members));
}

std::vector<SubgroupPtr> enumerate_subgroups(const GroupPtr& group) {
  const std::size_t n = group->order();
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorKind::OrderTooLarge, "subgroup enumeration is capped at order " +
                                              std::to_string(kMaxEnumerationOrder) + ", got " +
                                              std::to_string(n));
  }
  using Mask = std::uint64_t;
  auto mask_of = [](const Subgroup& s) {
    Mask m = 0;
    for (Element x : s.members()) m |= Mask{1} << x;
    return m;
  };

  // Every subgroup is reached by repeatedly joining a cyclic subgroup onto an
  // already-found one.
  std::unordered_set<Mask> seen;
  std::vector<SubgroupPtr> found;
  auto trivial = subgroup_closure(group, {});
  seen.insert(mask_of(*trivial));
  found.push_back(trivial);
  for (std::size_t i = 0; i < found.size(); ++i) {
    const SubgroupPtr h = found[i];
    for (Element g = 1; g < n; ++g) {
      if (h->contains(g)) continue;
      std::vector<Element> seeds = h->members();
      seeds.push_back(g);
      auto joined = subgroup_closure(group, seeds);
      if (seen.insert(mask_of(*joined)).second) found.push_back(std::move(joined));
    }
  }
  std::sort(found.begin(), found.end(), [](const SubgroupPtr& a, const SubgroupPtr& b) {
    if (a->order() != b->order()) return a->order() < b->order();
    return a->members() < b->members();
  });
  return found;
}

}  // namespace plancherel
