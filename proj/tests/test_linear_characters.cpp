#include <gtest/gtest.h>

#include <set>

#include "plancherel/characters.hpp"
#include "plancherel/group_spec.hpp"

using namespace plancherel;

namespace {

SubgroupPtr whole(const GroupPtr& g) {
  std::vector<Element> all(g->order());
  for (Element x = 0; x < g->order(); ++x) all[x] = x;
  return std::make_shared<const Subgroup>(g, all);
}

void expect_homomorphisms(const SubgroupPtr& u, const std::vector<LinearCharacter>& chars) {
  const auto& g = *u->parent();
  for (const auto& psi : chars) {
    for (Element a : u->members()) {
      EXPECT_NEAR(std::abs(psi.at(a)), 1.0, 1e-14);
      for (Element b : u->members()) {
        EXPECT_NEAR(std::abs(psi.at(g.mul(a, b)) - psi.at(a) * psi.at(b)), 0.0, 1e-12);
      }
    }
  }
}

// Distinct value vectors, compared after rounding.
std::size_t distinct(const std::vector<LinearCharacter>& chars) {
  std::set<std::vector<std::pair<long, long>>> s;
  for (const auto& psi : chars) {
    std::vector<std::pair<long, long>> key;
    for (cplx v : psi.values()) key.emplace_back(std::lround(v.real() * 1e8), std::lround(v.imag() * 1e8));
    s.insert(key);
  }
  return s.size();
}

}  // namespace

TEST(LinearCharacters, CyclicThree) {
  const auto g = make_named_group("cyclic:3");
  const auto u = whole(g);
  const auto chars = linear_characters(u);
  ASSERT_EQ(chars.size(), 3u);
  EXPECT_TRUE(chars[0].is_trivial());
  EXPECT_FALSE(chars[1].is_real());
  expect_homomorphisms(u, chars);
  EXPECT_EQ(distinct(chars), 3u);
}

TEST(LinearCharacters, S3HasTrivialAndSign) {
  const auto g = make_named_group("symmetric:3");
  const auto u = whole(g);
  const auto chars = linear_characters(u);
  ASSERT_EQ(chars.size(), 2u);
  EXPECT_TRUE(chars[0].is_trivial());
  EXPECT_TRUE(chars[1].is_real());
  EXPECT_NEAR(std::abs(chars[1].at(2) + 1.0), 0.0, 1e-15);  // (0 1) ↦ −1
  EXPECT_NEAR(std::abs(chars[1].at(3) - 1.0), 0.0, 1e-15);
  expect_homomorphisms(u, chars);
  EXPECT_EQ(commutator_subgroup(*u)->order(), 3u);
}

TEST(LinearCharacters, Q8FactorsThroughCenter) {
  const auto g = make_named_group("quaternion");
  const auto u = whole(g);
  const auto chars = linear_characters(u);
  ASSERT_EQ(chars.size(), 4u);
  for (const auto& psi : chars) EXPECT_NEAR(std::abs(psi.at(1) - 1.0), 0.0, 1e-15);
  expect_homomorphisms(u, chars);
  EXPECT_EQ(distinct(chars), 4u);
  EXPECT_EQ(commutator_subgroup(*u)->members(), (std::vector<Element>{0, 1}));
}

TEST(LinearCharacters, AllSubgroupsOfSmallGroups) {
  for (const char* spec : {"symmetric:4", "dihedral:6", "heisenberg:3", "product:cyclic:2*cyclic:4"}) {
    const auto g = make_named_group(spec);
    for (const auto& u : enumerate_subgroups(g)) {
      const auto chars = linear_characters(u);
      const auto comm = commutator_subgroup(*u);
      EXPECT_EQ(chars.size() * comm->order(), u->order()) << spec;
      EXPECT_TRUE(chars.front().is_trivial());
      EXPECT_EQ(distinct(chars), chars.size()) << spec;
      expect_homomorphisms(u, chars);
      for (const auto& psi : chars) {
        for (Element c : comm->members()) EXPECT_NEAR(std::abs(psi.at(c) - 1.0), 0.0, 1e-12);
      }
    }
  }
}

TEST(LinearCharacters, ExactQuarterTurns) {
  const auto g = make_named_group("cyclic:4");
  const auto chars = linear_characters(whole(g));
  for (const auto& psi : chars) {
    for (cplx v : psi.values()) {
      EXPECT_TRUE(v == cplx(1, 0) || v == cplx(-1, 0) || v == cplx(0, 1) || v == cplx(0, -1)) << v;
    }
  }
}
