#include <gtest/gtest.h>

#include <array>
#include <complex>

#include "plancherel/errors.hpp"
#include "plancherel/group_spec.hpp"

using namespace plancherel;

namespace {

std::size_t parse_error_position(const std::string& spec) {
  try {
    make_named_group(spec);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no ParseError for '" << spec << "'";
  return static_cast<std::size_t>(-1);
}

ErrorKind error_kind(const std::string& spec) {
  try {
    make_named_group(spec);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for '" << spec << "'";
  return ErrorKind::InvalidConfig;
}

bool is_abelian(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(GroupSpec, Families) {
  EXPECT_EQ(make_named_group("cyclic:1")->order(), 1u);
  const auto s3 = make_named_group("symmetric:3");
  EXPECT_EQ(s3->order(), 6u);
  EXPECT_EQ(s3->num_classes(), 3u);

  const auto d4 = make_named_group("dihedral:4");
  EXPECT_EQ(d4->order(), 8u);
  EXPECT_EQ(d4->num_classes(), 5u);
  EXPECT_FALSE(is_abelian(*d4));
  // s r s = r⁻¹ with r = 1, s = 4
  EXPECT_EQ(d4->mul(d4->mul(4, 1), 4), d4->inv(1));

  const auto klein = make_named_group("product:cyclic:2*cyclic:2");
  EXPECT_EQ(klein->order(), 4u);
  EXPECT_EQ(klein->num_classes(), 4u);
  for (Element x = 0; x < 4; ++x) EXPECT_EQ(klein->mul(x, x), 0u);

  const auto h3 = make_named_group("heisenberg:3");
  EXPECT_EQ(h3->order(), 27u);
  EXPECT_EQ(h3->num_classes(), 11u);  // p² + p − 1
}

TEST(GroupSpec, PermSpecGivesS3) {
  const auto a = make_named_group("perm:3:(0 1);(0 1 2)");
  const auto b = make_named_group("symmetric:3");
  ASSERT_EQ(a->order(), 6u);
  for (Element x = 0; x < 6; ++x) {
    for (Element y = 0; y < 6; ++y) EXPECT_EQ(a->mul(x, y), b->mul(x, y));
  }
}

TEST(GroupSpec, QuaternionMatchesPauliMatrixModel) {
  // Oracle: 1, i, j, k as 2×2 complex matrices, with the documented index
  // order 1, −1, i, −i, j, −j, k, −k.
  using M = std::array<std::complex<double>, 4>;
  const std::complex<double> I{0, 1};
  const M one{1, 0, 0, 1}, qi{I, 0, 0, -I}, qj{0, 1, -1, 0}, qk{0, I, I, 0};
  std::vector<M> elems;
  for (const M& m : {one, qi, qj, qk}) {
    elems.push_back(m);
    elems.push_back({-m[0], -m[1], -m[2], -m[3]});
  }
  auto times = [](const M& a, const M& b) {
    return M{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
             a[2] * b[1] + a[3] * b[3]};
  };
  auto find = [&](const M& m) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (std::abs(elems[i][0] - m[0]) + std::abs(elems[i][1] - m[1]) + std::abs(elems[i][2] - m[2]) +
              std::abs(elems[i][3] - m[3]) <
          1e-12) {
        return static_cast<Element>(i);
      }
    }
    return static_cast<Element>(99);
  };
  const auto q = make_named_group("quaternion");
  ASSERT_EQ(q->order(), 8u);
  for (Element x = 0; x < 8; ++x) {
    for (Element y = 0; y < 8; ++y) EXPECT_EQ(q->mul(x, y), find(times(elems[x], elems[y])));
  }
  EXPECT_EQ(q->num_classes(), 5u);
  EXPECT_EQ(q->classes()[1], (std::vector<Element>{1}));
  EXPECT_EQ(q->classes()[2], (std::vector<Element>{2, 3}));
  EXPECT_EQ(q->classes()[3], (std::vector<Element>{4, 5}));
  EXPECT_EQ(q->classes()[4], (std::vector<Element>{6, 7}));
}

TEST(GroupSpec, NestedProducts) {
  const auto g = make_named_group("product:product:cyclic:2*cyclic:2*cyclic:3");
  EXPECT_EQ(g->order(), 12u);
  EXPECT_TRUE(is_abelian(*g));
  const auto h = make_named_group("product:perm:3:(0 1);(0 1 2)*cyclic:2");
  EXPECT_EQ(h->order(), 12u);
  EXPECT_EQ(h->num_classes(), 6u);
}

TEST(GroupSpec, ParseErrorsCarryPosition) {
  EXPECT_EQ(parse_error_position(""), 0u);
  EXPECT_EQ(parse_error_position("cyclic:"), 7u);
  EXPECT_EQ(parse_error_position("cyclics:3"), 0u);
  EXPECT_EQ(parse_error_position("cyclic:3x"), 8u);
  EXPECT_EQ(parse_error_position("product:cyclic:2"), 16u);
  EXPECT_EQ(parse_error_position("perm:3:(0 1"), 11u);
  EXPECT_EQ(parse_error_position("perm:3:(0 3)"), 10u);
  EXPECT_EQ(parse_error_position("perm:3:"), 7u);
  try {
    make_named_group("dihedral:x");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_EQ(e.expected(), "an integer");
  }
}

TEST(GroupSpec, UnsupportedParameters) {
  EXPECT_EQ(error_kind("heisenberg:4"), ErrorKind::UnsupportedParameter);
  EXPECT_EQ(error_kind("heisenberg:1"), ErrorKind::UnsupportedParameter);
  EXPECT_EQ(error_kind("heisenberg:11"), ErrorKind::UnsupportedParameter);  // 1331 > cap
  EXPECT_EQ(error_kind("cyclic:0"), ErrorKind::UnsupportedParameter);
  EXPECT_EQ(error_kind("product:symmetric:5*cyclic:9"), ErrorKind::UnsupportedParameter);
  EXPECT_EQ(error_kind("perm:3:(0 1 0)"), ErrorKind::InvalidPermutation);
}
