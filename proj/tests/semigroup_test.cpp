#include "hopfint/semigroup.hpp"

#include <gtest/gtest.h>

using namespace hopfint;

TEST(Semigroup, Associativity) {
  EXPECT_TRUE(is_associative(cyclic_group(4)));
  EXPECT_TRUE(is_associative(rectangular_band(2, 3)));
  EXPECT_TRUE(is_associative(multiplicative_monoid(6)));
  FiniteSemigroup bad = FiniteSemigroup::from_table({{0, 1}, {0, 0}});
  auto cex = associativity_counterexample(bad);
  ASSERT_TRUE(cex.has_value());
  // (1*1)*1 = 0*1 = 1 but 1*(1*1) = 1*0 = 0
  EXPECT_THROW(require_associative(bad), error);
  EXPECT_THROW(semigroup_ring(Ring::rationals(), bad), error);
}

TEST(Semigroup, IdentityAndGroup) {
  EXPECT_EQ(identity_of(cyclic_group(5)), std::optional<size_t>(0));
  EXPECT_EQ(identity_of(multiplicative_monoid(4)), std::optional<size_t>(1));
  EXPECT_EQ(identity_of(right_zero_semigroup(3)), std::nullopt);
  EXPECT_TRUE(is_group(cyclic_group(6)));
  EXPECT_TRUE(is_group(symmetric_group(3)));
  EXPECT_FALSE(is_group(multiplicative_monoid(4)));
  EXPECT_FALSE(is_group(right_zero_semigroup(2)));
}

TEST(Semigroup, Cancellativity) {
  EXPECT_TRUE(is_left_cancellative(cyclic_group(4)));
  EXPECT_TRUE(is_right_cancellative(cyclic_group(4)));
  // Right-zero: x y = y. Left cancellative, not right cancellative.
  EXPECT_TRUE(is_left_cancellative(right_zero_semigroup(2)));
  EXPECT_FALSE(is_right_cancellative(right_zero_semigroup(2)));
  // Left-zero: x y = x. Mirror image.
  EXPECT_FALSE(is_left_cancellative(left_zero_semigroup(2)));
  EXPECT_TRUE(is_right_cancellative(left_zero_semigroup(2)));
}

TEST(Semigroup, IdealGroupsFrozen) {
  // A group is its own unique ideal group.
  auto ig = ideal_groups(cyclic_group(3));
  ASSERT_EQ(ig.size(), 1u);
  EXPECT_EQ(ig[0], (std::vector<size_t>{0, 1, 2}));

  // Right-zero semigroup: every singleton {x} is a left-ideal group.
  auto rz = ideal_groups(right_zero_semigroup(3));
  ASSERT_EQ(rz.size(), 3u);
  for (size_t x = 0; x < 3; ++x) EXPECT_EQ(rz[x], (std::vector<size_t>{x}));

  // Left-zero semigroup of order >= 2: no ideal groups at all.
  EXPECT_TRUE(ideal_groups(left_zero_semigroup(2)).empty());
  EXPECT_TRUE(ideal_groups(left_zero_semigroup(3)).empty());

  // (Z/3, *): only {0}.
  auto m3 = ideal_groups(multiplicative_monoid(3));
  ASSERT_EQ(m3.size(), 1u);
  EXPECT_EQ(m3[0], (std::vector<size_t>{0}));

  // (Z/4, *): likewise only {0} ({0,2} is an ideal but has no identity).
  auto m4 = ideal_groups(multiplicative_monoid(4));
  ASSERT_EQ(m4.size(), 1u);
  EXPECT_EQ(m4[0], (std::vector<size_t>{0}));

  // Adjoined zero swallows the group: only {0} remains an ideal group.
  auto az = ideal_groups(adjoin_zero(cyclic_group(2)));
  ASSERT_EQ(az.size(), 1u);
  EXPECT_EQ(az[0], (std::vector<size_t>{2}));
}

TEST(Semigroup, IdealGroupsDisjoint) {
  // Distinct ideal groups never intersect (each equals S^1 x for any of
  // its members).
  for (auto S : {rectangular_band(1, 4), rectangular_band(2, 2), multiplicative_monoid(6)}) {
    auto ig = ideal_groups(S);
    for (size_t a = 0; a < ig.size(); ++a)
      for (size_t b = a + 1; b < ig.size(); ++b) {
        std::vector<size_t> inter;
        std::set_intersection(ig[a].begin(), ig[a].end(), ig[b].begin(), ig[b].end(),
                              std::back_inserter(inter));
        EXPECT_TRUE(inter.empty());
      }
  }
}

TEST(Semigroup, TwoSidedIdealGroups) {
  // In (Z/3, *) the ideal group {0} is two-sided.
  auto m3 = ideal_groups(multiplicative_monoid(3));
  EXPECT_TRUE(is_right_ideal(multiplicative_monoid(3), m3[0]));
  // In the right-zero semigroup the singleton left ideals are not right
  // ideals ({x} * S = S).
  auto rz = ideal_groups(right_zero_semigroup(2));
  EXPECT_FALSE(is_right_ideal(right_zero_semigroup(2), rz[0]));
}

TEST(Semigroup, GroupCriterion) {
  GroupCriterionResult g = finite_group_criterion(cyclic_group(4));
  EXPECT_TRUE(g.criterion_applies);
  EXPECT_TRUE(g.actually_group);

  GroupCriterionResult rz = finite_group_criterion(right_zero_semigroup(2));
  EXPECT_FALSE(rz.right_cancellative);
  EXPECT_TRUE(rz.has_ideal_group);
  EXPECT_FALSE(rz.criterion_applies);

  GroupCriterionResult lz = finite_group_criterion(left_zero_semigroup(2));
  EXPECT_TRUE(lz.right_cancellative);
  EXPECT_FALSE(lz.has_ideal_group);
  EXPECT_FALSE(lz.criterion_applies);
}

TEST(Semigroup, EnumerationCounts) {
  // Labeled associative tables: 1, 8, 113 for orders 1..3.
  for (auto [n, expected] : std::vector<std::pair<size_t, size_t>>{{1, 1}, {2, 8}, {3, 113}}) {
    size_t count = 0;
    enumerate_semigroups(n, [&](const FiniteSemigroup& S) {
      ++count;
      ASSERT_TRUE(is_associative(S));
    });
    EXPECT_EQ(count, expected) << "order " << n;
  }
}

TEST(Semigroup, CriterionHasNoSmallCounterexamples) {
  // Right-cancellative + ideal group => group, across all semigroups of
  // order <= 3 (order 4 is covered by the acceptance suite).
  for (size_t n = 1; n <= 3; ++n) {
    enumerate_semigroups(n, [&](const FiniteSemigroup& S) {
      GroupCriterionResult r = finite_group_criterion(S);
      if (r.criterion_applies) EXPECT_TRUE(r.actually_group);
    });
  }
}

TEST(Semigroup, SymmetricGroupStructure) {
  FiniteSemigroup S3 = symmetric_group(3);
  EXPECT_EQ(S3.order(), 6u);
  EXPECT_TRUE(is_group(S3));
  EXPECT_EQ(S3.labels[0], "id");
  auto A3 = alternating_subgroup_indices(3);
  EXPECT_EQ(A3, (std::vector<size_t>{0, 3, 4}));
  // A3 is closed: it is the cyclic group generated by a 3-cycle.
  for (size_t a : A3)
    for (size_t b : A3)
      EXPECT_TRUE(std::find(A3.begin(), A3.end(), S3.mul(a, b)) != A3.end());
  // Composition convention: (f g)(x) = f(g(x)).
  // p1 = [0,2,1] ~ (23), p2 = [1,0,2] ~ (12); p1 p2 sends 0->1->2? check closure only.
  EXPECT_NE(S3.mul(1, 2), S3.mul(2, 1));  // non-abelian
}

TEST(Semigroup, AdjoinIdentityAndZero) {
  FiniteSemigroup S = right_zero_semigroup(2);
  FiniteSemigroup S1 = adjoin_identity(S);
  EXPECT_EQ(identity_of(S1), std::optional<size_t>(2));
  EXPECT_TRUE(is_associative(S1));
  FiniteSemigroup S0 = adjoin_zero(cyclic_group(2));
  EXPECT_TRUE(is_associative(S0));
  EXPECT_EQ(S0.mul(2, 0), 2u);
  EXPECT_EQ(S0.mul(1, 2), 2u);
}

TEST(Semigroup, IntegralModuleFrozen) {
  // Right-zero semigroup over Q: each basis vector is an integral.
  Submodule rz = semigroup_integral_module(Ring::rationals(), right_zero_semigroup(3));
  EXPECT_EQ(rz.rank(), 3u);

  // Cyclic group over Z: the group sum.
  Ring Z = Ring::integers();
  Submodule cg = semigroup_integral_module(Z, cyclic_group(2));
  Vec sum{Z.one(), Z.one()};
  EXPECT_EQ(cg, Submodule::span(Z, 2, {sum}));

  // (Z/3, *) over Z/2: the absorbing element x0 spans.
  Ring Z2 = Ring::integers_mod(2);
  Submodule m3 = semigroup_integral_module(Z2, multiplicative_monoid(3));
  Vec x0 = zero_vec(Z2, 3);
  x0[0] = Z2.one();
  EXPECT_EQ(m3, Submodule::span(Z2, 3, {x0}));

  // Left-zero semigroup: zero module.
  EXPECT_TRUE(semigroup_integral_module(Ring::rationals(), left_zero_semigroup(2)).is_zero());
}

TEST(Semigroup, SemigroupRingStructure) {
  Ring Q = Ring::rationals();
  FiniteAlgebra A = semigroup_ring(Q, multiplicative_monoid(3));
  EXPECT_TRUE(A.unit.has_value());
  EXPECT_TRUE(verify_algebra(A).all_ok());
  // x2 * x2 = x1 (2*2 = 4 = 1 mod 3)
  EXPECT_EQ(A.multiply(A.basis_vec(2), A.basis_vec(2)), A.basis_vec(1));
  FiniteAlgebra B = semigroup_ring(Q, right_zero_semigroup(2));
  EXPECT_FALSE(B.unit.has_value());
  EXPECT_TRUE(verify_algebra(B).all_ok());
}
