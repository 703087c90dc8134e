#include "hopfint/algebra.hpp"

#include <gtest/gtest.h>

#include "hopfint/semigroup.hpp"

using namespace hopfint;

namespace {

bool check_ok(const VerifyReport& rep, const std::string& name) {
  const CheckResult* c = rep.find(name);
  return c && c->ok;
}

}  // namespace

TEST(Algebra, GroupAlgebraVerifies) {
  FiniteAlgebra H = group_algebra(Ring::rationals(), cyclic_group(2));
  VerifyReport rep = verify_hopf(H);
  EXPECT_TRUE(rep.all_ok()) << [&] {
    std::string s;
    for (auto& c : rep.checks)
      if (!c.ok) s += c.name + ": " + c.detail + "; ";
    return s;
  }();
  EXPECT_TRUE(is_cocommutative(H));
  EXPECT_TRUE(is_commutative(H));
  EXPECT_TRUE(antipode_bijective(H));
}

TEST(Algebra, GroupAlgebraOverZ) {
  FiniteAlgebra H = group_algebra(Ring::integers(), cyclic_group(3));
  EXPECT_TRUE(verify_hopf(H).all_ok());
  // g * g^2 = e
  Vec prod = H.multiply(H.basis_vec(1), H.basis_vec(2));
  EXPECT_EQ(prod, H.basis_vec(0));
  EXPECT_EQ(H.eps_of(H.basis_vec(1)), Ring::integers().one());
  // S(g) = g^2
  EXPECT_EQ(H.apply_antipode(H.basis_vec(1)), H.basis_vec(2));
}

TEST(Algebra, NoncommutativeGroupAlgebra) {
  FiniteAlgebra H = group_algebra(Ring::rationals(), symmetric_group(3));
  EXPECT_EQ(H.dim, 6u);
  EXPECT_TRUE(verify_hopf(H).all_ok());
  EXPECT_FALSE(is_commutative(H));
  EXPECT_TRUE(is_cocommutative(H));
  EXPECT_TRUE(antipode_bijective(H));
}

TEST(Algebra, TamperedProductFailsAssociativity) {
  FiniteAlgebra H = group_algebra(Ring::rationals(), cyclic_group(2));
  H.mul[1][1] = H.basis_vec(1);  // g*g = g while g*e = g: breaks associativity? no...
  // g*g=g makes the table a left-zero-like row; force a genuine failure:
  H.mul[0][1] = H.basis_vec(0);
  VerifyReport rep = verify_algebra(H);
  EXPECT_FALSE(rep.all_ok());
}

TEST(Algebra, TamperedAntipodeFails) {
  FiniteAlgebra H = group_algebra(Ring::rationals(), cyclic_group(3));
  Matrix S = Matrix::identity(H.ring, H.dim);  // S = id is wrong for C3
  H.antipode = S;
  VerifyReport rep = verify_hopf(H);
  EXPECT_FALSE(check_ok(rep, "antipode_left"));
  EXPECT_FALSE(check_ok(rep, "antipode_right"));
}

TEST(Algebra, SemigroupBialgebraWithoutUnit) {
  FiniteAlgebra A = semigroup_bialgebra(Ring::rationals(), right_zero_semigroup(2));
  EXPECT_FALSE(A.unit.has_value());
  VerifyReport rep = verify_bialgebra(A);
  EXPECT_TRUE(rep.all_ok());
  EXPECT_EQ(rep.find("unit_law"), nullptr);  // skipped, no unit to check
  EXPECT_THROW(A.require_unit("test"), error);
}

TEST(Algebra, TensorHelpers) {
  FiniteAlgebra H = group_algebra(Ring::rationals(), cyclic_group(2));
  Vec g = H.basis_vec(1);
  Matrix T = H.delta_of(g);  // g (x) g
  EXPECT_EQ(T.at(1, 1), H.ring.one());
  EXPECT_EQ(H.mu_of_tensor(T), H.basis_vec(0));  // g*g = e
  // (g (x) 1) * (g (x) g) = (g^2) (x) g = e (x) g
  Matrix U = tensor_left_mul_first(H, g, T);
  Matrix expect(H.ring, 2, 2);
  expect.at(0, 1) = H.ring.one();
  EXPECT_EQ(U, expect);
  // Full tensor product agrees on this case.
  Matrix gg(H.ring, 2, 2);
  gg.at(1, 0) = H.ring.one();  // g (x) e
  EXPECT_EQ(tensor_multiply(H, gg, T), expect);
  // Antipode legs: S = id on C2, so the tensor is unchanged.
  EXPECT_EQ(tensor_antipode_first(H, T), T);
}

TEST(Algebra, ProductHopfOverProductRing) {
  FiniteAlgebra H1 = group_algebra(Ring::rationals(), cyclic_group(2));
  FiniteAlgebra H2 = group_algebra(Ring::prime_field(3), cyclic_group(3));
  FiniteAlgebra P = product_hopf(H1, H2);
  EXPECT_EQ(P.dim, 5u);
  EXPECT_EQ(P.ring, Ring::product({Ring::rationals(), Ring::prime_field(3)}));
  VerifyReport rep = verify_hopf(P);
  EXPECT_TRUE(rep.all_ok()) << [&] {
    std::string s;
    for (auto& c : rep.checks)
      if (!c.ok) s += c.name + ": " + c.detail + "; ";
    return s;
  }();
  EXPECT_TRUE(is_cocommutative(P));
  // Supports are the orthogonal idempotents of the product ring.
  EXPECT_EQ(P.support[0].to_string(), "(1,0)");
  EXPECT_EQ(P.support[2].to_string(), "(0,1)");
  // Cross-block products vanish.
  EXPECT_TRUE(vec_is_zero(P.multiply(P.basis_vec(0), P.basis_vec(3))));
  // The unit is supported on both blocks; eps(1) = 1 exactly.
  EXPECT_TRUE(P.eps_of(*P.unit).is_one());
  EXPECT_TRUE(antipode_bijective(P));
}

TEST(Algebra, ProductHopfLabelCollision) {
  FiniteAlgebra H1 = group_algebra(Ring::rationals(), cyclic_group(2));
  FiniteAlgebra H2 = group_algebra(Ring::rationals(), cyclic_group(2));
  FiniteAlgebra P = product_hopf(H1, H2);
  EXPECT_EQ(P.labels[0], "e");
  EXPECT_EQ(P.labels[2], "e'");
}

TEST(Algebra, SupportConsistencyCheck) {
  // An element whose coordinate escapes its support ideal must be flagged.
  FiniteAlgebra H1 = group_algebra(Ring::rationals(), cyclic_group(2));
  FiniteAlgebra H2 = group_algebra(Ring::rationals(), cyclic_group(2));
  FiniteAlgebra P = product_hopf(H1, H2);
  Vec bad = zero_vec(P.ring, P.dim);
  bad[0] = P.ring.one();  // (1,1) at a coordinate with support (1,0)
  EXPECT_FALSE(P.element_in_supports(bad));
  EXPECT_TRUE(P.element_in_supports(P.canonicalize_element(bad)));
  // Tampering a structure constant across blocks breaks support consistency.
  P.mul[0][0][2] = P.ring.one();
  EXPECT_FALSE(check_ok(verify_algebra(P), "support_consistent"));
}
