#include "hopfint/linalg.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace hopfint;

namespace {

Matrix make(const Ring& R, const std::vector<std::vector<long>>& rows, size_t cols) {
  Matrix M(R, rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols; ++j) M.at(i, j) = R.from_integer(rows[i][j]);
  return M;
}

Vec makev(const Ring& R, const std::vector<long>& v) {
  Vec out;
  for (long x : v) out.push_back(R.from_integer(x));
  return out;
}

// All vectors of a finite span: every coefficient combination of the
// generators. Ground truth for membership/equality over finite rings.
std::set<std::vector<std::string>> enumerate_span(const Ring& R, const std::vector<Vec>& gens,
                                                  size_t ambient) {
  std::set<std::vector<std::string>> out;
  std::vector<RingElement> elems = R.enumerate_elements();
  std::vector<size_t> idx(gens.size(), 0);
  while (true) {
    Vec v = zero_vec(R, ambient);
    for (size_t g = 0; g < gens.size(); ++g) v = vec_add(v, vec_scale(elems[idx[g]], gens[g]));
    std::vector<std::string> key;
    for (auto& x : v) key.push_back(x.to_string());
    out.insert(key);
    size_t g = 0;
    while (g < gens.size() && ++idx[g] == elems.size()) idx[g++] = 0;
    if (g == gens.size()) break;
    if (gens.empty()) break;
  }
  if (gens.empty()) {
    std::vector<std::string> key;
    for (size_t j = 0; j < ambient; ++j) key.push_back(R.zero().to_string());
    out.insert(key);
  }
  return out;
}

std::vector<std::string> key_of(const Vec& v) {
  std::vector<std::string> key;
  for (auto& x : v) key.push_back(x.to_string());
  return key;
}

}  // namespace

TEST(Linalg, RrefFrozen) {
  Ring Q = Ring::rationals();
  EchelonResult E = rref(make(Q, {{1, 2, 3}, {2, 4, 6}, {1, 1, 1}}, 3));
  ASSERT_EQ(E.mat.rows(), 2u);
  EXPECT_EQ(E.pivots, (std::vector<size_t>{0, 1}));
  EXPECT_EQ(E.mat, make(Q, {{1, 0, -1}, {0, 1, 2}}, 3));
}

TEST(Linalg, RrefIdempotent) {
  Ring F5 = Ring::prime_field(5);
  Matrix A = make(F5, {{2, 3, 1}, {4, 1, 0}, {1, 2, 4}}, 3);
  EchelonResult E = rref(A);
  EXPECT_EQ(rref(E.mat).mat, E.mat);
}

TEST(Linalg, HnfFrozen) {
  Ring Z = Ring::integers();
  EchelonResult E = hnf(make(Z, {{4, 6}, {6, 9}}, 2));
  EXPECT_EQ(E.mat, make(Z, {{2, 3}}, 2));

  EchelonResult E2 = hnf(make(Z, {{1, 7}, {0, 5}}, 2));
  EXPECT_EQ(E2.mat, make(Z, {{1, 2}, {0, 5}}, 2));
  EXPECT_EQ(hnf(make(Z, {{1, 2}, {0, 5}}, 2)).mat, E2.mat);  // canonical
}

TEST(Linalg, HnfSpanEquality) {
  Ring Z = Ring::integers();
  Submodule a = Submodule::span(Z, 2, {makev(Z, {2, 0}), makev(Z, {0, 3})});
  Submodule b = Submodule::span(Z, 2, {makev(Z, {2, 3}), makev(Z, {2, -3})});
  EXPECT_NE(a, b);  // (2,3)+(2,-3) = (4,0): b has index 2 in a at the first coordinate
  EXPECT_TRUE(a.contains(makev(Z, {2, 3})));
  EXPECT_FALSE(a.contains(makev(Z, {1, 0})));
  EXPECT_EQ(a.sum(b), a);
  Submodule c = Submodule::span(Z, 2, {makev(Z, {2, 3}), makev(Z, {0, 6}), makev(Z, {4, 0})});
  EXPECT_EQ(b, c);
}

TEST(Linalg, SnfFrozen) {
  Ring Z = Ring::integers();
  Matrix A = make(Z, {{2, 4}, {6, 8}}, 2);
  SnfResult S = snf(A);
  EXPECT_EQ(mat_mul(mat_mul(S.U, A), S.V), S.D);
  EXPECT_EQ(S.D, make(Z, {{2, 0}, {0, 4}}, 2));
}

namespace {

RingElement det(const Matrix& A) {  // cofactor expansion; test-only, small n
  const Ring& R = A.ring();
  size_t n = A.rows();
  if (n == 1) return A.at(0, 0);
  RingElement sum = R.zero();
  for (size_t j = 0; j < n; ++j) {
    Matrix minor(R, n - 1, n - 1);
    for (size_t r = 1; r < n; ++r)
      for (size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor.at(r - 1, cc++) = A.at(r, c);
    RingElement term = A.at(0, j) * det(minor);
    sum = (j % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

}  // namespace

TEST(Linalg, SnfRandomized) {
  Ring Z = Ring::integers();
  std::mt19937 gen(7);
  std::uniform_int_distribution<long> entry(-9, 9);
  for (int trial = 0; trial < 30; ++trial) {
    size_t m = 2 + trial % 3, n = 2 + (trial / 3) % 3;
    Matrix A(Z, m, n);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) A.at(i, j) = Z.from_integer(entry(gen));
    SnfResult S = snf(A);
    EXPECT_EQ(mat_mul(mat_mul(S.U, A), S.V), S.D);
    RingElement du = det(S.U), dv = det(S.V);
    EXPECT_TRUE(is_unit(du)) << "U not unimodular";
    EXPECT_TRUE(is_unit(dv)) << "V not unimodular";
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j)
        if (i != j) EXPECT_TRUE(S.D.at(i, j).is_zero());
    for (size_t t = 0; t + 1 < std::min(m, n); ++t) {
      const mpz_class &a = S.D.at(t, t).as_integer(), &b = S.D.at(t + 1, t + 1).as_integer();
      if (a != 0)
        EXPECT_TRUE(mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()))
            << a.get_str() + " | " + b.get_str();
      else
        EXPECT_EQ(b, 0);
      EXPECT_GE(a, 0);
    }
  }
}

TEST(Linalg, KernelField) {
  Ring Q = Ring::rationals();
  Matrix A = make(Q, {{1, 1, 1}}, 3);
  Submodule K = kernel(A);
  EXPECT_EQ(K.rank(), 2u);
  for (auto& g : K.generators()) EXPECT_TRUE(vec_is_zero(mat_vec(A, g)));
  EXPECT_TRUE(K.contains(makev(Q, {1, -1, 0})));
  EXPECT_FALSE(K.contains(makev(Q, {1, 1, 1})));
}

TEST(Linalg, KernelIntegersFrozen) {
  Ring Z = Ring::integers();
  Submodule K = kernel(make(Z, {{2, 4}}, 2));
  EXPECT_EQ(K.num_generators(), 1u);
  EXPECT_TRUE(K.contains(makev(Z, {2, -1})));
  EXPECT_TRUE(K.contains(makev(Z, {-2, 1})));
  EXPECT_FALSE(K.contains(makev(Z, {1, 0})));
  // The kernel is primitive: (2,-1) generates it, not (4,-2) alone.
  EXPECT_EQ(K, Submodule::span(Z, 2, {makev(Z, {2, -1})}));
}

TEST(Linalg, KernelModFrozen) {
  Ring Z4 = Ring::integers_mod(4);
  Submodule K = kernel(make(Z4, {{2}}, 1));
  EXPECT_TRUE(K.contains(makev(Z4, {2})));
  EXPECT_FALSE(K.contains(makev(Z4, {1})));
  EXPECT_EQ(K, Submodule::span(Z4, 1, {makev(Z4, {2})}));
}

TEST(Linalg, KernelOracleFinite) {
  // Kernel must consist of exactly the brute-force solutions.
  for (long m : {4L, 6L, 8L}) {
    Ring R = Ring::integers_mod(m);
    Matrix A = make(R, {{2, 3}, {0, m / 2}}, 2);
    Submodule K = kernel(A);
    auto elems = R.enumerate_elements();
    for (auto& x : elems)
      for (auto& y : elems) {
        Vec v{x, y};
        bool solves = vec_is_zero(mat_vec(A, v));
        EXPECT_EQ(K.contains(v), solves)
            << "m=" << m << " v=(" << x.to_string() << "," << y.to_string() << ")";
      }
  }
}

TEST(Linalg, HowellCanonicalEquality) {
  // Same span (by brute-force enumeration) must imply identical Submodule;
  // different spans must compare unequal.
  std::mt19937 gen(99);
  for (long m : {4L, 6L, 9L, 12L}) {
    Ring R = Ring::integers_mod(m);
    std::uniform_int_distribution<long> entry(0, m - 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Vec> g1, g2;
      for (int i = 0; i < 2; ++i) {
        g1.push_back(makev(R, {entry(gen), entry(gen), entry(gen)}));
        g2.push_back(makev(R, {entry(gen), entry(gen), entry(gen)}));
      }
      auto s1 = enumerate_span(R, g1, 3), s2 = enumerate_span(R, g2, 3);
      Submodule m1 = Submodule::span(R, 3, g1), m2 = Submodule::span(R, 3, g2);
      EXPECT_EQ(m1 == m2, s1 == s2) << "m=" << m << " trial=" << trial;
      // Membership agrees with enumeration on every generator combination.
      for (auto& v : g2) EXPECT_EQ(m1.contains(v), s1.count(key_of(v)) > 0);
    }
  }
}

TEST(Linalg, SolveAffineField) {
  Ring Q = Ring::rationals();
  Matrix A = make(Q, {{1, 1}, {1, -1}}, 2);
  AffineSolution s = solve_affine(A, makev(Q, {3, 1}));
  ASSERT_TRUE(s.particular.has_value());
  EXPECT_EQ(*s.particular, makev(Q, {2, 1}));
  EXPECT_TRUE(s.homogeneous.is_zero());
  AffineSolution none = solve_affine(make(Q, {{1, 1}, {2, 2}}, 2), makev(Q, {1, 3}));
  EXPECT_FALSE(none.particular.has_value());
}

TEST(Linalg, SolveAffineIntegers) {
  Ring Z = Ring::integers();
  AffineSolution no = solve_affine(make(Z, {{2}}, 1), makev(Z, {3}));
  EXPECT_FALSE(no.particular.has_value());
  AffineSolution yes = solve_affine(make(Z, {{2}}, 1), makev(Z, {4}));
  ASSERT_TRUE(yes.particular.has_value());
  EXPECT_EQ(*yes.particular, makev(Z, {2}));
  // 3x + 6y = 3 has solutions; kernel is spanned by (2,-1).
  AffineSolution s = solve_affine(make(Z, {{3, 6}}, 2), makev(Z, {3}));
  ASSERT_TRUE(s.particular.has_value());
  EXPECT_EQ(mat_vec(make(Z, {{3, 6}}, 2), *s.particular), makev(Z, {3}));
  EXPECT_EQ(s.homogeneous, Submodule::span(Z, 2, {makev(Z, {2, -1})}));
}

TEST(Linalg, SolveAffineMod) {
  Ring Z6 = Ring::integers_mod(6);
  Matrix A = make(Z6, {{2}}, 1);
  AffineSolution s = solve_affine(A, makev(Z6, {4}));
  ASSERT_TRUE(s.particular.has_value());
  EXPECT_EQ(mat_vec(A, *s.particular), makev(Z6, {4}));
  EXPECT_EQ(s.homogeneous, Submodule::span(Z6, 1, {makev(Z6, {3})}));
  AffineSolution no = solve_affine(A, makev(Z6, {3}));  // 2x == 3 mod 6 has no solution
  EXPECT_FALSE(no.particular.has_value());
}

TEST(Linalg, SolveAffineOracleMod) {
  std::mt19937 gen(5);
  for (long m : {4L, 6L}) {
    Ring R = Ring::integers_mod(m);
    std::uniform_int_distribution<long> entry(0, m - 1);
    auto elems = R.enumerate_elements();
    for (int trial = 0; trial < 25; ++trial) {
      Matrix A = make(R, {{entry(gen), entry(gen)}, {entry(gen), entry(gen)}}, 2);
      Vec b = makev(R, {entry(gen), entry(gen)});
      bool brute = false;
      for (auto& x : elems)
        for (auto& y : elems)
          if (mat_vec(A, Vec{x, y}) == b) brute = true;
      AffineSolution s = solve_affine(A, b);
      EXPECT_EQ(s.particular.has_value(), brute);
      if (s.particular) EXPECT_EQ(mat_vec(A, *s.particular), b);
    }
  }
}

TEST(Linalg, ProductRingModules) {
  Ring Q = Ring::rationals();
  Ring R = Ring::product({Q, Q});
  auto pair = [&](long a, long b) { return R.tuple({Q.from_integer(a), Q.from_integer(b)}); };
  // One generator over Q x Q spans the product of its component spans:
  // scaling by the idempotent (1,0) stays inside.
  Vec g{pair(1, 1), pair(0, 1)};
  Submodule M = Submodule::span(R, 2, {g});
  EXPECT_TRUE(M.contains(Vec{pair(1, 0), pair(0, 0)}));
  EXPECT_TRUE(M.contains(Vec{pair(0, 2), pair(0, 2)}));
  EXPECT_FALSE(M.contains(Vec{pair(0, 0), pair(1, 0)}));
  EXPECT_EQ(M.generators().size(), 2u);

  Matrix A(R, 1, 2);
  A.at(0, 0) = pair(1, 0);
  A.at(0, 1) = pair(0, 1);
  Submodule K = kernel(A);
  // Component 0: kernel of [1 0]; component 1: kernel of [0 1].
  EXPECT_TRUE(K.contains(Vec{pair(0, 1), pair(0, 0)}));
  EXPECT_TRUE(K.contains(Vec{pair(0, 0), pair(1, 0)}));
  EXPECT_FALSE(K.contains(Vec{pair(1, 0), pair(0, 0)}));
  for (auto& gk : K.generators()) EXPECT_TRUE(vec_is_zero(mat_vec(A, gk)));

  AffineSolution s = solve_affine(A, Vec{pair(2, 3)});
  ASSERT_TRUE(s.particular.has_value());
  EXPECT_EQ(mat_vec(A, *s.particular), (Vec{pair(2, 3)}));
}

TEST(Linalg, VerifyOnlyTierRejected) {
  Ring L = Ring::localization(2);
  Matrix A(L, 1, 1);
  A.at(0, 0) = L.one();
  EXPECT_THROW(kernel(A), error);
  EXPECT_THROW(Submodule::span(L, 1, {Vec{L.one()}}), error);
  try {
    kernel(A);
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::unsupported_ring_tier);
  }
}

TEST(Linalg, KernelRandomizedIntegers) {
  Ring Z = Ring::integers();
  std::mt19937 gen(11);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix A(Z, 2, 4);
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 4; ++j) A.at(i, j) = Z.from_integer(entry(gen));
    Submodule K = kernel(A);
    for (auto& g : K.generators()) EXPECT_TRUE(vec_is_zero(mat_vec(A, g)));
    // Every small integer solution lies in the computed kernel.
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b)
        for (long c = -2; c <= 2; ++c)
          for (long d = -2; d <= 2; ++d) {
            Vec v = makev(Z, {a, b, c, d});
            if (vec_is_zero(mat_vec(A, v))) EXPECT_TRUE(K.contains(v));
          }
  }
}
