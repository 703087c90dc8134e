#pragma once

#include "hopfint/algebra.hpp"

namespace hopfint {

/// The 4-dimensional Taft algebra: basis {1, g, x, gx} with g^2 = 1,
/// x^2 = 0, x g = -g x; Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x;
/// S(g) = g, S(x) = -g x. Free of rank 4 over any coefficient ring. The
/// smallest Hopf algebra that is neither commutative nor cocommutative,
/// and the standard example with distinct left and right integrals.
inline FiniteAlgebra sweedler_hopf(const Ring& R) {
  FiniteAlgebra H = FiniteAlgebra::with_dim(R, 4);
  H.labels = {"1", "g", "x", "gx"};
  const RingElement o = R.one(), z = R.zero(), m = -R.one();
  auto vec = [&](RingElement a, RingElement b, RingElement c, RingElement d) {
    return Vec{std::move(a), std::move(b), std::move(c), std::move(d)};
  };
  H.mul[0][0] = vec(o, z, z, z);
  H.mul[0][1] = vec(z, o, z, z);
  H.mul[0][2] = vec(z, z, o, z);
  H.mul[0][3] = vec(z, z, z, o);
  H.mul[1][0] = vec(z, o, z, z);
  H.mul[1][1] = vec(o, z, z, z);
  H.mul[1][2] = vec(z, z, z, o);
  H.mul[1][3] = vec(z, z, o, z);
  H.mul[2][0] = vec(z, z, o, z);
  H.mul[2][1] = vec(z, z, z, m);
  H.mul[2][2] = vec(z, z, z, z);
  H.mul[2][3] = vec(z, z, z, z);
  H.mul[3][0] = vec(z, z, z, o);
  H.mul[3][1] = vec(z, z, m, z);
  H.mul[3][2] = vec(z, z, z, z);
  H.mul[3][3] = vec(z, z, z, z);
  H.unit = vec(o, z, z, z);

  std::vector<Matrix> comul;
  {
    Matrix T(R, 4, 4);
    T.at(0, 0) = o;  // 1 (x) 1
    comul.push_back(T);
  }
  {
    Matrix T(R, 4, 4);
    T.at(1, 1) = o;  // g (x) g
    comul.push_back(T);
  }
  {
    Matrix T(R, 4, 4);
    T.at(2, 0) = o;  // x (x) 1
    T.at(1, 2) = o;  // g (x) x
    comul.push_back(T);
  }
  {
    Matrix T(R, 4, 4);
    T.at(3, 1) = o;  // gx (x) g
    T.at(0, 3) = o;  // 1 (x) gx
    comul.push_back(T);
  }
  H.comul = std::move(comul);
  H.counit = vec(o, o, z, z);

  Matrix S(R, 4, 4);
  S.at(0, 0) = o;
  S.at(1, 1) = o;
  S.at(2, 3) = m;  // S(x) = -gx
  S.at(3, 2) = o;  // S(gx) = x
  H.antipode = S;
  return H;
}

/// R itself as a rank-1 Hopf algebra: Delta(1) = 1 (x) 1, eps = id, S = id.
inline FiniteAlgebra scalar_algebra(const Ring& R) {
  FiniteAlgebra A = FiniteAlgebra::with_dim(R, 1);
  A.labels = {"1"};
  A.mul[0][0] = Vec{R.one()};
  A.unit = Vec{R.one()};
  Matrix T(R, 1, 1);
  T.at(0, 0) = R.one();
  A.comul = std::vector<Matrix>{std::move(T)};
  A.counit = Vec{R.one()};
  A.antipode = Matrix::identity(R, 1);
  return A;
}

/// R[y]/(y^2): basis {1, y}. Plain unital algebra, no coalgebra data.
inline FiniteAlgebra dual_numbers(const Ring& R) {
  FiniteAlgebra A = FiniteAlgebra::with_dim(R, 2);
  A.labels = {"1", "y"};
  const RingElement o = R.one(), z = R.zero();
  A.mul[0][0] = Vec{o, z};
  A.mul[0][1] = Vec{z, o};
  A.mul[1][0] = Vec{z, o};
  A.mul[1][1] = Vec{z, z};
  A.unit = Vec{o, z};
  return A;
}

/// The rank-1 algebra R*s on an idempotent s, with identity s.
inline FiniteAlgebra idempotent_line_algebra(const Ring& R, const RingElement& s) {
  if (s * s != s) raise(errc::not_idempotent, "idempotent_line_algebra");
  FiniteAlgebra A = FiniteAlgebra::with_dim(R, 1);
  A.labels = {"s"};
  A.support = Vec{s};
  A.mul[0][0] = Vec{s};
  A.unit = Vec{s};
  return A;
}

}  // namespace hopfint
