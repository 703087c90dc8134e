#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfint/linalg.hpp"

namespace hopfint {

struct CheckResult {
  std::string name;
  bool ok;
  std::string detail;  // first counterexample found, empty when ok
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_ok() const {
    for (auto& c : checks)
      if (!c.ok) return false;
    return true;
  }

  const CheckResult* find(const std::string& name) const {
    for (auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// A finite-rank algebra over R given by structure constants, optionally
/// carrying a coalgebra structure and an antipode.
///
/// The underlying module is a direct sum of ideals R*s_i ("support"
/// idempotents s_i); for ordinary free algebras every s_i = 1. Supports make
/// projective-but-not-free module structures (e.g. products of algebras over
/// product rings) representable: coordinate i of any element lies in R*s_i,
/// and identity axioms compare against support-scaled targets.
///
///   mul[i][j]        coordinates of e_i * e_j
///   unit             coordinates of 1 (optional: semigroup rings may lack it)
///   comul[i]         matrix T with Delta(e_i) = sum T(a,b) e_a (x) e_b
///   counit[i]        eps(e_i)
///   antipode(i, j)   coefficient of e_j in S(e_i)
struct FiniteAlgebra {
  Ring ring;
  size_t dim;
  std::vector<std::string> labels;
  std::vector<std::vector<Vec>> mul;
  std::optional<Vec> unit;
  std::optional<std::vector<Matrix>> comul;
  std::optional<Vec> counit;
  std::optional<Matrix> antipode;
  Vec support;

  FiniteAlgebra(Ring R, size_t n)
      : ring(std::move(R)),
        dim(n),
        mul(n, std::vector<Vec>(n, zero_vec(ring, n))),
        support(n, ring.one()) {
    labels.reserve(n);
    for (size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }

  static FiniteAlgebra with_dim(Ring R, size_t n) { return FiniteAlgebra(std::move(R), n); }

  bool has_coalgebra() const { return comul && counit; }
  bool has_antipode() const { return antipode.has_value(); }

  void require_unit(const char* what) const {
    if (!unit) raise(errc::unit_required, what);
  }
  void require_coalgebra(const char* what) const {
    if (!has_coalgebra()) raise(errc::invalid_element, std::string(what) + ": no coalgebra data");
  }
  void require_antipode(const char* what) const {
    if (!antipode) raise(errc::antipode_required, what);
  }

  Vec basis_vec(size_t i) const {
    Vec v = zero_vec(ring, dim);
    v[i] = support[i];
    return v;
  }

  Vec multiply(const Vec& a, const Vec& b) const {
    if (a.size() != dim || b.size() != dim) raise(errc::dimension_mismatch, "algebra multiply");
    Vec out = zero_vec(ring, dim);
    for (size_t i = 0; i < dim; ++i) {
      if (a[i].is_zero()) continue;
      for (size_t j = 0; j < dim; ++j) {
        if (b[j].is_zero()) continue;
        RingElement c = a[i] * b[j];
        for (size_t k = 0; k < dim; ++k) out[k] = out[k] + c * mul[i][j][k];
      }
    }
    return out;
  }

  /// Matrix of left multiplication by a: column j holds coords of a * e_j.
  Matrix leftmul_matrix(const Vec& a) const {
    Matrix M(ring, dim, dim);
    for (size_t j = 0; j < dim; ++j) {
      Vec col = multiply(a, basis_vec(j));
      for (size_t k = 0; k < dim; ++k) M.at(k, j) = col[k];
    }
    return M;
  }

  /// Matrix of right multiplication by a: column j holds coords of e_j * a.
  Matrix rightmul_matrix(const Vec& a) const {
    Matrix M(ring, dim, dim);
    for (size_t j = 0; j < dim; ++j) {
      Vec col = multiply(basis_vec(j), a);
      for (size_t k = 0; k < dim; ++k) M.at(k, j) = col[k];
    }
    return M;
  }

  RingElement eps_of(const Vec& a) const {
    require_coalgebra("counit evaluation");
    RingElement s = ring.zero();
    for (size_t i = 0; i < dim; ++i) s = s + a[i] * (*counit)[i];
    return s;
  }

  /// Delta(a) as an n x n tensor matrix.
  Matrix delta_of(const Vec& a) const {
    require_coalgebra("comultiplication");
    Matrix T(ring, dim, dim);
    for (size_t i = 0; i < dim; ++i) {
      if (a[i].is_zero()) continue;
      for (size_t p = 0; p < dim; ++p)
        for (size_t q = 0; q < dim; ++q)
          T.at(p, q) = T.at(p, q) + a[i] * (*comul)[i].at(p, q);
    }
    return T;
  }

  Vec apply_antipode(const Vec& a) const {
    require_antipode("antipode application");
    Vec out = zero_vec(ring, dim);
    for (size_t i = 0; i < dim; ++i) {
      if (a[i].is_zero()) continue;
      for (size_t j = 0; j < dim; ++j) out[j] = out[j] + a[i] * antipode->at(i, j);
    }
    return out;
  }

  /// mu: H (x) H -> H on a tensor matrix.
  Vec mu_of_tensor(const Matrix& T) const {
    Vec out = zero_vec(ring, dim);
    for (size_t a = 0; a < dim; ++a)
      for (size_t b = 0; b < dim; ++b) {
        if (T.at(a, b).is_zero()) continue;
        for (size_t k = 0; k < dim; ++k) out[k] = out[k] + T.at(a, b) * mul[a][b][k];
      }
    return out;
  }

  /// Scale coordinate i into its support ideal R*s_i.
  Vec canonicalize_element(Vec v) const {
    for (size_t i = 0; i < dim; ++i) v[i] = v[i] * support[i];
    return v;
  }

  bool element_in_supports(const Vec& v) const {
    for (size_t i = 0; i < dim; ++i)
      if (v[i] * support[i] != v[i]) return false;
    return true;
  }
};

/// Tensor-square helpers: an element of H (x) H is an n x n matrix T,
/// sum T(a,b) e_a (x) e_b.

/// (h (x) 1) * T, i.e. left-multiply the first leg by h.
inline Matrix tensor_left_mul_first(const FiniteAlgebra& H, const Vec& h, const Matrix& T) {
  return mat_mul(H.leftmul_matrix(h), T);
}

/// T * (1 (x) h), i.e. right-multiply the second leg by h.
inline Matrix tensor_right_mul_second(const FiniteAlgebra& H, const Vec& h, const Matrix& T) {
  return mat_mul(T, transpose(H.rightmul_matrix(h)));
}

/// Full product of two tensors in H (x) H.
inline Matrix tensor_multiply(const FiniteAlgebra& H, const Matrix& T1, const Matrix& T2) {
  const size_t n = H.dim;
  Matrix out(H.ring, n, n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      if (T1.at(a, b).is_zero()) continue;
      for (size_t c = 0; c < n; ++c)
        for (size_t d = 0; d < n; ++d) {
          if (T2.at(c, d).is_zero()) continue;
          RingElement coef = T1.at(a, b) * T2.at(c, d);
          // (e_a (x) e_b)(e_c (x) e_d) = (e_a e_c) (x) (e_b e_d)
          for (size_t p = 0; p < n; ++p) {
            if (H.mul[a][c][p].is_zero()) continue;
            RingElement cp = coef * H.mul[a][c][p];
            for (size_t q = 0; q < n; ++q)
              out.at(p, q) = out.at(p, q) + cp * H.mul[b][d][q];
          }
        }
    }
  return out;
}

/// Apply the antipode to the first leg: sum T(a,b) S(e_a) (x) e_b.
inline Matrix tensor_antipode_first(const FiniteAlgebra& H, const Matrix& T) {
  H.require_antipode("tensor antipode");
  return mat_mul(transpose(*H.antipode), T);
}

/// Apply the antipode to the second leg: sum T(a,b) e_a (x) S(e_b).
inline Matrix tensor_antipode_second(const FiniteAlgebra& H, const Matrix& T) {
  H.require_antipode("tensor antipode");
  return mat_mul(T, *H.antipode);
}

// --- verification ---

namespace detail {

inline std::string coord_name(const FiniteAlgebra& A, size_t i) {
  return i < A.labels.size() ? A.labels[i] : "e" + std::to_string(i);
}

}  // namespace detail

/// Associativity, unit law, support consistency.
inline VerifyReport verify_algebra(const FiniteAlgebra& A) {
  VerifyReport rep;
  const size_t n = A.dim;
  const Ring& R = A.ring;

  {
    CheckResult c{"support_consistent", true, ""};
    for (size_t i = 0; i < n && c.ok; ++i) {
      if (A.support[i] * A.support[i] != A.support[i]) {
        c.ok = false;
        c.detail = "support " + std::to_string(i) + " is not idempotent";
      }
      for (size_t j = 0; j < n && c.ok; ++j)
        for (size_t k = 0; k < n && c.ok; ++k) {
          const RingElement& m = A.mul[i][j][k];
          if (m * A.support[i] * A.support[j] * A.support[k] != m) {
            c.ok = false;
            c.detail = "structure constant (" + detail::coord_name(A, i) + "," +
                       detail::coord_name(A, j) + "," + detail::coord_name(A, k) +
                       ") leaves its support ideal";
          }
        }
    }
    if (c.ok && A.unit)
      for (size_t i = 0; i < n; ++i)
        if ((*A.unit)[i] * A.support[i] != (*A.unit)[i]) {
          c.ok = false;
          c.detail = "unit coordinate " + std::to_string(i) + " leaves its support ideal";
          break;
        }
    rep.checks.push_back(std::move(c));
  }

  {
    CheckResult c{"associative", true, ""};
    for (size_t i = 0; i < n && c.ok; ++i)
      for (size_t j = 0; j < n && c.ok; ++j)
        for (size_t k = 0; k < n && c.ok; ++k) {
          Vec lhs = A.multiply(A.multiply(A.basis_vec(i), A.basis_vec(j)), A.basis_vec(k));
          Vec rhs = A.multiply(A.basis_vec(i), A.multiply(A.basis_vec(j), A.basis_vec(k)));
          if (lhs != rhs) {
            c.ok = false;
            c.detail = "(" + detail::coord_name(A, i) + " " + detail::coord_name(A, j) + ") " +
                       detail::coord_name(A, k) + " != " + detail::coord_name(A, i) + " (" +
                       detail::coord_name(A, j) + " " + detail::coord_name(A, k) + ")";
          }
        }
    rep.checks.push_back(std::move(c));
  }

  if (A.unit) {
    CheckResult c{"unit_law", true, ""};
    for (size_t j = 0; j < n && c.ok; ++j) {
      Vec ej = A.basis_vec(j);
      if (A.multiply(*A.unit, ej) != ej || A.multiply(ej, *A.unit) != ej) {
        c.ok = false;
        c.detail = "unit fails on " + detail::coord_name(A, j);
      }
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

/// Adds the coalgebra and bialgebra-compatibility checks.
inline VerifyReport verify_bialgebra(const FiniteAlgebra& A) {
  VerifyReport rep = verify_algebra(A);
  A.require_coalgebra("bialgebra verification");
  const size_t n = A.dim;
  const auto& T = *A.comul;
  const auto& eps = *A.counit;

  {
    CheckResult c{"coassociative", true, ""};
    for (size_t i = 0; i < n && c.ok; ++i)
      for (size_t a = 0; a < n && c.ok; ++a)
        for (size_t b = 0; b < n && c.ok; ++b)
          for (size_t cc = 0; cc < n && c.ok; ++cc) {
            RingElement lhs = A.ring.zero(), rhs = A.ring.zero();
            for (size_t j = 0; j < n; ++j) lhs = lhs + T[i].at(j, cc) * T[j].at(a, b);
            for (size_t k = 0; k < n; ++k) rhs = rhs + T[i].at(a, k) * T[k].at(b, cc);
            if (lhs != rhs) {
              c.ok = false;
              c.detail = "coassociativity fails on " + detail::coord_name(A, i);
            }
          }
    rep.checks.push_back(std::move(c));
  }

  {
    CheckResult c{"counit_law", true, ""};
    for (size_t i = 0; i < n && c.ok; ++i)
      for (size_t k = 0; k < n && c.ok; ++k) {
        RingElement left = A.ring.zero(), right = A.ring.zero();
        for (size_t j = 0; j < n; ++j) left = left + eps[j] * T[i].at(j, k);
        for (size_t j = 0; j < n; ++j) right = right + T[i].at(k, j) * eps[j];
        RingElement target = (i == k) ? A.support[i] : A.ring.zero();
        if (left != target || right != target) {
          c.ok = false;
          c.detail = "counit law fails on " + detail::coord_name(A, i);
        }
      }
    rep.checks.push_back(std::move(c));
  }

  {
    CheckResult c{"comul_multiplicative", true, ""};
    for (size_t i = 0; i < n && c.ok; ++i)
      for (size_t j = 0; j < n && c.ok; ++j) {
        Matrix lhs(A.ring, n, n);
        for (size_t k = 0; k < n; ++k)
          if (!A.mul[i][j][k].is_zero()) lhs = mat_add(lhs, mat_scale(A.mul[i][j][k], T[k]));
        Matrix rhs = tensor_multiply(A, T[i], T[j]);
        if (lhs != rhs) {
          c.ok = false;
          c.detail = "Delta(" + detail::coord_name(A, i) + " " + detail::coord_name(A, j) +
                     ") != Delta(" + detail::coord_name(A, i) + ") Delta(" +
                     detail::coord_name(A, j) + ")";
        }
      }
    rep.checks.push_back(std::move(c));
  }

  {
    CheckResult c{"counit_multiplicative", true, ""};
    for (size_t i = 0; i < n && c.ok; ++i)
      for (size_t j = 0; j < n && c.ok; ++j) {
        RingElement lhs = A.ring.zero();
        for (size_t k = 0; k < n; ++k) lhs = lhs + A.mul[i][j][k] * eps[k];
        if (lhs != eps[i] * eps[j]) {
          c.ok = false;
          c.detail = "eps(" + detail::coord_name(A, i) + " " + detail::coord_name(A, j) +
                     ") != eps*eps";
        }
      }
    rep.checks.push_back(std::move(c));
  }

  if (A.unit) {
    CheckResult c{"comul_preserves_unit", true, ""};
    Matrix lhs = A.delta_of(*A.unit);
    Matrix outer(A.ring, n, n);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) outer.at(a, b) = (*A.unit)[a] * (*A.unit)[b];
    if (lhs != outer) {
      c.ok = false;
      c.detail = "Delta(1) != 1 (x) 1";
    }
    rep.checks.push_back(std::move(c));

    CheckResult c2{"counit_preserves_unit", true, ""};
    if (!A.eps_of(*A.unit).is_one()) {
      c2.ok = false;
      c2.detail = "eps(1) != 1";
    }
    rep.checks.push_back(std::move(c2));
  }
  return rep;
}

/// Adds the antipode axioms.
inline VerifyReport verify_hopf(const FiniteAlgebra& A) {
  VerifyReport rep = verify_bialgebra(A);
  A.require_antipode("Hopf verification");
  A.require_unit("Hopf verification");
  const size_t n = A.dim;

  CheckResult cl{"antipode_left", true, ""}, cr{"antipode_right", true, ""};
  for (size_t i = 0; i < n; ++i) {
    Vec left = zero_vec(A.ring, n), right = zero_vec(A.ring, n);
    const Matrix& T = (*A.comul)[i];
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        if (T.at(a, b).is_zero()) continue;
        left = vec_add(left, vec_scale(T.at(a, b),
                                       A.multiply(A.apply_antipode(A.basis_vec(a)),
                                                  A.basis_vec(b))));
        right = vec_add(right, vec_scale(T.at(a, b),
                                         A.multiply(A.basis_vec(a),
                                                    A.apply_antipode(A.basis_vec(b)))));
      }
    Vec target = vec_scale((*A.counit)[i], *A.unit);
    if (cl.ok && left != target) {
      cl.ok = false;
      cl.detail = "sum S(h1) h2 != eps(h) 1 on " + detail::coord_name(A, i);
    }
    if (cr.ok && right != target) {
      cr.ok = false;
      cr.detail = "sum h1 S(h2) != eps(h) 1 on " + detail::coord_name(A, i);
    }
  }
  rep.checks.push_back(std::move(cl));
  rep.checks.push_back(std::move(cr));
  return rep;
}

inline bool is_cocommutative(const FiniteAlgebra& A) {
  A.require_coalgebra("cocommutativity");
  for (auto& T : *A.comul)
    if (T != transpose(T)) return false;
  return true;
}

inline bool is_commutative(const FiniteAlgebra& A) {
  for (size_t i = 0; i < A.dim; ++i)
    for (size_t j = i + 1; j < A.dim; ++j)
      if (A.mul[i][j] != A.mul[j][i]) return false;
  return true;
}

/// Whether the antipode is bijective on the underlying module. The module
/// is the direct sum of the support ideals, so surjectivity means solving
/// S X = diag(support) (a surjective endomorphism of a finitely generated
/// module over a commutative ring is bijective).
inline bool antipode_bijective(const FiniteAlgebra& A) {
  A.require_antipode("antipode bijectivity");
  const size_t n = A.dim;
  Matrix St = transpose(*A.antipode);  // column j of St = coords of S(e_j)
  for (size_t k = 0; k < n; ++k) {
    if (!solve_affine(St, A.basis_vec(k)).particular) return false;
  }
  return true;
}

/// Span of { a * e_j : j } (the right ideal a H generates as a module).
inline Submodule right_ideal_span(const FiniteAlgebra& A, const Vec& a) {
  std::vector<Vec> gens;
  gens.reserve(A.dim);
  for (size_t j = 0; j < A.dim; ++j) gens.push_back(A.multiply(a, A.basis_vec(j)));
  return Submodule::span(A.ring, A.dim, gens);
}

/// Span of { e_j * a : j }.
inline Submodule left_ideal_span(const FiniteAlgebra& A, const Vec& a) {
  std::vector<Vec> gens;
  gens.reserve(A.dim);
  for (size_t j = 0; j < A.dim; ++j) gens.push_back(A.multiply(A.basis_vec(j), a));
  return Submodule::span(A.ring, A.dim, gens);
}

/// Whether Phi (row i = coordinates in W of the image of e_i of V) is an
/// isomorphism of whatever structure both V and W carry (algebra,
/// bialgebra, Hopf algebra). Bijectivity is module-theoretic: the map is
/// injective (zero kernel) and surjective (image is the whole of W's
/// underlying module, i.e. contains every support basis vector).
inline bool is_hopf_isomorphism(const FiniteAlgebra& V, const FiniteAlgebra& W,
                                const Matrix& Phi) {
  if (V.ring != W.ring) return false;
  if (Phi.rows() != V.dim || Phi.cols() != W.dim) return false;
  const Ring& R = V.ring;
  Matrix Pt = transpose(Phi);
  auto phi = [&](const Vec& v) { return mat_vec(Pt, v); };

  if (!kernel(Pt).is_zero()) return false;
  Submodule image = Submodule::span(R, W.dim, Phi.row_list());
  for (size_t k = 0; k < W.dim; ++k)
    if (!image.contains(W.basis_vec(k))) return false;

  for (size_t i = 0; i < V.dim; ++i)
    for (size_t j = 0; j < V.dim; ++j)
      if (phi(V.multiply(V.basis_vec(i), V.basis_vec(j))) !=
          W.multiply(phi(V.basis_vec(i)), phi(V.basis_vec(j))))
        return false;
  if (V.unit && W.unit && phi(*V.unit) != *W.unit) return false;
  if ((bool)V.unit != (bool)W.unit) return false;

  if ((bool)V.comul != (bool)W.comul) return false;
  if (V.comul) {
    for (size_t i = 0; i < V.dim; ++i) {
      Matrix lhs = mat_mul(mat_mul(Pt, (*V.comul)[i]), Phi);  // (phi (x) phi) Delta_V(e_i)
      if (lhs != W.delta_of(phi(V.basis_vec(i)))) return false;
      if (W.eps_of(phi(V.basis_vec(i))) != (*V.counit)[i]) return false;
    }
  }
  if ((bool)V.antipode != (bool)W.antipode) return false;
  if (V.antipode)
    for (size_t i = 0; i < V.dim; ++i)
      if (phi(V.apply_antipode(V.basis_vec(i))) != W.apply_antipode(phi(V.basis_vec(i))))
        return false;
  return true;
}

// --- product of algebras over the product of their ground rings ---

namespace detail {

inline size_t factor_count(const Ring& R) {
  return R.kind() == RingKind::product ? R.factors().size() : 1;
}

/// Embed x (element of a factor block) into the product ring, placing its
/// components at factor offset..offset+k-1 and zero elsewhere.
inline RingElement embed_component(const Ring& target, const RingElement& x, size_t offset) {
  std::vector<RingElement> parts;
  const auto& tf = target.factors();
  size_t k = factor_count(x.ring());
  for (size_t f = 0; f < tf.size(); ++f) {
    if (f >= offset && f < offset + k)
      parts.push_back(k == 1 ? x : x.components()[f - offset]);
    else
      parts.push_back(tf[f].zero());
  }
  return target.tuple(std::move(parts));
}

}  // namespace detail

/// H1 x H2 as an algebra (bialgebra, Hopf algebra: whatever both carry)
/// over R1 x R2. The underlying module is projective but not free: basis
/// element i from H1 has support (1,0), one from H2 has support (0,1).
inline FiniteAlgebra product_hopf(const FiniteAlgebra& A, const FiniteAlgebra& B) {
  Ring R = Ring::product({A.ring, B.ring});
  const size_t offB = detail::factor_count(A.ring);
  const size_t n = A.dim + B.dim;
  FiniteAlgebra P = FiniteAlgebra::with_dim(R, n);

  auto embedA = [&](const RingElement& x) { return detail::embed_component(R, x, 0); };
  auto embedB = [&](const RingElement& x) { return detail::embed_component(R, x, offB); };

  for (size_t i = 0; i < A.dim; ++i) {
    P.labels[i] = A.labels[i];
    P.support[i] = embedA(A.support[i]);
  }
  for (size_t j = 0; j < B.dim; ++j) {
    std::string lbl = B.labels[j];
    for (size_t i = 0; i < A.dim; ++i)
      if (A.labels[i] == lbl) {
        lbl += "'";
        break;
      }
    P.labels[A.dim + j] = lbl;
    P.support[A.dim + j] = embedB(B.support[j]);
  }

  for (size_t i = 0; i < A.dim; ++i)
    for (size_t j = 0; j < A.dim; ++j)
      for (size_t k = 0; k < A.dim; ++k) P.mul[i][j][k] = embedA(A.mul[i][j][k]);
  for (size_t i = 0; i < B.dim; ++i)
    for (size_t j = 0; j < B.dim; ++j)
      for (size_t k = 0; k < B.dim; ++k)
        P.mul[A.dim + i][A.dim + j][A.dim + k] = embedB(B.mul[i][j][k]);

  if (A.unit && B.unit) {
    Vec u = zero_vec(R, n);
    for (size_t i = 0; i < A.dim; ++i) u[i] = embedA((*A.unit)[i]);
    for (size_t j = 0; j < B.dim; ++j) u[A.dim + j] = embedB((*B.unit)[j]);
    P.unit = std::move(u);
  }

  if (A.has_coalgebra() && B.has_coalgebra()) {
    std::vector<Matrix> comul;
    Vec counit = zero_vec(R, n);
    for (size_t i = 0; i < n; ++i) {
      Matrix T(R, n, n);
      if (i < A.dim) {
        for (size_t a = 0; a < A.dim; ++a)
          for (size_t b = 0; b < A.dim; ++b) T.at(a, b) = embedA((*A.comul)[i].at(a, b));
        counit[i] = embedA((*A.counit)[i]);
      } else {
        for (size_t a = 0; a < B.dim; ++a)
          for (size_t b = 0; b < B.dim; ++b)
            T.at(A.dim + a, A.dim + b) = embedB((*B.comul)[i - A.dim].at(a, b));
        counit[i] = embedB((*B.counit)[i - A.dim]);
      }
      comul.push_back(std::move(T));
    }
    P.comul = std::move(comul);
    P.counit = std::move(counit);
  }

  if (A.antipode && B.antipode) {
    Matrix S(R, n, n);
    for (size_t i = 0; i < A.dim; ++i)
      for (size_t j = 0; j < A.dim; ++j) S.at(i, j) = embedA(A.antipode->at(i, j));
    for (size_t i = 0; i < B.dim; ++i)
      for (size_t j = 0; j < B.dim; ++j)
        S.at(A.dim + i, A.dim + j) = embedB(B.antipode->at(i, j));
    P.antipode = std::move(S);
  }
  return P;
}

}  // namespace hopfint
