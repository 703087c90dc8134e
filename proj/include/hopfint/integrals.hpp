#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfint/algebra.hpp"

namespace hopfint {

enum class Side { left, right };

inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

/// Solutions w of  action_i(w) = eps_i * w  for all i, i.e. the
/// eps-invariants of a module given by acting matrices, intersected with
/// the support ideals when supplied.
inline Submodule epsilon_invariants(const Ring& R, size_t dim,
                                    const std::vector<Matrix>& actions, const Vec& eps_values,
                                    const Vec* support = nullptr) {
  if (actions.size() != eps_values.size())
    raise(errc::dimension_mismatch, "epsilon_invariants: action/eps count");
  std::vector<Matrix> blocks;
  for (size_t i = 0; i < actions.size(); ++i) {
    Matrix B = actions[i];
    for (size_t k = 0; k < dim; ++k) B.at(k, k) = B.at(k, k) - eps_values[i];
    blocks.push_back(std::move(B));
  }
  if (support) {
    Matrix D(R, dim, dim);
    for (size_t k = 0; k < dim; ++k) D.at(k, k) = R.one() - (*support)[k];
    blocks.push_back(std::move(D));
  }
  if (blocks.empty()) return Submodule::span(R, dim, {});
  Matrix stacked = blocks[0];
  for (size_t b = 1; b < blocks.size(); ++b) stacked = vstack(stacked, blocks[b]);
  return kernel(stacked);
}

/// The left integrals {t : h t = eps(h) t} (or right: t h = eps(h) t) of H
/// as a canonical Submodule of R^dim.
inline Submodule integral_module(const FiniteAlgebra& H, Side side) {
  H.require_coalgebra("integrals");
  std::vector<Matrix> actions;
  actions.reserve(H.dim);
  for (size_t i = 0; i < H.dim; ++i) {
    Vec ei = H.basis_vec(i);
    actions.push_back(side == Side::left ? H.leftmul_matrix(ei) : H.rightmul_matrix(ei));
  }
  return epsilon_invariants(H.ring, H.dim, actions, *H.counit, &H.support);
}

inline Submodule left_integrals(const FiniteAlgebra& H) { return integral_module(H, Side::left); }
inline Submodule right_integrals(const FiniteAlgebra& H) {
  return integral_module(H, Side::right);
}

/// Direct verification that t is a (left/right) integral; works over every
/// ring tier, no solving involved.
inline CheckResult verify_integral(const FiniteAlgebra& H, const Vec& t, Side side) {
  H.require_coalgebra("verify_integral");
  if (t.size() != H.dim) raise(errc::dimension_mismatch, "verify_integral candidate length");
  if (!H.element_in_supports(t))
    return {"integral", false, "candidate leaves the support ideals"};
  for (size_t i = 0; i < H.dim; ++i) {
    Vec ei = H.basis_vec(i);
    Vec lhs = side == Side::left ? H.multiply(ei, t) : H.multiply(t, ei);
    Vec rhs = vec_scale((*H.counit)[i], t);
    if (lhs != rhs)
      return {"integral", false,
              std::string(side_name(side)) + " integral identity fails on " + H.labels[i]};
  }
  return {"integral", true, ""};
}

// --- the Casimir correspondence ---

/// Whether U (an element of H (x) H) centralizes H:
/// (h (x) 1) U = U (1 (x) h) for all h.
inline bool is_centralizing(const FiniteAlgebra& H, const Matrix& U) {
  for (size_t i = 0; i < H.dim; ++i) {
    Vec ei = H.basis_vec(i);
    if (tensor_left_mul_first(H, ei, U) != tensor_right_mul_second(H, ei, U)) return false;
  }
  return true;
}

/// i_l(t) = (1 (x) S) Delta(t);  i_r(t) = (S (x) 1) Delta(t).
inline Matrix casimir_from_integral(const FiniteAlgebra& H, const Vec& t, Side side) {
  H.require_antipode("casimir_from_integral");
  Matrix D = H.delta_of(t);
  return side == Side::left ? tensor_antipode_second(H, D) : tensor_antipode_first(H, D);
}

/// p_l(u) = (1 (x) eps) u;  p_r(u) = (eps (x) 1) u.
inline Vec integral_from_casimir(const FiniteAlgebra& H, const Matrix& U, Side side) {
  H.require_coalgebra("integral_from_casimir");
  Vec out = zero_vec(H.ring, H.dim);
  for (size_t a = 0; a < H.dim; ++a)
    for (size_t b = 0; b < H.dim; ++b) {
      if (U.at(a, b).is_zero()) continue;
      if (side == Side::left)
        out[a] = out[a] + U.at(a, b) * (*H.counit)[b];
      else
        out[b] = out[b] + U.at(a, b) * (*H.counit)[a];
    }
  return out;
}

// --- separability ---

enum class SearchVerdict { found, not_found, provably_none };

inline const char* verdict_name(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::found: return "FOUND";
    case SearchVerdict::not_found: return "NOT_FOUND";
    case SearchVerdict::provably_none: return "PROVABLY_NONE";
  }
  return "?";
}

struct SeparabilityResult {
  SearchVerdict verdict = SearchVerdict::not_found;
  std::optional<Vec> integral;        // t with eps(t) a unit
  std::optional<Matrix> certificate;  // separability element, mu = 1
  std::string note;
};

/// Checks that U is a separability element: it lies in the tensor-square
/// module, centralizes H, and multiplies to 1.
inline CheckResult verify_separability_certificate(const FiniteAlgebra& H, const Matrix& U) {
  H.require_unit("separability certificate");
  for (size_t a = 0; a < H.dim; ++a)
    for (size_t b = 0; b < H.dim; ++b)
      if (U.at(a, b) * H.support[a] * H.support[b] != U.at(a, b))
        return {"separability_certificate", false, "certificate leaves the support ideals"};
  if (!is_centralizing(H, U))
    return {"separability_certificate", false, "certificate is not H-centralizing"};
  if (H.mu_of_tensor(U) != *H.unit)
    return {"separability_certificate", false, "mu(certificate) != 1"};
  return {"separability_certificate", true, ""};
}

namespace detail {

/// Coefficients c with sum c_i v_i a unit of R, when the ideal (v_1..v_k)
/// contains a unit and the tier lets us decide that; nullopt otherwise.
/// Over Z / Z/m this is an extended-gcd computation, over a field a scan,
/// over a product ring a per-factor recursion. Over verify-only rings the
/// scan tries each generator alone (inconclusive when it fails).
inline std::optional<std::vector<RingElement>> unit_combination(
    const Ring& R, const std::vector<RingElement>& vals) {
  std::vector<RingElement> coeffs(vals.size(), R.zero());
  switch (R.kind()) {
    case RingKind::rationals:
    case RingKind::prime_field:
    case RingKind::localization: {
      for (size_t i = 0; i < vals.size(); ++i)
        if (is_unit(vals[i])) {
          coeffs[i] = R.one();
          return coeffs;
        }
      if (R.kind() == RingKind::localization) return std::nullopt;  // inconclusive scan
      // Over a field any nonzero value is a unit, so failing the scan is
      // conclusive: the ideal is zero.
      return std::nullopt;
    }
    case RingKind::integers:
    case RingKind::integers_mod: {
      const bool modular = R.kind() == RingKind::integers_mod;
      mpz_class g = modular ? R.modulus() : mpz_class(0);
      std::vector<mpz_class> zc(vals.size(), 0);
      for (size_t i = 0; i < vals.size(); ++i) {
        const mpz_class& v = vals[i].as_integer();
        mpz_class g2, s, t;
        mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        for (auto& c : zc) c *= s;
        zc[i] += t;
        g = g2;
      }
      if (g != 1) return std::nullopt;
      for (size_t i = 0; i < vals.size(); ++i) coeffs[i] = R.from_integer(zc[i]);
      return coeffs;
    }
    case RingKind::product: {
      std::vector<std::vector<RingElement>> per_factor;
      for (size_t f = 0; f < R.factors().size(); ++f) {
        std::vector<RingElement> comp;
        for (auto& v : vals) comp.push_back(v.components()[f]);
        auto c = unit_combination(R.factors()[f], comp);
        if (!c) return std::nullopt;
        per_factor.push_back(std::move(*c));
      }
      for (size_t i = 0; i < vals.size(); ++i) {
        std::vector<RingElement> parts;
        for (size_t f = 0; f < R.factors().size(); ++f) parts.push_back(per_factor[f][i]);
        coeffs[i] = R.tuple(std::move(parts));
      }
      return coeffs;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Certificate from a concrete integral with invertible counit value:
/// omega = eps(t)^{-1} (1 (x) S) Delta(t). Pure verification; works over
/// every ring tier.
inline SeparabilityResult separability_from_candidate(const FiniteAlgebra& H, const Vec& t,
                                                      Side side = Side::left) {
  H.require_antipode("separability");
  H.require_unit("separability");
  SeparabilityResult res;
  CheckResult integral = verify_integral(H, t, side);
  if (!integral.ok) raise(errc::not_an_integral, integral.detail);
  RingElement e = H.eps_of(t);
  if (!is_unit(e)) {
    res.verdict = SearchVerdict::not_found;
    res.note = "eps(candidate) = " + e.to_string() + " is not a unit";
    return res;
  }
  Matrix omega = mat_scale(unit_inverse(e), casimir_from_integral(H, t, side));
  CheckResult cert = verify_separability_certificate(H, omega);
  if (!cert.ok) raise(errc::not_an_integral, "certificate verification failed: " + cert.detail);
  res.verdict = SearchVerdict::found;
  res.integral = t;
  res.certificate = std::move(omega);
  return res;
}

/// Separability via integrals: find a left (right) integral whose counit
/// value is a unit. Over solvable tiers the image eps(integral module) is
/// an explicit ideal, so failure is conclusive (PROVABLY_NONE). Over
/// verify-only rings nothing can be solved for, so the verdict stays
/// NOT_FOUND with a note.
inline SeparabilityResult separability_from_integral(const FiniteAlgebra& H,
                                                     Side side = Side::left) {
  H.require_antipode("separability");
  H.require_unit("separability");
  SeparabilityResult res;
  if (!H.ring.solving_supported()) {
    res.verdict = SearchVerdict::not_found;
    res.note = "ring " + H.ring.to_string() +
               " supports verification only; supply a candidate integral";
    return res;
  }
  Submodule I = integral_module(H, side);
  if (I.is_zero()) {
    res.verdict = SearchVerdict::provably_none;
    res.note = "the module of " + std::string(side_name(side)) + " integrals is zero";
    return res;
  }
  std::vector<Vec> gens = I.generators();
  std::vector<RingElement> vals;
  for (auto& g : gens) vals.push_back(H.eps_of(g));
  auto coeffs = detail::unit_combination(H.ring, vals);
  if (!coeffs) {
    res.verdict = SearchVerdict::provably_none;
    res.note = "eps(integrals) is a proper ideal; no integral has invertible counit value";
    return res;
  }
  Vec t = zero_vec(H.ring, H.dim);
  for (size_t i = 0; i < gens.size(); ++i) t = vec_add(t, vec_scale((*coeffs)[i], gens[i]));
  return separability_from_candidate(H, t, side);
}

/// Ground truth: solve the affine system "u centralizes H and mu(u) = 1"
/// directly over the tensor square. Conclusive over solvable tiers.
inline SeparabilityResult separability_generic(const FiniteAlgebra& H) {
  H.require_unit("separability_generic");
  if (!H.ring.solving_supported())
    raise(errc::unsupported_ring_tier,
          "separability_generic over " + H.ring.to_string());
  const size_t n = H.dim;
  const Ring& R = H.ring;
  auto unknown = [&](size_t a, size_t b) { return a * n + b; };

  std::vector<Vec> rows;
  Vec rhs;
  // Centralizing: for each basis i and each tensor coordinate (p, q):
  // sum_a L_i(p,a) U(a,q) - sum_b R_i(q,b) U(p,b) = 0.
  for (size_t i = 0; i < n; ++i) {
    Matrix L = H.leftmul_matrix(H.basis_vec(i));
    Matrix Rm = H.rightmul_matrix(H.basis_vec(i));
    for (size_t p = 0; p < n; ++p)
      for (size_t q = 0; q < n; ++q) {
        Vec row = zero_vec(R, n * n);
        for (size_t a = 0; a < n; ++a) row[unknown(a, q)] = row[unknown(a, q)] + L.at(p, a);
        for (size_t b = 0; b < n; ++b) row[unknown(p, b)] = row[unknown(p, b)] - Rm.at(q, b);
        rows.push_back(std::move(row));
        rhs.push_back(R.zero());
      }
  }
  // mu(U) = 1.
  for (size_t k = 0; k < n; ++k) {
    Vec row = zero_vec(R, n * n);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) row[unknown(a, b)] = H.mul[a][b][k];
    rows.push_back(std::move(row));
    rhs.push_back((*H.unit)[k]);
  }
  // Stay inside the support ideals.
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      RingElement c = R.one() - H.support[a] * H.support[b];
      if (c.is_zero()) continue;
      Vec row = zero_vec(R, n * n);
      row[unknown(a, b)] = c;
      rows.push_back(std::move(row));
      rhs.push_back(R.zero());
    }

  AffineSolution sol = solve_affine(Matrix::from_rows(R, rows, n * n), rhs);
  SeparabilityResult res;
  if (!sol.particular) {
    res.verdict = SearchVerdict::provably_none;
    res.note = "the affine system 'centralizing and mu(u)=1' has no solution";
    return res;
  }
  Matrix U(R, n, n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) U.at(a, b) = (*sol.particular)[unknown(a, b)];
  CheckResult cert = verify_separability_certificate(H, U);
  if (!cert.ok) raise(errc::not_an_integral, "generic certificate failed: " + cert.detail);
  res.verdict = SearchVerdict::found;
  res.certificate = std::move(U);
  return res;
}

// --- sub-bialgebras, normality, quotients ---

struct SubbialgebraReport {
  bool is_submodule_basis = false;  // given vectors are independent (field)
  bool closed_under_mul = false;
  bool contains_unit = false;
  bool comul_closed = false;   // Delta(K) inside K (x) K
  bool antipode_closed = false;
  bool normal = false;         // K+ H == H K+
  Submodule right_augmentation_ideal;  // K+ H
  Submodule left_augmentation_ideal;   // H K+

  bool is_subbialgebra() const {
    return closed_under_mul && contains_unit && comul_closed;
  }
};

namespace detail {

inline Vec flatten_tensor(const Matrix& T) {
  Vec v;
  v.reserve(T.rows() * T.cols());
  for (size_t a = 0; a < T.rows(); ++a)
    for (size_t b = 0; b < T.cols(); ++b) v.push_back(T.at(a, b));
  return v;
}

}  // namespace detail

/// Check K (given by basis vectors in H-coordinates) is a sub-bialgebra
/// and compute the two augmentation ideals K+ H and H K+. Field tier only.
inline SubbialgebraReport subbialgebra_check(const FiniteAlgebra& H,
                                             const std::vector<Vec>& K) {
  H.require_coalgebra("subbialgebra check");
  H.require_unit("subbialgebra check");
  if (!H.ring.is_field())
    raise(errc::unsupported_ring_tier, "sub-bialgebra analysis requires a field");
  const Ring& R = H.ring;
  const size_t n = H.dim;
  SubbialgebraReport rep{.right_augmentation_ideal = Submodule::zero(R, n),
                         .left_augmentation_ideal = Submodule::zero(R, n)};

  Submodule Kspan = Submodule::span(R, n, K);
  rep.is_submodule_basis = Kspan.rank() == K.size();

  rep.closed_under_mul = true;
  for (auto& a : K)
    for (auto& b : K)
      if (!Kspan.contains(H.multiply(a, b))) rep.closed_under_mul = false;
  rep.contains_unit = Kspan.contains(*H.unit);

  // Delta(K) inside K (x) K: membership in the span of the k_a (x) k_b.
  std::vector<Vec> pair_tensors;
  for (auto& a : K)
    for (auto& b : K) {
      Matrix T(R, n, n);
      for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q) T.at(p, q) = a[p] * b[q];
      pair_tensors.push_back(detail::flatten_tensor(T));
    }
  Submodule KK = Submodule::span(R, n * n, pair_tensors);
  rep.comul_closed = true;
  for (auto& a : K)
    if (!KK.contains(detail::flatten_tensor(H.delta_of(a)))) rep.comul_closed = false;

  if (H.antipode) {
    rep.antipode_closed = true;
    for (auto& a : K)
      if (!Kspan.contains(H.apply_antipode(a))) rep.antipode_closed = false;
  }

  // K+ = K intersect ker(eps): kernel of the 1 x |K| matrix [eps(k_i)].
  Matrix epsK(R, 1, K.size());
  for (size_t i = 0; i < K.size(); ++i) epsK.at(0, i) = H.eps_of(K[i]);
  std::vector<Vec> Kplus;
  for (auto& c : kernel(epsK).generators()) {
    Vec v = zero_vec(R, n);
    for (size_t i = 0; i < K.size(); ++i) v = vec_add(v, vec_scale(c[i], K[i]));
    Kplus.push_back(std::move(v));
  }

  std::vector<Vec> right_gens, left_gens;
  for (auto& kp : Kplus)
    for (size_t j = 0; j < n; ++j) {
      right_gens.push_back(H.multiply(kp, H.basis_vec(j)));
      left_gens.push_back(H.multiply(H.basis_vec(j), kp));
    }
  rep.right_augmentation_ideal = Submodule::span(R, n, right_gens);
  rep.left_augmentation_ideal = Submodule::span(R, n, left_gens);
  rep.normal = rep.right_augmentation_ideal == rep.left_augmentation_ideal;
  return rep;
}

struct QuotientResult {
  FiniteAlgebra quotient;
  Matrix projection;  // dim_quotient x dim_H: pi(v) = projection * v
  Submodule ideal;    // J = K+ H = H K+
};

/// H / (K+ H) as a Hopf algebra, for a normal Hopf sub-bialgebra K of a
/// Hopf algebra over a field.
inline QuotientResult hopf_quotient(const FiniteAlgebra& H, const std::vector<Vec>& K) {
  H.require_antipode("hopf_quotient");
  SubbialgebraReport rep = subbialgebra_check(H, K);
  if (!rep.is_subbialgebra())
    raise(errc::not_a_subbialgebra, "the given basis does not span a sub-bialgebra");
  if (H.antipode && !rep.antipode_closed)
    raise(errc::not_a_subbialgebra, "the sub-bialgebra is not antipode-stable");
  if (!rep.normal) raise(errc::not_normal, "K+ H != H K+");

  const Ring& R = H.ring;
  const size_t n = H.dim;
  const Submodule& J = rep.right_augmentation_ideal;

  // Sanity: J must be a two-sided ideal, Delta(J) in J(x)H + H(x)J,
  // eps(J) = 0 and S(J) in J; otherwise the induced maps are ill-defined.
  std::vector<Vec> mixed;
  for (auto& j : J.generators()) {
    for (size_t i = 0; i < n; ++i) {
      if (!J.contains(H.multiply(j, H.basis_vec(i))) ||
          !J.contains(H.multiply(H.basis_vec(i), j)))
        raise(errc::induced_structure_ill_defined, "J is not a two-sided ideal");
      Matrix T1(R, n, n), T2(R, n, n);
      for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q) {
          T1.at(p, q) = j[p] * H.support[q] * (q == i ? R.one() : R.zero());
          T2.at(p, q) = (p == i ? R.one() : R.zero()) * H.support[p] * j[q];
        }
      mixed.push_back(detail::flatten_tensor(T1));
      mixed.push_back(detail::flatten_tensor(T2));
    }
    if (!H.eps_of(j).is_zero())
      raise(errc::induced_structure_ill_defined, "eps(J) != 0");
    if (!J.contains(H.apply_antipode(j)))
      raise(errc::induced_structure_ill_defined, "S(J) not inside J");
  }
  Submodule JHHJ = Submodule::span(R, n * n, mixed);
  for (auto& j : J.generators())
    if (!JHHJ.contains(detail::flatten_tensor(H.delta_of(j))))
      raise(errc::induced_structure_ill_defined, "Delta(J) not inside J(x)H + H(x)J");

  // Complement basis: non-pivot coordinates of the reduced form of J.
  EchelonResult E = rref(Matrix::from_rows(R, J.generators(), n));
  std::vector<bool> is_pivot(n, false);
  for (size_t c : E.pivots) is_pivot[c] = true;
  std::vector<size_t> comp;
  for (size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) comp.push_back(c);
  const size_t q = comp.size();

  // projection: reduce e_i against J, read off complement coordinates.
  Matrix P(R, q, n);
  for (size_t i = 0; i < n; ++i) {
    Vec r = detail::reduce_against(E, H.basis_vec(i));
    for (size_t c = 0; c < q; ++c) P.at(c, i) = r[comp[c]];
  }
  auto project = [&](const Vec& v) { return mat_vec(P, v); };

  FiniteAlgebra V = FiniteAlgebra::with_dim(R, q);
  for (size_t c = 0; c < q; ++c) V.labels[c] = "[" + H.labels[comp[c]] + "]";
  for (size_t c = 0; c < q; ++c)
    for (size_t d = 0; d < q; ++d)
      V.mul[c][d] = project(H.multiply(H.basis_vec(comp[c]), H.basis_vec(comp[d])));
  V.unit = project(*H.unit);

  std::vector<Matrix> comul;
  Vec counit = zero_vec(R, q);
  for (size_t c = 0; c < q; ++c) {
    // (pi (x) pi) Delta(e_c): T' = P T P^t.
    Matrix T = (*H.comul)[comp[c]];
    comul.push_back(mat_mul(mat_mul(P, T), transpose(P)));
    counit[c] = (*H.counit)[comp[c]];
  }
  V.comul = std::move(comul);
  V.counit = std::move(counit);

  Matrix S(R, q, q);
  for (size_t c = 0; c < q; ++c) {
    Vec img = project(H.apply_antipode(H.basis_vec(comp[c])));
    for (size_t d = 0; d < q; ++d) S.at(c, d) = img[d];
  }
  V.antipode = std::move(S);

  return {std::move(V), std::move(P), J};
}

}  // namespace hopfint
