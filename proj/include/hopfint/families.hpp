#pragma once

#include <random>
#include <string>
#include <vector>

#include "hopfint/algebra.hpp"

namespace hopfint {

namespace detail {

/// Canonical representative of x + <n> in R. For n = 0 this is x itself,
/// for a unit n it is 0; over Z and Z/m representatives are reduced with
/// division by (the gcd lift of) n, and product rings reduce componentwise.
inline RingElement reduce_mod_ideal(const Ring& R, const RingElement& n, const RingElement& x) {
  if (n.is_zero()) return x;
  if (is_unit(n)) return R.zero();
  switch (R.kind()) {
    case RingKind::integers: {
      mpz_class m = abs(n.as_integer());
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), x.as_integer().get_mpz_t(), m.get_mpz_t());
      return R.from_integer(r);
    }
    case RingKind::integers_mod: {
      mpz_class g = gcd(n.as_integer(), R.modulus());
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), x.as_integer().get_mpz_t(), g.get_mpz_t());
      return R.from_integer(r);
    }
    case RingKind::product: {
      std::vector<RingElement> parts;
      const auto& nf = n.components();
      const auto& xf = x.components();
      for (size_t i = 0; i < R.factors().size(); ++i)
        parts.push_back(reduce_mod_ideal(R.factors()[i], nf[i], xf[i]));
      return R.tuple(std::move(parts));
    }
    default:
      raise(errc::unsupported_ring_tier,
            "no canonical representatives modulo <" + n.to_string() + "> over " + R.to_string());
  }
}

inline RingElement binomial(const Ring& R, unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return R.from_integer(b);
}

}  // namespace detail

/// An element of R[X]/<nX> of degree at most d: coeffs[k] multiplies X^k,
/// with coefficients of degree >= 1 stored as canonical representatives
/// modulo <n>. The overflow flag records that some product discarded a
/// nonzero coefficient above the degree bound.
struct TruncatedPoly {
  Vec coeffs;
  bool overflow = false;

  friend bool operator==(const TruncatedPoly& a, const TruncatedPoly& b) {
    return a.coeffs == b.coeffs;
  }
  friend bool operator!=(const TruncatedPoly& a, const TruncatedPoly& b) { return !(a == b); }
};

/// Degree-d model of the Hopf algebra H = R[X]/<nX> with X primitive:
/// Delta(X) = 1 (x) X + X (x) 1, eps(X) = 0, S(X) = -X. The full H is not
/// finitely generated as an R-module (that is a structural fact about the
/// untruncated object, not something this model tests); every check below
/// is exact on the stored degrees.
struct TruncatedPolyHopf {
  Ring ring;
  RingElement n;
  size_t degree;

  RingElement reduce(const RingElement& x) const {
    return detail::reduce_mod_ideal(ring, n, x);
  }

  TruncatedPoly normalize(Vec raw, bool overflow) const {
    for (size_t k = 1; k < raw.size(); ++k) raw[k] = reduce(raw[k]);
    return {std::move(raw), overflow};
  }

  TruncatedPoly zero() const { return {zero_vec(ring, degree + 1), false}; }

  TruncatedPoly constant(const RingElement& c) const {
    TruncatedPoly f = zero();
    f.coeffs[0] = c;
    return f;
  }

  TruncatedPoly one() const { return constant(ring.one()); }

  TruncatedPoly monomial(size_t k, const RingElement& c) const {
    if (k > degree) raise(errc::dimension_mismatch, "monomial degree above the bound");
    TruncatedPoly f = zero();
    f.coeffs[k] = k == 0 ? c : reduce(c);
    return f;
  }

  TruncatedPoly monomial(size_t k) const { return monomial(k, ring.one()); }

  bool is_zero(const TruncatedPoly& f) const {
    return vec_is_zero(f.coeffs);
  }

  TruncatedPoly add(const TruncatedPoly& a, const TruncatedPoly& b) const {
    return normalize(vec_add(a.coeffs, b.coeffs), a.overflow || b.overflow);
  }

  TruncatedPoly scale(const RingElement& c, const TruncatedPoly& a) const {
    return normalize(vec_scale(c, a.coeffs), a.overflow);
  }

  TruncatedPoly multiply(const TruncatedPoly& a, const TruncatedPoly& b) const {
    Vec out = zero_vec(ring, degree + 1);
    bool overflow = a.overflow || b.overflow;
    for (size_t i = 0; i <= degree; ++i) {
      if (a.coeffs[i].is_zero()) continue;
      for (size_t j = 0; j <= degree; ++j) {
        if (b.coeffs[j].is_zero()) continue;
        RingElement term = a.coeffs[i] * b.coeffs[j];
        if (i + j <= degree)
          out[i + j] = out[i + j] + term;
        else if (!reduce(term).is_zero())
          overflow = true;
      }
    }
    return normalize(std::move(out), overflow);
  }

  RingElement eps(const TruncatedPoly& f) const { return f.coeffs[0]; }

  /// S(X^k) = (-X)^k.
  TruncatedPoly antipode_of(const TruncatedPoly& f) const {
    Vec out = f.coeffs;
    for (size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
    return normalize(std::move(out), f.overflow);
  }

  /// Delta(X^k) = sum_i C(k,i) X^i (x) X^{k-i}; never truncates since both
  /// tensor degrees stay <= k. Entry (i,j) multiplies X^i (x) X^j and is
  /// reduced modulo <n> unless i = j = 0.
  Matrix comul_monomial(size_t k) const {
    Matrix T(ring, degree + 1, degree + 1);
    for (size_t i = 0; i <= k; ++i) {
      RingElement c = detail::binomial(ring, k, i);
      T.at(i, k - i) = (i == 0 && k == 0) ? c : reduce(c);
    }
    return T;
  }

  std::string describe(const TruncatedPoly& f) const {
    std::string s;
    for (size_t k = 0; k <= degree; ++k) {
      if (f.coeffs[k].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += f.coeffs[k].to_string();
      if (k > 0) s += "*X^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
  }
};

/// The degree-d model of R[X]/<nX>. n must be a nonzero non-unit, which
/// rules out fields.
inline TruncatedPolyHopf truncated_quotient_hopf(const Ring& R, const RingElement& n, size_t d) {
  if (n.ring() != R) raise(errc::ring_mismatch, "modulus from a different ring");
  if (n.is_zero() || is_unit(n))
    raise(errc::invalid_modulus, "need a nonzero non-invertible modulus, got " + n.to_string());
  return {R, n, d};
}

/// nbar = n as a degree-0 element is a two-sided integral: nbar * f =
/// eps(f) nbar = f * nbar. Checked on every monomial X^k, k <= d, and on a
/// fixed pseudorandom set of dense polynomials (seed 12345, five samples
/// with integer coefficients in [-3, 3]). Multiplication by a degree-0
/// element never overflows; any overflow fails the check outright.
inline bool verify_integral_family(const TruncatedPolyHopf& H, const TruncatedPoly* t_opt = nullptr) {
  TruncatedPoly t = t_opt ? *t_opt : H.constant(H.n);
  if (t.overflow) return false;
  auto integral_on = [&](const TruncatedPoly& f) {
    TruncatedPoly want = H.scale(H.eps(f), t);
    TruncatedPoly lhs = H.multiply(t, f);
    TruncatedPoly rhs = H.multiply(f, t);
    return !lhs.overflow && !rhs.overflow && lhs == want && rhs == want;
  };
  for (size_t k = 0; k <= H.degree; ++k)
    if (!integral_on(H.monomial(k))) return false;
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int sample = 0; sample < 5; ++sample) {
    Vec dense;
    for (size_t k = 0; k <= H.degree; ++k) dense.push_back(H.ring.from_integer(coeff(rng)));
    if (!integral_on(H.normalize(std::move(dense), false))) return false;
  }
  return true;
}

/// Model with n := e for a nontrivial idempotent e, together with the
/// projection of R[X]_{<=d} onto the ideal <eX>_{<=d} along
/// Re + R(1-e)[X]_{<=d}: the matrix diag(0, e, e, ..., e).
struct ProjectiveFamily {
  TruncatedPolyHopf model;
  Matrix projection;
};

inline ProjectiveFamily projective_family(const Ring& R, const RingElement& e, size_t d) {
  if (e * e != e) raise(errc::not_idempotent, e.to_string() + " is not idempotent");
  if (e.is_zero() || is_unit(e))
    raise(errc::not_idempotent, "need a nontrivial idempotent, got " + e.to_string());
  TruncatedPolyHopf model = truncated_quotient_hopf(R, e, d);
  Matrix P(R, d + 1, d + 1);
  for (size_t k = 1; k <= d; ++k) P.at(k, k) = e;
  return {std::move(model), std::move(P)};
}

/// The projection witnesses R[X]_{<=d} = <eX>_{<=d} + R + R(1-e)X + ... as
/// a direct sum: P is idempotent, its column span is the truncated ideal,
/// its kernel is spanned by 1 and the (1-e) X^k, and the two together span
/// the whole free module.
inline bool verify_projective_witness(const ProjectiveFamily& F) {
  const Ring& R = F.model.ring;
  const RingElement& e = F.model.n;
  const size_t m = F.model.degree + 1;
  if (mat_mul(F.projection, F.projection) != F.projection) return false;

  std::vector<Vec> ideal_gens, complement_gens, all;
  for (size_t k = 1; k < m; ++k) {
    Vec v = zero_vec(R, m);
    v[k] = e;
    ideal_gens.push_back(v);
  }
  Vec one = zero_vec(R, m);
  one[0] = R.one();
  complement_gens.push_back(one);
  for (size_t k = 1; k < m; ++k) {
    Vec v = zero_vec(R, m);
    v[k] = R.one() - e;
    complement_gens.push_back(v);
  }

  std::vector<Vec> columns;
  for (size_t j = 0; j < m; ++j) {
    Vec col = zero_vec(R, m);
    for (size_t i = 0; i < m; ++i) col[i] = F.projection.at(i, j);
    columns.push_back(col);
  }
  if (Submodule::span(R, m, columns) != Submodule::span(R, m, ideal_gens)) return false;
  if (kernel(F.projection) != Submodule::span(R, m, complement_gens)) return false;

  all = ideal_gens;
  all.insert(all.end(), complement_gens.begin(), complement_gens.end());
  std::vector<Vec> full;
  for (size_t i = 0; i < m; ++i) {
    Vec v = zero_vec(R, m);
    v[i] = R.one();
    full.push_back(v);
  }
  return Submodule::span(R, m, all) == Submodule::span(R, m, full);
}

/// Bounded-degree invariants of A#H for H = R[X]/<eX> acting trivially on
/// A = R(1-e): elements gamma = sum c_k X^k with c_k in R(1-e),
/// (1#1) gamma = gamma and (1#X) gamma = 0. The X-condition is imposed on
/// all output degrees through d+1 (the one discarded coefficient is still
/// exactly computable), so a zero answer at degree d is a theorem about
/// every gamma of degree <= d in the untruncated object.
struct BoundedInvariants {
  size_t degree;
  bool zero;
  std::string note;
};

inline BoundedInvariants counterexample_4_6(const Ring& R, const RingElement& e, size_t d) {
  if (e * e != e) raise(errc::not_idempotent, e.to_string() + " is not idempotent");
  if (e.is_zero() || is_unit(e))
    raise(errc::not_idempotent, "need a nontrivial idempotent, got " + e.to_string());
  const size_t m = d + 1;
  // Rows e c_k = 0 pin gamma to the (1-e)-component ((1#1) gamma = gamma);
  // rows (1-e) c_k = 0 say the degree-(k+1) coefficient of (1#X) gamma
  // vanishes in A (x) R/<e>.
  Matrix sys(R, 2 * m, m);
  for (size_t k = 0; k < m; ++k) {
    sys.at(k, k) = e;
    sys.at(m + k, k) = R.one() - e;
  }
  bool zero = kernel(sys).is_zero();
  return {d, zero,
          "invariants of degree <= " + std::to_string(d) +
              " (X-action checked through degree " + std::to_string(d + 1) + ")"};
}

/// H = k x k[x] over R = k x k, realized as R[X]/<eX> for e = (1,0): the
/// first factor is Re and the polynomial factor is R(1-e)[X]. t = (1,0)
/// as a degree-0 element is a nonzero integral although H is not finite.
struct PolyFactorModel {
  TruncatedPolyHopf model;
  TruncatedPoly t;
  bool integral_verified;
};

inline PolyFactorModel product_with_polynomial_factor(const Ring& k, size_t d) {
  if (!k.is_field())
    raise(errc::invalid_element, "product_with_polynomial_factor expects a field, got " + k.to_string());
  Ring R = Ring::product({k, k});
  RingElement e = R.tuple({k.one(), k.zero()});
  TruncatedPolyHopf model = truncated_quotient_hopf(R, e, d);
  TruncatedPoly t = model.constant(e);
  bool ok = verify_integral_family(model, &t);
  return {std::move(model), std::move(t), ok};
}

}  // namespace hopfint
