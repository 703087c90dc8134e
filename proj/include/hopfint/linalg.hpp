#pragma once

#include <optional>

#include "hopfint/matrix.hpp"

namespace hopfint {

/// Canonical row-span form together with its pivot columns. Rows are
/// ordered by pivot column and zero rows are dropped, so two matrices have
/// the same row span over the ring iff their forms are equal.
struct EchelonResult {
  Matrix mat;
  std::vector<size_t> pivots;
};

namespace detail {

inline void xgcd(const mpz_class& a, const mpz_class& b, mpz_class& g, mpz_class& s,
                 mpz_class& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline mpz_class fdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

using ZMat = std::vector<std::vector<mpz_class>>;

inline ZMat to_zmat(const Matrix& A) {
  ZMat M(A.rows(), std::vector<mpz_class>(A.cols()));
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j) M[i][j] = A.at(i, j).as_integer();
  return M;
}

inline Matrix from_zmat(const Ring& R, const ZMat& M, size_t cols) {
  Matrix A(R, M.size(), cols);
  for (size_t i = 0; i < M.size(); ++i)
    for (size_t j = 0; j < cols; ++j) A.at(i, j) = R.from_integer(M[i][j]);
  return A;
}

inline void mod_reduce(ZMat& M, const mpz_class& m) {
  for (auto& row : M)
    for (auto& x : row) mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
}

/// Replace rows i and j by unimodular combinations that put gcd(a,b) at
/// (i, col) and 0 at (j, col), where a = M[i][col], b = M[j][col].
/// The transform [[s, t], [-b/g, a/g]] has determinant 1.
inline void gcd_combine_rows(ZMat& M, size_t i, size_t j, size_t col,
                             const std::optional<mpz_class>& mod) {
  const mpz_class a = M[i][col], b = M[j][col];
  if (b == 0) return;
  mpz_class g, s, t;
  xgcd(a, b, g, s, t);
  const mpz_class u = -b / g, v = a / g;
  for (size_t c = 0; c < M[i].size(); ++c) {
    mpz_class ri = s * M[i][c] + t * M[j][c];
    mpz_class rj = u * M[i][c] + v * M[j][c];
    if (mod) {
      mpz_mod(ri.get_mpz_t(), ri.get_mpz_t(), mod->get_mpz_t());
      mpz_mod(rj.get_mpz_t(), rj.get_mpz_t(), mod->get_mpz_t());
    }
    M[i][c] = ri;
    M[j][c] = rj;
  }
}

/// Row echelon over Z (mod == nullopt) or Z/m, without pivot normalization.
/// Returns pivot columns; echelon rows come first, zero rows are erased.
inline std::vector<size_t> echelonize(ZMat& M, const std::optional<mpz_class>& mod) {
  std::vector<size_t> pivots;
  if (M.empty()) return pivots;
  const size_t n = M[0].size();
  size_t r = 0;
  for (size_t c = 0; c < n && r < M.size(); ++c) {
    for (size_t i = r + 1; i < M.size(); ++i) gcd_combine_rows(M, r, i, c, mod);
    if (M[r][c] != 0) {
      pivots.push_back(c);
      ++r;
    }
  }
  M.resize(r);
  return pivots;
}

}  // namespace detail

/// Reduced row echelon form over a field (Q or GF(p)); pivots are 1, pivot
/// columns are otherwise zero, zero rows dropped.
inline EchelonResult rref(Matrix A) {
  if (!A.ring().is_field()) raise(errc::unsupported_ring_tier, "rref requires a field");
  const Ring& R = A.ring();
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
    size_t sel = r;
    while (sel < A.rows() && A.at(sel, c).is_zero()) ++sel;
    if (sel == A.rows()) continue;
    for (size_t j = 0; j < A.cols(); ++j) std::swap(A.at(r, j), A.at(sel, j));
    RingElement inv = unit_inverse(A.at(r, c));
    for (size_t j = 0; j < A.cols(); ++j) A.at(r, j) = inv * A.at(r, j);
    for (size_t i = 0; i < A.rows(); ++i) {
      if (i == r || A.at(i, c).is_zero()) continue;
      RingElement f = A.at(i, c);
      for (size_t j = 0; j < A.cols(); ++j) A.at(i, j) = A.at(i, j) - f * A.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(R, r, A.cols());
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < A.cols(); ++j) out.at(i, j) = A.at(i, j);
  return {out, pivots};
}

/// Hermite normal form (row style) over Z: positive pivots, entries above a
/// pivot reduced into [0, pivot), zero rows dropped.
inline EchelonResult hnf(const Matrix& A) {
  if (A.ring().kind() != RingKind::integers)
    raise(errc::unsupported_ring_tier, "hnf requires Z");
  detail::ZMat M = detail::to_zmat(A);
  std::vector<size_t> pivots = detail::echelonize(M, std::nullopt);
  for (size_t k = 0; k < pivots.size(); ++k) {
    size_t c = pivots[k];
    if (M[k][c] < 0)
      for (auto& x : M[k]) x = -x;
    for (size_t i = 0; i < k; ++i) {
      mpz_class q = detail::fdiv(M[i][c], M[k][c]);
      if (q == 0) continue;
      for (size_t j = 0; j < M[i].size(); ++j) M[i][j] -= q * M[k][j];
    }
  }
  return {detail::from_zmat(A.ring(), M, A.cols()), pivots};
}

/// Howell form over Z/m: the canonical strong echelon form whose rows with
/// leading index >= j span every row of the span with leading index >= j.
/// Pivots are the divisors gcd(a, m) of m, entries above a pivot lie in
/// [0, pivot). Computed by echelonizing, adjoining annihilator rows
/// (m/gcd(pivot,m)) * row until the normalized form is stable.
inline EchelonResult howell(const Matrix& A) {
  if (A.ring().kind() != RingKind::integers_mod && A.ring().kind() != RingKind::prime_field)
    raise(errc::unsupported_ring_tier, "howell requires Z/m");
  const mpz_class m = A.ring().modulus();
  detail::ZMat M = detail::to_zmat(A);
  detail::mod_reduce(M, m);

  auto normalize = [&](detail::ZMat& H, const std::vector<size_t>& pivots) {
    for (size_t k = 0; k < pivots.size(); ++k) {
      size_t c = pivots[k];
      mpz_class d = detail::gcd(H[k][c], m);
      if (H[k][c] != d) {
        // A unit u with u * pivot == d (mod m) always exists; m is small.
        for (mpz_class u = 1; u < m; ++u) {
          if (detail::gcd(u, m) != 1) continue;
          mpz_class p;
          mpz_mod(p.get_mpz_t(), mpz_class(u * H[k][c]).get_mpz_t(), m.get_mpz_t());
          if (p == d) {
            for (auto& x : H[k]) {
              x *= u;
              mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
            }
            break;
          }
        }
      }
      for (size_t i = 0; i < k; ++i) {
        mpz_class q = H[i][c] / d;
        if (q == 0) continue;
        for (size_t j = 0; j < H[i].size(); ++j) {
          H[i][j] -= q * H[k][j];
          mpz_mod(H[i][j].get_mpz_t(), H[i][j].get_mpz_t(), m.get_mpz_t());
        }
      }
    }
  };

  // Greedy reduction against the normalized echelon rows; for a vector with
  // leading zeros it only ever uses rows with later pivots, so a zero
  // remainder witnesses exactly the containment the Howell property needs.
  auto greedy_reduce = [&](const detail::ZMat& H, const std::vector<size_t>& pivots,
                           std::vector<mpz_class> v) {
    for (size_t k = 0; k < pivots.size(); ++k) {
      const size_t c = pivots[k];
      if (v[c] == 0) continue;
      mpz_class q = v[c] / H[k][c];
      if (q == 0) continue;
      for (size_t j = 0; j < v.size(); ++j) {
        v[j] -= q * H[k][j];
        mpz_mod(v[j].get_mpz_t(), v[j].get_mpz_t(), m.get_mpz_t());
      }
    }
    return v;
  };

  std::vector<size_t> pivots;
  while (true) {
    pivots = detail::echelonize(M, m);
    normalize(M, pivots);
    // Adjoin annihilator remainders until every annihilator row reduces to
    // zero; each adjoined remainder strictly grows a pivot or strictly
    // shrinks a pivot divisor, so this terminates.
    std::vector<std::vector<mpz_class>> extra;
    for (size_t k = 0; k < pivots.size(); ++k) {
      mpz_class w = m / detail::gcd(M[k][pivots[k]], m);
      if (w == 1) continue;
      std::vector<mpz_class> ann(M[k].size());
      for (size_t j = 0; j < ann.size(); ++j)
        mpz_mod(ann[j].get_mpz_t(), mpz_class(w * M[k][j]).get_mpz_t(), m.get_mpz_t());
      auto rem = greedy_reduce(M, pivots, std::move(ann));
      if (std::any_of(rem.begin(), rem.end(), [](const mpz_class& x) { return x != 0; }))
        extra.push_back(std::move(rem));
    }
    if (extra.empty()) break;
    for (auto& e : extra) M.push_back(std::move(e));
  }
  return {detail::from_zmat(A.ring(), M, A.cols()), pivots};
}

/// Smith normal form with transforms: U * A * V = D with U, V unimodular
/// over Z and D diagonal with d_1 | d_2 | ... >= 0.
struct SnfResult {
  Matrix U, D, V;
};

inline SnfResult snf(const Matrix& A) {
  if (A.ring().kind() != RingKind::integers)
    raise(errc::unsupported_ring_tier, "snf requires Z");
  const Ring& R = A.ring();
  const size_t m = A.rows(), n = A.cols();
  detail::ZMat D = detail::to_zmat(A);
  detail::ZMat U(m, std::vector<mpz_class>(m, 0)), V(n, std::vector<mpz_class>(n, 0));
  for (size_t i = 0; i < m; ++i) U[i][i] = 1;
  for (size_t j = 0; j < n; ++j) V[j][j] = 1;

  auto row_op = [&](size_t i, size_t j, const mpz_class& q) {  // row_i -= q * row_j
    for (size_t c = 0; c < n; ++c) D[i][c] -= q * D[j][c];
    for (size_t c = 0; c < m; ++c) U[i][c] -= q * U[j][c];
  };
  auto col_op = [&](size_t i, size_t j, const mpz_class& q) {  // col_i -= q * col_j
    for (size_t r = 0; r < m; ++r) D[r][i] -= q * D[r][j];
    for (size_t r = 0; r < n; ++r) V[r][i] -= q * V[r][j];
  };
  auto row_swap = [&](size_t i, size_t j) {
    std::swap(D[i], D[j]);
    std::swap(U[i], U[j]);
  };
  auto col_swap = [&](size_t i, size_t j) {
    for (size_t r = 0; r < m; ++r) std::swap(D[r][i], D[r][j]);
    for (size_t r = 0; r < n; ++r) std::swap(V[r][i], V[r][j]);
  };

  const size_t lim = std::min(m, n);
  for (size_t t = 0; t < lim; ++t) {
    while (true) {
      // Move the absolutely smallest nonzero entry of D[t.., t..] to (t, t).
      bool found = false;
      size_t pi = t, pj = t;
      for (size_t i = t; i < m; ++i)
        for (size_t j = t; j < n; ++j) {
          if (D[i][j] == 0) continue;
          if (!found || cmp(abs(D[i][j]), abs(D[pi][pj])) < 0) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) {
        t = lim;  // the rest of the matrix is zero
        break;
      }
      if (pi != t) row_swap(t, pi);
      if (pj != t) col_swap(t, pj);

      bool clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (D[i][t] == 0) continue;
        row_op(i, t, D[i][t] / D[t][t]);
        if (D[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (D[t][j] == 0) continue;
        col_op(j, t, D[t][j] / D[t][t]);
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: d_t must divide every remaining entry.
      bool divides = true;
      for (size_t i = t + 1; i < m && divides; ++i)
        for (size_t j = t + 1; j < n && divides; ++j)
          if (!mpz_divisible_p(D[i][j].get_mpz_t(), D[t][t].get_mpz_t())) {
            row_op(t, i, mpz_class(-1));  // row_t += row_i, then restart
            divides = false;
          }
      if (divides) break;
    }
    if (t >= lim) break;
    if (D[t][t] < 0) {
      for (size_t c = 0; c < n; ++c) D[t][c] = -D[t][c];
      for (size_t c = 0; c < m; ++c) U[t][c] = -U[t][c];
    }
  }
  return {detail::from_zmat(R, U, m), detail::from_zmat(R, D, n), detail::from_zmat(R, V, n)};
}

/// Canonical form of the row span of A over a non-product solvable ring.
inline EchelonResult canonical_row_span(const Matrix& A) {
  switch (A.ring().tier()) {
    case RingTier::field: return rref(A);
    case RingTier::pid: return hnf(A);
    case RingTier::finite_pir: return howell(A);
    default:
      raise(errc::unsupported_ring_tier,
            "no canonical row form over " + A.ring().to_string());
  }
}

namespace detail {

/// Greedy reduction of v against a canonical echelon form; v is in the row
/// span iff the remainder is zero (the forms are strong enough that greedy
/// reduction is complete for membership).
inline Vec reduce_against(const EchelonResult& E, Vec v) {
  const Ring& R = E.mat.ring();
  for (size_t k = 0; k < E.pivots.size(); ++k) {
    const size_t c = E.pivots[k];
    if (v[c].is_zero()) continue;
    RingElement q = R.zero();
    switch (R.tier()) {
      case RingTier::field: q = v[c] * unit_inverse(E.mat.at(k, c)); break;
      case RingTier::pid: q = R.from_integer(fdiv(v[c].as_integer(), E.mat.at(k, c).as_integer()));
        break;
      case RingTier::finite_pir:
        // Pivot divides m, residues of span members at column c are
        // multiples of the pivot; integer division is exact on members.
        q = R.from_integer(v[c].as_integer() / E.mat.at(k, c).as_integer());
        break;
      default: raise(errc::unsupported_ring_tier, "reduce_against");
    }
    if (q.is_zero()) continue;
    for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - q * E.mat.at(k, j);
  }
  return v;
}

inline Vec component_vec(const Vec& v, size_t idx) {
  Vec out;
  out.reserve(v.size());
  for (auto& x : v) out.push_back(x.components()[idx]);
  return out;
}

inline Matrix component_matrix(const Matrix& A, size_t idx) {
  const Ring& F = A.ring().factors()[idx];
  Matrix out(F, A.rows(), A.cols());
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j) out.at(i, j) = A.at(i, j).components()[idx];
  return out;
}

}  // namespace detail

/// A finitely generated submodule of R^n in canonical form. Over a product
/// ring R = R_1 x ... x R_k a submodule is the product of its component
/// submodules (coefficients act independently per factor), so the canonical
/// data is one echelon form per factor.
class Submodule {
 public:
  static Submodule span(const Ring& R, size_t ambient, const std::vector<Vec>& generators) {
    for (auto& g : generators)
      if (g.size() != ambient) raise(errc::dimension_mismatch, "submodule generator length");
    Submodule s(R, ambient);
    if (R.kind() == RingKind::product) {
      for (size_t f = 0; f < R.factors().size(); ++f) {
        std::vector<Vec> comp;
        comp.reserve(generators.size());
        for (auto& g : generators) comp.push_back(detail::component_vec(g, f));
        s.comp_.push_back(
            canonical_row_span(Matrix::from_rows(R.factors()[f], comp, ambient)));
      }
    } else {
      s.comp_.push_back(canonical_row_span(Matrix::from_rows(R, generators, ambient)));
    }
    return s;
  }

  static Submodule zero(const Ring& R, size_t ambient) { return span(R, ambient, {}); }

  const Ring& ring() const { return ring_; }
  size_t ambient_dim() const { return ambient_; }

  bool is_zero() const {
    for (auto& e : comp_)
      if (e.mat.rows()) return false;
    return true;
  }

  /// Total number of canonical generators (rows across factors).
  size_t num_generators() const {
    size_t n = 0;
    for (auto& e : comp_) n += e.mat.rows();
    return n;
  }

  /// Free rank over a field; num_generators otherwise.
  size_t rank() const { return num_generators(); }

  bool contains(const Vec& v) const {
    if (v.size() != ambient_) raise(errc::dimension_mismatch, "submodule membership");
    if (ring_.kind() == RingKind::product) {
      for (size_t f = 0; f < comp_.size(); ++f)
        if (!vec_is_zero(detail::reduce_against(comp_[f], detail::component_vec(v, f))))
          return false;
      return true;
    }
    return vec_is_zero(detail::reduce_against(comp_[0], v));
  }

  bool operator==(const Submodule& other) const {
    if (ring_ != other.ring_ || ambient_ != other.ambient_) return false;
    for (size_t f = 0; f < comp_.size(); ++f)
      if (comp_[f].mat != other.comp_[f].mat) return false;
    return true;
  }
  bool operator!=(const Submodule& other) const { return !(*this == other); }

  Submodule sum(const Submodule& other) const {
    if (ring_ != other.ring_ || ambient_ != other.ambient_)
      raise(errc::dimension_mismatch, "submodule sum");
    auto gens = generators();
    auto g2 = other.generators();
    gens.insert(gens.end(), g2.begin(), g2.end());
    return span(ring_, ambient_, gens);
  }

  /// Canonical generators as vectors over R. For a product ring each factor
  /// row is embedded with zeros in the other components.
  std::vector<Vec> generators() const {
    if (ring_.kind() != RingKind::product) return comp_[0].mat.row_list();
    std::vector<Vec> out;
    for (size_t f = 0; f < comp_.size(); ++f) {
      for (size_t i = 0; i < comp_[f].mat.rows(); ++i) {
        Vec v;
        v.reserve(ambient_);
        for (size_t j = 0; j < ambient_; ++j) {
          std::vector<RingElement> parts;
          for (size_t g = 0; g < ring_.factors().size(); ++g)
            parts.push_back(g == f ? comp_[f].mat.at(i, j) : ring_.factors()[g].zero());
          v.push_back(ring_.tuple(std::move(parts)));
        }
        out.push_back(std::move(v));
      }
    }
    return out;
  }

  /// The canonical echelon data (one entry, or one per product factor).
  const std::vector<EchelonResult>& components() const { return comp_; }

 private:
  Submodule(Ring R, size_t ambient) : ring_(std::move(R)), ambient_(ambient) {}
  Ring ring_;
  size_t ambient_;
  std::vector<EchelonResult> comp_;
};

// --- kernels and affine systems ---

namespace detail {

inline Submodule kernel_field(const Matrix& A) {
  EchelonResult E = rref(A);
  const Ring& R = A.ring();
  std::vector<bool> is_pivot(A.cols(), false);
  for (size_t c : E.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < A.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec x = zero_vec(R, A.cols());
    x[f] = R.one();
    for (size_t k = 0; k < E.pivots.size(); ++k) x[E.pivots[k]] = -E.mat.at(k, f);
    basis.push_back(std::move(x));
  }
  return Submodule::span(R, A.cols(), basis);
}

inline Submodule kernel_integers(const Matrix& A) {
  SnfResult S = snf(A);
  const Ring& R = A.ring();
  const size_t n = A.cols(), lim = std::min(A.rows(), n);
  std::vector<Vec> basis;
  for (size_t j = 0; j < n; ++j) {
    if (j < lim && !S.D.at(j, j).is_zero()) continue;
    Vec col;  // column j of V, as a kernel vector
    col.reserve(n);
    for (size_t i = 0; i < n; ++i) col.push_back(S.V.at(i, j));
    basis.push_back(std::move(col));
  }
  return Submodule::span(R, n, basis);
}

/// Kernel over Z/m by lifting: A x == 0 (mod m) iff [A | m*I] (x, z) = 0
/// over Z for some z.
inline Submodule kernel_mod(const Matrix& A) {
  const Ring& R = A.ring();
  const Ring Z = Ring::integers();
  const mpz_class m = R.modulus();
  Matrix lifted(Z, A.rows(), A.cols() + A.rows());
  for (size_t i = 0; i < A.rows(); ++i) {
    for (size_t j = 0; j < A.cols(); ++j) lifted.at(i, j) = Z.from_integer(A.at(i, j).as_integer());
    lifted.at(i, A.cols() + i) = Z.from_integer(m);
  }
  Submodule K = kernel_integers(lifted);
  std::vector<Vec> gens;
  for (auto& g : K.generators()) {
    Vec v;
    v.reserve(A.cols());
    for (size_t j = 0; j < A.cols(); ++j) v.push_back(R.from_integer(g[j].as_integer()));
    gens.push_back(std::move(v));
  }
  return Submodule::span(R, A.cols(), gens);
}

}  // namespace detail

/// Kernel {x in R^cols : A x = 0} as a canonical Submodule.
inline Submodule kernel(const Matrix& A) {
  const Ring& R = A.ring();
  switch (R.tier()) {
    case RingTier::field: return detail::kernel_field(A);
    case RingTier::pid: return detail::kernel_integers(A);
    case RingTier::finite_pir: return detail::kernel_mod(A);
    case RingTier::product: {
      // Independent coefficients per factor: the kernel is the product of
      // the factor kernels, generated by per-factor embeddings.
      std::vector<Vec> gens;
      for (size_t f = 0; f < R.factors().size(); ++f) {
        Submodule Kf = kernel(detail::component_matrix(A, f));
        for (auto& g : Kf.generators()) {
          Vec v;
          v.reserve(A.cols());
          for (size_t j = 0; j < A.cols(); ++j) {
            std::vector<RingElement> parts;
            for (size_t h = 0; h < R.factors().size(); ++h)
              parts.push_back(h == f ? g[j] : R.factors()[h].zero());
            v.push_back(R.tuple(std::move(parts)));
          }
          gens.push_back(std::move(v));
        }
      }
      return Submodule::span(R, A.cols(), gens);
    }
    default: raise(errc::unsupported_ring_tier, "kernel over " + R.to_string());
  }
}

struct AffineSolution {
  std::optional<Vec> particular;
  Submodule homogeneous;
};

/// Solve A x = b exactly; reports one particular solution (if any) and the
/// homogeneous kernel.
inline AffineSolution solve_affine(const Matrix& A, const Vec& b);

namespace detail {

inline std::optional<Vec> particular_field(const Matrix& A, const Vec& b) {
  const Ring& R = A.ring();
  Matrix aug = hstack(A, transpose(Matrix::from_rows(R, {b}, b.size())));
  EchelonResult E = rref(aug);
  for (size_t c : E.pivots)
    if (c == A.cols()) return std::nullopt;
  Vec x = zero_vec(R, A.cols());
  for (size_t k = 0; k < E.pivots.size(); ++k) x[E.pivots[k]] = E.mat.at(k, A.cols());
  return x;
}

inline std::optional<Vec> particular_integers(const Matrix& A, const Vec& b) {
  SnfResult S = snf(A);
  const Ring& R = A.ring();
  Vec c = mat_vec(S.U, b);
  const size_t lim = std::min(A.rows(), A.cols());
  Vec y = zero_vec(R, A.cols());
  for (size_t i = 0; i < A.rows(); ++i) {
    if (i < lim && !S.D.at(i, i).is_zero()) {
      const mpz_class &ci = c[i].as_integer(), &di = S.D.at(i, i).as_integer();
      if (!mpz_divisible_p(ci.get_mpz_t(), di.get_mpz_t())) return std::nullopt;
      y[i] = R.from_integer(mpz_class(ci / di));
    } else if (!c[i].is_zero()) {
      return std::nullopt;
    }
  }
  return mat_vec(S.V, y);
}

inline std::optional<Vec> particular_mod(const Matrix& A, const Vec& b) {
  const Ring& R = A.ring();
  const Ring Z = Ring::integers();
  const mpz_class m = R.modulus();
  Matrix lifted(Z, A.rows(), A.cols() + A.rows());
  Vec bz;
  for (size_t i = 0; i < A.rows(); ++i) {
    for (size_t j = 0; j < A.cols(); ++j) lifted.at(i, j) = Z.from_integer(A.at(i, j).as_integer());
    lifted.at(i, A.cols() + i) = Z.from_integer(m);
    bz.push_back(Z.from_integer(b[i].as_integer()));
  }
  auto sol = particular_integers(lifted, bz);
  if (!sol) return std::nullopt;
  Vec x;
  x.reserve(A.cols());
  for (size_t j = 0; j < A.cols(); ++j) x.push_back(R.from_integer((*sol)[j].as_integer()));
  return x;
}

}  // namespace detail

inline AffineSolution solve_affine(const Matrix& A, const Vec& b) {
  if (b.size() != A.rows()) raise(errc::dimension_mismatch, "solve_affine rhs length");
  const Ring& R = A.ring();
  if (R.kind() == RingKind::product) {
    std::vector<std::optional<Vec>> parts;
    bool ok = true;
    for (size_t f = 0; f < R.factors().size(); ++f) {
      auto s = solve_affine(detail::component_matrix(A, f), detail::component_vec(b, f));
      if (!s.particular) ok = false;
      parts.push_back(s.particular);
    }
    std::optional<Vec> x;
    if (ok) {
      Vec v;
      for (size_t j = 0; j < A.cols(); ++j) {
        std::vector<RingElement> comps;
        for (size_t f = 0; f < R.factors().size(); ++f) comps.push_back((*parts[f])[j]);
        v.push_back(R.tuple(std::move(comps)));
      }
      x = std::move(v);
    }
    return {x, kernel(A)};
  }
  std::optional<Vec> x;
  switch (R.tier()) {
    case RingTier::field: x = detail::particular_field(A, b); break;
    case RingTier::pid: x = detail::particular_integers(A, b); break;
    case RingTier::finite_pir: x = detail::particular_mod(A, b); break;
    default: raise(errc::unsupported_ring_tier, "solve_affine over " + R.to_string());
  }
  return {x, kernel(A)};
}

}  // namespace hopfint
