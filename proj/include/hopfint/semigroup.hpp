#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hopfint/algebra.hpp"

namespace hopfint {

/// A finite semigroup given by its multiplication table:
/// table[i][j] = index of (element i) * (element j).
struct FiniteSemigroup {
  std::vector<std::vector<size_t>> table;
  std::vector<std::string> labels;

  size_t order() const { return table.size(); }
  size_t mul(size_t i, size_t j) const { return table[i][j]; }

  static FiniteSemigroup from_table(std::vector<std::vector<size_t>> t,
                                    std::vector<std::string> labels = {}) {
    FiniteSemigroup s;
    const size_t n = t.size();
    for (auto& row : t) {
      if (row.size() != n) raise(errc::malformed_table, "multiplication table is not square");
      for (size_t v : row)
        if (v >= n) raise(errc::malformed_table, "table entry out of range");
    }
    s.table = std::move(t);
    if (labels.empty())
      for (size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
    if (labels.size() != n) raise(errc::malformed_table, "label count mismatch");
    s.labels = std::move(labels);
    return s;
  }
};

/// First failing triple ((ab)c != a(bc)), if any.
inline std::optional<std::array<size_t, 3>> associativity_counterexample(
    const FiniteSemigroup& S) {
  const size_t n = S.order();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c)
        if (S.mul(S.mul(a, b), c) != S.mul(a, S.mul(b, c)))
          return std::array<size_t, 3>{a, b, c};
  return std::nullopt;
}

inline bool is_associative(const FiniteSemigroup& S) {
  return !associativity_counterexample(S).has_value();
}

inline void require_associative(const FiniteSemigroup& S) {
  if (auto bad = associativity_counterexample(S))
    raise(errc::not_associative,
          "(" + S.labels[(*bad)[0]] + " " + S.labels[(*bad)[1]] + ") " + S.labels[(*bad)[2]]);
}

/// Index of a two-sided identity, if present.
inline std::optional<size_t> identity_of(const FiniteSemigroup& S) {
  const size_t n = S.order();
  for (size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (size_t x = 0; x < n && ok; ++x) ok = S.mul(e, x) == x && S.mul(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

inline bool is_left_cancellative(const FiniteSemigroup& S) {
  // a x = a y => x = y: every row is injective.
  const size_t n = S.order();
  for (size_t a = 0; a < n; ++a) {
    std::vector<bool> seen(n, false);
    for (size_t x = 0; x < n; ++x) {
      if (seen[S.mul(a, x)]) return false;
      seen[S.mul(a, x)] = true;
    }
  }
  return true;
}

inline bool is_right_cancellative(const FiniteSemigroup& S) {
  // x a = y a => x = y: every column is injective.
  const size_t n = S.order();
  for (size_t a = 0; a < n; ++a) {
    std::vector<bool> seen(n, false);
    for (size_t x = 0; x < n; ++x) {
      if (seen[S.mul(x, a)]) return false;
      seen[S.mul(x, a)] = true;
    }
  }
  return true;
}

inline bool is_group(const FiniteSemigroup& S) {
  auto e = identity_of(S);
  if (!e) return false;
  const size_t n = S.order();
  for (size_t x = 0; x < n; ++x) {
    bool inv = false;
    for (size_t y = 0; y < n && !inv; ++y) inv = S.mul(x, y) == *e && S.mul(y, x) == *e;
    if (!inv) return false;
  }
  return true;
}

/// The principal left ideal S^1 x = {x} u {s x : s in S}, as a sorted set.
inline std::vector<size_t> principal_left_ideal(const FiniteSemigroup& S, size_t x) {
  std::set<size_t> ideal{x};
  for (size_t s = 0; s < S.order(); ++s) ideal.insert(S.mul(s, x));
  return {ideal.begin(), ideal.end()};
}

inline bool is_left_ideal(const FiniteSemigroup& S, const std::vector<size_t>& subset) {
  std::set<size_t> in(subset.begin(), subset.end());
  for (size_t s = 0; s < S.order(); ++s)
    for (size_t x : subset)
      if (!in.count(S.mul(s, x))) return false;
  return true;
}

inline bool is_right_ideal(const FiniteSemigroup& S, const std::vector<size_t>& subset) {
  std::set<size_t> in(subset.begin(), subset.end());
  for (size_t s = 0; s < S.order(); ++s)
    for (size_t x : subset)
      if (!in.count(S.mul(x, s))) return false;
  return true;
}

/// Whether the subset is closed and forms a group under the restriction.
inline bool subset_is_group(const FiniteSemigroup& S, const std::vector<size_t>& subset) {
  std::set<size_t> in(subset.begin(), subset.end());
  for (size_t a : subset)
    for (size_t b : subset)
      if (!in.count(S.mul(a, b))) return false;
  std::vector<std::vector<size_t>> sub;
  std::vector<size_t> pos(S.order(), 0);
  for (size_t k = 0; k < subset.size(); ++k) pos[subset[k]] = k;
  for (size_t a : subset) {
    std::vector<size_t> row;
    for (size_t b : subset) row.push_back(pos[S.mul(a, b)]);
    sub.push_back(std::move(row));
  }
  return is_group(FiniteSemigroup::from_table(std::move(sub)));
}

/// All left ideals of S that are groups, as sorted index sets. Any such
/// ideal group I satisfies I = S^1 x for each of its elements, so scanning
/// principal left ideals finds them all. Distinct ideal groups are disjoint.
inline std::vector<std::vector<size_t>> ideal_groups(const FiniteSemigroup& S) {
  require_associative(S);
  std::set<std::vector<size_t>> found;
  for (size_t x = 0; x < S.order(); ++x) {
    std::vector<size_t> I = principal_left_ideal(S, x);
    if (subset_is_group(S, I)) found.insert(std::move(I));
  }
  return {found.begin(), found.end()};
}

/// Group-detection criterion: a right-cancellative finite semigroup with a
/// left ideal that is a group must itself be a group.
struct GroupCriterionResult {
  bool right_cancellative;
  bool has_ideal_group;
  bool criterion_applies;  // both hypotheses hold
  bool actually_group;     // direct check, for cross-validation
};

inline GroupCriterionResult finite_group_criterion(const FiniteSemigroup& S) {
  GroupCriterionResult r{};
  r.right_cancellative = is_right_cancellative(S);
  r.has_ideal_group = !ideal_groups(S).empty();
  r.criterion_applies = r.right_cancellative && r.has_ideal_group;
  r.actually_group = is_group(S);
  return r;
}

// --- standard constructions ---

/// {0..p-1} x {0..q-1} with (a,b)(c,d) = (a,d); index (a,b) -> a*q + b.
inline FiniteSemigroup rectangular_band(size_t p, size_t q) {
  const size_t n = p * q;
  std::vector<std::vector<size_t>> t(n, std::vector<size_t>(n, 0));
  std::vector<std::string> labels(n);
  for (size_t a = 0; a < p; ++a)
    for (size_t b = 0; b < q; ++b) {
      labels[a * q + b] = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      for (size_t c = 0; c < p; ++c)
        for (size_t d = 0; d < q; ++d) t[a * q + b][c * q + d] = a * q + d;
    }
  return FiniteSemigroup::from_table(std::move(t), std::move(labels));
}

/// x y = y for all x, y.
inline FiniteSemigroup right_zero_semigroup(size_t n) { return rectangular_band(1, n); }

/// x y = x for all x, y.
inline FiniteSemigroup left_zero_semigroup(size_t n) { return rectangular_band(n, 1); }

inline FiniteSemigroup cyclic_group(size_t n) {
  std::vector<std::vector<size_t>> t(n, std::vector<size_t>(n));
  std::vector<std::string> labels(n);
  for (size_t i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "e" : "g" + std::to_string(i);
    for (size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return FiniteSemigroup::from_table(std::move(t), std::move(labels));
}

/// (Z/n, *): the multiplicative monoid of residues.
inline FiniteSemigroup multiplicative_monoid(size_t n) {
  std::vector<std::vector<size_t>> t(n, std::vector<size_t>(n));
  std::vector<std::string> labels(n);
  for (size_t i = 0; i < n; ++i) {
    labels[i] = "x" + std::to_string(i);
    for (size_t j = 0; j < n; ++j) t[i][j] = (i * j) % n;
  }
  return FiniteSemigroup::from_table(std::move(t), std::move(labels));
}

namespace detail {

inline std::string cycle_notation(const std::vector<size_t>& perm) {
  const size_t n = perm.size();
  std::vector<bool> seen(n, false);
  std::string out;
  for (size_t i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i) continue;
    std::string cyc = "(" + std::to_string(i + 1);
    seen[i] = true;
    for (size_t j = perm[i]; j != i; j = perm[j]) {
      seen[j] = true;
      cyc += std::to_string(j + 1);
    }
    out += cyc + ")";
  }
  return out.empty() ? "id" : out;
}

}  // namespace detail

/// Symmetric group on n letters; elements are permutations in lexicographic
/// one-line order, composition (f g)(x) = f(g(x)).
inline FiniteSemigroup symmetric_group(size_t n) {
  std::vector<std::vector<size_t>> perms;
  std::vector<size_t> p(n);
  for (size_t i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const size_t N = perms.size();
  std::vector<std::vector<size_t>> t(N, std::vector<size_t>(N));
  std::vector<std::string> labels(N);
  for (size_t i = 0; i < N; ++i) {
    labels[i] = detail::cycle_notation(perms[i]);
    for (size_t j = 0; j < N; ++j) {
      std::vector<size_t> comp(n);
      for (size_t x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      t[i][j] = std::find(perms.begin(), perms.end(), comp) - perms.begin();
    }
  }
  return FiniteSemigroup::from_table(std::move(t), std::move(labels));
}

/// Indices of the even permutations of symmetric_group(n), in table order.
inline std::vector<size_t> alternating_subgroup_indices(size_t n) {
  std::vector<std::vector<size_t>> perms;
  std::vector<size_t> p(n);
  for (size_t i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<size_t> out;
  for (size_t i = 0; i < perms.size(); ++i) {
    size_t inversions = 0;
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a + 1; b < n; ++b)
        if (perms[i][a] > perms[i][b]) ++inversions;
    if (inversions % 2 == 0) out.push_back(i);
  }
  return out;
}

inline FiniteSemigroup adjoin_identity(const FiniteSemigroup& S) {
  const size_t n = S.order();
  std::vector<std::vector<size_t>> t(n + 1, std::vector<size_t>(n + 1));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) t[i][j] = S.table[i][j];
  for (size_t i = 0; i <= n; ++i) {
    t[i][n] = i;
    t[n][i] = i;
  }
  auto labels = S.labels;
  labels.push_back("1");
  return FiniteSemigroup::from_table(std::move(t), std::move(labels));
}

inline FiniteSemigroup adjoin_zero(const FiniteSemigroup& S) {
  const size_t n = S.order();
  std::vector<std::vector<size_t>> t(n + 1, std::vector<size_t>(n + 1, n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) t[i][j] = S.table[i][j];
  auto labels = S.labels;
  labels.push_back("0");
  return FiniteSemigroup::from_table(std::move(t), std::move(labels));
}

/// Enumerate all associative multiplication tables on {0..n-1} (labeled
/// semigroups), via backtracking with associativity pruning on partially
/// filled tables. Counts: 1, 8, 113, 3492 for n = 1..4.
inline void enumerate_semigroups(size_t n,
                                 const std::function<void(const FiniteSemigroup&)>& emit) {
  std::vector<std::vector<long>> t(n, std::vector<long>(n, -1));

  // Partial associativity: no fully-determined triple may fail.
  auto consistent = [&]() {
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        long ab = t[a][b];
        for (size_t c = 0; c < n; ++c) {
          long bc = t[b][c];
          if (ab < 0 || bc < 0) continue;
          long ab_c = t[ab][c], a_bc = t[a][bc];
          if (ab_c >= 0 && a_bc >= 0 && ab_c != a_bc) return false;
        }
      }
    return true;
  };

  std::function<void(size_t)> rec = [&](size_t pos) {
    if (pos == n * n) {
      std::vector<std::vector<size_t>> full(n, std::vector<size_t>(n));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) full[i][j] = static_cast<size_t>(t[i][j]);
      emit(FiniteSemigroup::from_table(std::move(full)));
      return;
    }
    const size_t i = pos / n, j = pos % n;
    for (size_t v = 0; v < n; ++v) {
      t[i][j] = static_cast<long>(v);
      if (consistent()) rec(pos + 1);
    }
    t[i][j] = -1;
  };
  rec(0);
}

// --- semigroup rings ---

/// R[S]: basis indexed by S, e_i e_j = e_{i*j}. Unital iff S is a monoid.
inline FiniteAlgebra semigroup_ring(const Ring& R, const FiniteSemigroup& S) {
  require_associative(S);
  const size_t n = S.order();
  FiniteAlgebra A = FiniteAlgebra::with_dim(R, n);
  A.labels = S.labels;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) A.mul[i][j][S.mul(i, j)] = R.one();
  if (auto e = identity_of(S)) {
    Vec u = zero_vec(R, n);
    u[*e] = R.one();
    A.unit = std::move(u);
  }
  return A;
}

/// R[S] with the diagonal coalgebra: Delta(s) = s (x) s, eps(s) = 1.
inline FiniteAlgebra semigroup_bialgebra(const Ring& R, const FiniteSemigroup& S) {
  FiniteAlgebra A = semigroup_ring(R, S);
  std::vector<Matrix> comul;
  for (size_t i = 0; i < A.dim; ++i) {
    Matrix T(R, A.dim, A.dim);
    T.at(i, i) = R.one();
    comul.push_back(std::move(T));
  }
  A.comul = std::move(comul);
  A.counit = Vec(A.dim, R.one());
  return A;
}

/// R[G] as a Hopf algebra: S(g) = g^{-1}.
inline FiniteAlgebra group_algebra(const Ring& R, const FiniteSemigroup& G) {
  if (!is_group(G)) raise(errc::not_a_group, "group algebra over a non-group");
  FiniteAlgebra A = semigroup_bialgebra(R, G);
  const size_t e = *identity_of(G);
  Matrix S(R, A.dim, A.dim);
  for (size_t i = 0; i < A.dim; ++i)
    for (size_t j = 0; j < A.dim; ++j)
      if (G.mul(i, j) == e) S.at(i, j) = R.one();
  A.antipode = std::move(S);
  return A;
}

/// The submodule of R[S] spanned by the ideal-group sums sum_{x in I} x.
/// These sums span the left integrals of the bialgebra R[S].
inline Submodule semigroup_integral_module(const Ring& R, const FiniteSemigroup& S) {
  std::vector<Vec> gens;
  for (auto& I : ideal_groups(S)) {
    Vec v = zero_vec(R, S.order());
    for (size_t x : I) v[x] = R.one();
    gens.push_back(std::move(v));
  }
  return Submodule::span(R, S.order(), gens);
}

}  // namespace hopfint
