#pragma once

// Sectioned text descriptions of algebras, semigroups, and module algebras,
// plus JSON-serializable reports for the command-line tools.
//
// Description file format (comments start with '#'):
//
//   ring Q                       # ring string, parsed by Ring::parse
//   kind hopf                    # semigroup | algebra | bialgebra | hopf
//   basis                        #   | module-algebra
//   e g1
//   cayley                       # group/semigroup multiplication by label
//   e g1
//   g1 e
//   mul                          # or explicit structure constants
//   y y -> 0
//   unit e                       # optional; inferred over solvable rings
//   comul                        # '@' separates tensor factors
//   e -> e@e
//   g1 -> g1@g1
//   counit
//   e -> 1
//   g1 -> 1
//   antipode
//   e -> e
//   g1 -> g1
//
// A module-algebra description instead references two other files and gives
// one action block per basis label of the acting bialgebra:
//
//   kind module-algebra
//   algebra dual_numbers_q.alg   # resolved relative to this file
//   hopf q_c2.alg
//   action e
//   1 -> 1
//   y -> y
//   action g1
//   1 -> 1
//   y -> -1*y

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hopfint/algebra.hpp"
#include "hopfint/semigroup.hpp"
#include "hopfint/smash.hpp"

namespace hopfint {

// ---------------------------------------------------------------------------
// Element rendering
// ---------------------------------------------------------------------------

/// Renders a coordinate vector against basis labels: "2*e + g1". The zero
/// vector renders as "0". Output parses back via parse_element_expr.
inline std::string format_element(const std::vector<std::string>& labels, const Vec& v) {
  if (v.size() != labels.size()) raise(errc::dimension_mismatch, "format_element");
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (v[i].is_one())
      out += labels[i];
    else
      out += v[i].to_string() + "*" + labels[i];
  }
  return out.empty() ? "0" : out;
}

namespace detail {

inline std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

[[noreturn]] inline void parse_fail(const std::string& path, size_t lineno,
                                    const std::string& msg) {
  raise(errc::parse_error, path + ":" + std::to_string(lineno) + ": " + msg);
}

/// Splits text at top-level occurrences of any separator character,
/// ignoring separators nested inside parentheses or brackets. Returns the
/// pieces together with the separator that preceded each piece ('\0' for
/// the first).
inline std::vector<std::pair<char, std::string>> split_top_level(const std::string& text,
                                                                 const std::string& seps) {
  std::vector<std::pair<char, std::string>> parts;
  int depth = 0;
  char pending = '\0';
  std::string cur;
  for (char ch : text) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (depth == 0 && seps.find(ch) != std::string::npos) {
      parts.emplace_back(pending, cur);
      pending = ch;
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.emplace_back(pending, cur);
  return parts;
}

inline std::optional<size_t> label_index(const std::vector<std::string>& labels,
                                         const std::string& lbl) {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == lbl) return i;
  return std::nullopt;
}

inline RingElement parse_coefficient(const Ring& R, const std::string& text,
                                     const std::string& path, size_t lineno) {
  try {
    return R.parse_element(strip(text));
  } catch (const error& e) {
    parse_fail(path, lineno, std::string("bad coefficient '") + strip(text) + "': " + e.what());
  }
}

/// One term "[coeff*]label" -> (coefficient, basis index).
inline std::pair<RingElement, size_t> parse_term(const Ring& R,
                                                 const std::vector<std::string>& labels,
                                                 const std::string& term,
                                                 const std::string& path, size_t lineno) {
  auto star = split_top_level(term, "*");
  if (star.size() > 2) parse_fail(path, lineno, "too many '*' in term '" + strip(term) + "'");
  std::string lbl = strip(star.back().second);
  auto idx = label_index(labels, lbl);
  if (!idx) parse_fail(path, lineno, "unknown basis label '" + lbl + "'");
  RingElement c =
      star.size() == 2 ? parse_coefficient(R, star[0].second, path, lineno) : R.one();
  return {c, *idx};
}

}  // namespace detail

/// Parses "2*e + g1 - y" into coordinates against the given labels. Terms
/// are "[coeff*]label"; "0" denotes the zero element. Coefficients go
/// through Ring::parse_element, so product-ring tuples like "(1/2, -1)"
/// work. Errors carry "path:line:".
inline Vec parse_element_expr(const Ring& R, const std::vector<std::string>& labels,
                              const std::string& text, const std::string& path = "<string>",
                              size_t lineno = 0) {
  Vec out = zero_vec(R, labels.size());
  int carry = 1;  // signs compose across empty pieces, so "+ -2*g1" works
  for (auto& [sign, raw] : detail::split_top_level(text, "+-")) {
    int s = (sign == '-') ? -1 : 1;
    std::string term = detail::strip(raw);
    if (term.empty()) {
      carry *= s;
      continue;
    }
    int eff = carry * s;
    carry = 1;
    if (term == "0") continue;
    auto [c, idx] = detail::parse_term(R, labels, term, path, lineno);
    if (eff < 0) c = R.zero() - c;
    out[idx] = out[idx] + c;
  }
  return out;
}

/// Parses "e@e + 2*g1@g1" into the tensor matrix T with the term c*a@b
/// contributing T(a,b) += c.
inline Matrix parse_tensor_expr(const Ring& R, const std::vector<std::string>& labels,
                                const std::string& text, const std::string& path = "<string>",
                                size_t lineno = 0) {
  Matrix T(R, labels.size(), labels.size());
  int carry = 1;
  for (auto& [sign, raw] : detail::split_top_level(text, "+-")) {
    int s = (sign == '-') ? -1 : 1;
    std::string term = detail::strip(raw);
    if (term.empty()) {
      carry *= s;
      continue;
    }
    int eff = carry * s;
    carry = 1;
    if (term == "0") continue;
    auto at = detail::split_top_level(term, "@");
    if (at.size() != 2)
      detail::parse_fail(path, lineno, "tensor term '" + term + "' must be [coeff*]label@label");
    auto [c, a] = detail::parse_term(R, labels, at[0].second, path, lineno);
    std::string rlbl = detail::strip(at[1].second);
    auto b = detail::label_index(labels, rlbl);
    if (!b) detail::parse_fail(path, lineno, "unknown basis label '" + rlbl + "'");
    if (eff < 0) c = R.zero() - c;
    T.at(a, *b) = T.at(a, *b) + c;
  }
  return T;
}

// ---------------------------------------------------------------------------
// Description files
// ---------------------------------------------------------------------------

struct ParsedDescription {
  std::string path;
  std::string kind;
  std::vector<std::string> labels;
  std::optional<Ring> ring;
  std::optional<FiniteAlgebra> algebra;
  std::optional<FiniteSemigroup> semigroup;  // kind "semigroup" only
  std::optional<ModuleAlgebra> module_algebra;

  const Ring& ring_of() const {
    if (ring) return *ring;
    raise(errc::invalid_element, "description carries no ring");
  }
};

namespace detail {

struct BodyLine {
  size_t no;
  std::string text;
};

struct RawSection {
  std::string keyword;
  std::string arg;
  size_t lineno = 0;
  std::vector<BodyLine> body;
};

inline bool is_section_keyword(const std::string& w) {
  static const char* kws[] = {"ring",    "kind",  "basis",   "unit",   "mul",   "comul",
                              "counit",  "antipode", "cayley", "algebra", "hopf",  "action"};
  return std::find_if(std::begin(kws), std::end(kws),
                      [&](const char* k) { return w == k; }) != std::end(kws);
}

inline std::vector<RawSection> read_sections(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::parse_error, path + ": cannot open file");
  std::vector<RawSection> sections;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string t = strip(line);
    if (t.empty()) continue;
    std::istringstream ls(t);
    std::string first;
    ls >> first;
    if (is_section_keyword(first)) {
      std::string rest;
      std::getline(ls, rest);
      sections.push_back({first, strip(rest), lineno, {}});
    } else {
      if (sections.empty())
        parse_fail(path, lineno, "expected a section keyword, got '" + first + "'");
      sections.back().body.push_back({lineno, t});
    }
  }
  return sections;
}

/// The unique section with this keyword, or nullptr. Duplicates are errors.
inline const RawSection* unique_section(const std::vector<RawSection>& sections,
                                        const std::string& keyword, const std::string& path) {
  const RawSection* found = nullptr;
  for (auto& s : sections)
    if (s.keyword == keyword) {
      if (found) parse_fail(path, s.lineno, "duplicate '" + keyword + "' section");
      found = &s;
    }
  return found;
}

inline void forbid_body(const RawSection& s, const std::string& path) {
  if (!s.body.empty())
    parse_fail(path, s.body.front().no,
               "unexpected line inside '" + s.keyword + "' section (it takes no body)");
}

inline void forbid_sections(const std::vector<RawSection>& sections, const std::string& kind,
                            std::initializer_list<const char*> keywords,
                            const std::string& path) {
  for (auto& s : sections)
    for (const char* k : keywords)
      if (s.keyword == k)
        parse_fail(path, s.lineno,
                   "section '" + s.keyword + "' is not allowed for kind '" + kind + "'");
}

/// "lhs -> rhs" with a line-anchored error when the arrow is missing.
inline std::pair<std::string, std::string> split_arrow(const BodyLine& ln,
                                                       const std::string& path) {
  auto pos = ln.text.find("->");
  if (pos == std::string::npos) parse_fail(path, ln.no, "expected 'lhs -> rhs'");
  return {strip(ln.text.substr(0, pos)), strip(ln.text.substr(pos + 2))};
}

inline std::vector<std::string> parse_basis(const RawSection& s, const std::string& path) {
  std::vector<std::string> labels;
  for (auto& ln : s.body) {
    std::istringstream ls(ln.text);
    std::string w;
    while (ls >> w) {
      for (char ch : w)
        if (std::string("+-*@#(),>").find(ch) != std::string::npos)
          parse_fail(path, ln.no, "basis label '" + w + "' contains reserved character '" +
                                      std::string(1, ch) + "'");
      if (is_section_keyword(w))
        parse_fail(path, ln.no, "basis label '" + w + "' is a reserved section keyword");
      if (label_index(labels, w)) parse_fail(path, ln.no, "duplicate basis label '" + w + "'");
      labels.push_back(w);
    }
  }
  if (labels.empty()) parse_fail(path, s.lineno, "basis section lists no labels");
  return labels;
}

/// Attempts to solve for a two-sided unit over solvable ring tiers; returns
/// nullopt when none exists or the tier cannot solve.
inline std::optional<Vec> infer_unit(const FiniteAlgebra& A) {
  const Ring& R = A.ring;
  const size_t n = A.dim;
  std::vector<Vec> rows;
  Vec rhs;
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) {
      Vec row = zero_vec(R, n);
      for (size_t i = 0; i < n; ++i) row[i] = A.mul[i][j][k];
      rows.push_back(std::move(row));
      rhs.push_back(j == k ? A.support[j] : R.zero());
    }
  std::optional<Vec> u;
  try {
    u = solve_affine(Matrix::from_rows(R, rows, n), rhs).particular;
  } catch (const error&) {
    return std::nullopt;  // verify-only ring tier
  }
  if (!u) return std::nullopt;
  for (size_t j = 0; j < n; ++j) {
    Vec ej = A.basis_vec(j);
    if (A.multiply(*u, ej) != ej || A.multiply(ej, *u) != ej) return std::nullopt;
  }
  return u;
}

}  // namespace detail

inline ParsedDescription load_description(const std::string& path);

namespace detail {

inline FiniteSemigroup parse_cayley(const RawSection& s, const std::vector<std::string>& labels,
                                    const std::string& path) {
  const size_t n = labels.size();
  if (s.body.size() != n)
    parse_fail(path, s.lineno,
               "cayley table needs exactly " + std::to_string(n) + " rows, got " +
                   std::to_string(s.body.size()));
  std::vector<std::vector<size_t>> table(n);
  for (size_t i = 0; i < n; ++i) {
    std::istringstream ls(s.body[i].text);
    std::string w;
    while (ls >> w) {
      auto idx = label_index(labels, w);
      if (!idx) parse_fail(path, s.body[i].no, "unknown basis label '" + w + "'");
      table[i].push_back(*idx);
    }
    if (table[i].size() != n)
      parse_fail(path, s.body[i].no,
                 "cayley row needs exactly " + std::to_string(n) + " entries");
  }
  return FiniteSemigroup::from_table(std::move(table), labels);
}

inline ParsedDescription load_module_algebra(const std::vector<RawSection>& sections,
                                             const std::string& path) {
  ParsedDescription out;
  out.path = path;
  out.kind = "module-algebra";
  forbid_sections(sections, out.kind,
                  {"ring", "basis", "unit", "mul", "comul", "counit", "antipode", "cayley"},
                  path);
  const RawSection* alg_sec = unique_section(sections, "algebra", path);
  const RawSection* hopf_sec = unique_section(sections, "hopf", path);
  if (!alg_sec) parse_fail(path, 0, "module-algebra needs an 'algebra <file>' section");
  if (!hopf_sec) parse_fail(path, 0, "module-algebra needs a 'hopf <file>' section");
  forbid_body(*alg_sec, path);
  forbid_body(*hopf_sec, path);

  auto resolve = [&](const std::string& rel) {
    std::filesystem::path p(rel);
    if (p.is_absolute()) return p.string();
    return (std::filesystem::path(path).parent_path() / p).string();
  };
  ParsedDescription sub_a = load_description(resolve(alg_sec->arg));
  ParsedDescription sub_h = load_description(resolve(hopf_sec->arg));
  if (!sub_a.algebra)
    parse_fail(path, alg_sec->lineno, "'" + alg_sec->arg + "' does not describe an algebra");
  if (!sub_h.algebra)
    parse_fail(path, hopf_sec->lineno, "'" + hopf_sec->arg + "' does not describe an algebra");
  if (!sub_h.algebra->has_coalgebra())
    parse_fail(path, hopf_sec->lineno,
               "'" + hopf_sec->arg + "' carries no coalgebra, so it cannot act");
  const FiniteAlgebra& A = *sub_a.algebra;
  const FiniteAlgebra& H = *sub_h.algebra;
  if (A.ring.to_string() != H.ring.to_string())
    parse_fail(path, hopf_sec->lineno, "algebra ring '" + A.ring.to_string() +
                                           "' differs from acting ring '" + H.ring.to_string() +
                                           "'");

  std::vector<std::optional<Matrix>> action(H.dim);
  for (auto& s : sections) {
    if (s.keyword != "action") continue;
    auto hidx = label_index(H.labels, s.arg);
    if (!hidx) parse_fail(path, s.lineno, "unknown acting basis label '" + s.arg + "'");
    if (action[*hidx]) parse_fail(path, s.lineno, "duplicate action block for '" + s.arg + "'");
    Matrix M(A.ring, A.dim, A.dim);
    std::vector<bool> seen(A.dim, false);
    for (auto& ln : s.body) {
      auto [lhs, rhs] = split_arrow(ln, path);
      auto aidx = label_index(A.labels, lhs);
      if (!aidx) parse_fail(path, ln.no, "unknown module basis label '" + lhs + "'");
      if (seen[*aidx]) parse_fail(path, ln.no, "duplicate action line for '" + lhs + "'");
      seen[*aidx] = true;
      Vec col = parse_element_expr(A.ring, A.labels, rhs, path, ln.no);
      for (size_t k = 0; k < A.dim; ++k) M.at(k, *aidx) = col[k];
    }
    for (size_t p = 0; p < A.dim; ++p)
      if (!seen[p])
        parse_fail(path, s.lineno, "action block '" + s.arg + "' misses module basis label '" +
                                       A.labels[p] + "'");
    action[*hidx] = std::move(M);
  }
  for (size_t i = 0; i < H.dim; ++i)
    if (!action[i]) parse_fail(path, 0, "missing action block for '" + H.labels[i] + "'");

  std::vector<Matrix> mats;
  mats.reserve(H.dim);
  for (auto& m : action) mats.push_back(std::move(*m));
  out.ring = A.ring;
  out.labels = A.labels;
  out.module_algebra = ModuleAlgebra{A, H, std::move(mats)};
  return out;
}

}  // namespace detail

/// Loads a description file. Parse failures raise errc::parse_error with
/// "path:line:" anchors. Semigroup descriptions always yield the semigroup;
/// the associated bialgebra is built only when the table is associative
/// (so `verify` can report non-associativity instead of failing to load).
inline ParsedDescription load_description(const std::string& path) {
  using detail::parse_fail;
  std::vector<detail::RawSection> sections = detail::read_sections(path);

  const detail::RawSection* kind_sec = detail::unique_section(sections, "kind", path);
  if (!kind_sec) parse_fail(path, 0, "missing 'kind' section");
  detail::forbid_body(*kind_sec, path);
  const std::string kind = kind_sec->arg;
  static const char* kinds[] = {"semigroup", "algebra", "bialgebra", "hopf", "module-algebra"};
  if (std::find_if(std::begin(kinds), std::end(kinds),
                   [&](const char* k) { return kind == k; }) == std::end(kinds))
    parse_fail(path, kind_sec->lineno, "unknown kind '" + kind + "'");

  if (kind == "module-algebra") return detail::load_module_algebra(sections, path);

  detail::forbid_sections(sections, kind, {"algebra", "hopf", "action"}, path);

  const detail::RawSection* ring_sec = detail::unique_section(sections, "ring", path);
  if (!ring_sec) parse_fail(path, 0, "missing 'ring' section");
  detail::forbid_body(*ring_sec, path);
  Ring R = [&] {
    try {
      return Ring::parse(ring_sec->arg);
    } catch (const error& e) {
      parse_fail(path, ring_sec->lineno,
                 "bad ring '" + ring_sec->arg + "': " + std::string(e.what()));
    }
  }();

  const detail::RawSection* basis_sec = detail::unique_section(sections, "basis", path);
  if (!basis_sec) parse_fail(path, 0, "missing 'basis' section");
  std::vector<std::string> labels = detail::parse_basis(*basis_sec, path);
  const size_t n = labels.size();

  ParsedDescription out;
  out.path = path;
  out.kind = kind;
  out.labels = labels;
  out.ring = R;

  const detail::RawSection* cayley_sec = detail::unique_section(sections, "cayley", path);
  const detail::RawSection* mul_sec = detail::unique_section(sections, "mul", path);

  if (kind == "semigroup") {
    detail::forbid_sections(sections, kind, {"mul", "unit", "comul", "counit", "antipode"},
                            path);
    if (!cayley_sec) parse_fail(path, 0, "kind semigroup needs a 'cayley' section");
    out.semigroup = detail::parse_cayley(*cayley_sec, labels, path);
    if (is_associative(*out.semigroup))
      out.algebra = semigroup_bialgebra(R, *out.semigroup);
    return out;
  }

  FiniteAlgebra A(R, n);
  A.labels = labels;

  if (cayley_sec && mul_sec)
    parse_fail(path, mul_sec->lineno, "give either 'cayley' or 'mul', not both");
  if (cayley_sec) {
    FiniteSemigroup S = detail::parse_cayley(*cayley_sec, labels, path);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) A.mul[i][j] = A.basis_vec(S.mul(i, j));
  } else if (mul_sec) {
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (auto& ln : mul_sec->body) {
      auto [lhs, rhs] = detail::split_arrow(ln, path);
      std::istringstream ls(lhs);
      std::string la, lb, extra;
      if (!(ls >> la >> lb) || (ls >> extra))
        parse_fail(path, ln.no, "product line needs exactly two labels before '->'");
      auto ia = detail::label_index(labels, la);
      auto ib = detail::label_index(labels, lb);
      if (!ia) parse_fail(path, ln.no, "unknown basis label '" + la + "'");
      if (!ib) parse_fail(path, ln.no, "unknown basis label '" + lb + "'");
      if (seen[*ia][*ib])
        parse_fail(path, ln.no, "duplicate product line for '" + la + " " + lb + "'");
      seen[*ia][*ib] = true;
      A.mul[*ia][*ib] = parse_element_expr(R, labels, rhs, path, ln.no);
    }
  } else {
    parse_fail(path, 0, "kind " + kind + " needs a 'mul' or 'cayley' section");
  }

  if (const detail::RawSection* unit_sec = detail::unique_section(sections, "unit", path)) {
    detail::forbid_body(*unit_sec, path);
    A.unit = parse_element_expr(R, labels, unit_sec->arg, path, unit_sec->lineno);
  } else {
    A.unit = detail::infer_unit(A);
  }

  const detail::RawSection* comul_sec = detail::unique_section(sections, "comul", path);
  const detail::RawSection* counit_sec = detail::unique_section(sections, "counit", path);
  const detail::RawSection* antipode_sec = detail::unique_section(sections, "antipode", path);

  if (kind == "algebra") {
    detail::forbid_sections(sections, kind, {"comul", "counit", "antipode"}, path);
  } else {
    if (!comul_sec) parse_fail(path, 0, "kind " + kind + " needs a 'comul' section");
    if (!counit_sec) parse_fail(path, 0, "kind " + kind + " needs a 'counit' section");

    auto per_label = [&](const detail::RawSection& s, auto&& handle) {
      std::vector<bool> seen(n, false);
      for (auto& ln : s.body) {
        auto [lhs, rhs] = detail::split_arrow(ln, path);
        auto idx = detail::label_index(labels, lhs);
        if (!idx) parse_fail(path, ln.no, "unknown basis label '" + lhs + "'");
        if (seen[*idx])
          parse_fail(path, ln.no, "duplicate '" + s.keyword + "' line for '" + lhs + "'");
        seen[*idx] = true;
        handle(*idx, rhs, ln.no);
      }
      for (size_t i = 0; i < n; ++i)
        if (!seen[i])
          parse_fail(path, s.lineno,
                     "'" + s.keyword + "' section misses basis label '" + labels[i] + "'");
    };

    std::vector<Matrix> comul(n, Matrix(R, n, n));
    per_label(*comul_sec, [&](size_t i, const std::string& rhs, size_t no) {
      comul[i] = parse_tensor_expr(R, labels, rhs, path, no);
    });
    Vec counit = zero_vec(R, n);
    per_label(*counit_sec, [&](size_t i, const std::string& rhs, size_t no) {
      counit[i] = detail::parse_coefficient(R, rhs, path, no);
    });
    A.comul = std::move(comul);
    A.counit = std::move(counit);

    if (kind == "bialgebra") {
      detail::forbid_sections(sections, kind, {"antipode"}, path);
    } else {  // hopf
      if (!antipode_sec) parse_fail(path, 0, "kind hopf needs an 'antipode' section");
      Matrix S(R, n, n);
      per_label(*antipode_sec, [&](size_t i, const std::string& rhs, size_t no) {
        Vec v = parse_element_expr(R, labels, rhs, path, no);
        for (size_t j = 0; j < n; ++j) S.at(i, j) = v[j];
      });
      A.antipode = std::move(S);
      if (!A.unit)
        parse_fail(path, 0, "kind hopf needs a unit; add a 'unit <element>' section");
    }
  }

  out.algebra = std::move(A);
  return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Outcome of one CLI command: named pass/fail verdicts plus any
/// certificates (integrals, separability elements, ...) as JSON.
struct Report {
  std::string command;
  std::vector<CheckResult> verdicts;
  nlohmann::json certificates = nlohmann::json::object();
  double timing_ms = 0.0;

  bool all_ok() const {
    for (auto& c : verdicts)
      if (!c.ok) return false;
    return true;
  }

  void add(std::string name, bool ok, std::string det = "") {
    verdicts.push_back({std::move(name), ok, std::move(det)});
  }
};

inline nlohmann::json report_to_json(const Report& r) {
  nlohmann::json verdicts = nlohmann::json::array();
  for (auto& c : r.verdicts)
    verdicts.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"command", r.command},
          {"verdicts", verdicts},
          {"certificates", r.certificates},
          {"timing_ms", r.timing_ms}};
}

inline Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  for (auto& c : j.at("verdicts"))
    r.verdicts.push_back({c.at("name").get<std::string>(), c.at("ok").get<bool>(),
                          c.at("detail").get<std::string>()});
  r.certificates = j.at("certificates");
  r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

/// Equality for round-trip testing; timing is environmental and excluded.
inline bool reports_equal(const Report& a, const Report& b) {
  if (a.command != b.command || a.certificates != b.certificates) return false;
  if (a.verdicts.size() != b.verdicts.size()) return false;
  for (size_t i = 0; i < a.verdicts.size(); ++i)
    if (a.verdicts[i].name != b.verdicts[i].name || a.verdicts[i].ok != b.verdicts[i].ok ||
        a.verdicts[i].detail != b.verdicts[i].detail)
      return false;
  return true;
}

inline std::string render_report_text(const Report& r) {
  std::ostringstream os;
  os << "== " << r.command << " ==\n";
  for (auto& c : r.verdicts) {
    os << (c.ok ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  if (!r.certificates.empty()) os << "certificates:\n" << r.certificates.dump(2) << "\n";
  return os.str();
}

// JSON views of the math objects, rendered deterministically as strings.

inline nlohmann::json element_json(const std::vector<std::string>& labels, const Vec& v) {
  return format_element(labels, v);
}

inline nlohmann::json matrix_json(const Matrix& M) {
  nlohmann::json rows = nlohmann::json::array();
  for (size_t i = 0; i < M.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (size_t j = 0; j < M.cols(); ++j) row.push_back(M.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json submodule_json(const std::vector<std::string>& labels,
                                     const Submodule& S) {
  nlohmann::json gens = nlohmann::json::array();
  for (auto& g : S.generators()) gens.push_back(format_element(labels, g));
  return {{"rank", S.rank()}, {"generators", gens}};
}

}  // namespace hopfint
