#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hopfint/errors.hpp"

namespace hopfint {

class Ring;
class RingElement;

enum class RingKind { integers, rationals, integers_mod, prime_field, localization, product };

/// What the linear-algebra layer is allowed to do over a ring.
///   field      - Gauss-Jordan, reduced row echelon form
///   pid        - Smith/Hermite normal forms over the integers
///   finite_pir - Howell forms over Z/m
///   product    - componentwise reduction to the factor tiers
///   verify_only - arithmetic and unit tests only, no generic solving
enum class RingTier { field, pid, finite_pir, product, verify_only };

namespace detail {

inline bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  for (mpz_class d = 2; d * d <= n; ++d)
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
  return true;
}

/// Trial-division factorization into sorted (prime, multiplicity) pairs.
inline std::vector<std::pair<mpz_class, unsigned>> factorize(mpz_class n) {
  std::vector<std::pair<mpz_class, unsigned>> out;
  for (mpz_class d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_squarefree(const mpz_class& n) {
  for (auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

inline mpz_class pow_ui(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace detail

/// Element payload of a localization Z[1/n]: the value is
/// unit_part * prod p_i^{exponents[i]} over the radical primes p_i of n,
/// with unit_part coprime to every p_i (and all exponents zero when
/// unit_part is zero). This representation is canonical, so equality of
/// elements is equality of payloads.
struct LocValue {
  mpz_class unit_part;
  std::vector<long> exponents;
  bool operator==(const LocValue&) const = default;
};

class Ring {
  struct Rep {
    RingKind kind;
    mpz_class modulus;               // integers_mod / prime_field
    std::vector<mpz_class> radical;  // localization: distinct primes of n, sorted
    std::vector<Ring> factors;       // product
  };

 public:
  static Ring integers() { return Ring(Rep{RingKind::integers, 0, {}, {}}); }
  static Ring rationals() { return Ring(Rep{RingKind::rationals, 0, {}, {}}); }

  static Ring integers_mod(const mpz_class& m) {
    if (m < 2) raise(errc::invalid_element, "Z/m requires m >= 2");
    return Ring(Rep{RingKind::integers_mod, m, {}, {}});
  }

  static Ring prime_field(const mpz_class& p) {
    if (!detail::is_prime(p)) raise(errc::invalid_element, "GF(p) requires p prime");
    return Ring(Rep{RingKind::prime_field, p, {}, {}});
  }

  /// Z[1/n]; only the squarefree radical of n matters, so Z[1/4] == Z[1/2].
  static Ring localization(const mpz_class& n) {
    if (n < 2) raise(errc::invalid_element, "Z[1/n] requires n >= 2");
    std::vector<mpz_class> radical;
    for (auto& [p, e] : detail::factorize(n)) radical.push_back(p);
    return Ring(Rep{RingKind::localization, 0, std::move(radical), {}});
  }

  /// Product ring; nested products are flattened.
  static Ring product(std::vector<Ring> factors) {
    std::vector<Ring> flat;
    for (auto& f : factors) {
      if (f.kind() == RingKind::product)
        flat.insert(flat.end(), f.factors().begin(), f.factors().end());
      else
        flat.push_back(f);
    }
    if (flat.size() < 2) raise(errc::invalid_element, "product ring requires >= 2 factors");
    return Ring(Rep{RingKind::product, 0, {}, std::move(flat)});
  }

  RingKind kind() const { return rep_->kind; }
  const mpz_class& modulus() const { return rep_->modulus; }
  const std::vector<mpz_class>& radical_primes() const { return rep_->radical; }
  const std::vector<Ring>& factors() const { return rep_->factors; }

  RingTier tier() const {
    switch (kind()) {
      case RingKind::rationals:
      case RingKind::prime_field: return RingTier::field;
      case RingKind::integers: return RingTier::pid;
      case RingKind::integers_mod: return RingTier::finite_pir;
      case RingKind::localization: return RingTier::verify_only;
      case RingKind::product:
        for (auto& f : factors())
          if (f.tier() == RingTier::verify_only) return RingTier::verify_only;
        return RingTier::product;
    }
    return RingTier::verify_only;
  }

  bool solving_supported() const { return tier() != RingTier::verify_only; }

  bool is_field() const { return tier() == RingTier::field; }

  bool is_finite() const {
    switch (kind()) {
      case RingKind::integers_mod:
      case RingKind::prime_field: return true;
      case RingKind::product:
        return std::all_of(factors().begin(), factors().end(),
                           [](const Ring& f) { return f.is_finite(); });
      default: return false;
    }
  }

  mpz_class cardinality() const {
    switch (kind()) {
      case RingKind::integers_mod:
      case RingKind::prime_field: return modulus();
      case RingKind::product: {
        mpz_class c = 1;
        for (auto& f : factors()) c *= f.cardinality();
        return c;
      }
      default: raise(errc::unsupported_ring_tier, "cardinality of an infinite ring");
    }
  }

  bool operator==(const Ring& other) const {
    if (rep_ == other.rep_) return true;
    if (kind() != other.kind()) return false;
    switch (kind()) {
      case RingKind::integers:
      case RingKind::rationals: return true;
      case RingKind::integers_mod:
      case RingKind::prime_field: return modulus() == other.modulus();
      case RingKind::localization: return radical_primes() == other.radical_primes();
      case RingKind::product: return factors() == other.factors();
    }
    return false;
  }
  bool operator!=(const Ring& other) const { return !(*this == other); }

  std::string to_string() const {
    switch (kind()) {
      case RingKind::integers: return "Z";
      case RingKind::rationals: return "Q";
      case RingKind::integers_mod: return "Z/" + modulus().get_str();
      case RingKind::prime_field: return "GF(" + modulus().get_str() + ")";
      case RingKind::localization: {
        mpz_class n = 1;
        for (auto& p : radical_primes()) n *= p;
        return "Z[1/" + n.get_str() + "]";
      }
      case RingKind::product: {
        std::string s;
        for (size_t i = 0; i < factors().size(); ++i) {
          if (i) s += " x ";
          s += factors()[i].to_string();
        }
        return s;
      }
    }
    return "?";
  }

  static Ring parse(std::string_view text);

  // --- element factories (defined after RingElement) ---
  RingElement zero() const;
  RingElement one() const;
  RingElement from_integer(const mpz_class& n) const;
  RingElement from_rational(const mpq_class& q) const;
  RingElement tuple(std::vector<RingElement> parts) const;
  RingElement parse_element(std::string_view text) const;

  /// All elements of a finite ring in canonical order: residues 0..m-1,
  /// products row-major (last factor varies fastest).
  std::vector<RingElement> enumerate_elements() const;

 private:
  explicit Ring(Rep rep) : rep_(std::make_shared<const Rep>(std::move(rep))) {}
  std::shared_ptr<const Rep> rep_;
};

class RingElement {
 public:
  using Payload = std::variant<mpz_class, mpq_class, LocValue, std::vector<RingElement>>;

  RingElement(Ring ring, Payload payload) : ring_(std::move(ring)), payload_(std::move(payload)) {}

  const Ring& ring() const { return ring_; }

  const mpz_class& as_integer() const { return std::get<mpz_class>(payload_); }
  const mpq_class& as_rational() const { return std::get<mpq_class>(payload_); }
  const LocValue& as_loc() const { return std::get<LocValue>(payload_); }
  const std::vector<RingElement>& components() const {
    return std::get<std::vector<RingElement>>(payload_);
  }

  bool operator==(const RingElement& other) const {
    return ring_ == other.ring_ && payload_ == other.payload_;
  }
  bool operator!=(const RingElement& other) const { return !(*this == other); }

  bool is_zero() const;
  bool is_one() const;
  std::string to_string() const;

 private:
  Ring ring_;
  Payload payload_;
};

namespace detail {

inline void check_same_ring(const RingElement& a, const RingElement& b) {
  if (a.ring() != b.ring())
    raise(errc::ring_mismatch,
          "elements of " + a.ring().to_string() + " and " + b.ring().to_string());
}

inline LocValue loc_normalize(mpz_class a, std::vector<long> e,
                              const std::vector<mpz_class>& primes) {
  if (a == 0) return LocValue{0, std::vector<long>(primes.size(), 0)};
  for (size_t i = 0; i < primes.size(); ++i) {
    while (mpz_divisible_p(a.get_mpz_t(), primes[i].get_mpz_t())) {
      a /= primes[i];
      ++e[i];
    }
  }
  return LocValue{std::move(a), std::move(e)};
}

inline mpq_class loc_to_rational(const LocValue& v, const std::vector<mpz_class>& primes) {
  mpq_class q(v.unit_part);
  for (size_t i = 0; i < primes.size(); ++i) {
    long e = v.exponents[i];
    if (e > 0)
      q *= mpq_class(pow_ui(primes[i], static_cast<unsigned long>(e)));
    else if (e < 0)
      q /= mpq_class(pow_ui(primes[i], static_cast<unsigned long>(-e)));
  }
  q.canonicalize();
  return q;
}

}  // namespace detail

// --- Ring element factories ---

inline RingElement Ring::zero() const { return from_integer(0); }
inline RingElement Ring::one() const { return from_integer(1); }

inline RingElement Ring::from_integer(const mpz_class& n) const {
  switch (kind()) {
    case RingKind::integers: return RingElement(*this, n);
    case RingKind::rationals: return RingElement(*this, mpq_class(n));
    case RingKind::integers_mod:
    case RingKind::prime_field: {
      mpz_class r;
      mpz_mod(r.get_mpz_t(), n.get_mpz_t(), modulus().get_mpz_t());
      return RingElement(*this, r);
    }
    case RingKind::localization:
      return RingElement(
          *this, detail::loc_normalize(n, std::vector<long>(radical_primes().size(), 0),
                                       radical_primes()));
    case RingKind::product: {
      std::vector<RingElement> parts;
      parts.reserve(factors().size());
      for (auto& f : factors()) parts.push_back(f.from_integer(n));
      return RingElement(*this, std::move(parts));
    }
  }
  raise(errc::invalid_element, "from_integer");
}

inline RingElement Ring::from_rational(const mpq_class& q0) const {
  mpq_class q = q0;
  q.canonicalize();
  switch (kind()) {
    case RingKind::rationals: return RingElement(*this, q);
    case RingKind::integers:
      if (q.get_den() != 1)
        raise(errc::invalid_element, q.get_str() + " is not an integer");
      return RingElement(*this, q.get_num());
    case RingKind::integers_mod:
    case RingKind::prime_field: {
      mpz_class inv;
      if (!mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), modulus().get_mpz_t()))
        raise(errc::invalid_element,
              "denominator " + q.get_den().get_str() + " not invertible in " + to_string());
      return from_integer(q.get_num() * inv);
    }
    case RingKind::localization: {
      std::vector<long> e(radical_primes().size(), 0);
      mpz_class den = q.get_den();
      for (size_t i = 0; i < radical_primes().size(); ++i) {
        while (mpz_divisible_p(den.get_mpz_t(), radical_primes()[i].get_mpz_t())) {
          den /= radical_primes()[i];
          --e[i];
        }
      }
      if (den != 1)
        raise(errc::invalid_element, q.get_str() + " does not lie in " + to_string());
      return RingElement(*this,
                         detail::loc_normalize(q.get_num(), std::move(e), radical_primes()));
    }
    case RingKind::product: {
      std::vector<RingElement> parts;
      for (auto& f : factors()) parts.push_back(f.from_rational(q));
      return RingElement(*this, std::move(parts));
    }
  }
  raise(errc::invalid_element, "from_rational");
}

inline RingElement Ring::tuple(std::vector<RingElement> parts) const {
  if (kind() != RingKind::product)
    raise(errc::invalid_element, "tuple element of a non-product ring");
  if (parts.size() != factors().size())
    raise(errc::invalid_element, "tuple arity does not match factor count");
  for (size_t i = 0; i < parts.size(); ++i)
    if (parts[i].ring() != factors()[i])
      raise(errc::ring_mismatch, "tuple component " + std::to_string(i));
  return RingElement(*this, std::move(parts));
}

// --- arithmetic ---

inline RingElement operator+(const RingElement& a, const RingElement& b) {
  detail::check_same_ring(a, b);
  const Ring& R = a.ring();
  switch (R.kind()) {
    case RingKind::integers: return RingElement(R, mpz_class(a.as_integer() + b.as_integer()));
    case RingKind::rationals: return RingElement(R, mpq_class(a.as_rational() + b.as_rational()));
    case RingKind::integers_mod:
    case RingKind::prime_field: {
      mpz_class r = a.as_integer() + b.as_integer();
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), R.modulus().get_mpz_t());
      return RingElement(R, r);
    }
    case RingKind::localization: {
      const auto& primes = R.radical_primes();
      const LocValue &x = a.as_loc(), &y = b.as_loc();
      if (x.unit_part == 0) return b;
      if (y.unit_part == 0) return a;
      std::vector<long> m(primes.size());
      mpz_class n1 = x.unit_part, n2 = y.unit_part;
      for (size_t i = 0; i < primes.size(); ++i) {
        m[i] = std::min(x.exponents[i], y.exponents[i]);
        n1 *= detail::pow_ui(primes[i], static_cast<unsigned long>(x.exponents[i] - m[i]));
        n2 *= detail::pow_ui(primes[i], static_cast<unsigned long>(y.exponents[i] - m[i]));
      }
      return RingElement(R, detail::loc_normalize(n1 + n2, std::move(m), primes));
    }
    case RingKind::product: {
      std::vector<RingElement> parts;
      for (size_t i = 0; i < R.factors().size(); ++i)
        parts.push_back(a.components()[i] + b.components()[i]);
      return RingElement(R, std::move(parts));
    }
  }
  raise(errc::invalid_element, "add");
}

inline RingElement operator-(const RingElement& a) {
  const Ring& R = a.ring();
  switch (R.kind()) {
    case RingKind::integers: return RingElement(R, mpz_class(-a.as_integer()));
    case RingKind::rationals: return RingElement(R, mpq_class(-a.as_rational()));
    case RingKind::integers_mod:
    case RingKind::prime_field: {
      mpz_class r = -a.as_integer();
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), R.modulus().get_mpz_t());
      return RingElement(R, r);
    }
    case RingKind::localization: {
      LocValue v = a.as_loc();
      v.unit_part = -v.unit_part;
      return RingElement(R, std::move(v));
    }
    case RingKind::product: {
      std::vector<RingElement> parts;
      for (auto& c : a.components()) parts.push_back(-c);
      return RingElement(R, std::move(parts));
    }
  }
  raise(errc::invalid_element, "neg");
}

inline RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

inline RingElement operator*(const RingElement& a, const RingElement& b) {
  detail::check_same_ring(a, b);
  const Ring& R = a.ring();
  switch (R.kind()) {
    case RingKind::integers: return RingElement(R, mpz_class(a.as_integer() * b.as_integer()));
    case RingKind::rationals: return RingElement(R, mpq_class(a.as_rational() * b.as_rational()));
    case RingKind::integers_mod:
    case RingKind::prime_field: {
      mpz_class r = a.as_integer() * b.as_integer();
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), R.modulus().get_mpz_t());
      return RingElement(R, r);
    }
    case RingKind::localization: {
      const LocValue &x = a.as_loc(), &y = b.as_loc();
      if (x.unit_part == 0 || y.unit_part == 0) return R.zero();
      std::vector<long> e(x.exponents.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = x.exponents[i] + y.exponents[i];
      // The unit parts are each coprime to the radical, so no re-extraction is needed.
      return RingElement(R, LocValue{mpz_class(x.unit_part * y.unit_part), std::move(e)});
    }
    case RingKind::product: {
      std::vector<RingElement> parts;
      for (size_t i = 0; i < R.factors().size(); ++i)
        parts.push_back(a.components()[i] * b.components()[i]);
      return RingElement(R, std::move(parts));
    }
  }
  raise(errc::invalid_element, "mul");
}

inline bool RingElement::is_zero() const { return *this == ring_.zero(); }
inline bool RingElement::is_one() const { return *this == ring_.one(); }

inline bool is_unit(const RingElement& x) {
  const Ring& R = x.ring();
  switch (R.kind()) {
    case RingKind::integers: return x.as_integer() == 1 || x.as_integer() == -1;
    case RingKind::rationals: return x.as_rational() != 0;
    case RingKind::prime_field: return x.as_integer() != 0;
    case RingKind::integers_mod: {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), x.as_integer().get_mpz_t(), R.modulus().get_mpz_t());
      return g == 1;
    }
    case RingKind::localization: {
      const auto& a = x.as_loc().unit_part;
      return a == 1 || a == -1;
    }
    case RingKind::product:
      return std::all_of(x.components().begin(), x.components().end(),
                         [](const RingElement& c) { return is_unit(c); });
  }
  return false;
}

inline RingElement unit_inverse(const RingElement& x) {
  if (!is_unit(x)) raise(errc::not_a_unit, x.to_string() + " in " + x.ring().to_string());
  const Ring& R = x.ring();
  switch (R.kind()) {
    case RingKind::integers: return x;  // +-1 are self-inverse
    case RingKind::rationals: return RingElement(R, mpq_class(1 / x.as_rational()));
    case RingKind::integers_mod:
    case RingKind::prime_field: {
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), x.as_integer().get_mpz_t(), R.modulus().get_mpz_t());
      return RingElement(R, inv);
    }
    case RingKind::localization: {
      LocValue v = x.as_loc();
      for (auto& e : v.exponents) e = -e;
      return RingElement(R, std::move(v));
    }
    case RingKind::product: {
      std::vector<RingElement> parts;
      for (auto& c : x.components()) parts.push_back(unit_inverse(c));
      return RingElement(R, std::move(parts));
    }
  }
  raise(errc::not_a_unit, "inverse");
}

inline std::string RingElement::to_string() const {
  switch (ring_.kind()) {
    case RingKind::integers:
    case RingKind::integers_mod:
    case RingKind::prime_field: return as_integer().get_str();
    case RingKind::rationals: return as_rational().get_str();
    case RingKind::localization:
      return detail::loc_to_rational(as_loc(), ring_.radical_primes()).get_str();
    case RingKind::product: {
      std::string s = "(";
      for (size_t i = 0; i < components().size(); ++i) {
        if (i) s += ",";
        s += components()[i].to_string();
      }
      return s + ")";
    }
  }
  return "?";
}

// --- semisimplicity and idempotents ---

inline bool ring_is_semisimple(const Ring& R) {
  switch (R.kind()) {
    case RingKind::rationals:
    case RingKind::prime_field: return true;
    case RingKind::integers_mod: return detail::is_squarefree(R.modulus());
    case RingKind::integers:
    case RingKind::localization: return false;
    case RingKind::product:
      return std::all_of(R.factors().begin(), R.factors().end(), ring_is_semisimple);
  }
  return false;
}

namespace detail {

/// All idempotents of R, trivial ones included; empty when enumeration is
/// not feasible (which cannot happen for the rings used below: fields and
/// domains have exactly {0,1}).
inline std::vector<RingElement> all_idempotents(const Ring& R) {
  switch (R.kind()) {
    case RingKind::integers:
    case RingKind::rationals:
    case RingKind::prime_field:
    case RingKind::localization: return {R.zero(), R.one()};
    case RingKind::integers_mod: {
      std::vector<RingElement> out;
      for (mpz_class x = 0; x < R.modulus(); ++x) {
        RingElement e = R.from_integer(x);
        if (e * e == e) out.push_back(e);
      }
      return out;
    }
    case RingKind::product: {
      std::vector<std::vector<RingElement>> comp;
      for (auto& f : R.factors()) comp.push_back(all_idempotents(f));
      std::vector<std::vector<RingElement>> tuples{{}};
      for (auto& choices : comp) {
        std::vector<std::vector<RingElement>> next;
        for (auto& t : tuples)
          for (auto& c : choices) {
            auto t2 = t;
            t2.push_back(c);
            next.push_back(std::move(t2));
          }
        tuples = std::move(next);
      }
      std::vector<RingElement> out;
      for (auto& t : tuples) out.push_back(R.tuple(t));
      return out;
    }
  }
  return {};
}

}  // namespace detail

/// Idempotents e with e*e == e and e not in {0,1}. Only rings where the
/// enumeration is finite report anything; for the domains and fields in the
/// tower the answer {} is also the mathematically correct one.
inline std::vector<RingElement> nontrivial_idempotents(const Ring& R) {
  if (R.kind() != RingKind::integers_mod && R.kind() != RingKind::product &&
      R.kind() != RingKind::rationals && R.kind() != RingKind::prime_field)
    return {};
  std::vector<RingElement> out;
  for (auto& e : detail::all_idempotents(R))
    if (!e.is_zero() && !e.is_one()) out.push_back(e);
  return out;
}

inline std::vector<RingElement> Ring::enumerate_elements() const {
  if (!is_finite()) raise(errc::unsupported_ring_tier, "enumerating an infinite ring");
  switch (kind()) {
    case RingKind::integers_mod:
    case RingKind::prime_field: {
      std::vector<RingElement> out;
      for (mpz_class x = 0; x < modulus(); ++x) out.push_back(from_integer(x));
      return out;
    }
    case RingKind::product: {
      std::vector<std::vector<RingElement>> comp;
      for (auto& f : factors()) comp.push_back(f.enumerate_elements());
      std::vector<std::vector<RingElement>> tuples{{}};
      for (auto& choices : comp) {
        std::vector<std::vector<RingElement>> next;
        for (auto& t : tuples)
          for (auto& c : choices) {
            auto t2 = t;
            t2.push_back(c);
            next.push_back(std::move(t2));
          }
        tuples = std::move(next);
      }
      std::vector<RingElement> out;
      for (auto& t : tuples) out.push_back(tuple(t));
      return out;
    }
    default: break;
  }
  raise(errc::unsupported_ring_tier, "enumerate_elements");
}

// --- string parsing ---

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Split a ring string on top-level 'x' separators; brackets and
/// parentheses protect their contents. Accepts both "Q x Q" and "QxQ".
inline std::vector<std::string_view> split_ring_product(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == 'x' && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

inline mpz_class parse_mpz(std::string_view s, const char* context) {
  s = trim(s);
  if (s.empty()) raise(errc::parse_error, std::string("empty integer in ") + context);
  try {
    return mpz_class(std::string(s));
  } catch (const std::invalid_argument&) {
    raise(errc::parse_error, "bad integer '" + std::string(s) + "' in " + context);
  }
}

}  // namespace detail

inline Ring Ring::parse(std::string_view text) {
  auto parts = detail::split_ring_product(detail::trim(text));
  if (parts.size() > 1) {
    std::vector<Ring> factors;
    for (auto p : parts) factors.push_back(Ring::parse(p));
    return Ring::product(std::move(factors));
  }
  std::string_view s = detail::trim(parts[0]);
  if (s == "Z") return integers();
  if (s == "Q") return rationals();
  if (s.starts_with("Z/")) return integers_mod(detail::parse_mpz(s.substr(2), "Z/m"));
  if (s.starts_with("GF(") && s.ends_with(")"))
    return prime_field(detail::parse_mpz(s.substr(3, s.size() - 4), "GF(p)"));
  if (s.starts_with("Z[1/") && s.ends_with("]"))
    return localization(detail::parse_mpz(s.substr(4, s.size() - 5), "Z[1/n]"));
  raise(errc::parse_error, "unrecognized ring '" + std::string(s) + "'");
}

inline RingElement Ring::parse_element(std::string_view text) const {
  std::string_view s = detail::trim(text);
  if (s.empty()) raise(errc::parse_error, "empty ring element");
  if (kind() == RingKind::product) {
    if (!s.starts_with("(") || !s.ends_with(")"))
      raise(errc::parse_error, "product element must look like (a,b): got '" + std::string(s) +
                                   "' in " + to_string());
    std::string_view body = s.substr(1, s.size() - 2);
    std::vector<std::string_view> parts;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')') --depth;
      if (body[i] == ',' && depth == 0) {
        parts.push_back(body.substr(start, i - start));
        start = i + 1;
      }
    }
    parts.push_back(body.substr(start));
    if (parts.size() != factors().size())
      raise(errc::parse_error, "expected " + std::to_string(factors().size()) +
                                   " components in '" + std::string(s) + "'");
    std::vector<RingElement> comps;
    for (size_t i = 0; i < parts.size(); ++i)
      comps.push_back(factors()[i].parse_element(parts[i]));
    return tuple(std::move(comps));
  }
  try {
    mpq_class q{std::string(s)};
    q.canonicalize();
    return from_rational(q);
  } catch (const std::invalid_argument&) {
    raise(errc::parse_error, "bad ring element '" + std::string(s) + "' in " + to_string());
  }
}

}  // namespace hopfint
