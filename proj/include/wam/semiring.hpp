#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "wam/errors.hpp"

namespace wam {

// A scalar value. The same storage serves every shipped semiring: booleans
// as 0/1, naturals/integers/residues as integral rationals, rationals as
// canonical fractions, tropical naturals with a separate minus-infinity flag
// (the tropical additive identity). Values are normalized on construction,
// so operator== doubles as semantic equality within one semiring.
struct Scalar {
  mpq_class value{0};
  bool minus_inf = false;

  Scalar() = default;
  explicit Scalar(mpq_class v) : value(std::move(v)) {}

  static Scalar minus_infinity() {
    Scalar s;
    s.minus_inf = true;
    return s;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.minus_inf != b.minus_inf) return false;
    return a.minus_inf || a.value == b.value;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

enum class SemiringKind { Boolean, Natural, Integer, Rational, ZMod, Tropical };

// m(K) and l(K): index and period of the additive monoid generated by 1.
// An absent index means no repetition was found within the probe bound
// (reported as "infinity"); the period is absent whenever the index is.
struct AdditiveMonoidParameters {
  std::optional<unsigned long> index;
  std::optional<unsigned long> period;
};

// Commutative semiring descriptor. Immutable; cheap to copy; all operations
// are pure, so concurrent use needs no synchronization.
class Semiring {
 public:
  static Semiring boolean() { return Semiring(SemiringKind::Boolean, 0); }
  static Semiring natural() { return Semiring(SemiringKind::Natural, 0); }
  static Semiring integer() { return Semiring(SemiringKind::Integer, 0); }
  static Semiring rational() { return Semiring(SemiringKind::Rational, 0); }
  static Semiring zmod(unsigned long p);
  static Semiring tropical() { return Semiring(SemiringKind::Tropical, 0); }

  // Tags: "boolean", "natural", "integer", "rational", "zmod:<p>", "tropical".
  static Semiring from_tag(const std::string& tag);
  std::string tag() const;

  SemiringKind kind() const { return kind_; }
  unsigned long modulus() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }
  bool is_zero(const Scalar& a) const { return eq(a, zero()); }
  bool is_one(const Scalar& a) const { return eq(a, one()); }

  bool is_field() const;
  bool has_subtraction() const;
  bool one_plus_one_equals_one() const;

  // Throw CapabilityError when the semiring lacks the operation.
  Scalar negate(const Scalar& a) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar inverse(const Scalar& a) const;
  Scalar divide(const Scalar& a, const Scalar& b) const;

  // n-fold sum of one; a monoid morphism from (N, +).
  Scalar nat_embed(const mpz_class& n) const;

  // Embed a machine integer; rejects values outside the carrier
  // (negative naturals, tropical negatives).
  Scalar from_long(long v) const;

  std::string to_string(const Scalar& a) const;
  Scalar parse(const std::string& text) const;

  // Bounded probe for the least e <= bound with e.1 = (e+r).1 for some
  // 1 <= r <= bound, and the least such r. Computed by iterated addition so
  // it stays semiring-agnostic.
  AdditiveMonoidParameters additive_monoid_parameters(unsigned long bound = 64) const;

  friend bool operator==(const Semiring& a, const Semiring& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  Semiring(SemiringKind kind, unsigned long modulus) : kind_(kind), modulus_(modulus) {}

  Scalar normalize_residue(const mpz_class& z) const;

  SemiringKind kind_;
  unsigned long modulus_;
};

}  // namespace wam
