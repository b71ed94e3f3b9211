#include "wam/semiring.hpp"

#include <algorithm>
#include <vector>

namespace wam {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

mpz_class numerator_of(const Scalar& a) { return a.value.get_num(); }

void require_integral(const Scalar& a, const char* what) {
  if (a.minus_inf || a.value.get_den() != 1) {
    throw Error(std::string("non-integral scalar in ") + what);
  }
}

}  // namespace

Semiring Semiring::zmod(unsigned long p) {
  if (p < 2) throw Error("zmod modulus must be >= 2");
  return Semiring(SemiringKind::ZMod, p);
}

Semiring Semiring::from_tag(const std::string& tag) {
  if (tag == "boolean") return boolean();
  if (tag == "natural") return natural();
  if (tag == "integer") return integer();
  if (tag == "rational") return rational();
  if (tag == "tropical") return tropical();
  if (tag.rfind("zmod:", 0) == 0) {
    const std::string num = tag.substr(5);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad zmod modulus in semiring tag '" + tag + "'");
    }
    return zmod(std::stoul(num));
  }
  throw ParseError("unknown semiring tag '" + tag + "'");
}

std::string Semiring::tag() const {
  switch (kind_) {
    case SemiringKind::Boolean: return "boolean";
    case SemiringKind::Natural: return "natural";
    case SemiringKind::Integer: return "integer";
    case SemiringKind::Rational: return "rational";
    case SemiringKind::ZMod: return "zmod:" + std::to_string(modulus_);
    case SemiringKind::Tropical: return "tropical";
  }
  throw Error("corrupt semiring kind");
}

Scalar Semiring::zero() const {
  if (kind_ == SemiringKind::Tropical) return Scalar::minus_infinity();
  return Scalar(mpq_class(0));
}

Scalar Semiring::one() const {
  if (kind_ == SemiringKind::Tropical) return Scalar(mpq_class(0));
  return Scalar(mpq_class(1));
}

Scalar Semiring::normalize_residue(const mpz_class& z) const {
  mpz_class r = z % mpz_class(modulus_);
  if (r < 0) r += modulus_;
  return Scalar(mpq_class(r));
}

Scalar Semiring::add(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case SemiringKind::Boolean:
      return (a.value != 0 || b.value != 0) ? one() : zero();
    case SemiringKind::Natural:
    case SemiringKind::Integer:
    case SemiringKind::Rational:
      return Scalar(mpq_class(a.value + b.value));
    case SemiringKind::ZMod:
      return normalize_residue(numerator_of(a) + numerator_of(b));
    case SemiringKind::Tropical:
      if (a.minus_inf) return b;
      if (b.minus_inf) return a;
      return Scalar(std::max(a.value, b.value));
  }
  throw Error("corrupt semiring kind");
}

Scalar Semiring::mul(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case SemiringKind::Boolean:
      return (a.value != 0 && b.value != 0) ? one() : zero();
    case SemiringKind::Natural:
    case SemiringKind::Integer:
    case SemiringKind::Rational:
      return Scalar(mpq_class(a.value * b.value));
    case SemiringKind::ZMod:
      return normalize_residue(numerator_of(a) * numerator_of(b));
    case SemiringKind::Tropical:
      if (a.minus_inf || b.minus_inf) return Scalar::minus_infinity();
      return Scalar(mpq_class(a.value + b.value));
  }
  throw Error("corrupt semiring kind");
}

bool Semiring::is_field() const {
  switch (kind_) {
    case SemiringKind::Rational: return true;
    case SemiringKind::ZMod: return is_prime(modulus_);
    default: return false;
  }
}

bool Semiring::has_subtraction() const {
  switch (kind_) {
    case SemiringKind::Integer:
    case SemiringKind::Rational:
    case SemiringKind::ZMod:
      return true;
    default:
      return false;
  }
}

bool Semiring::one_plus_one_equals_one() const { return eq(add(one(), one()), one()); }

Scalar Semiring::negate(const Scalar& a) const {
  if (!has_subtraction()) {
    throw CapabilityError("semiring '" + tag() + "' has no subtraction");
  }
  if (kind_ == SemiringKind::ZMod) return normalize_residue(-numerator_of(a));
  return Scalar(mpq_class(-a.value));
}

Scalar Semiring::sub(const Scalar& a, const Scalar& b) const { return add(a, negate(b)); }

Scalar Semiring::inverse(const Scalar& a) const {
  if (!is_field()) {
    throw CapabilityError("semiring '" + tag() + "' is not a field");
  }
  if (is_zero(a)) throw Error("inverse of zero");
  if (kind_ == SemiringKind::Rational) return Scalar(mpq_class(1 / a.value));
  mpz_class inv;
  mpz_class p(modulus_);
  if (mpz_invert(inv.get_mpz_t(), numerator_of(a).get_mpz_t(), p.get_mpz_t()) == 0) {
    throw Error("residue not invertible");
  }
  return normalize_residue(inv);
}

Scalar Semiring::divide(const Scalar& a, const Scalar& b) const { return mul(a, inverse(b)); }

Scalar Semiring::nat_embed(const mpz_class& n) const {
  if (n < 0) throw Error("nat_embed of a negative number");
  switch (kind_) {
    case SemiringKind::Boolean:
      return n == 0 ? zero() : one();
    case SemiringKind::Natural:
    case SemiringKind::Integer:
    case SemiringKind::Rational:
      return Scalar(mpq_class(n));
    case SemiringKind::ZMod:
      return normalize_residue(n);
    case SemiringKind::Tropical:
      // max(0,...,0) with n summands: -inf for the empty sum, else 0.
      return n == 0 ? zero() : one();
  }
  throw Error("corrupt semiring kind");
}

Scalar Semiring::from_long(long v) const {
  switch (kind_) {
    case SemiringKind::Boolean:
      return v != 0 ? one() : zero();
    case SemiringKind::Natural:
      if (v < 0) throw Error("negative value in the natural semiring");
      return Scalar(mpq_class(v));
    case SemiringKind::Integer:
    case SemiringKind::Rational:
      return Scalar(mpq_class(v));
    case SemiringKind::ZMod:
      return normalize_residue(mpz_class(v));
    case SemiringKind::Tropical:
      if (v < 0) throw Error("tropical values are naturals (or -inf)");
      return Scalar(mpq_class(v));
  }
  throw Error("corrupt semiring kind");
}

std::string Semiring::to_string(const Scalar& a) const {
  if (kind_ == SemiringKind::Tropical && a.minus_inf) return "-inf";
  if (kind_ == SemiringKind::Rational) {
    return a.value.get_num().get_str() + "/" + a.value.get_den().get_str();
  }
  return a.value.get_num().get_str();
}

Scalar Semiring::parse(const std::string& text) const {
  if (text.empty()) throw ParseError("empty scalar");
  if (kind_ == SemiringKind::Tropical && text == "-inf") return Scalar::minus_infinity();

  const auto parse_int = [&](const std::string& s) -> mpz_class {
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw ParseError("bad scalar '" + s + "' for semiring " + tag());
    }
    return mpz_class(s);
  };

  switch (kind_) {
    case SemiringKind::Boolean: {
      if (text == "0") return zero();
      if (text == "1") return one();
      throw ParseError("boolean scalar must be 0 or 1, got '" + text + "'");
    }
    case SemiringKind::Natural: {
      mpz_class z = parse_int(text);
      if (z < 0) throw ParseError("negative scalar '" + text + "' in the natural semiring");
      return Scalar(mpq_class(z));
    }
    case SemiringKind::Integer:
      return Scalar(mpq_class(parse_int(text)));
    case SemiringKind::Rational: {
      const size_t slash = text.find('/');
      if (slash == std::string::npos) return Scalar(mpq_class(parse_int(text)));
      mpz_class num = parse_int(text.substr(0, slash));
      mpz_class den = parse_int(text.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in '" + text + "'");
      mpq_class q(num, den);
      q.canonicalize();
      return Scalar(q);
    }
    case SemiringKind::ZMod:
      return normalize_residue(parse_int(text));
    case SemiringKind::Tropical: {
      mpz_class z = parse_int(text);
      if (z < 0) throw ParseError("tropical scalar must be a natural or -inf");
      return Scalar(mpq_class(z));
    }
  }
  throw Error("corrupt semiring kind");
}

AdditiveMonoidParameters Semiring::additive_monoid_parameters(unsigned long bound) const {
  if (bound < 1) throw Error("probe bound must be >= 1");
  // embeds[k] = k.1, built by iterated addition.
  std::vector<Scalar> embeds;
  embeds.reserve(2 * bound + 1);
  embeds.push_back(zero());
  for (unsigned long k = 1; k <= 2 * bound; ++k) {
    embeds.push_back(add(embeds.back(), one()));
  }
  for (unsigned long e = 0; e <= bound; ++e) {
    for (unsigned long r = 1; r <= bound; ++r) {
      if (eq(embeds[e], embeds[e + r])) {
        return {e, r};
      }
    }
  }
  return {std::nullopt, std::nullopt};
}

}  // namespace wam
