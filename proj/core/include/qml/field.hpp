#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "qml/error.hpp"

namespace qml {

/// Runtime description of a coefficient field: F_p for a prime p <= 251, or Q.
struct FieldSpec {
  enum class Kind { prime, rationals };

  Kind kind = Kind::prime;
  unsigned p = 2;

  static FieldSpec prime_field(unsigned p);
  static FieldSpec rationals() { return {Kind::rationals, 0}; }

  /// Parses "F2", "F3", ..., "Q".
  static FieldSpec parse(std::string_view name);
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_small_prime(unsigned p) {
  if (p < 2 || p > 251) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline FieldSpec FieldSpec::prime_field(unsigned p) {
  if (!is_small_prime(p))
    throw InvalidArgument("field characteristic must be a prime <= 251, got " + std::to_string(p));
  return {Kind::prime, p};
}

inline FieldSpec FieldSpec::parse(std::string_view name) {
  if (name == "Q") return rationals();
  if (name.size() >= 2 && (name[0] == 'F' || name[0] == 'f')) {
    unsigned p = 0;
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9' || p > 1000) throw ParseError("bad field name '" + std::string(name) + "'");
      p = p * 10 + static_cast<unsigned>(c - '0');
    }
    return prime_field(p);
  }
  throw ParseError("bad field name '" + std::string(name) + "' (expected F<p> or Q)");
}

inline std::string FieldSpec::name() const {
  return kind == Kind::rationals ? std::string("Q") : "F" + std::to_string(p);
}

/// Arithmetic in Z/pZ. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint16_t;

  PrimeField() = default;
  explicit PrimeField(unsigned p) : p_(static_cast<std::uint16_t>(FieldSpec::prime_field(p).p)) {}

  unsigned characteristic() const { return p_; }
  FieldSpec spec() const { return {FieldSpec::Kind::prime, p_}; }
  std::string name() const { return "F" + std::to_string(p_); }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  Element add(Element a, Element b) const {
    unsigned s = unsigned(a) + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const {
    return static_cast<Element>(a >= b ? a - b : a + p_ - b);
  }
  Element neg(Element a) const { return static_cast<Element>(a == 0 ? 0 : p_ - a); }
  Element mul(Element a, Element b) const { return static_cast<Element>((unsigned(a) * b) % p_); }

  Element inv(Element a) const {
    if (a == 0) throw SingularMatrix("division by zero in " + name());
    return pow(a, p_ - 2);
  }

  Element pow(Element a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    Element r = 1;
    Element b = a;
    while (e > 0) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  Element from_integer(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
  }

  std::string to_string(Element a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint16_t p_ = 2;
};

/// Exact rational arithmetic on arbitrary-precision integers, always reduced.
class RationalField {
 public:
  using Element = boost::multiprecision::cpp_rational;

  FieldSpec spec() const { return FieldSpec::rationals(); }
  std::string name() const { return "Q"; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return a == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }

  Element inv(const Element& a) const {
    if (a == 0) throw SingularMatrix("division by zero in Q");
    return Element(1) / a;
  }

  Element pow(const Element& a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    Element r = 1;
    Element b = a;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  Element from_integer(long long v) const { return Element(v); }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string(const Element& a) const {
    auto num = boost::multiprecision::numerator(a);
    auto den = boost::multiprecision::denominator(a);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace qml
