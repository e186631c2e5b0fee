#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dualcat {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Thrown when elements of different base fields meet in one operation.
struct FieldMismatch : std::invalid_argument {
  FieldMismatch() : std::invalid_argument("elements belong to different fields") {}
};

class FieldElem;

/// Session-level scalar configuration: exact rationals, or GF(p) for a prime p.
/// A Field value is immutable; elements carry their field and refuse to mix.
class Field {
public:
  Field() = default;  // rationals

  static Field rationals() { return Field{}; }
  static Field gf(std::uint64_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  std::uint64_t modulus() const { return p_; }

  bool operator==(const Field&) const = default;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long long n) const;

  /// Parses "n", "-n" or "n/d" (rationals in lowest terms on output; any
  /// integer string is reduced mod p for GF(p), '/' meaning division).
  FieldElem parse(std::string_view s) const;

  std::string name() const { return p_ == 0 ? "q" : "gf:" + std::to_string(p_); }

private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;  // 0 = rationals
};

/// An exact element of the configured base field k.
class FieldElem {
public:
  FieldElem() = default;  // 0 in Q

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  FieldElem inverse() const;
  /// Integer power, negative exponents allowed for nonzero elements.
  FieldElem pow(long long e) const;

  /// Decimal string; rationals use "p/q" with q > 0 when the denominator is
  /// not 1.
  std::string str() const;

private:
  friend class Field;
  Field field_;
  std::uint64_t r_ = 0;  // GF(p) representative in [0, p)
  Rational q_;           // rational value
};

/// Deterministic primality check (trial division; moduli are capped small).
bool is_prime_u64(std::uint64_t n);

}  // namespace dualcat
