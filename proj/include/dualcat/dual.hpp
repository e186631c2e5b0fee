#pragma once

#include "dualcat/field.hpp"

namespace dualcat {

/// Element a + eps*b of A = k[eps]/(eps^2).
class DualScalar {
public:
  DualScalar() = default;
  DualScalar(FieldElem a, FieldElem b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.field() != b_.field()) throw FieldMismatch{};
  }
  static DualScalar of(const FieldElem& a) { return {a, a.field().zero()}; }
  static DualScalar eps(const Field& f) { return {f.zero(), f.one()}; }
  static DualScalar zero(const Field& f) { return {f.zero(), f.zero()}; }
  static DualScalar one(const Field& f) { return {f.one(), f.zero()}; }

  const FieldElem& unit_part() const { return a_; }
  const FieldElem& eps_part() const { return b_; }
  const Field& field() const { return a_.field(); }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  /// Units of the local ring A are exactly the elements with a != 0.
  bool is_unit() const { return !a_.is_zero(); }

  DualScalar operator-() const { return {-a_, -b_}; }
  DualScalar& operator+=(const DualScalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  DualScalar& operator-=(const DualScalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  // (a + eps b)(a' + eps b') = aa' + eps(ab' + a'b); eps^2 = 0.
  DualScalar& operator*=(const DualScalar& o) {
    FieldElem nb = a_ * o.b_ + o.a_ * b_;
    a_ *= o.a_;
    b_ = std::move(nb);
    return *this;
  }
  friend DualScalar operator+(DualScalar x, const DualScalar& y) { return x += y; }
  friend DualScalar operator-(DualScalar x, const DualScalar& y) { return x -= y; }
  friend DualScalar operator*(DualScalar x, const DualScalar& y) { return x *= y; }

  bool operator==(const DualScalar& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const DualScalar& o) const { return !(*this == o); }

  /// (a + eps b)^{-1} = a^{-1} - eps b a^{-2}; requires a != 0.
  DualScalar inverse() const {
    FieldElem ai = a_.inverse();
    return {ai, -(b_ * ai * ai)};
  }

  std::string str() const {
    if (b_.is_zero()) return a_.str();
    if (a_.is_zero()) return "eps*" + b_.str();
    return a_.str() + "+eps*" + b_.str();
  }

private:
  FieldElem a_, b_;
};

}  // namespace dualcat
