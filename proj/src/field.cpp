#include "dualcat/field.hpp"

namespace dualcat {

namespace {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::gf(std::uint64_t p) {
  if (p > (1ull << 31))
    throw std::invalid_argument("prime modulus too large (limit 2^31)");
  if (!is_prime_u64(p))
    throw std::invalid_argument("GF modulus must be prime, got " + std::to_string(p));
  return Field{p};
}

FieldElem Field::zero() const { return from_int(0); }
FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(long long n) const {
  FieldElem e;
  e.field_ = *this;
  if (p_ == 0) {
    e.q_ = n;
  } else {
    long long m = n % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    e.r_ = static_cast<std::uint64_t>(m);
  }
  return e;
}

FieldElem Field::parse(std::string_view s) const {
  auto slash = s.find('/');
  auto parse_int = [](std::string_view t) -> BigInt {
    if (t.empty()) throw std::invalid_argument("empty scalar");
    std::size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (k == t.size()) throw std::invalid_argument("bad scalar: sign only");
    for (std::size_t i = k; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw std::invalid_argument("bad scalar: " + std::string(t));
    return BigInt(std::string(t));
  };
  BigInt num = parse_int(slash == std::string_view::npos ? s : s.substr(0, slash));
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
  }
  FieldElem e;
  e.field_ = *this;
  if (p_ == 0) {
    e.q_ = Rational(num, den);
  } else {
    BigInt p(p_);
    BigInt n = num % p;
    if (n < 0) n += p;
    e.r_ = n.convert_to<std::uint64_t>();
    if (den != 1) {
      BigInt d = den % p;
      if (d < 0) d += p;
      FieldElem dd;
      dd.field_ = *this;
      dd.r_ = d.convert_to<std::uint64_t>();
      e /= dd;
    }
  }
  return e;
}

bool FieldElem::is_zero() const {
  return field_.is_rationals() ? q_ == 0 : r_ == 0;
}

bool FieldElem::is_one() const {
  return field_.is_rationals() ? q_ == 1 : r_ == 1 % field_.modulus();
}

FieldElem FieldElem::operator-() const {
  FieldElem e = *this;
  if (field_.is_rationals())
    e.q_ = -q_;
  else
    e.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
  return e;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  if (field_ != o.field_) throw FieldMismatch{};
  if (field_.is_rationals()) {
    q_ += o.q_;
  } else {
    r_ += o.r_;
    if (r_ >= field_.modulus()) r_ -= field_.modulus();
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  if (field_ != o.field_) throw FieldMismatch{};
  if (field_.is_rationals())
    q_ *= o.q_;
  else
    r_ = mod_mul(r_, o.r_, field_.modulus());
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inverse(); }

bool FieldElem::operator==(const FieldElem& o) const {
  if (field_ != o.field_) throw FieldMismatch{};
  return field_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  FieldElem e = *this;
  if (field_.is_rationals())
    e.q_ = 1 / q_;
  else
    e.r_ = mod_pow(r_, field_.modulus() - 2, field_.modulus());
  return e;
}

FieldElem FieldElem::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem acc = field_.one();
  FieldElem base = *this;
  unsigned long long n = static_cast<unsigned long long>(e);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::string FieldElem::str() const {
  if (field_.is_prime_field()) return std::to_string(r_);
  std::string s = numerator(q_).str();
  if (denominator(q_) != 1) s += "/" + denominator(q_).str();
  return s;
}

}  // namespace dualcat
