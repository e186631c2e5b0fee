#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "dualcat/complex.hpp"

namespace dualcat {

/// Index of an indecomposable: a positive integer or infinity (the
/// non-perfect indecomposable X_infty).
class XIndex {
public:
  XIndex() : v_(1) {}
  static XIndex infinity() { return XIndex(kInf); }
  static XIndex finite(int i) {
    if (i <= 0) throw std::invalid_argument("indecomposable index must be positive");
    return XIndex(i);
  }

  bool is_infinite() const { return v_ == kInf; }
  int value() const {
    if (is_infinite()) throw std::logic_error("value() on infinite index");
    return v_;
  }

  auto operator<=>(const XIndex&) const = default;  // infinity sorts last
  std::string str() const { return is_infinite() ? "inf" : std::to_string(v_); }

private:
  explicit XIndex(int v) : v_(v) {}
  static constexpr int kInf = INT32_MAX;
  int v_;
};

struct Summand {
  XIndex i;
  int h = 0;
  std::size_t mult = 1;
  bool operator==(const Summand&) const = default;
};

/// Multiset of indecomposables X_i[h], kept in canonical order (by h, then i)
/// with merged multiplicities.
class FormalObject {
public:
  FormalObject() = default;

  void add(XIndex i, int h, std::size_t mult = 1);
  const std::vector<Summand>& summands() const { return s_; }
  bool empty() const { return s_.empty(); }
  std::size_t unit_count() const;
  bool is_perfect() const;

  /// Flattened view, one entry per multiplicity unit, in canonical order.
  std::vector<std::pair<XIndex, int>> units() const;

  FormalObject shifted(int n) const;
  FormalObject operator+(const FormalObject& o) const;
  bool operator==(const FormalObject& o) const { return s_ == o.s_; }

  std::string str() const;

private:
  std::vector<Summand> s_;
};

struct MinimizeWitness {
  FreeComplex minimal;
  ChainMap to_minimal;    // C -> M
  ChainMap from_minimal;  // M -> C
  Homotopy homotopy;      // id_C - (M -> C)(C -> M) = d s + s d
};

/// Cancels unit pivots of the differentials until every entry lies in eps*k.
/// The witness is an exact homotopy equivalence (from . to = id on M).
MinimizeWitness minimize(const FreeComplex& c);

/// Krull-Schmidt decomposition of a perfect complex, through the interval
/// decomposition of the eps part of its minimal model.
FormalObject barcode(const FreeComplex& c);

/// Per-degree cohomology: counts of A summands and k summands of H^n.
struct CohomologyProfile {
  std::map<int, std::pair<std::size_t, std::size_t>> groups;  // degree -> (a_n, b_n)
  bool operator==(const CohomologyProfile&) const = default;
};

CohomologyProfile cohomology(const FreeComplex& c);

/// Class in K(D^b(A)) as the integer n with [F] = n [X_infty]:
/// X_infty[h] contributes (-1)^h, X_i[h] contributes (-1)^h (1 + (-1)^{i-1}).
long long k_class(const FormalObject& f);

/// Canonical direct sum of X_i[h] realizations; finite summands only.
FreeComplex realize(const Field& f, const FormalObject& obj);

}  // namespace dualcat
