#pragma once

#include <map>
#include <optional>
#include <string>

#include "dualcat/matrix.hpp"

namespace dualcat {

struct Violation {
  int degree;
  std::string message;
};

/// Bounded complex of finitely generated free A-modules. Differentials raise
/// degree: d^n : C^n -> C^{n+1}. Only degrees with positive rank are stored.
class FreeComplex {
public:
  FreeComplex() = default;
  explicit FreeComplex(const Field& f) : field_(f) {}

  const Field& field() const { return field_; }
  const std::map<int, std::size_t>& ranks() const { return ranks_; }
  std::size_t rank_at(int n) const;
  bool empty() const { return ranks_.empty(); }
  int min_degree() const { return ranks_.begin()->first; }
  int max_degree() const { return ranks_.rbegin()->first; }
  std::size_t total_rank() const;

  void set_term(int degree, std::size_t rank);
  /// d^n; stored only when both ends exist, returned zero-filled otherwise.
  DualMatrix diff(int n) const;
  void set_diff(int n, DualMatrix d);

  /// Boundedness is structural; checks d^{n+1} d^n = 0 over A and matrix
  /// shapes, reporting the first offending degree.
  std::optional<Violation> validate() const;

  /// The indecomposable X_i[h]: A in degrees -i-h .. -1-h with differential
  /// eps, shift signs applied.
  static FreeComplex x_i(const Field& f, int i, int h = 0);

  /// (C[n])^m = C^{m+n}, differentials scaled by (-1)^n.
  FreeComplex shifted(int n) const;

  bool operator==(const FreeComplex& o) const;

private:
  Field field_;
  std::map<int, std::size_t> ranks_;
  std::map<int, DualMatrix> diffs_;
};

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b);

struct ModShape {
  std::size_t free_rank = 0;  // copies of A
  std::size_t k_rank = 0;     // copies of k = A/(eps)
  bool is_zero() const { return free_rank == 0 && k_rank == 0; }
  bool operator==(const ModShape&) const = default;
};

/// A-linear map A^{f1} + k^{t1} -> A^{f2} + k^{t2}, stored blockwise.
/// Hom(A,A) = A; Hom(A,k) = k (project the unit part); Hom(k,A) = k (socle
/// inclusion c -> eps c); Hom(k,k) = k. These force the composition rules
/// proj . incl = 0 and incl . proj = eps id.
class TypedMatrix {
public:
  TypedMatrix() = default;
  TypedMatrix(const Field& f, ModShape target, ModShape source);

  const ModShape& source_shape() const { return src_; }
  const ModShape& target_shape() const { return dst_; }

  DualMatrix aa;   // f2 x f1, A -> A
  FieldMatrix ka;  // f2 x t1, k -> A
  FieldMatrix ak;  // t2 x f1, A -> k
  FieldMatrix kk;  // t2 x t1, k -> k

  TypedMatrix operator*(const TypedMatrix& o) const;
  TypedMatrix operator+(const TypedMatrix& o) const;
  TypedMatrix operator-() const;
  bool operator==(const TypedMatrix& o) const;
  bool is_zero() const;

  static TypedMatrix from_dual(const DualMatrix& m);

private:
  ModShape src_, dst_;
};

/// Bounded complex of finitely generated A-modules (free plus k summands).
class ModuleComplex {
public:
  ModuleComplex() = default;
  explicit ModuleComplex(const Field& f) : field_(f) {}

  const Field& field() const { return field_; }
  const std::map<int, ModShape>& terms() const { return terms_; }
  ModShape term_at(int n) const;
  bool empty() const { return terms_.empty(); }
  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }

  void set_term(int degree, ModShape s);
  TypedMatrix diff(int n) const;
  void set_diff(int n, TypedMatrix d);

  std::optional<Violation> validate() const;

  /// A free complex is a module complex with no k summands.
  static ModuleComplex embed(const FreeComplex& c);
  /// The complex with a single k in the given degree (the cohomology model
  /// of X_infty[-1-degree .. ]).
  static ModuleComplex k_point(const Field& f, int degree);

  ModuleComplex shifted(int n) const;
  bool is_free() const;

private:
  Field field_;
  std::map<int, ModShape> terms_;
  std::map<int, TypedMatrix> diffs_;
};

/// Chain map between free complexes; components f^n : X^n -> Y^n.
class ChainMap {
public:
  ChainMap() = default;
  ChainMap(FreeComplex src, FreeComplex tgt);

  static ChainMap identity(const FreeComplex& c);
  static ChainMap zero(FreeComplex src, FreeComplex tgt) { return {std::move(src), std::move(tgt)}; }

  const FreeComplex& source() const { return src_; }
  const FreeComplex& target() const { return tgt_; }

  DualMatrix component(int n) const;
  void set_component(int n, DualMatrix m);
  const std::map<int, DualMatrix>& components() const { return comps_; }

  /// Degreewise commutation with the differentials.
  std::optional<Violation> validate() const;

  ChainMap shifted(int n) const;
  ChainMap scaled(const DualScalar& c) const;
  ChainMap operator+(const ChainMap& o) const;
  ChainMap operator-(const ChainMap& o) const;
  bool operator==(const ChainMap& o) const;

private:
  FreeComplex src_, tgt_;
  std::map<int, DualMatrix> comps_;
};

/// g after f.
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Degree -1 collection s^n : X^n -> Y^{n-1}; any such collection qualifies.
class Homotopy {
public:
  Homotopy() = default;
  DualMatrix component(int n, const FreeComplex& src, const FreeComplex& tgt) const;
  void set_component(int n, DualMatrix m);
  const std::map<int, DualMatrix>& components() const { return comps_; }

private:
  std::map<int, DualMatrix> comps_;
};

/// Cone(f)^n = X^{n+1} + Y^n with differential [[-d_X, 0], [f, d_Y]].
FreeComplex cone(const ChainMap& f);

/// Finds s with f = d s + s d when the class of f vanishes.
std::optional<Homotopy> is_nullhomotopic(const ChainMap& f);

}  // namespace dualcat
