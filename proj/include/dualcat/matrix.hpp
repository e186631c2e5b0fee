#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dualcat/dual.hpp"
#include "dualcat/field.hpp"

namespace dualcat {

/// Dense matrix over the base field k, row-major.
class FieldMatrix {
public:
  FieldMatrix() = default;
  FieldMatrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols, f.zero()) {}

  static FieldMatrix identity(const Field& f, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElem& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const FieldElem& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  FieldMatrix operator*(const FieldMatrix& o) const;
  FieldMatrix operator+(const FieldMatrix& o) const;
  FieldMatrix operator-(const FieldMatrix& o) const;
  FieldMatrix operator-() const;
  FieldMatrix scaled(const FieldElem& c) const;
  bool operator==(const FieldMatrix& o) const;
  bool is_zero() const;

private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElem> e_;
};

using FieldVector = std::vector<FieldElem>;

std::size_t rank(const FieldMatrix& m);

struct AffineSolution {
  FieldVector particular;
  std::vector<FieldVector> nullspace;  // basis, size = cols - rank
};

/// Solves A x = b exactly. Returns nullopt when inconsistent. Gaussian
/// elimination with first-nonzero pivoting, so bases are reproducible.
std::optional<AffineSolution> solve_affine(const FieldMatrix& a, const FieldVector& b);

/// Inverse of a square invertible matrix over k; nullopt when singular.
std::optional<FieldMatrix> inverse(const FieldMatrix& m);

/// Dense matrix over A = k[eps]/(eps^2), stored as the pair (unit part,
/// eps part) of matrices over k.
class DualMatrix {
public:
  DualMatrix() = default;
  DualMatrix(const Field& f, std::size_t rows, std::size_t cols)
      : a_(f, rows, cols), b_(f, rows, cols) {}
  DualMatrix(FieldMatrix a, FieldMatrix b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.rows() != b_.rows() || a_.cols() != b_.cols())
      throw std::invalid_argument("unit/eps part shape mismatch");
  }

  static DualMatrix identity(const Field& f, std::size_t n) {
    return {FieldMatrix::identity(f, n), FieldMatrix(f, n, n)};
  }

  const Field& field() const { return a_.field(); }
  std::size_t rows() const { return a_.rows(); }
  std::size_t cols() const { return a_.cols(); }

  const FieldMatrix& unit_part() const { return a_; }
  const FieldMatrix& eps_part() const { return b_; }
  FieldMatrix& unit_part() { return a_; }
  FieldMatrix& eps_part() { return b_; }

  DualScalar at(std::size_t r, std::size_t c) const {
    return {a_.at(r, c), b_.at(r, c)};
  }
  void set(std::size_t r, std::size_t c, const DualScalar& v) {
    a_.at(r, c) = v.unit_part();
    b_.at(r, c) = v.eps_part();
  }

  DualMatrix operator*(const DualMatrix& o) const {
    // (A, B)(A', B') = (AA', AB' + BA')
    return {a_ * o.a_, a_ * o.b_ + b_ * o.a_};
  }
  DualMatrix operator+(const DualMatrix& o) const { return {a_ + o.a_, b_ + o.b_}; }
  DualMatrix operator-(const DualMatrix& o) const { return {a_ - o.a_, b_ - o.b_}; }
  DualMatrix operator-() const { return {-a_, -b_}; }
  DualMatrix scaled(const DualScalar& c) const;
  bool operator==(const DualMatrix& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// Invertible over A iff the unit part is invertible over k.
  std::optional<DualMatrix> inverse_over_a() const;

private:
  FieldMatrix a_, b_;
};

struct PivotReduction {
  DualMatrix row_ops;   // P, invertible over A
  DualMatrix col_ops;   // Q, invertible over A
  DualMatrix reduced;   // P * M * Q
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

/// Clears the row and column of each unit pivot by invertible row/column
/// operations over A, normalizing pivots to 1, until the remaining block
/// (rows/columns without a pivot) has no unit entries.
PivotReduction dual_unit_pivot_reduce(const DualMatrix& m);

}  // namespace dualcat
