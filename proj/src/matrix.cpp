#include "dualcat/matrix.hpp"

#include <cassert>

namespace dualcat {

FieldMatrix FieldMatrix::identity(const Field& f, std::size_t n) {
  FieldMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  FieldMatrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElem& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  FieldMatrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  FieldMatrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

FieldMatrix FieldMatrix::operator-() const {
  FieldMatrix r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

FieldMatrix FieldMatrix::scaled(const FieldElem& c) const {
  FieldMatrix r = *this;
  for (auto& x : r.e_) x *= c;
  return r;
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!(e_[i] == o.e_[i])) return false;
  return true;
}

bool FieldMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

// Row echelon form in place; returns pivot columns. First nonzero pivot in
// scan order, no pivoting heuristics: determinism matters, accuracy doesn't.
std::vector<std::size_t> echelonize(FieldMatrix& m) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    FieldElem inv = m.at(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      FieldElem f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

std::size_t rank(const FieldMatrix& m) {
  FieldMatrix w = m;
  return echelonize(w).size();
}

std::optional<AffineSolution> solve_affine(const FieldMatrix& a, const FieldVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("rhs dimension mismatch");
  const Field& f = a.field();
  FieldMatrix aug(f, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = echelonize(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // 0 = 1 row

  std::vector<long long> pivot_of_col(a.cols(), -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = static_cast<long long>(r);

  AffineSolution sol;
  sol.particular.assign(a.cols(), f.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    sol.particular[pivots[r]] = aug.at(r, a.cols());

  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (pivot_of_col[c] >= 0) continue;
    FieldVector v(a.cols(), f.zero());
    v[c] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug.at(r, c);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

std::optional<FieldMatrix> inverse(const FieldMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const Field& f = m.field();
  std::size_t n = m.rows();
  FieldMatrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = f.one();
  }
  auto pivots = echelonize(aug);
  // singular iff some pivot falls into the augmented block
  if (pivots.size() != n || (n > 0 && pivots.back() >= n)) return std::nullopt;
  FieldMatrix inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

DualMatrix DualMatrix::scaled(const DualScalar& c) const {
  // (A, B) * (a + eps b) = (aA, aB + bA)
  return {a_.scaled(c.unit_part()),
          b_.scaled(c.unit_part()) + a_.scaled(c.eps_part())};
}

std::optional<DualMatrix> DualMatrix::inverse_over_a() const {
  if (rows() != cols()) throw std::invalid_argument("inverse of non-square matrix");
  auto ai = inverse(a_);
  if (!ai) return std::nullopt;
  // (A + eps B)^{-1} = A^{-1} - eps A^{-1} B A^{-1}
  return DualMatrix{*ai, -(*ai * b_ * *ai)};
}

PivotReduction dual_unit_pivot_reduce(const DualMatrix& m) {
  const Field& f = m.field();
  PivotReduction out{DualMatrix::identity(f, m.rows()), DualMatrix::identity(f, m.cols()), m, {}};
  DualMatrix& r = out.reduced;

  std::vector<bool> row_used(m.rows(), false), col_used(m.cols(), false);
  for (;;) {
    std::size_t pr = m.rows(), pc = m.cols();
    for (std::size_t i = 0; i < m.rows() && pr == m.rows(); ++i) {
      if (row_used[i]) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (col_used[j]) continue;
        if (r.at(i, j).is_unit()) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == m.rows()) break;

    DualScalar inv = r.at(pr, pc).inverse();
    auto scale_row = [&](DualMatrix& mm) {
      for (std::size_t j = 0; j < mm.cols(); ++j) mm.set(pr, j, inv * mm.at(pr, j));
    };
    scale_row(r);
    scale_row(out.row_ops);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pr) continue;
      DualScalar c = r.at(i, pc);
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < m.cols(); ++j)
        r.set(i, j, r.at(i, j) - c * r.at(pr, j));
      for (std::size_t j = 0; j < out.row_ops.cols(); ++j)
        out.row_ops.set(i, j, out.row_ops.at(i, j) - c * out.row_ops.at(pr, j));
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j == pc) continue;
      DualScalar c = r.at(pr, j);
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < m.rows(); ++i)
        r.set(i, j, r.at(i, j) - r.at(i, pc) * c);
      for (std::size_t i = 0; i < m.cols(); ++i)
        out.col_ops.set(i, j, out.col_ops.at(i, j) - out.col_ops.at(i, pc) * c);
    }
    row_used[pr] = true;
    col_used[pc] = true;
    out.pivots.emplace_back(pr, pc);
  }
  return out;
}

}  // namespace dualcat
