#include <doctest.h>

#include <random>

#include "dualcat/matrix.hpp"

using namespace dualcat;

namespace {

FieldMatrix from_ints(const Field& f, std::vector<std::vector<long long>> rows) {
  FieldMatrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = f.from_int(rows[i][j]);
  return m;
}

FieldMatrix random_matrix(const Field& f, std::mt19937_64& rng, std::size_t r, std::size_t c) {
  FieldMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.from_int(static_cast<long long>(rng() % 13) - 6);
  return m;
}

FieldMatrix random_invertible(const Field& f, std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    FieldMatrix m = random_matrix(f, rng, n, n);
    if (rank(m) == n) return m;
  }
}

}  // namespace

TEST_CASE("rank basics") {
  Field f7 = Field::gf(7);
  CHECK(rank(FieldMatrix::identity(f7, 2)) == 2);
  CHECK(rank(FieldMatrix(f7, 3, 4)) == 0);
  // det = 1*6 - 2*3 = 0 mod 7, so the rows are dependent
  CHECK(rank(from_ints(f7, {{1, 2}, {3, 6}})) == 1);
}

TEST_CASE("rank is invariant under invertible row/column scaling") {
  std::mt19937_64 rng(1);
  for (Field f : {Field::gf(7), Field::rationals()}) {
    for (int t = 0; t < 25; ++t) {
      std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      FieldMatrix m = random_matrix(f, rng, r, c);
      FieldMatrix p = random_invertible(f, rng, r), q = random_invertible(f, rng, c);
      CHECK(rank(p * m * q) == rank(m));
    }
  }
}

TEST_CASE("solve_affine examples") {
  Field q = Field::rationals();
  SUBCASE("identity system") {
    FieldMatrix a = FieldMatrix::identity(q, 3);
    FieldVector b = {q.from_int(4), q.from_int(-1), q.from_int(9)};
    auto s = solve_affine(a, b);
    REQUIRE(s);
    CHECK(s->particular == b);
    CHECK(s->nullspace.empty());
  }
  SUBCASE("zero 1x1 homogeneous") {
    FieldMatrix a(q, 1, 1);
    auto s = solve_affine(a, {q.zero()});
    REQUIRE(s);
    CHECK(s->nullspace.size() == 1);
  }
  SUBCASE("underdetermined row") {
    FieldMatrix a = from_ints(q, {{1, 1}});
    auto s = solve_affine(a, {q.one()});
    REQUIRE(s);
    CHECK(s->particular[0] + s->particular[1] == q.one());
    REQUIRE(s->nullspace.size() == 1);
    CHECK(s->nullspace[0][0] + s->nullspace[0][1] == q.zero());
    CHECK(!s->nullspace[0][0].is_zero());
  }
  SUBCASE("inconsistent") {
    FieldMatrix a = from_ints(q, {{1, 1}, {2, 2}});
    CHECK(!solve_affine(a, {q.one(), q.from_int(3)}));
  }
}

TEST_CASE("solve_affine nullspace dimension and exactness on random systems") {
  std::mt19937_64 rng(2);
  for (Field f : {Field::gf(7), Field::rationals()}) {
    for (int t = 0; t < 30; ++t) {
      std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      FieldMatrix a = random_matrix(f, rng, r, c);
      FieldVector x(c, f.zero());
      for (auto& v : x) v = f.from_int(static_cast<long long>(rng() % 9) - 4);
      FieldVector b(r, f.zero());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) b[i] += a.at(i, j) * x[j];
      auto s = solve_affine(a, b);
      REQUIRE(s);
      CHECK(s->nullspace.size() == c - rank(a));
      auto check_exact = [&](const FieldVector& v, const FieldVector& rhs) {
        for (std::size_t i = 0; i < r; ++i) {
          FieldElem acc = f.zero();
          for (std::size_t j = 0; j < c; ++j) acc += a.at(i, j) * v[j];
          CHECK(acc == rhs[i]);
        }
      };
      check_exact(s->particular, b);
      for (auto& v : s->nullspace) check_exact(v, FieldVector(r, f.zero()));
    }
  }
}

TEST_CASE("inverse rejects singular matrices") {
  Field f = Field::gf(7);
  CHECK(!inverse(FieldMatrix(f, 2, 2)));
  CHECK(!inverse(from_ints(f, {{6, 0}, {0, 0}})));
  CHECK(!inverse(from_ints(f, {{1, 2}, {3, 6}})));
  auto inv = inverse(from_ints(f, {{1, 2}, {3, 5}}));
  REQUIRE(inv);
  CHECK(*inv * from_ints(f, {{1, 2}, {3, 5}}) == FieldMatrix::identity(f, 2));
}

TEST_CASE("dual_unit_pivot_reduce") {
  Field f = Field::gf(7);
  auto eps = DualScalar::eps(f);
  auto one = DualScalar::one(f);

  SUBCASE("single unit clears fully") {
    DualMatrix m(f, 1, 1);
    m.set(0, 0, one);
    auto r = dual_unit_pivot_reduce(m);
    CHECK(r.pivots.size() == 1);
    CHECK(r.reduced.at(0, 0) == one);
  }
  SUBCASE("eps alone is untouched") {
    DualMatrix m(f, 1, 1);
    m.set(0, 0, eps);
    auto r = dual_unit_pivot_reduce(m);
    CHECK(r.pivots.empty());
    CHECK(r.reduced == m);
  }
  SUBCASE("mixed 2x2 from the worked example") {
    DualMatrix m(f, 2, 2);
    m.set(0, 0, one + eps);
    m.set(0, 1, eps);
    m.set(1, 1, eps);
    auto r = dual_unit_pivot_reduce(m);
    REQUIRE(r.pivots.size() == 1);
    CHECK(r.pivots[0] == std::pair<std::size_t, std::size_t>{0, 0});
    // residual 1x1 block with entry in eps k
    CHECK(r.reduced.at(1, 1).unit_part().is_zero());
    CHECK(r.reduced.at(0, 1).is_zero());
    CHECK(r.reduced.at(1, 0).is_zero());
  }
}

TEST_CASE("pivot reduction records invertible P, Q with P M Q = reduced") {
  std::mt19937_64 rng(3);
  for (Field f : {Field::gf(7), Field::rationals()}) {
    for (int t = 0; t < 30; ++t) {
      std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
      DualMatrix m(f, r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          m.set(i, j, DualScalar(f.from_int(static_cast<long long>(rng() % 5) - 2),
                                 f.from_int(static_cast<long long>(rng() % 5) - 2)));
      auto red = dual_unit_pivot_reduce(m);
      CHECK(red.row_ops * m * red.col_ops == red.reduced);
      CHECK(red.row_ops.inverse_over_a());
      CHECK(red.col_ops.inverse_over_a());
      // residual block has no units
      std::vector<bool> pr(r, false), pc(c, false);
      for (auto& [i, j] : red.pivots) pr[i] = pc[j] = true;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          if (!pr[i] && !pc[j]) CHECK(!red.reduced.at(i, j).is_unit());
    }
  }
}
