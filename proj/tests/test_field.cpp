#include <doctest.h>

#include <random>

#include "dualcat/dual.hpp"
#include "dualcat/field.hpp"

using namespace dualcat;

TEST_CASE("gf(p) arithmetic is canonical") {
  Field f = Field::gf(7);
  CHECK(f.from_int(10).str() == "3");
  CHECK(f.from_int(-1).str() == "6");
  CHECK((f.from_int(3) * f.from_int(5)) == f.from_int(1));
  CHECK(f.from_int(3).inverse() == f.from_int(5));
  CHECK(f.parse("12/2") == f.from_int(6));
  CHECK_THROWS(Field::gf(6));
  CHECK_THROWS((void)f.from_int(0).inverse());
}

TEST_CASE("rational arithmetic is exact and in lowest terms") {
  Field q = Field::rationals();
  FieldElem x = q.parse("2/4");
  CHECK(x.str() == "1/2");
  CHECK((x + q.parse("1/3")).str() == "5/6");
  CHECK((q.parse("-3") / q.parse("6")).str() == "-1/2");
  CHECK(q.parse("7").pow(-2).str() == "1/49");
  // big enough to overflow 64-bit if arithmetic were fixed width
  FieldElem big = q.parse("123456789123456789");
  CHECK((big * big).str() == "15241578780673678515622620750190521");
}

TEST_CASE("mixing fields is an error") {
  Field q = Field::rationals(), f7 = Field::gf(7);
  CHECK_THROWS_AS((void)(q.one() + f7.one()), FieldMismatch);
}

TEST_CASE("dual scalars form a commutative ring with eps^2 = 0") {
  std::mt19937_64 rng(0);
  for (Field f : {Field::gf(7), Field::rationals()}) {
    auto rand_elem = [&]() { return f.from_int(static_cast<long long>(rng() % 19) - 9); };
    auto rand_dual = [&]() { return DualScalar(rand_elem(), rand_elem()); };
    for (int t = 0; t < 200; ++t) {
      DualScalar x = rand_dual(), y = rand_dual(), z = rand_dual();
      CHECK((x * y) == (y * x));
      CHECK(((x * y) * z) == (x * (y * z)));
      CHECK((x * (y + z)) == (x * y + x * z));
      DualScalar ex(f.zero(), x.eps_part()), ey(f.zero(), y.eps_part());
      CHECK((ex * ey).is_zero());
      if (x.is_unit()) {
        CHECK((x * x.inverse()) == DualScalar::one(f));
      }
    }
  }
}
