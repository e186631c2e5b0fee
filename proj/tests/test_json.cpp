#include <doctest.h>

#include "dualcat/json_io.hpp"

using namespace dualcat;

namespace {
const Field f7 = Field::gf(7);
}

TEST_CASE("scalar and dual scalar formats") {
  CHECK(to_json(f7.from_int(3)) == Json("3"));
  Field q = Field::rationals();
  CHECK(to_json(q.parse("-2/4")) == Json("-1/2"));
  CHECK(field_elem_from_json(q, Json("5/10")) == q.parse("1/2"));
  DualScalar d(f7.from_int(2), f7.from_int(5));
  CHECK(dual_from_json(f7, to_json(d)) == d);
  CHECK_THROWS(field_elem_from_json(q, Json("1/0")));
  CHECK_THROWS(field_elem_from_json(q, Json("x")));
  CHECK_THROWS(dual_from_json(f7, Json{{"a", "1"}}));
}

TEST_CASE("the documented complex example is X_2") {
  Json j = Json::parse(R"({"ranks": {"-2": 1, "-1": 1},
                           "diffs": {"-2": [[{"a": "0", "b": "1"}]]}})");
  FreeComplex c = free_complex_from_json(f7, j);
  CHECK(c == FreeComplex::x_i(f7, 2));
  CHECK(free_complex_from_json(f7, to_json(c)) == c);
}

TEST_CASE("complex parse failures") {
  CHECK_THROWS(free_complex_from_json(f7, Json::parse(R"({"diffs": {}})")));
  CHECK_THROWS(free_complex_from_json(f7, Json::parse(R"({"ranks": {"-1": 0}})")));
  CHECK_THROWS(free_complex_from_json(f7, Json::parse(R"({"ranks": {"x": 1}})")));
  // wrong differential shape
  CHECK_THROWS(free_complex_from_json(
      f7, Json::parse(R"({"ranks": {"-2": 1, "-1": 2}, "diffs": {"-2": [[{"a":"0","b":"1"}]]}})")));
}

TEST_CASE("module complex round trip") {
  ModuleComplex m(f7);
  m.set_term(-2, ModShape{1, 1});
  m.set_term(-1, ModShape{0, 1});
  TypedMatrix d(f7, ModShape{0, 1}, ModShape{1, 1});
  d.ak.at(0, 0) = f7.from_int(3);
  d.kk.at(0, 0) = f7.from_int(2);
  m.set_diff(-2, d);
  ModuleComplex back = module_complex_from_json(f7, to_json(m));
  CHECK(back.term_at(-2).free_rank == 1);
  CHECK(back.term_at(-2).k_rank == 1);
  CHECK(back.diff(-2) == m.diff(-2));
}

TEST_CASE("formal objects with the inf token") {
  FormalObject o;
  o.add(XIndex::infinity(), 2);
  o.add(XIndex::finite(3), 0);
  Json j = to_json(o);
  CHECK(formal_object_from_json(j) == o);
  CHECK(j["summands"][1]["i"] == Json("inf"));
  CHECK_THROWS(formal_object_from_json(Json::parse(R"({"summands": [{"i": "nope", "h": 0}]})")));
}

TEST_CASE("symbolic morphism round trip") {
  FormalObject src, tgt;
  src.add(XIndex::finite(1), 0);
  src.add(XIndex::finite(2), 0);
  tgt.add(XIndex::finite(2), 0);
  SymMorphism m(f7, src, tgt);
  m.set_block(0, 0, f7.from_int(4), f7.zero());
  m.set_block(1, 0, f7.from_int(1), f7.from_int(6));
  CHECK(sym_from_json(f7, to_json(m)) == m);
}

TEST_CASE("coefficient assignment round trip") {
  CoeffAssignment c = CoeffAssignment::lambda_form(f7, f7.from_int(2), 3, 3, 1);
  CoeffAssignment back = coeffs_from_json(f7, to_json(c));
  CHECK(back.object_shift() == 1);
  for (auto& k : c.keys()) CHECK(back.coeff(k) == c.coeff(k));
}

TEST_CASE("stability condition bounds checked on parse") {
  Json j = to_json(StabilityCondition{1, 2.5, 0.75});
  StabilityCondition s = sigma_from_json(j);
  CHECK(s.h == 1);
  CHECK(s.mass == doctest::Approx(2.5));
  CHECK_THROWS(sigma_from_json(Json{{"h", 0}, {"mass", 1.0}, {"phi", 0.0}}));
  CHECK_THROWS(sigma_from_json(Json{{"h", 0}, {"mass", -1.0}, {"phi", 0.5}}));
}
