#include <doctest.h>

#include <random>

#include "dualcat/functor.hpp"

using namespace dualcat;

namespace {
const Field f7 = Field::gf(7);
const Field fq = Field::rationals();
}  // namespace

TEST_CASE("lambda_coefficient") {
  FieldElem l = f7.from_int(3);
  CHECK(lambda_coefficient(l, 2, 1, 1) == l);
  CHECK(lambda_coefficient(l, 4, 4, 0).is_one());
  CHECK(lambda_coefficient(l, 2, 2, -1) == l.inverse());
  CHECK_THROWS(lambda_coefficient(l, 1, 2, 1));  // no generator there
}

TEST_CASE("apply") {
  LambdaFunctor f(f7, f7.from_int(2));
  FormalObject x2;
  x2.add(XIndex::finite(2), 0);
  SymMorphism id = SymMorphism::identity(f7, x2);
  CHECK(apply(f, id) == id);

  SymMorphism p = sym_generator(f7, {XIndex::finite(2), 0, XIndex::finite(1), 1, GenKind::One}, f7.one());
  CHECK(apply(f, p).block(0, 0).first == f7.from_int(2));

  SUBCASE("apply is functorial on random composable generator pairs") {
    std::mt19937_64 rng(21);
    std::vector<GeneratorRef> gens;
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        for (int a = -4; a <= 4; ++a)
          for (GenKind k : {GenKind::One, GenKind::Eps})
            if (GeneratorRef{XIndex::finite(i), 0, XIndex::finite(j), a, k}.exists())
              gens.push_back({XIndex::finite(i), 0, XIndex::finite(j), a, k});
    int done = 0;
    while (done < 150) {
      auto& g1 = gens[rng() % gens.size()];
      auto& g2 = gens[rng() % gens.size()];
      if (!(g2.i == g1.j)) continue;
      ++done;
      SymMorphism s1 = sym_generator(f7, g1, f7.from_int(1 + long(rng() % 6)));
      SymMorphism s2 = sym_generator(
          f7, GeneratorRef{g2.i, g1.h2, g2.j, g2.h2 + g1.h2, g2.kind}, f7.from_int(1 + long(rng() % 6)));
      CHECK(apply(f, compose_sym(s2, s1)) == compose_sym(apply(f, s2), apply(f, s1)));
    }
  }
}

TEST_CASE("check_functorial") {
  for (long l : {1, 2, 3})
    CHECK(check_functorial(CoeffAssignment::lambda_form(f7, f7.from_int(l), 5, 5)).empty());

  SUBCASE("a perturbed coefficient is caught") {
    CoeffAssignment c = CoeffAssignment::lambda_form(f7, f7.from_int(2), 5, 5);
    c.set_coeff(GenKey{3, 2, 1}, c.coeff(GenKey{3, 2, 1}) + f7.one());
    CHECK(!check_functorial(c).empty());
  }
  SUBCASE("trivial window accepts any nonzero endomorphism scaling") {
    for (long d : {1, 2, 3, 4, 5, 6}) {
      CoeffAssignment c(f7, 1, 1);
      c.set_coeff(GenKey{1, 1, 0}, f7.from_int(d));
      CHECK(check_functorial(c).empty());
    }
  }
}

TEST_CASE("check_relations") {
  CoeffAssignment c = CoeffAssignment::lambda_form(f7, f7.from_int(3), 6, 6);
  RelationReport rep = check_relations(c);
  CHECK(rep.all_pass());
  bool saw[6] = {};
  for (auto& inst : rep.instances) saw[inst.relation] = true;
  for (int r = 1; r <= 5; ++r) CHECK(saw[r]);

  SUBCASE("R1 catches a non-inverse pair") {
    CoeffAssignment bad = CoeffAssignment::lambda_form(f7, f7.from_int(3), 4, 4);
    bad.set_coeff(GenKey{2, 1, 1}, f7.from_int(5));  // partner 1/3 no longer inverse
    CHECK(!check_relations(bad).all_pass());
  }
}

TEST_CASE("normalize") {
  SUBCASE("canonical forms are fixed points") {
    CoeffAssignment c = CoeffAssignment::lambda_form(fq, fq.from_int(2), 5, 5);
    Normalization n = normalize(c);
    CHECK(n.shift == 0);
    CHECK(n.mu.is_one());
    CHECK(n.lambda == fq.from_int(2));
    for (auto& p : n.phi) CHECK(p.is_one());
    for (auto& k : n.normalized.keys()) CHECK(n.normalized.coeff(k) == c.coeff(k));
  }
  SUBCASE("mu-scaled input recovers mu and lambda") {
    CoeffAssignment c = CoeffAssignment::lambda_form(f7, f7.from_int(3), 5, 5);
    std::vector<FieldElem> trivial(5, f7.one());
    CoeffAssignment scaled = gauge_transform(c, 2, f7.from_int(4), trivial);
    Normalization n = normalize(scaled);
    CHECK(n.shift == 2);
    CHECK(n.mu == f7.from_int(4));
    CHECK(n.lambda == f7.from_int(3));
  }
  SUBCASE("constant corner coefficients give the documented phi") {
    // k^{h-1}_{h[0]} = 2 for all h: conjugating by phi_i = 2^{i-1} produces
    // it, and normalize must answer with the inverse gauge 2^{-(i-1)}.
    CoeffAssignment c = CoeffAssignment::lambda_form(f7, f7.from_int(3), 5, 5);
    std::vector<FieldElem> phi;
    for (int i = 1; i <= 5; ++i) phi.push_back(f7.from_int(2).pow(i - 1));
    CoeffAssignment scrambled = gauge_transform(c, 0, f7.one(), phi);
    CHECK(scrambled.coeff(GenKey{2, 3, 0}) == f7.from_int(2) * c.coeff(GenKey{2, 3, 0}));
    Normalization n = normalize(scrambled);
    for (int i = 1; i <= 5; ++i) CHECK(n.phi[i - 1] == f7.from_int(2).pow(-(i - 1)));
    CHECK(n.lambda == f7.from_int(3));
  }
  SUBCASE("non-functorial input is rejected") {
    CoeffAssignment c = CoeffAssignment::lambda_form(f7, f7.from_int(2), 4, 4);
    c.set_coeff(GenKey{2, 1, 1}, f7.from_int(5));
    CHECK_THROWS_AS((void)normalize(c), std::invalid_argument);
  }
}

TEST_CASE("is_exact") {
  CHECK(is_exact(LambdaFunctor(f7, f7.one())));
  CHECK(!is_exact(LambdaFunctor(f7, f7.from_int(2))));
  CHECK(is_exact(LambdaFunctor(fq, fq.one())));
  CHECK(!is_exact(LambdaFunctor(fq, fq.from_int(3))));
  CHECK(!is_exact(LambdaFunctor(fq, fq.parse("1/2"))));
}
