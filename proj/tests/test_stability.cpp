#include <doctest.h>

#include <cmath>
#include <random>

#include "dualcat/stability.hpp"

using namespace dualcat;

namespace {
XIndex fin(int i) { return XIndex::finite(i); }
const XIndex inf = XIndex::infinity();
constexpr double pi = 3.14159265358979323846;
}  // namespace

TEST_CASE("check_heart matches the classification") {
  CheckWindow w{4, 3, 3};
  SUBCASE("the standard heart is accepted") {
    HeartVerdict v = check_heart(HeartCandidate{{{fin(1), 0}, {inf, 0}}}, w);
    CHECK(v.accepted);
  }
  SUBCASE("X_inf alone fails extension closure with the witnessing triangle") {
    HeartVerdict v = check_heart(HeartCandidate{{{inf, 0}}}, w);
    CHECK(!v.accepted);
    CHECK(v.stage == HeartStage::Extension);
    CHECK(v.triangle == "X_inf -> X_1 -> X_inf");
  }
  SUBCASE("X_1 alone fails generation") {
    HeartVerdict v = check_heart(HeartCandidate{{{fin(1), 0}}}, w);
    CHECK(!v.accepted);
    CHECK(v.stage == HeartStage::Generation);
  }
  SUBCASE("finite length >= 2 members have downward self-homs") {
    HeartVerdict v = check_heart(HeartCandidate{{{fin(2), 0}}}, w);
    CHECK(!v.accepted);
    CHECK(v.stage == HeartStage::NegativeHom);
  }
  SUBCASE("mismatched shifts break the pair") {
    CHECK(!check_heart(HeartCandidate{{{fin(1), 1}, {inf, 0}}}, w).accepted);
    CHECK(check_heart(HeartCandidate{{{fin(1), -2}, {inf, -2}}}, w).accepted);
  }
}

TEST_CASE("min_nonzero_shift agrees with a table scan") {
  for (XIndex i : {fin(1), fin(2), fin(4), inf})
    for (XIndex j : {fin(1), fin(3), inf}) {
      int lo = min_nonzero_shift(i, j);
      CHECK(hom_table(i, j, lo).dim() > 0);
      for (int d = lo - 6; d < lo; ++d) CHECK(hom_table(i, j, d).dim() == 0);
    }
}

TEST_CASE("hn_filtration") {
  SUBCASE("X_2[-1] under sigma = (0, 1, 1/2)") {
    FormalObject obj;
    obj.add(fin(2), -1);
    auto factors = hn_filtration(StabilityCondition{0, 1.0, 0.5}, obj);
    REQUIRE(factors.size() == 2);
    FormalObject top, bot;
    top.add(inf, 0);
    bot.add(inf, -1);
    CHECK(factors[0].object == top);
    CHECK(factors[0].phase == doctest::Approx(0.5));
    CHECK(factors[1].object == bot);
    CHECK(factors[1].phase == doctest::Approx(-0.5));
  }
  SUBCASE("heart members are semistable") {
    FormalObject obj;
    obj.add(fin(1), 0);
    auto factors = hn_filtration(StabilityCondition{2, 1.0, 0.75}, obj);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].phase == doctest::Approx(0.75 - 2.0));
  }
  SUBCASE("merging factors of equal phase") {
    FormalObject obj;
    obj.add(fin(3), 0);
    obj.add(fin(1), 2);
    auto factors = hn_filtration(StabilityCondition{0, 1.0, 1.0}, obj);
    REQUIRE(factors.size() == 2);
    FormalObject top;
    top.add(fin(1), 2);
    top.add(inf, 2);
    CHECK(factors[0].object == top);
    CHECK(factors[0].phase == doctest::Approx(3.0));
    CHECK(factors[1].phase == doctest::Approx(1.0));
  }
  SUBCASE("factors match cohomology of a realization") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 30; ++t) {
      FormalObject obj;
      for (int p = 0; p < 1 + int(rng() % 4); ++p)
        obj.add(fin(1 + rng() % 4), int(rng() % 7) - 3);
      StabilityCondition s{0, 1.0, 1.0};
      CohomologyProfile prof = cohomology(realize(Field::gf(7), obj));
      for (auto& factor : hn_filtration(s, obj)) {
        std::size_t ones = 0, infs = 0;
        for (auto& sm : factor.object.summands())
          (sm.i.is_infinite() ? infs : ones) += sm.mult;
        auto g = prof.groups[-1 - factor.heart_shift];
        CHECK(ones == g.first);
        CHECK(infs == g.second);
      }
    }
  }
}

TEST_CASE("central_charge") {
  StabilityCondition s{0, 2.0, 0.25};
  std::complex<double> v = s.mass * std::exp(std::complex<double>(0, pi * s.phi));
  FormalObject xinf, x1, x2;
  xinf.add(inf, s.h);
  x1.add(fin(1), s.h);
  x2.add(fin(2), s.h);
  CHECK(std::abs(central_charge(s, xinf) - v) < 1e-12);
  CHECK(std::abs(central_charge(s, x1) - 2.0 * v) < 1e-12);
  // X_2 has K-class zero but its factors carry mass
  CHECK(std::abs(central_charge(s, x2)) < 1e-12);
  auto factors = hn_filtration(s, x2);
  double mass_sum = 0;
  for (auto& f : factors) mass_sum += s.mass;
  CHECK(mass_sum == doctest::Approx(2 * s.mass));
}

TEST_CASE("group action on stability conditions") {
  StabilityCondition s{0, 1.0, 1.0};
  SUBCASE("identity and unit rotation") {
    StabilityCondition t = act(GroupElem::identity(), s);
    CHECK(t.h == 0);
    CHECK(t.mass == doctest::Approx(1.0));
    CHECK(t.phi == doctest::Approx(1.0));
    StabilityCondition r = act(GroupElem{1.0, 1.0}, s);
    CHECK(r.h == -1);
    CHECK(r.phi == doctest::Approx(1.0));
  }
  SUBCASE("witness formula on the worked example") {
    GroupElem g = transitivity_witness(StabilityCondition{0, 1.0, 1.0},
                                       StabilityCondition{0, 1.0, 0.5});
    CHECK(g.theta == doctest::Approx(0.5));
    CHECK(g.kappa == doctest::Approx(1.0));
  }
  SUBCASE("chart of the base point") {
    std::complex<double> z = chart(StabilityCondition{0, 1.0, 1.0});
    CHECK(z.real() == doctest::Approx(0.0));
    CHECK(z.imag() == doctest::Approx(pi));
  }
  SUBCASE("psi splitting snaps near integers") {
    StabilityCondition a = StabilityCondition::from_psi(2.0 + 4e-10, 1.0);
    CHECK(a.h == 1);
    CHECK(a.phi == doctest::Approx(1.0));
    StabilityCondition b = StabilityCondition::from_psi(-0.7, 1.0);
    CHECK(b.h == -1);
    CHECK(b.phi == doctest::Approx(0.3));
  }
}

TEST_CASE("silting_search on the acceptance window") {
  SiltingReport rep = silting_search(5, 4);
  CHECK(!rep.generating_silting_exists);
  CHECK(rep.maximal_silting.size() == 9);
  for (auto& s : rep.maximal_silting) {
    REQUIRE(s.members.size() == 1);
    CHECK(s.members[0].first == fin(1));
    CHECK(s.silting);
    CHECK(!s.generates);
  }
  // every X_inf[h] and every X_i[h] with i >= 2 reports a self-extension
  for (auto& m : rep.members)
    CHECK(m.self_silting == (!m.i.is_infinite() && m.i.value() == 1));
}

TEST_CASE("cone_closure reaches the non-perfect part only from X_inf") {
  std::set<XIndex> from_x1{fin(1)};
  auto closed = cone_closure(from_x1, 8, 3);
  CHECK(!closed.count(inf));
  CHECK(closed.count(fin(2)));  // cone(eps) = X_2 and onward
  CHECK(closed.count(fin(3)));

  std::set<XIndex> from_inf{inf};
  auto closed2 = cone_closure(from_inf, 8, 3);
  CHECK(closed2.count(fin(1)));
  CHECK(closed2.count(inf));
}
