#include <doctest.h>

#include "spinrep/charring.hpp"
#include "spinrep/error.hpp"

#include <map>
#include <random>

using namespace spinrep;

namespace {

// A1 characters in the coordinate of the fundamental weight: R_n has weights n, n-2, ..., -n.
Character a1_irrep(const RootSystemPtr& a1, int n) {
  Character c(a1);
  for (int k = -n; k <= n; k += 2) c.add(a1->weight({k}), 1);
  return c;
}

Character product_over(const RootSystemPtr& rs, const std::vector<Weight>& roots, bool with_one, bool halves) {
  Character r = Character::one(rs);
  for (const auto& a : roots) {
    Character f(rs);
    Weight h = halves ? a.half() : a;
    f.add(h, 1);
    f.add(-h, 1);
    if (with_one) f.add(rs->zero(), 1);
    r = multiply(r, f);
  }
  return r;
}

std::vector<Weight> short_positive(const RootSystemPtr& rs) {
  std::vector<Weight> out;
  for (const auto& a : rs->positive_roots())
    if (!rs->is_long(a)) out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("ring operations") {
  auto a1 = RootSystem::simple('A', 1);
  Character x = Character::monomial(a1, a1->weight({1}));
  Character y = Character::monomial(a1, a1->weight({-1}), 3);
  Character s = x + y;
  CHECK(s.dimension() == 4);
  CHECK((s - s).is_zero());
  CHECK(s.dual().coefficient(a1->weight({1})) == 3);
  CHECK(s.adams(2).coefficient(a1->weight({2})) == 1);
  CHECK(multiply(s, s).dimension() == 16);
  CHECK(power(s, 3) == multiply(s, multiply(s, s)));
  CHECK(s.shifted(a1->weight({1})).coefficient(a1->weight({2})) == 1);
  CHECK_FALSE((x - y).is_nonnegative());
}

TEST_CASE("Clebsch-Gordan for A1") {
  auto a1 = RootSystem::simple('A', 1);
  auto g = Subsystem::full(a1);
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n) {
      Character expected(a1);
      for (int k = std::abs(m - n); k <= m + n; k += 2) expected += a1_irrep(a1, k);
      CHECK(multiply(a1_irrep(a1, m), a1_irrep(a1, n)) == expected);
      CHECK(irreducible_character(g, a1->weight({m})) == a1_irrep(a1, m));
    }
  auto d = decompose(multiply(a1_irrep(a1, 2), a1_irrep(a1, 3)), g);
  REQUIRE(d.count() == 3);
  CHECK(d.summands[0].highest == a1->weight({5}));
  CHECK(d.summands[1].highest == a1->weight({3}));
  CHECK(d.summands[2].highest == a1->weight({1}));
  CHECK(d.multiplicity_free());
}

TEST_CASE("Weyl dimension for known modules") {
  auto b2 = RootSystem::simple('B', 2);
  // (a+1)(b+1)(a+b+2)(2a+b+3)/6 with a on the long root
  CHECK(weyl_dimension(Subsystem::full(b2), b2->weight({1, 3})) == 64);
  auto f4 = RootSystem::simple('F', 4);
  auto F = Subsystem::full(f4);
  const auto sp = f4->special_elements();
  CHECK(weyl_dimension(F, sp.theta) == 52);
  CHECK(weyl_dimension(F, sp.theta_s) == 26);
  CHECK(weyl_dimension(F, sp.rho_s) == 4096);
  CHECK(weyl_dimension(F, sp.rho) == BigInt(1) << 24);
  auto e8 = RootSystem::simple('E', 8);
  CHECK(weyl_dimension(Subsystem::full(e8), e8->special_elements().theta) == 248);
  CHECK(weyl_dimension(Subsystem::full(e8), e8->rho()) == BigInt(1) << 120);
}

TEST_CASE("division and Freudenthal agree on random dominant weights") {
  std::mt19937 rng(20261016);
  for (const char* t : {"A2", "B2", "G2", "A3", "B3", "C3", "A1xA2"}) {
    CAPTURE(t);
    auto rs = RootSystem::parse(t);
    auto g = Subsystem::full(rs);
    std::uniform_int_distribution<int> lab(0, rs->rank() <= 2 ? 4 : 2);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> l(rs->dim());
      for (auto& v : l) v = lab(rng);
      Weight lambda = rs->weight(l);
      CAPTURE(lambda.str());
      Character w = irreducible_character(g, lambda);
      Character f = freudenthal_character(g, lambda);
      CHECK(w == f);
      CHECK(BigInt(f.dimension()) == weyl_dimension(g, lambda));
      CHECK(multiplicity_of(f, g, lambda) == 1);
      auto d = decompose(f, g);
      REQUIRE(d.count() == 1);
      CHECK(d.summands[0].highest == lambda);
    }
  }
}

TEST_CASE("Weyl denominator is the alternating sum at rho") {
  for (const char* t : {"A2", "B2", "G2", "B3", "C3", "A1xA1"}) {
    auto g = Subsystem::full(RootSystem::parse(t));
    CHECK(weyl_denominator(g) == alternating_sum(g, g.rho()));
  }
}

TEST_CASE("modules at rho_s and 2 rho_s are products over short roots") {
  for (auto [f, n] : {std::pair{'B', 2}, {'B', 3}, {'C', 3}, {'G', 2}, {'F', 4}}) {
    auto rs = RootSystem::simple(f, n);
    CAPTURE(rs->label());
    auto g = Subsystem::full(rs);
    const auto sp = rs->special_elements();
    auto shorts = short_positive(rs);
    if (f == 'G') {
      // V_{rho_s} is 7-dimensional here, the product is V_{rho_s} + 1
      CHECK(freudenthal_character(g, sp.rho_s) + Character::one(rs) == product_over(rs, shorts, false, true));
      CHECK(freudenthal_character(g, sp.rho_s * 2) == product_over(rs, shorts, true, false));
    } else {
      CHECK(freudenthal_character(g, sp.rho_s) == product_over(rs, shorts, false, true));
    }
  }
  // rho for any type
  for (const char* t : {"A3", "B3", "G2"}) {
    auto rs = RootSystem::parse(t);
    std::vector<Weight> all(rs->positive_roots().begin(), rs->positive_roots().end());
    CHECK(freudenthal_character(Subsystem::full(rs), rs->rho()) == product_over(rs, all, false, true));
  }
}

TEST_CASE("divide_exact by leading terms matches the Weyl formula") {
  auto rs = RootSystem::simple('B', 2);
  auto g = Subsystem::full(rs);
  Weight lambda = rs->weight({2, 1});
  Character q = divide_exact(alternating_sum(g, lambda + g.rho()), weyl_denominator(g), rs->order());
  CHECK(q == freudenthal_character(g, lambda));
  Character bad = Character::monomial(rs, rs->weight({1, 0}));
  CHECK_THROWS_AS(divide_exact(bad, weyl_denominator(g), rs->order()), InexactDivision);
  CHECK_THROWS_AS(divide_by_binomial(bad, rs->simple_roots()[0], -1), InexactDivision);
}

TEST_CASE("decompose rejects virtual and non-invariant characters") {
  auto rs = RootSystem::simple('A', 2);
  auto g = Subsystem::full(rs);
  Character v = freudenthal_character(g, rs->weight({1, 0}));
  CHECK_THROWS_AS(decompose(-v, g), NotAModule);
  CHECK_THROWS_AS(decompose(Character::monomial(rs, rs->weight({1, 0})), g), NotAModule);
  Character vv = multiply(v, v.dual());
  auto d = decompose(vv, g);
  CHECK(d.count() == 2);
  CHECK(d.multiplicity(rs->weight({1, 1})) == 1);
  CHECK(d.multiplicity(rs->zero()) == 1);
  CHECK(d.dimension(g) == 9);
}

TEST_CASE("term budget is enforced") {
  auto rs = RootSystem::simple('B', 3);
  auto g = Subsystem::full(rs);
  Budget tiny;
  tiny.terms = 10;
  CHECK_THROWS_AS(freudenthal_character(g, rs->weight({2, 2, 2}), tiny), BudgetExceeded);
}
