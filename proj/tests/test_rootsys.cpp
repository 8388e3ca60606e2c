#include <doctest.h>

#include "spinrep/error.hpp"
#include "spinrep/rootsys.hpp"

#include <map>
#include <string>

using namespace spinrep;

namespace {

std::size_t expected_root_count(char f, int n) {
  switch (f) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
  }
  return 0;
}

std::vector<int> textbook_exponents(char f, int n) {
  std::vector<int> e;
  switch (f) {
    case 'A': for (int i = 1; i <= n; ++i) e.push_back(i); break;
    case 'B':
    case 'C': for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1); break;
    case 'D':
      for (int i = 1; i <= n - 1; ++i) e.push_back(2 * i - 1);
      e.push_back(n - 1);
      std::sort(e.begin(), e.end());
      break;
    case 'E':
      if (n == 6) e = {1, 4, 5, 7, 8, 11};
      if (n == 7) e = {1, 5, 7, 9, 11, 13, 17};
      if (n == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case 'F': e = {1, 5, 7, 11}; break;
    case 'G': e = {1, 5}; break;
  }
  return e;
}

const std::vector<std::pair<char, int>> kTypes = {
    {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 7}, {'B', 2}, {'B', 3}, {'B', 4},
    {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'D', 5}, {'E', 6}, {'E', 7}, {'E', 8},
    {'F', 4}, {'G', 2}};

}  // namespace

TEST_CASE("root counts, exponents and Coxeter numbers match the classical tables") {
  for (auto [f, n] : kTypes) {
    CAPTURE(f);
    CAPTURE(n);
    auto rs = RootSystem::simple(f, n);
    CHECK(rs->num_roots() == expected_root_count(f, n));
    CHECK(rs->exponents() == textbook_exponents(f, n));
    // h = |roots| / rank
    CHECK(rs->special_elements().coxeter_number * n == static_cast<int>(rs->num_roots()));
  }
}

TEST_CASE("fundamental weights are dual to simple coroots") {
  for (auto [f, n] : kTypes) {
    auto rs = RootSystem::simple(f, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(rs->coroot_pairing(rs->fundamental_weight(i), rs->simple_roots()[j]) ==
              Rational(i == j ? 1 : 0));
  }
}

TEST_CASE("long roots have squared length 2") {
  for (auto [f, n] : kTypes) {
    auto rs = RootSystem::simple(f, n);
    Rational longest(0);
    for (const auto& r : rs->positive_roots()) longest = std::max(longest, rs->norm2(r));
    CHECK(longest == 2);
  }
  auto g2 = RootSystem::simple('G', 2);
  CHECK(g2->norm2(g2->simple_roots()[0]) == Rational(2, 3));
}

TEST_CASE("root set is closed under simple reflections and rho is half the positive sum") {
  for (auto [f, n] : kTypes) {
    auto rs = RootSystem::simple(f, n);
    for (const auto& a : rs->simple_roots())
      for (const auto& r : rs->positive_roots()) {
        Rational p = rs->coroot_pairing(r, a);
        REQUIRE(p.denominator() == 1);
        CHECK(rs->is_root(r - a * static_cast<int>(p.numerator())));
      }
    Weight sum = rs->zero();
    for (const auto& r : rs->positive_roots()) sum += r;
    CHECK(sum == rs->rho() * 2);
  }
}

TEST_CASE("F4 uses reversed Bourbaki numbering") {
  auto f4 = RootSystem::simple('F', 4);
  // Bourbaki Cartan matrix, translated through the index table.
  const int bourbaki[4][4] = {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(f4->cartan_matrix()[i][j] == bourbaki[f4->bourbaki_index(i)][f4->bourbaki_index(j)]);
  CHECK(f4->bourbaki_index(0) == 3);
  CHECK(f4->internal_index_from_bourbaki(3) == 0);
  auto sp = f4->special_elements();
  CHECK(sp.theta == f4->fundamental_weight(3));
  CHECK(sp.theta_s == f4->fundamental_weight(0));
  CHECK(sp.rho_s == f4->weight({1, 1, 0, 0}));
  CHECK(sp.short_simple == std::vector<int>{0, 1});
  CHECK(f4->to_epsilon(sp.theta) == RatVector{1, 1, 0, 0});
  CHECK(f4->to_epsilon(sp.theta_s) == RatVector{1, 0, 0, 0});
  CHECK(f4->to_epsilon(f4->rho()) ==
        RatVector{Rational(11, 2), Rational(5, 2), Rational(3, 2), Rational(1, 2)});
  // highest root marks 2, 4, 3, 2
  CHECK(f4->positive_root_coefficients().back() == std::vector<int>{2, 4, 3, 2});
}

TEST_CASE("highest roots and highest short roots") {
  auto b2 = RootSystem::simple('B', 2);
  CHECK(b2->special_elements().theta == b2->weight({0, 2}));
  CHECK(b2->special_elements().theta_s == b2->weight({1, 0}));
  CHECK(b2->special_elements().rho_s == b2->weight({0, 1}));
  auto b3 = RootSystem::simple('B', 3);
  CHECK(b3->special_elements().theta == b3->weight({0, 1, 0}));
  CHECK(b3->special_elements().theta_s == b3->weight({1, 0, 0}));
  auto c3 = RootSystem::simple('C', 3);
  CHECK(c3->special_elements().theta == c3->weight({2, 0, 0}));
  CHECK(c3->special_elements().theta_s == c3->weight({0, 1, 0}));
  CHECK(c3->special_elements().rho_s == c3->weight({1, 1, 0}));
  auto g2 = RootSystem::simple('G', 2);
  CHECK(g2->special_elements().theta == g2->weight({0, 1}));
  CHECK(g2->special_elements().theta_s == g2->weight({1, 0}));
  auto a3 = RootSystem::simple('A', 3);
  CHECK(a3->special_elements().theta == a3->weight({1, 0, 1}));
  CHECK(a3->special_elements().theta_s == a3->special_elements().theta);
  auto e8 = RootSystem::simple('E', 8);
  CHECK(e8->special_elements().theta == e8->fundamental_weight(7));
}

TEST_CASE("epsilon coordinates round trip") {
  for (auto [f, n] : kTypes) {
    auto rs = RootSystem::simple(f, n);
    if (!rs->has_epsilon()) continue;
    for (const auto& r : rs->positive_roots()) CHECK(rs->from_epsilon(rs->to_epsilon(r)) == r);
    CHECK(rs->from_epsilon(rs->to_epsilon(rs->rho())) == rs->rho());
  }
  auto b3 = RootSystem::simple('B', 3);
  CHECK(b3->from_epsilon({Rational(1, 2), Rational(1, 2), Rational(1, 2)}) == b3->fundamental_weight(2));
  auto c2 = RootSystem::simple('C', 2);
  CHECK(c2->norm2(c2->from_epsilon({1, 0})) == Rational(1, 2));
}

TEST_CASE("descriptors: products, tori and errors") {
  auto p = RootSystem::parse("A1xA1");
  CHECK(p->label() == "A1xA1");
  CHECK(p->num_roots() == 4);
  CHECK(p->form(p->simple_roots()[0], p->simple_roots()[1]) == 0);
  auto t = RootSystem::parse("A2xT1");
  CHECK(t->dim() == 3);
  CHECK(t->rank() == 2);
  CHECK(t->exponents() == std::vector<int>{0, 1, 2});
  CHECK(RootSystem::parse("c3+a1")->label() == "C3xA1");
  CHECK_THROWS_AS(RootSystem::parse("B1"), InvalidArgument);
  CHECK_THROWS_AS(RootSystem::parse("E9"), InvalidArgument);
  CHECK_THROWS_AS(RootSystem::parse("Q3"), InvalidArgument);
  CHECK_THROWS_AS(RootSystem::parse("A5xA4"), InvalidArgument);
  CHECK_THROWS_AS(RootSystem::parse(""), InvalidArgument);
}

TEST_CASE("term order is additive and makes positive roots positive") {
  auto rs = RootSystem::simple('C', 3);
  for (const auto& r : rs->positive_roots()) {
    CHECK(rs->order().positive(r));
    CHECK_FALSE(rs->order().positive(-r));
  }
  Weight a = rs->weight({1, -1, 0}), b = rs->weight({0, 1, -1}), c = rs->weight({2, 0, -1});
  CHECK(rs->order().compare(a, b) == rs->order().compare(a + c, b + c));
}
