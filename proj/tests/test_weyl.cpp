#include <doctest.h>

#include "spinrep/error.hpp"
#include "spinrep/weyl.hpp"

#include <map>
#include <set>

using namespace spinrep;

namespace {

// Coefficients of prod_i (1 + q + ... + q^{m_i}).
std::vector<std::uint64_t> poincare_from_exponents(const std::vector<int>& exps) {
  std::vector<std::uint64_t> p{1};
  for (int m : exps) {
    std::vector<std::uint64_t> next(p.size() + m, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (int k = 0; k <= m; ++k) next[i + k] += p[i];
    p = next;
  }
  return p;
}

}  // namespace

TEST_CASE("Weyl group sizes and length distribution") {
  struct Case { const char* type; std::vector<int> exps; };
  const std::vector<Case> cases = {{"A1", {1}},       {"A3", {1, 2, 3}},    {"B2", {1, 3}},
                                   {"B3", {1, 3, 5}}, {"C3", {1, 3, 5}},    {"D4", {1, 3, 3, 5}},
                                   {"G2", {1, 5}},    {"F4", {1, 5, 7, 11}}, {"A1xA1", {1, 1}}};
  for (const auto& c : cases) {
    CAPTURE(c.type);
    auto rs = RootSystem::parse(c.type);
    auto sub = Subsystem::full(rs);
    auto W = sub.weyl_group();
    auto expected = poincare_from_exponents(c.exps);
    std::vector<std::uint64_t> got(expected.size(), 0);
    for (std::size_t i = 0; i < W->size(); ++i) ++got[W->length(i)];
    CHECK(got == expected);
    // longest element sends rho to -rho
    CHECK(W->rho_image(W->longest()) == -sub.rho());
    CHECK(W->length(W->longest()) == static_cast<int>(rs->positive_roots().size()));
  }
}

TEST_CASE("group operations") {
  auto sub = Subsystem::full(RootSystem::simple('B', 3));
  auto W = sub.weyl_group();
  for (std::size_t i = 0; i < W->size(); i += 7) {
    std::size_t inv = W->inverse(i);
    CHECK(W->compose(i, inv) == 0);
    CHECK(W->length(inv) == W->length(i));
    auto word = W->reduced_word(i);
    CHECK(static_cast<int>(word.size()) == W->length(i));
    Weight x = sub.rho();
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = sub.reflect(x, sub.simple_roots()[*it]);
    CHECK(x == W->rho_image(i));
    CHECK(W->find(W->matrix(i)) == i);
  }
  // w preserves the form
  const auto& rs = sub.ambient();
  Weight a = rs.weight({1, 2, -1}), b = rs.weight({0, -3, 2});
  for (std::size_t i = 0; i < W->size(); ++i) CHECK(rs.form(W->apply(i, a), W->apply(i, b)) == rs.form(a, b));
}

TEST_CASE("Dynkin recognition of subsystems") {
  auto f4 = RootSystem::simple('F', 4);
  std::vector<Weight> long_roots, short_roots;
  for (const auto& r : f4->positive_roots()) (f4->is_long(r) ? long_roots : short_roots).push_back(r);
  auto L = Subsystem::from_roots(f4, long_roots);
  CHECK(L.type_label() == "D4");
  CHECK(L.is_closed());
  auto S = Subsystem::from_roots(f4, short_roots);
  CHECK(S.type_label() == "D4");
  CHECK_FALSE(S.is_closed());
  // even coefficient at the short end node gives B4, at the long end C3xA1
  CHECK(Subsystem::even_at(f4, 0).type_label() == "B4");
  CHECK(Subsystem::even_at(f4, 3).type_label() == "C3xA1");
  auto c3 = RootSystem::simple('C', 3);
  std::vector<Weight> c3long;
  for (const auto& r : c3->positive_roots())
    if (c3->is_long(r)) c3long.push_back(r);
  CHECK(Subsystem::from_roots(c3, c3long).type_label() == "A1xA1xA1");
  CHECK(Subsystem::full(f4).simple_roots() == f4->simple_roots());
  auto e8 = RootSystem::simple('E', 8);
  CHECK(Subsystem::full(e8).type_label() == "E8");
  CHECK(Subsystem::even_at(RootSystem::simple('E', 8), 0).type_label() == "D8");
  CHECK(Subsystem::even_at(RootSystem::simple('A', 3), 1).reductive_label() == "A1xA1xT1");
  CHECK(Subsystem::even_at(RootSystem::simple('A', 1), 0).reductive_label() == "T1");
}

TEST_CASE("subsystems must be root systems") {
  auto b2 = RootSystem::simple('B', 2);
  // a single long and a single short root not orthogonal: not closed under reflections
  CHECK_THROWS_AS(Subsystem::from_roots(b2, {b2->simple_roots()[0], b2->simple_roots()[1]}),
                  InvalidArgument);
  auto r = Subsystem::generated_by(b2, {b2->simple_roots()[0], b2->simple_roots()[1]});
  CHECK(r.type_label() == "B2");
  CHECK_THROWS_AS(Subsystem::from_roots(b2, {b2->simple_roots()[1], b2->simple_roots()[1] * 2}),
                  InvalidArgument);
}

TEST_CASE("coroot system swaps B and C") {
  auto b3 = Subsystem::full(RootSystem::simple('B', 3));
  auto dual = dual_root_system(b3);
  CHECK(dual.type_label() == "C3");
  CHECK(dual.positive_roots().size() == 9);
  auto g2 = Subsystem::full(RootSystem::simple('G', 2));
  CHECK(dual_root_system(g2).type_label() == "G2");
  // rho of the coroot system: rho + rho_s for ratio 2, rho + 2 rho_s for G2
  auto sp = b3.ambient().special_elements();
  CHECK(dual.rho() == sp.rho + sp.rho_s);
  auto spg = g2.ambient().special_elements();
  CHECK(dual_root_system(g2).rho() == spg.rho + spg.rho_s * 2);
}

TEST_CASE("minimal coset representatives and factorization") {
  struct Case { char f; int n; int pivot; };
  for (auto c : {Case{'B', 3, 0}, Case{'C', 3, 0}, Case{'F', 4, 0}, Case{'F', 4, 3}, Case{'G', 2, 1},
                 Case{'A', 3, 1}}) {
    auto rs = RootSystem::simple(c.f, c.n);
    auto big = Subsystem::full(rs);
    auto sub = Subsystem::even_at(rs, c.pivot);
    auto W = big.weyl_group();
    auto W0 = sub.weyl_group();
    auto reps = minimal_coset_representatives(big, sub);
    CHECK(reps.size() * W0->size() == W->size());
    std::set<std::size_t> rep_set(reps.begin(), reps.end());
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t w = 0; w < W->size(); ++w) {
      auto fz = factorize(big, sub, w);
      CHECK(rep_set.count(fz.w_rep));
      pairs.insert({fz.w_sub, fz.w_rep});
      // w = w_sub * w_rep^{-1}
      Weight img = W0->apply(fz.w_sub, W->rho_image(W->inverse(fz.w_rep)));
      CHECK(img == W->rho_image(w));
      CHECK(sub_length(big, sub, w) == W0->length(fz.w_sub));
    }
    CHECK(pairs.size() == W->size());
    // a minimal representative has no W(sub) part
    for (auto u : reps) CHECK(sub_length(big, sub, W->inverse(u)) == 0);
  }
}

TEST_CASE("coset sign is a character on W(sub) and constant on cosets") {
  auto rs = RootSystem::simple('F', 4);
  auto big = Subsystem::full(rs);
  auto sub = Subsystem::even_at(rs, 0);
  auto W = big.weyl_group();
  auto W0 = sub.weyl_group();
  for (std::size_t v = 0; v < W0->size(); v += 5) {
    auto in_big = W->find(W0->matrix(v));
    REQUIRE(in_big);
    for (std::size_t w = 0; w < W->size(); w += 11)
      CHECK(coset_sign(big, sub, W->compose(*in_big, w)) == W0->sign(v) * coset_sign(big, sub, w));
  }
}

TEST_CASE("budget refusal carries the required size") {
  auto e8 = Subsystem::full(RootSystem::simple('E', 8));
  try {
    e8.weyl_group();
    FAIL("expected refusal");
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == 696729600ULL);
    CHECK(e.limit() == Budget{}.weyl_order);
  }
}
