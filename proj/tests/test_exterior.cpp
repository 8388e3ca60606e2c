#include <doctest.h>

#include "spinrep/error.hpp"
#include "spinrep/exterior.hpp"

using namespace spinrep;

namespace {

WeightSystem module(const char* type, std::initializer_list<int> labels) {
  auto rs = RootSystem::parse(type);
  return WeightSystem::of_module(Subsystem::full(rs), rs->weight(labels));
}

std::int64_t binom(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("weight systems") {
  auto ws = module("B2", {1, 0});
  CHECK(ws.dimension() == 5);
  CHECK(ws.zero_multiplicity() == 1);
  CHECK(ws.num_nonzero() == 4);
  CHECK(ws.is_self_dual());
  CHECK(ws.weight_sum().is_zero());
  CHECK(ws.positive_half(ws.ambient().order()).size() == 2);
  auto a2 = module("A2", {1, 0});
  CHECK_FALSE(a2.is_self_dual());
  CHECK(WeightSystem::from_character(a2.to_character()).dimension() == 3);
  CHECK(a2.direct_sum(a2).dimension() == 6);
}

TEST_CASE("exterior powers: Newton recursion and product expansion agree") {
  for (auto ws : {module("A2", {1, 1}), module("B2", {0, 2}), module("G2", {1, 0}), module("A1xA1", {1, 1})}) {
    const int n = static_cast<int>(ws.dimension());
    auto a = exterior_powers(ws, n);
    auto b = exterior_powers_by_product(ws, n);
    REQUIRE(a.size() == b.size());
    for (int k = 0; k <= n; ++k) {
      CHECK(a[k] == b[k]);
      CHECK(a[k].dimension() == binom(n, k));
    }
  }
}

TEST_CASE("graded Poincare polynomials") {
  auto p = GradedPoincare::from_factors({5, 9});
  CHECK(p.total() == 4);
  CHECK(p.degree() == 14);
  CHECK(p.is_palindromic());
  CHECK(p.str() == "(1+t^5)(1+t^9)");
  CHECK(p.expanded() == "1+t^5+t^9+t^14");
  CHECK(p.factor_degrees() == std::vector<int>{5, 9});
  GradedPoincare q{{1, 0, 3, 0, 1}};
  CHECK_FALSE(q.factor_degrees());
  CHECK(q.str() == "1+3t^2+t^4");
}

TEST_CASE("invariants of exterior algebras") {
  struct Case {
    const char* type;
    std::vector<int> labels;
    std::vector<int> degrees;
  };
  // adjoint modules: degrees 2 m_i + 1
  // C2 on the 5-dimensional module, B2 on its symmetric square, A1 on R4,
  // A1xA1 on the outer tensor product, B3 on its vector module
  const std::vector<Case> cases = {
      {"A1", {2}, {3}},        {"A2", {1, 1}, {3, 5}},   {"G2", {0, 1}, {3, 11}}, {"B2", {0, 2}, {3, 7}},
      {"C2", {0, 1}, {5}},     {"B2", {2, 0}, {5, 9}},   {"A1", {4}, {5}},        {"A1xA1", {1, 1}, {4}},
      {"B3", {1, 0, 0}, {7}},
  };
  for (const auto& c : cases) {
    const std::string type = c.type;
    CAPTURE(type);
    auto rs = RootSystem::parse(c.type);
    auto g = Subsystem::full(rs);
    auto ws = WeightSystem::of_module(g, rs->weight(c.labels));
    auto p = invariant_poincare(ws, g);
    CHECK(p.str() == GradedPoincare::from_factors(c.degrees).str());
  }
}
