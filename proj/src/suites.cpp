#include "spinrep/suites.hpp"

#include "spinrep/error.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace spinrep {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

std::size_t SuiteReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
}

SuiteReport run_checks(std::string suite, std::vector<Check> checks, const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = std::move(suite);
  rep.checks.resize(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      CheckResult& r = rep.checks[i];
      r.id = checks[i].id;
      r.claim = checks[i].claim;
      r.status = CheckStatus::pass;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        checks[i].body(r, cfg.budget);
      } catch (const BudgetExceeded& e) {
        r.status = CheckStatus::skipped;
        r.detail = e.what();
      } catch (const std::exception& e) {
        r.status = CheckStatus::fail;
        r.detail = e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const int n = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(checks.size())));
  std::vector<std::future<void>> pool;
  for (int k = 1; k < n; ++k) pool.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& f : pool) f.get();
  std::stable_sort(rep.checks.begin(), rep.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return rep;
}

namespace {

using Eps = std::vector<Rational>;

void require(CheckResult& r, bool ok, const std::string& what) {
  if (ok) return;
  r.status = CheckStatus::fail;
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += what;
}

void note(CheckResult& r, const std::string& what) {
  if (r.status != CheckStatus::pass) return;
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += what;
}

Eps eps_of(std::initializer_list<std::pair<int, int>> v) {
  Eps out;
  for (auto [n, d] : v) out.emplace_back(n, d);
  return out;
}

std::string eps_str(const Eps& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

Rational eps_dot(const Eps& a, const Eps& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// prod over all weights (1 + e^mu)^{m(mu)}: the character of the whole exterior algebra.
Character exterior_total(const WeightSystem& ws, const Budget& budget) {
  Character r = Character::one(ws.ambient_ptr());
  std::vector<std::pair<Weight, std::int64_t>> all = ws.nonzero();
  all.emplace_back(ws.ambient().zero(), ws.zero_multiplicity());
  for (const auto& [mu, m] : all)
    for (std::int64_t i = 0; i < m; ++i) {
      r += r.shifted(mu);
      if (r.size() > budget.terms) throw BudgetExceeded("terms", r.size(), budget.terms);
    }
  return r;
}

std::multiset<std::string> summand_keys(const Decomposition& d) {
  std::multiset<std::string> s;
  for (const auto& x : d.summands)
    for (std::int64_t i = 0; i < x.multiplicity; ++i) s.insert(x.highest.str());
  return s;
}

std::string decomposition_string(const Decomposition& d, const Subsystem& g) {
  std::string s;
  for (const auto& x : d.summands) {
    if (!s.empty()) s += " + ";
    if (x.multiplicity != 1) s += std::to_string(x.multiplicity) + " ";
    s += "V(" + weight_label(g, x.highest) + ")";
  }
  return s;
}

WeightSystem orthogonal_module(const Subsystem& g, const Weight& lambda, const Budget& budget) {
  WeightSystem ws = WeightSystem::of_module(g, lambda, budget);
  if (orthogonality_type(g, lambda, budget) != Orthogonality::orthogonal)
    ws = ws.direct_sum(WeightSystem::from_character(ws.to_character().dual()));
  return ws;
}

std::string poincare_label(const GradedPoincare& p) {
  auto f = p.factor_degrees();
  if (!f) return "not-free";
  if (f->size() == 1 && (*f)[0] % 2 == 0) return "free-by-convention";
  for (int d : *f)
    if (d % 2 == 0) return "not-free";
  return "exterior";
}

// ---------------------------------------------------------------- skew-invariant table

std::vector<Check> table1_checks(bool f4_only) {
  std::vector<Check> out;
  if (!f4_only)
    for (const auto& row : table1_rows(false)) {
      out.push_back({"table1/" + row.algebra + ":" + row.module, "free-skew-invariants-table",
                     [row](CheckResult& r, const Budget& b) {
                       auto rs = RootSystem::parse(row.type);
                       const Subsystem g = Subsystem::full(rs);
                       const WeightSystem ws = WeightSystem::of_module(g, rs->weight(row.labels), b);
                       const GradedPoincare p = invariant_poincare(ws, g, b);
                       const GradedPoincare want = GradedPoincare::from_factors(row.expected_degrees);
                       r.data["computed"] = p.str();
                       r.data["printed"] = want.str();
                       r.data["dim_V"] = ws.dimension();
                       r.data["label"] = poincare_label(p);
                       require(r, p == want, "computed " + p.str() + ", printed " + want.str());
                       // quartic invariants vanish unless dim V = 4
                       const std::int64_t c4 = p.coefficients.size() > 4 ? p.coefficients[4] : 0;
                       r.data["wedge4_invariants"] = c4;
                       r.data["quartic_dichotomy"] =
                           c4 == 0 ? "zero" : (ws.dimension() == 4 ? "dim V = 4" : "flagged");
                       // dim of invariants >= 2^{m(0)}
                       require(r, p.total() >= (std::int64_t{1} << ws.zero_multiplicity()),
                               "invariants below 2^m(0)");
                       note(r, p.str() + " [" + poincare_label(p) + "]");
                     }});
    }
  if (!f4_only) {
    // symplectic modules carry a quadratic skew invariant, so the algebra is not free
    for (const char* t : {"C2", "C3"}) {
      out.push_back({std::string("table1/symplectic:") + t + ":V_{w1}", "symplectic-not-free",
                     [t = std::string(t)](CheckResult& r, const Budget& b) {
                       auto rs = RootSystem::parse(t);
                       const Subsystem g = Subsystem::full(rs);
                       Weight w1 = rs->fundamental_weight(0);
                       require(r, orthogonality_type(g, w1, b) == Orthogonality::symplectic, "not symplectic");
                       const GradedPoincare p = invariant_poincare(WeightSystem::of_module(g, w1, b), g, b);
                       const std::int64_t c2 = p.coefficients.size() > 2 ? p.coefficients[2] : 0;
                       r.data["wedge2_invariants"] = c2;
                       require(r, c2 > 0, "no skew quadratic invariant");
                       note(r, p.str());
                     }});
    }
  }
  if (f4_only) {
    out.push_back({"table1-f4/f4:V_{w1}", "free-skew-invariants-table", [](CheckResult& r, const Budget& b) {
                     auto rs = RootSystem::simple('F', 4);
                     const Subsystem g = Subsystem::full(rs);
                     const WeightSystem ws = WeightSystem::of_module(g, rs->weight({1, 0, 0, 0}), b);
                     const GradedPoincare want = GradedPoincare::from_factors({9, 17});
                     r.data["printed"] = want.str();
                     try {
                       const GradedPoincare p = invariant_poincare(ws, g, b);
                       r.data["path"] = "poincare";
                       r.data["computed"] = p.str();
                       r.data["label"] = poincare_label(p);
                       require(r, p == want, "computed " + p.str());
                       note(r, "path poincare: " + p.str());
                     } catch (const BudgetExceeded& e) {
                       // equivalent factored form: ch of the exterior algebra = 4 (ch V_{rho_s})^2
                       r.data["path"] = "factored";
                       r.data["poincare_note"] = e.what();
                       const Character lhs = exterior_total(ws, b);
                       Character v = irreducible_character(g, rs->special_elements().rho_s, b);
                       Character rhs = multiply(v, v, b);
                       rhs *= 4;
                       require(r, lhs == rhs, "exterior algebra differs from 4 (ch V_{w1+w2})^2");
                       note(r, "path factored (poincare over budget)");
                     }
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- sl2 series

std::vector<Check> a1_checks() {
  std::vector<Check> out;
  // Spin R_{2d} as a multiset of highest weights, d = 1..5
  const std::map<int, std::multiset<int>> printed{
      {1, {1}}, {2, {3}}, {3, {6, 0}}, {4, {10, 4}}, {5, {15, 9, 5}}};
  auto spin_r = [](int d, const Budget& b) {
    auto rs = RootSystem::simple('A', 1);
    const Subsystem g = Subsystem::full(rs);
    const WeightSystem ws = WeightSystem::of_module(g, rs->weight({2 * d}), b);
    const Decomposition dec = decompose(spin0_character(ws, b), g, b);
    std::multiset<int> m;
    for (const auto& s : dec.summands)
      for (std::int64_t i = 0; i < s.multiplicity; ++i) m.insert(s.highest.twice(0) / 2);
    return m;
  };
  auto show = [](const std::multiset<int>& m) {
    std::string s;
    for (auto it = m.rbegin(); it != m.rend(); ++it) s += (s.empty() ? "R" : " + R") + std::to_string(*it);
    return s;
  };
  for (int d = 1; d <= 5; ++d) {
    out.push_back({"a1-series/R" + std::to_string(2 * d) + (d < 5 ? "" : ""), "spin-of-sl2-series",
                   [=](CheckResult& r, const Budget& b) {
                     const auto m = spin_r(d, b);
                     r.data["computed"] = show(m);
                     r.data["printed"] = show(printed.at(d));
                     require(r, m == printed.at(d), "computed " + show(m));
                     std::int64_t total = 0;
                     for (int k : m) total += k + 1;
                     require(r, total == (std::int64_t{1} << d), "dimension is not 2^d");
                     note(r, "Spin R" + std::to_string(2 * d) + " = " + show(m));
                   }});
  }
  for (int d = 1; d <= 8; ++d) {
    out.push_back({"a1-series/shift-R" + std::to_string(2 * d), "spin-of-sl2-shift-containment",
                   [=](CheckResult& r, const Budget& b) {
                     const auto now = spin_r(d, b);
                     const auto next = spin_r(d + 1, b);
                     std::multiset<int> shifted;
                     for (int k : now) shifted.insert(k + d + 1);
                     require(r, std::includes(next.begin(), next.end(), shifted.begin(), shifted.end()),
                             show(shifted) + " not inside " + show(next));
                     require(r, next.size() >= now.size(), "summand count decreased");
                     r.data["spin"] = show(now);
                     r.data["next"] = show(next);
                     note(r, "Spin R" + std::to_string(2 * d + 2) + " = " + show(next));
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- little adjoint

std::vector<Check> little_adjoint_checks() {
  std::vector<Check> out;
  for (const char* t : {"B2", "B3", "B4", "C2", "C3", "C4", "F4"}) {
    out.push_back({std::string("little-adjoint/") + t, "little-adjoint-spin",
                   [t = std::string(t)](CheckResult& r, const Budget& b) {
                     auto rs = RootSystem::parse(t);
                     const Subsystem g = Subsystem::full(rs);
                     const auto sp = rs->special_elements();
                     const WeightSystem ws = WeightSystem::of_module(g, sp.theta_s, b);
                     const Character spin0 = spin0_character(ws, b);
                     const Character vrs = irreducible_character(g, sp.rho_s, b);
                     require(r, spin0 == vrs, "Spin0(V_theta_s) differs from V_rho_s");
                     const std::int64_t ns = static_cast<std::int64_t>(sp.short_simple.size());
                     require(r, ws.zero_multiplicity() == ns, "m(0) differs from the number of short simple roots");
                     const BigInt want = BigInt(1) << ((ws.dimension() - ns) / 2);
                     require(r, weyl_dimension(g, sp.rho_s) == want, "dim V_rho_s differs from 2^((dim V - #short)/2)");
                     require(r, dual_system_quotient(g, b) == vrs, "dual root system quotient differs from V_rho_s");
                     Character sq = multiply(vrs, vrs, b);
                     sq *= std::int64_t{1} << ns;
                     require(r, exterior_total(ws, b) == sq, "exterior algebra differs from 2^#short (ch V_rho_s)^2");
                     r.data["dim_V"] = ws.dimension();
                     r.data["dim_V_rho_s"] = want.str();
                     note(r, "Spin0(V_theta_s) = V_rho_s, dim " + want.str());
                   }});
  }
  out.push_back({"little-adjoint/G2-control", "little-adjoint-negative-control", [](CheckResult& r, const Budget& b) {
                   auto rs = RootSystem::simple('G', 2);
                   const Subsystem g = Subsystem::full(rs);
                   const auto sp = rs->special_elements();
                   const Weight w1 = rs->weight({1, 0});
                   require(r, sp.theta_s == w1, "theta_s of G2 is not w1");
                   const WeightSystem ws = WeightSystem::of_module(g, w1, b);
                   const Decomposition d = decompose(spin0_character(ws, b), g, b);
                   require(r, summand_keys(d) == std::multiset<std::string>{w1.str(), rs->zero().str()},
                           "Spin(V_w1) = " + decomposition_string(d, g));
                   // ch V_{2 rho_s} = prod over short positive roots (e^mu + 1 + e^-mu)
                   Character prod = Character::one(rs);
                   for (const auto& a : rs->positive_roots())
                     if (!rs->is_long(a)) {
                       Character f = Character::one(rs);
                       f.add(a, 1);
                       f.add(-a, 1);
                       prod = multiply(prod, f, b);
                     }
                   const Character v2 = irreducible_character(g, sp.rho_s * 2, b);
                   require(r, prod == v2, "G2 short-root product differs from V_{2 rho_s}");
                   require(r, dual_system_quotient(g, b) == v2, "dual root system quotient differs from V_{2 rho_s}");
                   note(r, "Spin(V_w1) = " + decomposition_string(d, g));
                 }});
  return out;
}

// ---------------------------------------------------------------- vector square

std::vector<Check> vector_square_checks() {
  std::vector<Check> out;
  for (int n = 2; n <= 4; ++n) {
    out.push_back({"vector-square/B" + std::to_string(n), "vector-square-spin", [n](CheckResult& r, const Budget& b) {
                     auto rs = RootSystem::simple('B', n);
                     const Subsystem g = Subsystem::full(rs);
                     std::vector<int> two(n, 0);
                     two[0] = 2;
                     const WeightSystem ws = WeightSystem::of_module(g, rs->weight(two), b);
                     const Weight target = rs->rho() + rs->fundamental_weight(n - 1) * 2;
                     const Decomposition d = decompose(spin0_character(ws, b), g, b);
                     require(r, summand_keys(d) == std::multiset<std::string>{target.str()},
                             "Spin0(V_2w1) = " + decomposition_string(d, g));
                     const BigInt dim = weyl_dimension(g, target);
                     r.data["dim"] = dim.str();
                     require(r, dim == BigInt(1) << ((ws.dimension() - ws.zero_multiplicity()) / 2), "dimension");
                     if (n == 2) require(r, dim == 64, "dim V_{rho+2w2} of B2 is not 64");
                     const Character v = irreducible_character(g, target, b);
                     Character sq = multiply(v, v, b);
                     sq *= std::int64_t{1} << n;
                     require(r, exterior_total(ws, b) == sq, "exterior algebra differs from 2^n (ch V)^2");
                     note(r, "Spin0(V_2w1) = V(" + weight_label(g, target) + "), dim " + dim.str());
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- inner

std::vector<Check> inner_checks() {
  std::vector<Check> out;
  for (const auto& g : inner_catalog(4)) {
    const std::string name = g.name;
    out.push_back({"inner/" + name, "inner-symmetric-decomposition", [name](CheckResult& r, const Budget& b) {
                     const Z2Grading gr = grading_by_name(name);
                     validate_grading(gr);
                     const SpinG1Result s = spin_g1(gr, b);
                     require(r, s.routes_agree, "coset formula and direct decomposition differ");
                     require(r, s.multiplicity_free, "not multiplicity free");
                     require(r, s.summands.size() == s.coset_count, "summand count differs from #W/W0");
                     Json sums = Json::array();
                     for (const auto& x : s.summands) sums.push_back(weight_label(gr.sub(), x.lambda));
                     r.data["summands"] = std::move(sums);
                     note(r, std::to_string(s.summands.size()) + " summands, #W/W0 = " + std::to_string(s.coset_count));
                   }});
  }
  for (int n = 2; n <= 4; ++n) {
    out.push_back({"inner/example:B" + std::to_string(n) + ">D" + std::to_string(n), "inner-symmetric-decomposition",
                   [n](CheckResult& r, const Budget& b) {
                     auto rs = RootSystem::simple('B', n);
                     const Z2Grading gr = inner_grading(rs, rs->internal_index_from_bourbaki(n - 1));
                     const SpinG1Result s = spin_g1(gr, b);
                     Eps plus(n, Rational(1, 2)), minus = plus;
                     minus[n - 1] = Rational(-1, 2);
                     std::set<Eps> got;
                     for (const auto& x : s.summands) got.insert(rs->to_epsilon(x.lambda));
                     require(r, got == std::set<Eps>{plus, minus}, "weights are not the two half-spin weights");
                     note(r, "V(" + eps_str(plus) + ") + V(" + eps_str(minus) + ")");
                   }});
  }
  out.push_back({"inner/example:F4>B4", "inner-symmetric-decomposition", [](CheckResult& r, const Budget& b) {
                   const Z2Grading gr = grading_by_name("F4/B4");
                   const SpinG1Result s = spin_g1(gr, b);
                   const std::map<Eps, int> want{{eps_of({{2, 1}, {0, 1}, {0, 1}, {0, 1}}), 44},
                                                 {eps_of({{1, 1}, {1, 1}, {1, 1}, {0, 1}}), 84},
                                                 {eps_of({{3, 2}, {1, 2}, {1, 2}, {1, 2}}), 128}};
                   std::map<Eps, int> got;
                   for (const auto& x : s.summands) got[gr.ambient->to_epsilon(x.lambda)] = static_cast<int>(x.dim);
                   require(r, got == want, "weights or dimensions differ from 2e1 (44), e1+e2+e3 (84), (3,1,1,1)/2 (128)");
                   // the coset representatives as maps of the e-basis
                   const Rational h(1, 2);
                   const std::vector<Eps> w1{{h, h, h, h}, {h, h, -h, -h}, {h, -h, h, -h}, {h, -h, -h, h}};
                   const std::vector<Eps> w2{{h, h, h, -h}, {h, h, -h, h}, {h, -h, h, h}, {h, -h, -h, -h}};
                   std::set<std::vector<Eps>> acts;
                   for (const auto& x : s.summands) acts.insert(x.action);
                   require(r, acts.count(w1) == 1 && acts.count(w2) == 1, "coset maps differ from w', w''");
                   note(r, "V(2e1) + V(e1+e2+e3) + V((3e1+e2+e3+e4)/2), 44 + 84 + 128");
                 }});
  out.push_back({"inner/hermitian:A3", "hermitian-exterior-algebra", [](CheckResult& r, const Budget& b) {
                   for (const char* name : {"A3/A2xT1@1", "A3/A1xA1xT1"}) {
                     const HermitianResult h = verify_hermitian(grading_by_name(name), b);
                     require(r, h.multiplicity_free, std::string(name) + ": not multiplicity free");
                     require(r, h.lowest_match, std::string(name) + ": lowest weights differ from rho - w^-1 rho");
                     require(r, h.dual_match, std::string(name) + ": highest weights of the dual differ");
                   }
                   note(r, "{rho - w^-1 rho} = lowest weights of the exterior algebra of W");
                 }});
  return out;
}

// ---------------------------------------------------------------- identity

std::vector<Check> identity_checks() {
  std::vector<Check> out;
  std::vector<std::string> names;
  for (const auto& g : inner_catalog(4)) names.push_back(g.name);
  for (int n = 6; n <= 8; ++n) {
    auto rs = RootSystem::simple('E', n);
    for (int p : involution_pivots(*rs)) names.push_back(inner_grading(rs, p).name);
  }
  for (const auto& name : names) {
    out.push_back({"identity/" + name, "tau-identity", [name](CheckResult& r, const Budget& b) {
                     const Z2Grading gr = grading_by_name(name);
                     if (gr.whole().weyl_order() > b.weyl_order)
                       throw BudgetExceeded("weyl", gr.whole().weyl_order(), b.weyl_order);
                     const IdentityResult res = verify_tau_identity(gr, b);
                     require(r, res.holds, "the two sides differ");
                     r.data["lhs_terms"] = res.lhs_terms;
                     note(r, std::to_string(res.lhs_terms) + " terms");
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- outer

std::vector<Check> outer_checks() {
  std::vector<Check> out;
  for (int n = 2; n <= 3; ++n) {
    out.push_back({"outer/SL" + std::to_string(2 * n) + "/SO" + std::to_string(2 * n), "outer-symmetric-decomposition",
                   [n](CheckResult& r, const Budget& b) {
                     const Z2Grading gr = outer_grading(OuterFamily::sl_even, n);
                     validate_grading(gr);
                     const SpinG1Result s = spin_g1(gr, b);
                     // rho0 + 2w_{n-1}, rho0 + 2w_n of D_n: (n, ..., 2, -+1)
                     Eps a(n), c(n);
                     for (int i = 0; i < n; ++i) a[i] = c[i] = n - i;
                     c[n - 1] = -1;
                     std::set<Eps> got;
                     for (const auto& x : s.summands) got.insert(gr.ambient->to_epsilon(x.lambda));
                     require(r, got == std::set<Eps>{a, c}, "weights differ from rho0 + 2w_{n-1}, rho0 + 2w_n");
                     require(r, gr.zero_multiplicity() == n - 1, "m(0) is not n - 1");
                     const auto d = verify_dual_bridge(gr, b);
                     require(r, d.rho_matches && d.dual_identity && d.rewritten, "dual bridge");
                     note(r, "V" + eps_str(a) + " + V" + eps_str(c) + ", factor 2^" + std::to_string(n - 1));
                   }});
  }
  out.push_back({"outer/E6/C4", "outer-symmetric-decomposition", [](CheckResult& r, const Budget& b) {
                   const Z2Grading gr = outer_grading(OuterFamily::e6);
                   validate_grading(gr);
                   const SpinG1Result s = spin_g1(gr, b);
                   const std::set<Eps> want{eps_of({{9, 2}, {5, 2}, {1, 2}, {1, 2}}),
                                            eps_of({{9, 2}, {3, 2}, {3, 2}, {1, 2}}),
                                            eps_of({{9, 2}, {1, 2}, {3, 2}, {3, 2}})};
                   const std::set<std::string> want_labels{"5w1+w2+w3", "3w1+w2+w3+w4", "w1+w2+3w3"};
                   std::set<Eps> got;
                   std::set<std::string> labels;
                   for (const auto& x : s.summands) {
                     got.insert(gr.ambient->to_epsilon(x.lambda));
                     labels.insert(weight_label(gr.sub(), x.lambda));
                   }
                   require(r, got == want, "e-coordinates differ");
                   require(r, labels == want_labels, "sp8 labels differ");
                   require(r, s.scalar == 2, "scalar is not 2");
                   const auto d = verify_dual_bridge(gr, b);
                   require(r, d.rho_matches && d.dual_identity && d.rewritten, "dual bridge");
                   note(r, "V(5w1+w2+w3) + V(rho0+2w1) + V(w1+w2+3w3)");
                 }});
  // recorded from the coset and decomposition routes (they agree)
  const std::map<std::pair<int, int>, std::set<Eps>> fixtures{
      {{1, 1}, {eps_of({{3, 2}, {1, 2}}), eps_of({{1, 2}, {3, 2}})}},
      {{2, 1},
       {eps_of({{3, 2}, {3, 2}, {1, 2}}), eps_of({{3, 2}, {1, 2}, {3, 2}}), eps_of({{1, 2}, {1, 2}, {5, 2}})}}};
  for (const auto& [nm, want] : fixtures) {
    const auto [n, m] = nm;
    const std::string name = "SO" + std::to_string(2 * (n + m) + 2) + "/SO" + std::to_string(2 * n + 1) + "xSO" +
                             std::to_string(2 * m + 1);
    out.push_back({"outer/" + name, "outer-symmetric-decomposition", [n, m, want](CheckResult& r, const Budget& b) {
                     const Z2Grading gr = outer_grading(OuterFamily::so_even, n, m);
                     validate_grading(gr);
                     const SpinG1Result s = spin_g1(gr, b);
                     std::size_t binom = 1;
                     for (int k = 1; k <= m; ++k) binom = binom * (n + k) / k;
                     require(r, s.summands.size() == binom, "summand count differs from binomial(n+m, m)");
                     require(r, s.multiplicity_free, "summands not distinct");
                     BigInt total = 0;
                     std::set<Eps> got;
                     for (const auto& x : s.summands) {
                       total += x.dim;
                       got.insert(gr.ambient->to_epsilon(x.lambda));
                     }
                     require(r, total == BigInt(1) << (((2 * n + 1) * (2 * m + 1) - 1) / 2), "total dimension");
                     require(r, got == want, "weights differ from the recorded fixture");
                     const auto d = verify_dual_bridge(gr, b);
                     require(r, d.rho_matches && d.dual_identity && d.rewritten, "dual bridge");
                     note(r, std::to_string(binom) + " summands, total dim " + total.str());
                   }});
  }
  for (int n = 2; n <= 3; ++n) {
    out.push_back({"outer/SL" + std::to_string(2 * n + 1) + "/SO" + std::to_string(2 * n + 1),
                   "outer-symmetric-decomposition", [n](CheckResult& r, const Budget& b) {
                     const Z2Grading gr = outer_grading(OuterFamily::sl_odd, n);
                     validate_grading(gr);
                     const SpinG1Result s = spin_g1(gr, b);
                     require(r, s.summands.size() == 1 && s.coset_count == 1, "W' is not trivial");
                     Eps want(n);
                     for (int i = 0; i < n; ++i) want[i] = Rational(2 * (n - i) + 1, 2);  // rho + 2w_n
                     require(r, !s.summands.empty() && gr.ambient->to_epsilon(s.summands[0].lambda) == want,
                             "weight differs from rho + 2w_n");
                     note(r, "V" + eps_str(want));
                   }});
  }
  out.push_back({"outer/table2-counts", "outer-coset-count", [](CheckResult& r, const Budget& b) {
                   for (const auto& gr : outer_catalog()) {
                     std::size_t want = 1;
                     if (gr.g_label.rfind("sl", 0) == 0 && gr.form_scale == Rational(1)) want = 2;
                     if (gr.g_label == "e6") want = 3;
                     if (gr.params.size() == 2) {
                       const int n = gr.params[0], m = gr.params[1];
                       for (int k = 1; k <= m; ++k) want = want * (n + k) / k;
                     }
                     const SpinG1Result s = spin_g1(gr, b);
                     require(r, s.coset_count == want, gr.name + ": #W' = " + std::to_string(s.coset_count));
                   }
                   note(r, "2, binomial(n+m, m), 3, 1");
                 }});
  return out;
}

// ---------------------------------------------------------------- casimir

std::vector<Check> casimir_checks() {
  std::vector<Check> out;
  std::vector<std::string> names;
  for (const auto& g : inner_catalog(4)) names.push_back(g.name);
  for (const auto& g : outer_catalog()) names.push_back(g.name);
  for (const auto& name : names) {
    out.push_back({"casimir/" + name, "casimir-scalar", [name](CheckResult& r, const Budget& b) {
                     const Z2Grading gr = grading_by_name(name);
                     const SpinG1Result s = spin_g1(gr, b);
                     const CasimirResult c = casimir_check(gr, s);
                     for (const auto& v : c.per_summand) require(r, v == c.value, "summand value " + to_string(v));
                     // the same constant from e-coordinates
                     const RootSystem& rs = *gr.ambient;
                     if (rs.has_epsilon() && rs.is_simple()) {
                       const Eps rho = rs.to_epsilon(gr.rho()), rho0 = rs.to_epsilon(gr.rho0());
                       const Rational alt =
                           gr.form_scale * rs.epsilon_form_scale(0) * (eps_dot(rho, rho) - eps_dot(rho0, rho0));
                       require(r, alt == c.value, "e-coordinate value " + to_string(alt));
                     }
                     r.data["value"] = rational_json(c.value);
                     note(r, "(rho,rho) - (rho0,rho0) = " + to_string(c.value));
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- conjecture

std::vector<Weight> long_roots(const RootSystemPtr& rs) {
  std::vector<Weight> l;
  for (const auto& a : rs->positive_roots())
    if (rs->is_long(a)) l.push_back(a);
  return l;
}

std::vector<Check> conjecture_checks() {
  std::vector<Check> out;
  for (const char* t : {"G2", "C3"}) {
    out.push_back({std::string("conjecture/") + t + "-long", "equal-rank-conditions",
                   [t = std::string(t)](CheckResult& r, const Budget& b) {
                     auto rs = RootSystem::parse(t);
                     const EqualRankReport e = equal_rank_pair(rs, long_roots(rs), b);
                     r.data["pair"] = e.label;
                     r.data["coset_count"] = e.coset_count;
                     r.data["invariants"] = e.invariants.expanded();
                     r.data["invariants_total"] = e.invariants.total();
                     r.data["extreme_count"] = e.extreme_count;
                     r.data["condition_ii"] = e.condition_ii;
                     r.data["condition_iii"] = e.condition_iii;
                     r.data["condition_iv"] = e.condition_iv;
                     require(r, !e.symmetric, "pair is symmetric");
                     require(r, e.invariants.total() > static_cast<std::int64_t>(e.coset_count),
                             "dim of invariants does not exceed #W^h");
                     require(r, !e.condition_ii, "condition (ii) holds");
                     require(r, !e.condition_iii, "Spin0 is decomposably generated");
                     note(r, e.label + ": #W^h = " + std::to_string(e.coset_count) + ", invariants " +
                                 e.invariants.expanded() + " (total " + std::to_string(e.invariants.total()) +
                                 "), (ii) false, (iii) false, (iv) " + (e.condition_iv ? "true" : "false"));
                   }});
  }
  out.push_back({"conjecture/F4-B3xA1", "equal-rank-closedness", [](CheckResult& r, const Budget&) {
                   auto f4 = RootSystem::simple('F', 4);
                   const Rational z(0), one(1);
                   const std::vector<Weight> gens{f4->from_epsilon({z, one, -one, z}), f4->from_epsilon({z, z, one, -one}),
                                                  f4->from_epsilon({z, z, z, one}), f4->from_epsilon({one, z, z, z})};
                   const Subsystem sub = Subsystem::generated_by(f4, gens);
                   require(r, sub.type_label() == "B3xA1" && sub.rank() == 4, "not a full-rank B3xA1");
                   require(r, !sub.is_closed(), "B3xA1 is closed");
                   bool rejected = false;
                   try {
                     equal_rank_pair(f4, gens);
                   } catch (const InvalidArgument&) {
                     rejected = true;
                   }
                   require(r, rejected, "non-closed pair accepted");
                   note(r, "B3xA1 is not closed in F4 (e1 + e2 is a root); C3 > A1xA1xA1 used instead");
                 }});
  out.push_back({"conjecture/symmetric-control", "equal-rank-conditions", [](CheckResult& r, const Budget& b) {
                   for (const char* t : {"B2", "B3"}) {
                     auto rs = RootSystem::parse(t);
                     const EqualRankReport e = equal_rank_pair(rs, long_roots(rs), b);
                     require(r, e.symmetric, e.label + " not symmetric");
                     require(r, e.condition_ii && e.condition_iii && e.condition_iv, e.label + ": a condition fails");
                   }
                   auto g2 = RootSystem::simple('G', 2);
                   const EqualRankReport e =
                       equal_rank_pair(g2, {g2->simple_roots()[0], g2->special_elements().theta}, b);
                   require(r, e.symmetric && e.condition_ii && e.condition_iii && e.condition_iv, e.label);
                   note(r, "B2/D2, B3/D3, G2/A1xA1 satisfy (ii)-(iv)");
                 }});
  return out;
}

// ---------------------------------------------------------------- classification

std::vector<Check> classify_checks(int jobs) {
  std::vector<Check> out;
  out.push_back({"classify/rank3-height6", "coprimary-classification", [jobs](CheckResult& r, const Budget& b) {
                   // highest root, highest short root (B, C), 2w1 (B), 4w (A1); B2 = C2 swaps 2w1 and 2w2
                   const std::set<std::pair<std::string, std::vector<int>>> want{
                       {"A1", {2}},       {"A1", {4}},       {"A2", {1, 1}},    {"A3", {1, 0, 1}},
                       {"B2", {0, 2}},    {"B2", {1, 0}},    {"B2", {2, 0}},    {"B3", {0, 1, 0}},
                       {"B3", {1, 0, 0}}, {"B3", {2, 0, 0}}, {"C2", {2, 0}},    {"C2", {0, 1}},
                       {"C2", {0, 2}},    {"C3", {2, 0, 0}}, {"C3", {0, 1, 0}}, {"G2", {0, 1}}};
                   const ClassificationReport rep = classify_coprimary(3, 6, b, jobs);
                   const auto found = rep.coprimary();
                   const std::set<std::pair<std::string, std::vector<int>>> got(found.begin(), found.end());
                   for (const auto& c : rep.candidates) require(r, c.stage != "skipped", "skipped " + c.type);
                   for (const auto& w : want)
                     if (!got.count(w)) require(r, false, "missing " + w.first);
                   for (const auto& g : got)
                     if (!want.count(g)) require(r, false, "extra " + g.first);
                   r.data["examined"] = rep.examined;
                   r.data["coprimary"] = found.size();
                   note(r, std::to_string(found.size()) + " co-primary of " + std::to_string(rep.examined));
                 }});
  out.push_back({"classify/rank1-height8", "coprimary-classification", [](CheckResult& r, const Budget& b) {
                   const auto found = classify_coprimary(1, 8, b).coprimary();
                   const std::vector<std::pair<std::string, std::vector<int>>> want{{"A1", {2}}, {"A1", {4}}};
                   auto sorted = found;
                   std::sort(sorted.begin(), sorted.end());
                   require(r, sorted == want, "expected R2 and R4 only");
                   note(r, "R2, R4");
                 }});
  return out;
}

// ---------------------------------------------------------------- properties

struct ModuleSpec {
  std::string type;
  std::vector<int> labels;
};

const std::vector<ModuleSpec>& property_modules() {
  static const std::vector<ModuleSpec> m{
      {"A1", {2}},       {"A1", {4}},    {"A1", {6}},       {"A1", {3}},       {"A2", {1, 1}},
      {"A2", {1, 0}},    {"A2", {2, 0}}, {"A3", {1, 0, 1}}, {"A3", {0, 1, 0}}, {"A3", {1, 0, 0}},
      {"B2", {1, 0}},    {"B2", {0, 2}}, {"B2", {2, 0}},    {"B2", {0, 1}},    {"B3", {1, 0, 0}},
      {"B3", {0, 0, 1}}, {"C3", {0, 1, 0}}, {"G2", {1, 0}},  {"G2", {0, 1}},    {"A1xA1", {1, 1}}};
  return m;
}

std::vector<Check> properties_checks() {
  std::vector<Check> out;
  out.push_back({"properties/half-independence", "spin-half-independence", [](CheckResult& r, const Budget& b) {
                   std::mt19937_64 rng(20240611);
                   std::uniform_int_distribution<int> coef(-60, 60);
                   for (const auto& mod : property_modules()) {
                     auto rs = RootSystem::parse(mod.type);
                     const Subsystem g = Subsystem::full(rs);
                     const WeightSystem ws = orthogonal_module(g, rs->weight(mod.labels), b);
                     std::vector<std::int64_t> f(rs->dim());
                     for (auto& x : f) x = coef(rng);
                     const Character a = spin0_character(ws, b);
                     const Character c = spin0_character(ws, TermOrder(f), b);
                     require(r, a == c, mod.type + " module differs between halves");
                   }
                   note(r, std::to_string(property_modules().size()) + " modules");
                 }});
  out.push_back({"properties/exterior-dimension", "exterior-dimension", [](CheckResult& r, const Budget& b) {
                   for (const auto& mod : property_modules()) {
                     auto rs = RootSystem::parse(mod.type);
                     const Subsystem g = Subsystem::full(rs);
                     const WeightSystem ws = orthogonal_module(g, rs->weight(mod.labels), b);
                     const int n = static_cast<int>(ws.dimension());
                     BigInt total = 0;
                     for (const auto& c : exterior_powers(ws, n, b)) total += c.dimension();
                     require(r, total == BigInt(1) << n, mod.type + ": sum of exterior powers is not 2^dim");
                   }
                   note(r, std::to_string(property_modules().size()) + " modules");
                 }});
  const std::vector<std::pair<std::string, int>> types{{"A1", 8}, {"A2", 5}, {"B2", 5}, {"G2", 3}, {"A3", 4},
                                                       {"B3", 3}, {"C3", 3}, {"A4", 3}, {"B4", 3}, {"C4", 3},
                                                       {"D4", 3}, {"F4", 2}};
  for (const auto& [t, height] : types) {
    out.push_back({"properties/weyl-division:" + t, "weyl-exact-division",
                   [t = t, height = height](CheckResult& r, const Budget& b) {
                     auto rs = RootSystem::parse(t);
                     const Subsystem g = Subsystem::full(rs);
                     std::mt19937_64 rng(std::hash<std::string>{}(t) ^ 0x5eed);
                     std::uniform_int_distribution<int> pick(0, rs->rank() - 1);
                     std::uniform_int_distribution<int> h(0, height);
                     for (int k = 0; k < 50; ++k) {
                       std::vector<int> labels(rs->rank(), 0);
                       for (int s = h(rng); s > 0; --s) ++labels[pick(rng)];
                       const Weight lambda = rs->weight(labels);
                       const Character div = irreducible_character(g, lambda, b);
                       const Character fr = freudenthal_character(g, lambda, b);
                       require(r, div == fr, "division and Freudenthal differ at " + lambda.str());
                       require(r, BigInt(fr.dimension()) == weyl_dimension(g, lambda), "dimension at " + lambda.str());
                     }
                     note(r, "50 weights of height <= " + std::to_string(height));
                   }});
  }
  const std::vector<std::string> big{"B2", "C3", "F4"};
  for (const auto& t : big) {
    out.push_back({"properties/coset-bijection:" + t, "coset-factorization-bijection",
                   [t](CheckResult& r, const Budget& b) {
                     auto rs = RootSystem::parse(t);
                     const Subsystem whole = Subsystem::full(rs);
                     auto W = whole.weyl_group(b);
                     std::vector<Subsystem> subs;
                     for (int p : involution_pivots(*rs)) subs.push_back(Subsystem::even_at(rs, p));
                     subs.push_back(Subsystem::from_roots(rs, long_roots(rs)));
                     for (const auto& sub : subs) {
                       auto Ws = sub.weyl_group(b);
                       const auto reps = minimal_coset_representatives(whole, sub, b);
                       const std::set<std::size_t> rep_set(reps.begin(), reps.end());
                       require(r, reps.size() * Ws->size() == W->size(), sub.type_label() + ": #W0 * #W^0 != #W");
                       std::set<std::pair<std::size_t, std::size_t>> pairs;
                       for (std::size_t w = 0; w < W->size(); ++w) {
                         const CosetFactorization f = factorize(whole, sub, w, b);
                         const auto in_big = W->find(Ws->matrix(f.w_sub));
                         require(r, in_big.has_value(), "W0 element not found in W");
                         if (!in_big) continue;
                         require(r, rep_set.count(f.w_rep) == 1, "factor is not a minimal representative");
                         require(r, W->compose(*in_big, W->inverse(f.w_rep)) == w, "recomposition differs");
                         pairs.insert({f.w_sub, f.w_rep});
                       }
                       require(r, pairs.size() == W->size(), sub.type_label() + ": factorization not injective");
                     }
                     note(r, std::to_string(subs.size()) + " subsystems, " + std::to_string(W->size()) + " elements each");
                   }});
  }
  return out;
}

}  // namespace

std::vector<Table1Row> table1_rows(bool include_f4) {
  std::vector<Table1Row> rows{
      {"sl2", "V=g", "A1", {2}, {3}},
      {"sl3", "V=g", "A2", {1, 1}, {3, 5}},
      {"sl4", "V=g", "A3", {1, 0, 1}, {3, 5, 7}},
      {"so5", "V=g", "B2", {0, 2}, {3, 7}},
      {"so7", "V=g", "B3", {0, 1, 0}, {3, 7, 11}},
      {"sp6", "V=g", "C3", {2, 0, 0}, {3, 7, 11}},
      {"g2", "V=g", "G2", {0, 1}, {3, 11}},
      {"sp4", "V_{w2}", "C2", {0, 1}, {5}},
      {"sp6", "V_{w2}", "C3", {0, 1, 0}, {5, 9}},
      {"so5", "V_{2w1}", "B2", {2, 0}, {5, 9}},
      {"so7", "V_{2w1}", "B3", {2, 0, 0}, {5, 9, 13}},
      {"sl2", "V_{4w}", "A1", {4}, {5}},
      {"so5", "V_{w1}", "B2", {1, 0}, {5}},
      {"so6", "V_{w1}", "A3", {0, 1, 0}, {6}},
      {"so7", "V_{w1}", "B3", {1, 0, 0}, {7}},
      {"so8", "V_{w1}", "D4", {1, 0, 0, 0}, {8}},
      {"sl2+sl2", "V_{w}xV_{w'}", "A1xA1", {1, 1}, {4}},
  };
  if (include_f4) rows.push_back({"f4", "V_{w1}", "F4", {1, 0, 0, 0}, {9, 17}});
  return rows;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"table1",   "table1-f4", "a1-series", "little-adjoint",
                                              "vector-square", "inner", "identity",  "outer",
                                              "casimir",  "conjecture", "classify", "properties"};
  return names;
}

SuiteReport run_suite(std::string_view name, const RunConfig& cfg) {
  std::vector<Check> checks;
  if (name == "table1") checks = table1_checks(false);
  else if (name == "table1-f4") checks = table1_checks(true);
  else if (name == "a1-series") checks = a1_checks();
  else if (name == "little-adjoint") checks = little_adjoint_checks();
  else if (name == "vector-square") checks = vector_square_checks();
  else if (name == "inner") checks = inner_checks();
  else if (name == "identity") checks = identity_checks();
  else if (name == "outer") checks = outer_checks();
  else if (name == "casimir") checks = casimir_checks();
  else if (name == "conjecture") checks = conjecture_checks();
  else if (name == "classify") checks = classify_checks(cfg.jobs);
  else if (name == "properties") checks = properties_checks();
  else throw InvalidArgument("unknown suite '" + std::string(name) + "'");
  // classification parallelizes internally
  RunConfig c = cfg;
  if (name == "classify") c.jobs = 1;
  return run_checks(std::string(name), std::move(checks), c);
}

Json to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["passed"] = r.count(CheckStatus::pass);
  j["failed"] = r.count(CheckStatus::fail);
  j["skipped"] = r.count(CheckStatus::skipped);
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["id"] = c.id;
    e["claim"] = c.claim;
    e["status"] = to_string(c.status);
    e["detail"] = c.detail;
    if (!c.data.empty()) e["data"] = c.data;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string to_markdown(const SuiteReport& r) {
  std::ostringstream out;
  out << "### " << r.suite << ": " << r.count(CheckStatus::pass) << " passed, " << r.count(CheckStatus::fail)
      << " failed, " << r.count(CheckStatus::skipped) << " skipped\n\n";
  out << "| check | claim | status | detail |\n|---|---|---|---|\n";
  for (const auto& c : r.checks) {
    std::string d = c.detail;
    std::replace(d.begin(), d.end(), '|', '/');
    out << "| " << c.id << " | " << c.claim << " | " << to_string(c.status) << " | " << d << " |\n";
  }
  return out.str();
}

std::string table1_markdown(const RunConfig& cfg) {
  const SuiteReport a = run_suite("table1", cfg);
  const SuiteReport f = run_suite("table1-f4", cfg);
  std::map<std::string, const CheckResult*> by_id;
  for (const auto* rep : {&a, &f})
    for (const auto& c : rep->checks) by_id[c.id] = &c;
  std::ostringstream out;
  out << "| g | V | generators | computed | printed | label | status |\n|---|---|---|---|---|---|---|\n";
  for (const auto& row : table1_rows(true)) {
    const std::string id = (row.type == "F4" ? "table1-f4/" : "table1/") + row.algebra + ":" + row.module;
    const CheckResult* c = by_id.count(id) ? by_id[id] : nullptr;
    const GradedPoincare want = GradedPoincare::from_factors(row.expected_degrees);
    auto field = [&](const char* k) {
      return c && c->data.contains(k) ? c->data[k].get<std::string>() : std::string("-");
    };
    std::string computed = field("computed");
    if (c && c->data.contains("path") && c->data["path"] == "factored") computed = "(factored check)";
    out << "| " << row.algebra << " | " << row.module << " | " << row.expected_degrees.size() << " | " << computed
        << " | " << want.str() << " | " << field("label") << " | " << (c ? to_string(c->status) : "missing")
        << " |\n";
  }
  return out.str();
}

std::string table2_markdown(const RunConfig& cfg) {
  struct Row {
    Z2Grading gr;
    std::string g0, g1, gbar0, gbar1, printed;
  };
  std::vector<Row> rows;
  for (int n = 2; n <= 3; ++n)
    rows.push_back({outer_grading(OuterFamily::sl_even, n), "so" + std::to_string(2 * n), "V_{2w1}",
                    "sp" + std::to_string(2 * n), "V_{w2}", "2"});
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}})
    rows.push_back({outer_grading(OuterFamily::so_even, n, m),
                    "so" + std::to_string(2 * n + 1) + "+so" + std::to_string(2 * m + 1), "V_{w1}xV'_{w1}",
                    "so" + std::to_string(2 * (n + m) + 1), "V_{w1}", "binomial(" + std::to_string(n + m) + "," +
                                                                        std::to_string(m) + ")"});
  rows.push_back({outer_grading(OuterFamily::e6), "sp8", "V_{w4}", "f4", "V_{w1}", "3"});
  for (int n = 2; n <= 3; ++n)
    rows.push_back({outer_grading(OuterFamily::sl_odd, n), "-", "-", "so" + std::to_string(2 * n + 1), "V_{2w1}",
                    "-"});
  std::ostringstream out;
  out << "| g | g0 | g1 | g0bar | g1bar | #W0bar/W0 printed | computed | Spin(g1) |\n"
         "|---|---|---|---|---|---|---|---|\n";
  for (const auto& row : rows) {
    std::string spin;
    std::string count = "-";
    try {
      const SpinG1Result s = spin_g1(row.gr, cfg.budget);
      count = std::to_string(s.coset_count);
      for (const auto& x : s.summands) spin += (spin.empty() ? "" : " + ") + ("V(" + weight_label(row.gr.sub(), x.lambda) + ")");
      if (s.scalar != 1) spin = std::to_string(s.scalar) + " x (" + spin + ")";
    } catch (const BudgetExceeded& e) {
      spin = std::string("skipped: ") + e.what();
    }
    out << "| " << row.gr.g_label << " | " << row.g0 << " | " << row.g1 << " | " << row.gbar0 << " | " << row.gbar1
        << " | " << row.printed << " | " << count << " | " << spin << " |\n";
  }
  return out.str();
}

}  // namespace spinrep
