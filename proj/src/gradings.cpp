#include "spinrep/gradings.hpp"

#include "spinrep/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace spinrep {

std::string to_string(GradingKind k) {
  switch (k) {
    case GradingKind::inner: return "inner";
    case GradingKind::outer: return "outer";
    case GradingKind::adjoint: return "adjoint";
  }
  return "?";
}

Weight Z2Grading::rho1() const {
  Weight s = ambient->zero();
  for (const auto& [mu, m] : g1.positive_half(ambient->order())) s += mu * static_cast<int>(m);
  Weight h(ambient->dim());
  for (int i = 0; i < ambient->dim(); ++i) {
    if (s.twice(i) % 2) throw VerificationFailure("rho1 is not a half-integral weight");
    h.set_twice(i, s.twice(i) / 2);
  }
  return h;
}

namespace {

int theta_coefficient(const RootSystem& rs, int pivot) {
  const auto c = rs.root_coordinates(rs.special_elements().theta);
  return static_cast<int>(c.at(pivot).numerator());
}

Weight eps(const RootSystem& rs, std::vector<Rational> v) {
  v.resize(rs.epsilon_dim(), Rational(0));
  return rs.from_epsilon(v);
}

WeightSystem roots_with(const RootSystemPtr& rs, const std::function<bool(const Weight&)>& keep) {
  WeightSystem ws(rs);
  for (const auto& a : rs->positive_roots())
    if (keep(a)) {
      ws.add(a, 1);
      ws.add(-a, 1);
    }
  return ws;
}

Character times_binomial(const Character& ch, const Weight& mu, int sign) {
  const Weight h = mu.half();
  Character r = ch.shifted(h);
  Character t = ch.shifted(-h);
  if (sign > 0) r += t;
  else r -= t;
  return r;
}

// prod_{a in sub+} (e^{a/2} - e^{-a/2}) prod_{mu in half} (e^{mu/2} + e^{-mu/2})^{m(mu)}
Character denominator_times_spin(const RootSystemPtr& amb, const std::vector<Weight>& roots,
                                 const std::vector<std::pair<Weight, std::int64_t>>& half, const Budget& budget) {
  Character r = Character::one(amb);
  auto guard = [&] {
    if (r.size() > budget.terms) throw BudgetExceeded("terms", r.size(), budget.terms);
  };
  for (const auto& a : roots) {
    r = times_binomial(r, a, -1);
    guard();
  }
  for (const auto& [mu, m] : half)
    for (std::int64_t i = 0; i < m; ++i) {
      r = times_binomial(r, mu, 1);
      guard();
    }
  return r;
}

std::string inner_name(const RootSystemPtr& rs, int pivot, const std::vector<int>& all_pivots) {
  const std::string label = Subsystem::even_at(rs, pivot).reductive_label();
  int same = 0;
  for (int p : all_pivots)
    if (Subsystem::even_at(rs, p).reductive_label() == label) ++same;
  std::string name = rs->label() + "/" + label;
  if (same > 1) name += "@" + std::to_string(rs->bourbaki_index(pivot) + 1);
  return name;
}

std::size_t simple_root_count(char f, int n) {
  switch (f) {
    case 'A': return static_cast<std::size_t>(n) * (n + 1);
    case 'B':
    case 'C': return 2 * static_cast<std::size_t>(n) * n;
    case 'D': return 2 * static_cast<std::size_t>(n) * (n - 1);
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
  }
  return 0;
}

}  // namespace

std::vector<int> involution_pivots(const RootSystem& rs) {
  if (!rs.is_simple()) throw InvalidArgument("involution pivots need a simple root system");
  std::vector<int> out;
  for (int i = 0; i < rs.rank(); ++i) {
    const int c = theta_coefficient(rs, i);
    if (c == 1 || c == 2) out.push_back(i);
  }
  return out;
}

Z2Grading inner_grading(RootSystemPtr rs, int pivot) {
  if (!rs->is_simple()) throw InvalidArgument("inner gradings are built for simple root systems");
  if (pivot < 0 || pivot >= rs->rank()) throw InvalidArgument("pivot out of range");
  const int mark = theta_coefficient(*rs, pivot);
  if (mark > 2)
    throw InvalidArgument("pivot " + std::to_string(rs->bourbaki_index(pivot) + 1) + " of " + rs->label() +
                          " has coefficient " + std::to_string(mark) + " in the highest root; no involution");
  Z2Grading g;
  g.kind = GradingKind::inner;
  g.ambient = rs;
  g.big = Subsystem::full(rs);
  g.g0 = Subsystem::even_at(rs, pivot);
  g.pivot = pivot;
  g.name = inner_name(rs, pivot, involution_pivots(*rs));
  g.g_label = rs->label();
  g.g_roots = rs->num_roots();
  g.g_rank = rs->rank();
  g.g1 = roots_with(rs, [&](const Weight& a) {
    return rs->root_coordinates(a)[pivot].numerator() % 2 != 0;
  });
  return g;
}

Z2Grading outer_grading(OuterFamily family, int n, int m) {
  Z2Grading g;
  g.kind = GradingKind::outer;
  std::vector<Weight> d0;
  Weight top;
  auto keep_positive = [&](const std::function<bool(const Weight&)>& pred) {
    for (const auto& a : g.ambient->positive_roots())
      if (pred(a)) d0.push_back(a);
  };
  switch (family) {
    case OuterFamily::sl_even: {
      if (n < 2) throw InvalidArgument("sl(2n) > so(2n) needs n >= 2");
      g.ambient = RootSystem::simple('C', n);
      keep_positive([&](const Weight& a) { return !g.ambient->is_long(a); });
      top = eps(*g.ambient, {2});
      g.name = "SL" + std::to_string(2 * n) + "/SO" + std::to_string(2 * n);
      g.g_label = "sl" + std::to_string(2 * n);
      g.params = {n};
      g.g_roots = simple_root_count('A', 2 * n - 1);
      g.g_rank = 2 * n - 1;
      break;
    }
    case OuterFamily::so_even: {
      if (n < 1 || m < 1) throw InvalidArgument("so(2n+2m+2) > so(2n+1) + so(2m+1) needs n, m >= 1");
      const int N = n + m;
      g.ambient = RootSystem::simple('B', N);
      keep_positive([&](const Weight& a) {
        const auto e = g.ambient->to_epsilon(a);
        bool low = false, high = false;
        for (int i = 0; i < N; ++i)
          if (e[i] != Rational(0)) (i < n ? low : high) = true;
        return !(low && high);
      });
      std::vector<Rational> v(N, Rational(0));
      v[0] = 1;
      v[n] = 1;
      top = g.ambient->from_epsilon(v);
      g.name = "SO" + std::to_string(2 * N + 2) + "/SO" + std::to_string(2 * n + 1) + "xSO" +
               std::to_string(2 * m + 1);
      g.g_label = "so" + std::to_string(2 * N + 2);
      g.params = {n, m};
      g.g_roots = simple_root_count('D', N + 1);
      g.g_rank = N + 1;
      break;
    }
    case OuterFamily::e6: {
      g.ambient = RootSystem::simple('F', 4);
      keep_positive([&](const Weight& a) {
        if (!g.ambient->is_long(a)) return true;
        const auto e = g.ambient->to_epsilon(a);
        const bool first = e[0] != Rational(0) || e[1] != Rational(0);
        const bool second = e[2] != Rational(0) || e[3] != Rational(0);
        return first != second;  // +-e1 +- e2 or +-e3 +- e4
      });
      top = eps(*g.ambient, {1, 0, 1, 0});
      g.name = "E6/C4";
      g.g_label = "e6";
      g.g_roots = simple_root_count('E', 6);
      g.g_rank = 6;
      break;
    }
    case OuterFamily::sl_odd: {
      if (n < 2) throw InvalidArgument("sl(2n+1) > so(2n+1) needs n >= 2");
      g.ambient = RootSystem::simple('B', n);
      d0.assign(g.ambient->positive_roots().begin(), g.ambient->positive_roots().end());
      top = eps(*g.ambient, {2});
      g.name = "SL" + std::to_string(2 * n + 1) + "/SO" + std::to_string(2 * n + 1);
      g.g_label = "sl" + std::to_string(2 * n + 1);
      g.params = {n};
      g.form_scale = Rational(1, 2);
      g.g_roots = simple_root_count('A', 2 * n);
      g.g_rank = 2 * n;
      break;
    }
  }
  g.big = Subsystem::full(g.ambient);
  g.g0 = Subsystem::from_roots(g.ambient, d0);
  g.g1 = WeightSystem::of_module(*g.g0, top);
  return g;
}

Z2Grading adjoint_grading(RootSystemPtr h) {
  Z2Grading g;
  g.kind = GradingKind::adjoint;
  g.ambient = h;
  g.big = Subsystem::full(h);
  g.g0 = Subsystem::full(h);
  g.g1 = roots_with(h, [](const Weight&) { return true; });
  g.g1.add(h->zero(), h->rank());
  g.form_scale = Rational(1, 2);
  g.name = "adjoint:" + h->label();
  g.g_label = h->label() + "+" + h->label();
  g.g_roots = 2 * h->num_roots();
  g.g_rank = 2 * h->rank();
  return g;
}

std::vector<Z2Grading> inner_catalog(int rank_bound) {
  std::vector<std::pair<char, int>> types;
  for (int n = 1; n <= rank_bound; ++n) types.push_back({'A', n});
  for (int n = 2; n <= rank_bound; ++n) types.push_back({'B', n});
  for (int n = 3; n <= rank_bound; ++n) types.push_back({'C', n});
  for (int n = 4; n <= rank_bound; ++n) types.push_back({'D', n});
  for (int n = 6; n <= std::min(rank_bound, 8); ++n) types.push_back({'E', n});
  if (rank_bound >= 4) types.push_back({'F', 4});
  if (rank_bound >= 2) types.push_back({'G', 2});
  std::vector<Z2Grading> out;
  for (auto [f, n] : types) {
    auto rs = RootSystem::simple(f, n);
    for (int p : involution_pivots(*rs)) out.push_back(inner_grading(rs, p));
  }
  return out;
}

std::vector<Z2Grading> outer_catalog() {
  return {outer_grading(OuterFamily::sl_even, 2),    outer_grading(OuterFamily::sl_even, 3),
          outer_grading(OuterFamily::so_even, 1, 1), outer_grading(OuterFamily::so_even, 2, 1),
          outer_grading(OuterFamily::e6),            outer_grading(OuterFamily::sl_odd, 2),
          outer_grading(OuterFamily::sl_odd, 3)};
}

Z2Grading grading_by_name(std::string_view name) {
  std::string s(name);
  std::string up = s;
  for (auto& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (up.rfind("ADJOINT:", 0) == 0) return adjoint_grading(RootSystem::parse(s.substr(8)));
  if (up == "E6/C4" || up == "E6/SP8") return outer_grading(OuterFamily::e6);
  auto number_after = [&](std::size_t pos, std::size_t* end) {
    std::size_t e = pos;
    while (e < up.size() && std::isdigit(static_cast<unsigned char>(up[e]))) ++e;
    if (e == pos) throw InvalidArgument("cannot parse grading name '" + s + "'");
    *end = e;
    return std::stoi(up.substr(pos, e - pos));
  };
  if (up.rfind("SL", 0) == 0) {
    std::size_t e;
    const int k = number_after(2, &e);
    if (up.substr(e) != "/SO" + std::to_string(k)) throw InvalidArgument("unknown grading '" + s + "'");
    return k % 2 == 0 ? outer_grading(OuterFamily::sl_even, k / 2) : outer_grading(OuterFamily::sl_odd, k / 2);
  }
  if (up.rfind("SO", 0) == 0) {
    std::size_t e1, e2, e3;
    const int a = number_after(2, &e1);
    if (up.compare(e1, 3, "/SO") != 0) throw InvalidArgument("unknown grading '" + s + "'");
    const int b = number_after(e1 + 3, &e2);
    if (up.compare(e2, 3, "XSO") != 0) throw InvalidArgument("unknown grading '" + s + "'");
    const int c = number_after(e2 + 3, &e3);
    if (e3 != up.size() || b % 2 == 0 || c % 2 == 0 || a != b + c)
      throw InvalidArgument("unknown grading '" + s + "'");
    return outer_grading(OuterFamily::so_even, (b - 1) / 2, (c - 1) / 2);
  }
  const auto slash = s.find('/');
  if (slash == std::string::npos) throw InvalidArgument("grading name needs a '/': '" + s + "'");
  auto rs = RootSystem::parse(s.substr(0, slash));
  if (!rs->is_simple()) throw InvalidArgument("inner gradings need a simple type: '" + s + "'");
  std::vector<Z2Grading> hits;
  for (int p : involution_pivots(*rs)) {
    auto g = inner_grading(rs, p);
    const std::string base = g.name.substr(0, g.name.find('@'));
    if (g.name == s || base == s) hits.push_back(std::move(g));
  }
  if (hits.empty()) throw InvalidArgument("no inner grading named '" + s + "'");
  if (hits.size() > 1) throw InvalidArgument("ambiguous grading '" + s + "'; add @k with a Bourbaki pivot");
  return std::move(hits.front());
}

void validate_grading(const Z2Grading& gr) {
  const RootSystem& rs = *gr.ambient;
  const Subsystem& g0 = gr.sub();
  auto fail = [&](const std::string& what) { throw VerificationFailure(gr.name + ": " + what); };
  if (!gr.g1.is_self_dual()) fail("g1 is not self-dual");
  // root bookkeeping: #Delta = #Delta0 + #Delta1
  std::int64_t n1 = gr.g1.dimension() - gr.g1.zero_multiplicity();
  if (2 * g0.positive_roots().size() + static_cast<std::size_t>(n1) != gr.g_roots) fail("root count mismatch");
  // g0 always contains a Cartan subalgebra of the ambient weight space
  if (gr.g1.zero_multiplicity() != gr.g_rank - rs.dim()) fail("zero weight multiplicity differs from rk g - rk g0");
  switch (gr.kind) {
    case GradingKind::inner: {
      // every root is in exactly one part, and the parity rule holds
      auto parity = [&](const Weight& a) { return g0.contains(a) ? 0 : 1; };
      for (const auto& a : rs.positive_roots()) {
        const bool in0 = g0.contains(a), in1 = gr.g1.multiplicity(a) == 1;
        if (in0 == in1) fail("roots are not partitioned");
      }
      std::vector<Weight> all;
      for (const auto& a : rs.positive_roots()) {
        all.push_back(a);
        all.push_back(-a);
      }
      for (const auto& a : all)
        for (const auto& b : all) {
          const Weight c = a + b;
          if (rs.is_root(c) && parity(c) != (parity(a) + parity(b)) % 2) fail("parity rule violated");
        }
      if (gr.rho() != rs.rho()) fail("rho != rho0 + rho1");
      break;
    }
    case GradingKind::outer: {
      const auto sp = rs.special_elements();
      if (gr.form_scale == Rational(1, 2)) {
        // isolated diagram case: Delta1 = Delta + 2 Delta_s
        WeightSystem expect = roots_with(gr.ambient, [](const Weight&) { return true; });
        for (const auto& a : rs.positive_roots())
          if (!rs.is_long(a)) {
            expect.add(a * 2, 1);
            expect.add(-a * 2, 1);
          }
        for (const auto& [mu, m] : gr.g1.nonzero())
          if (expect.multiplicity(mu) != m) fail("g1 weights differ from Delta + 2 Delta_s");
        if (expect.dimension() != n1) fail("g1 weights differ from Delta + 2 Delta_s");
        break;
      }
      // diagram partner: Delta1 = (Delta_bar0 \ Delta0) + (Delta_bar0)_s and (Delta0)_s = (Delta_bar0)_s
      WeightSystem expect = roots_with(gr.ambient, [&](const Weight& a) { return !g0.contains(a); });
      for (const auto& a : rs.positive_roots())
        if (!rs.is_long(a)) {
          if (!g0.contains(a)) fail("a short root is missing from Delta0");
          expect.add(a, 1);
          expect.add(-a, 1);
        }
      for (const auto& [mu, m] : gr.g1.nonzero())
        if (expect.multiplicity(mu) != m) fail("g1 weights differ from the diagram partner data");
      if (expect.dimension() != n1) fail("g1 weights differ from the diagram partner data");
      if (gr.rho() != sp.rho + sp.rho_s) fail("rho0 + rho1 differs from rho_bar0 + (rho_bar0)_s");
      break;
    }
    case GradingKind::adjoint:
      if (gr.rho() != rs.rho() * 2) fail("rho0 + rho1 differs from 2 rho");
      break;
  }
}

SpinG1Result spin_g1(const Z2Grading& gr, const Budget& budget) {
  const Subsystem& big = gr.whole();
  const Subsystem& g0 = gr.sub();
  const RootSystem& amb = *gr.ambient;
  auto W = big.weyl_group(budget);
  auto W0 = g0.weyl_group(budget);
  SpinG1Result r;
  const std::int64_t m0 = gr.zero_multiplicity();
  r.scalar = std::int64_t{1} << (m0 / 2);
  r.coset_count = W->size() / W0->size();
  const Weight rho = gr.rho(), rho0 = gr.rho0();
  for (std::size_t w : minimal_coset_representatives(big, g0, budget)) {
    SpinSummand s;
    s.w = w;
    for (int i : W->reduced_word(w)) s.word.push_back(amb.bourbaki_index(i) + 1);
    if (amb.has_epsilon() && amb.epsilon_dim() == amb.dim())  // e_i are weights
      for (int i = 0; i < amb.epsilon_dim(); ++i) {
        std::vector<Rational> e(amb.epsilon_dim(), Rational(0));
        e[i] = 1;
        s.action.push_back(amb.to_epsilon(W->apply(w, amb.from_epsilon(e))));
      }
    s.lambda = W->apply(W->inverse(w), rho) - rho0;
    if (!g0.is_integral_dominant(s.lambda))
      throw VerificationFailure(gr.name + ": " + s.lambda.str() + " is not dominant for g0");
    s.dim = weyl_dimension(g0, s.lambda);
    r.summands.push_back(std::move(s));
  }
  const TermOrder& o = g0.order();
  std::sort(r.summands.begin(), r.summands.end(),
            [&](const SpinSummand& a, const SpinSummand& b) { return o.higher(a.lambda, b.lambda); });
  for (std::size_t i = 1; i < r.summands.size(); ++i)
    if (r.summands[i].lambda == r.summands[i - 1].lambda)
      throw VerificationFailure(gr.name + ": two cosets give the same weight");

  r.direct = decompose(spin0_character(gr.g1, budget), g0, budget);
  r.multiplicity_free = r.direct.multiplicity_free();
  r.routes_agree = r.direct.count() == r.summands.size() && r.multiplicity_free;
  if (r.routes_agree)
    for (const auto& s : r.summands)
      if (r.direct.multiplicity(s.lambda) != 1) r.routes_agree = false;
  if (!r.routes_agree) throw VerificationFailure(gr.name + ": coset formula and direct decomposition differ");
  BigInt total = 0;
  for (const auto& s : r.summands) total += s.dim;
  const std::int64_t half = (gr.g1.dimension() - m0) / 2;
  if (total != BigInt(1) << half) throw VerificationFailure(gr.name + ": Spin0 has the wrong dimension");
  return r;
}

IdentityResult verify_tau_identity(const Subsystem& big, const Subsystem& sub, const WeightSystem& delta1,
                                   const Weight& rho, const Budget& budget) {
  auto W = big.weyl_group(budget);
  Character lhs(big.ambient_ptr());
  for (std::size_t w = 0; w < W->size(); ++w) lhs.add(W->apply(w, rho), coset_sign(big, sub, w, budget));
  Character rhs = denominator_times_spin(big.ambient_ptr(), sub.positive_roots(),
                                         delta1.positive_half(big.ambient().order()), budget);
  return {lhs == rhs, lhs.size(), rhs.size()};
}

IdentityResult verify_tau_identity(const Z2Grading& gr, const Budget& budget) {
  return verify_tau_identity(gr.whole(), gr.sub(), gr.g1, gr.rho(), budget);
}

DualBridgeResult verify_dual_bridge(const Z2Grading& gr, const Budget& budget) {
  if (gr.kind != GradingKind::outer || gr.form_scale != Rational(1))
    throw InvalidArgument(gr.name + " has no diagram partner with a dual pair");
  const RootSystem& rs = *gr.ambient;
  const Subsystem dual_big = dual_root_system(gr.whole());
  const Subsystem dual_sub = dual_root_system(gr.sub());
  DualBridgeResult r;
  r.rho_matches = dual_big.rho() == gr.rho();
  WeightSystem long_part(gr.ambient);
  for (const auto& [mu, m] : gr.g1.nonzero())
    if (rs.is_root(mu) && rs.is_long(mu)) long_part.add(mu, m);
  r.dual_identity = verify_tau_identity(dual_big, dual_sub, long_part, dual_big.rho(), budget).holds;
  const Character a = denominator_times_spin(gr.ambient, dual_sub.positive_roots(),
                                             long_part.positive_half(rs.order()), budget);
  const Character b = denominator_times_spin(gr.ambient, gr.sub().positive_roots(),
                                             gr.g1.positive_half(rs.order()), budget);
  r.rewritten = a == b;
  return r;
}

CasimirResult casimir_check(const Z2Grading& gr, const SpinG1Result& spin) {
  const RootSystem& rs = *gr.ambient;
  const Weight rho = gr.rho(), rho0 = gr.rho0();
  CasimirResult c;
  c.value = gr.form_scale * (rs.form(rho, rho) - rs.form(rho0, rho0));
  for (const auto& s : spin.summands) {
    const Rational v = gr.form_scale * rs.form(s.lambda + rho0 * 2, s.lambda);
    c.per_summand.push_back(v);
    if (v != c.value)
      throw VerificationFailure(gr.name + ": Casimir value " + to_string(v) + " at " + s.lambda.str() +
                                " differs from " + to_string(c.value));
  }
  return c;
}

HermitianResult verify_hermitian(const Z2Grading& gr, const Budget& budget) {
  if (gr.kind != GradingKind::inner || theta_coefficient(*gr.ambient, gr.pivot) != 1)
    throw InvalidArgument(gr.name + " is not of Hermitian type");
  const RootSystem& rs = *gr.ambient;
  WeightSystem w(gr.ambient);
  for (const auto& a : rs.positive_roots())
    if (!gr.sub().contains(a)) w.add(a, 1);
  Character ext(gr.ambient);
  for (const auto& c : exterior_powers_by_product(w, static_cast<int>(w.dimension()), budget)) ext += c;
  HermitianResult r;
  const auto d = decompose(ext, gr.sub(), budget);
  const auto dd = decompose(ext.dual(), gr.sub(), budget);
  r.multiplicity_free = d.multiplicity_free() && dd.multiplicity_free();
  auto W0 = gr.sub().weyl_group(budget);
  for (const auto& s : d.summands) {
    r.exterior_highest.push_back(s.highest);
    r.exterior_lowest.push_back(W0->apply(W0->longest(), s.highest));
  }
  for (const auto& s : dd.summands) r.dual_highest.push_back(s.highest);
  auto W = gr.whole().weyl_group(budget);
  std::vector<Weight> negated;
  for (std::size_t u : minimal_coset_representatives(gr.whole(), gr.sub(), budget)) {
    r.predicted.push_back(rs.rho() - W->apply(W->inverse(u), rs.rho()));
    negated.push_back(-r.predicted.back());
  }
  auto key = [](const std::vector<Weight>& v) {
    std::set<std::string> s;
    for (const auto& x : v) s.insert(x.str());
    return std::pair(s, v.size());
  };
  r.lowest_match = key(r.exterior_lowest) == key(r.predicted);
  r.dual_match = key(r.dual_highest) == key(negated);
  r.holds = r.multiplicity_free && r.lowest_match && r.dual_match;
  return r;
}

EqualRankReport equal_rank_pair(RootSystemPtr rs, const std::vector<Weight>& generators, const Budget& budget) {
  const Subsystem h = Subsystem::generated_by(rs, generators);
  if (h.rank() != rs->rank()) throw InvalidArgument("subsystem " + h.type_label() + " is not of full rank");
  if (!h.is_closed()) throw InvalidArgument("subsystem " + h.type_label() + " is not closed in " + rs->label());
  const Subsystem g = Subsystem::full(rs);
  EqualRankReport r;
  r.label = rs->label() + "/" + h.type_label();
  WeightSystem m = roots_with(rs, [&](const Weight& a) { return !h.contains(a); });
  r.coset_count = g.weyl_group(budget)->size() / h.weyl_group(budget)->size();
  r.invariants = invariant_poincare(m, h, budget);
  r.symmetric = true;
  for (const auto& [a, x] : m.nonzero())
    for (const auto& [b, y] : m.nonzero())
      if (m.multiplicity(a + b) > 0) r.symmetric = false;
  auto gen = is_decomposably_generated(m, h, budget);
  r.spin0 = gen.spin0;
  r.extreme_count = gen.extreme.size();
  r.condition_ii = r.invariants.total() == static_cast<std::int64_t>(r.coset_count);
  r.condition_iii = gen.decomposably_generated;
  r.condition_iv = verify_tau_identity(g, h, m, rs->rho(), budget).holds;
  return r;
}

Character dual_system_quotient(const Subsystem& g, const Budget& budget) {
  const Subsystem d = dual_root_system(g);
  Character n = alternating_sum(g, d.rho(), budget);
  for (const auto& a : g.positive_roots()) n = divide_by_binomial(n, a, -1);
  return n;
}

}  // namespace spinrep
