#include "spinrep/spinmod.hpp"

#include "lp.hpp"
#include "spinrep/error.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <unordered_set>

namespace spinrep {

std::string to_string(Orthogonality o) {
  switch (o) {
    case Orthogonality::orthogonal: return "orthogonal";
    case Orthogonality::symplectic: return "symplectic";
    case Orthogonality::neither: return "neither";
  }
  return "?";
}

namespace {

// Coefficient of e^nu in a * b without forming the product.
std::int64_t product_coefficient(const Character& a, const Character& b, const Weight& nu) {
  std::int64_t s = 0;
  const Character& small = a.size() <= b.size() ? a : b;
  const Character& big = a.size() <= b.size() ? b : a;
  for (const auto& [mu, c] : small.terms()) {
    std::int64_t d = big.coefficient(nu - mu);
    if (d) s += c * d;
  }
  return s;
}

std::vector<std::int64_t> form_row(const RootSystem& amb, const Weight& v) {
  RatVector r(amb.dim());
  for (int j = 0; j < amb.dim(); ++j) r[j] = amb.form(Weight::unit(amb.dim(), j), v);
  const std::int64_t l = lcm_of_denominators(r);
  std::vector<std::int64_t> out(amb.dim());
  for (int j = 0; j < amb.dim(); ++j) out[j] = (r[j] * l).numerator();
  return out;
}

std::int64_t dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return s > 0 ? 1 : s < 0 ? -1 : 0;
}

Character times_cosh(const Character& ch, const Weight& mu) {
  if (!mu.is_integral()) throw InvalidArgument("weight " + mu.str() + " is not integral; cannot halve");
  const Weight h = mu.half();
  Character r = ch.shifted(h);
  r += ch.shifted(-h);
  return r;
}

}  // namespace

OrthogonalityInfo orthogonality(const Subsystem& g, const Weight& lambda, const Budget& budget) {
  OrthogonalityInfo info;
  info.self_dual = g.dominant_conjugate(-lambda) == lambda;
  if (!info.self_dual) return info;
  const Character chi = freudenthal_character(g, lambda, budget);
  auto W = g.weyl_group(budget);
  const Weight rho = g.rho();
  std::int64_t sym = 0, alt = 0;
  for (std::size_t w = 0; w < W->size(); ++w) {
    const Weight nu = W->rho_image(w) - rho;
    const std::int64_t sq = product_coefficient(chi, chi, nu);
    const std::int64_t ad = nu.is_integral() ? chi.coefficient(nu.half()) : 0;
    // S^2 = (chi^2 + psi^2 chi) / 2, wedge^2 = (chi^2 - psi^2 chi) / 2
    sym += W->sign(w) * (sq + ad) / 2;
    alt += W->sign(w) * (sq - ad) / 2;
  }
  info.symmetric_invariants = sym;
  info.alternating_invariants = alt;
  if (sym - alt == 1) info.type = Orthogonality::orthogonal;
  else if (sym - alt == -1) info.type = Orthogonality::symplectic;
  else throw VerificationFailure("self-dual irreducible module with invariant difference " +
                                 std::to_string(sym - alt));
  return info;
}

Character spin0_character(const WeightSystem& ws, const TermOrder& half_order, const Budget& budget) {
  if (!ws.is_self_dual()) throw InvalidArgument("spin character needs a self-dual weight system");
  Character r = Character::one(ws.ambient_ptr());
  for (const auto& [mu, m] : ws.positive_half(half_order)) {
    for (std::int64_t i = 0; i < m; ++i) {
      r = times_cosh(r, mu);
      if (r.size() > budget.terms) throw BudgetExceeded("terms", r.size(), budget.terms);
    }
  }
  return r;
}

Character spin0_character(const WeightSystem& ws, const Budget& budget) {
  return spin0_character(ws, ws.ambient().order(), budget);
}

Character SpinCharacter::full() const {
  Character c = reduced;
  c *= scalar;
  return c;
}

SpinCharacter spin_character(const WeightSystem& ws, const Budget& budget) {
  const std::int64_t m0 = ws.zero_multiplicity();
  if (m0 / 2 >= 62) throw InvalidArgument("zero-weight multiplicity too large");
  return {std::int64_t{1} << (m0 / 2), spin0_character(ws, budget)};
}

std::vector<DominantHalf> enumerate_dominant_halves(const WeightSystem& ws, const Subsystem& acting,
                                                    const Budget& budget) {
  if (!ws.is_self_dual()) throw InvalidArgument("dominant halves need a self-dual weight system");
  const RootSystem& amb = ws.ambient();
  const auto hyper = ws.positive_half(amb.order());
  if (hyper.size() > budget.hyperplanes)
    throw BudgetExceeded("hyperplanes", hyper.size(), budget.hyperplanes);
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& b : acting.simple_roots()) rows.push_back(form_row(amb, b));
  std::vector<std::vector<std::int64_t>> hrow;
  for (const auto& [mu, m] : hyper) hrow.push_back(form_row(amb, mu));

  std::vector<DominantHalf> out;
  std::vector<int> signs(hyper.size(), 0);
  auto start = detail::strictly_feasible(rows);
  if (!start) throw Error("open chamber of " + acting.type_label() + " is empty");
  std::vector<std::int64_t> witness0 = start->empty() ? std::vector<std::int64_t>(amb.dim(), 0) : *start;

  std::function<void(std::size_t, const std::vector<std::int64_t>&)> dfs =
      [&](std::size_t i, const std::vector<std::int64_t>& x) {
        if (i == hyper.size()) {
          DominantHalf h;
          Weight sum = amb.zero();
          for (std::size_t k = 0; k < hyper.size(); ++k) {
            Weight w = signs[k] > 0 ? hyper[k].first : -hyper[k].first;
            h.half.push_back({w, hyper[k].second});
            sum += w * static_cast<int>(hyper[k].second);
          }
          h.witness = x;
          Weight ext(amb.dim());
          for (int j = 0; j < amb.dim(); ++j) ext.set_twice(j, sum.twice(j) / 2);
          h.extreme = ext;
          out.push_back(std::move(h));
          return;
        }
        const std::int64_t v = dot(hrow[i], x);
        for (int s : {1, -1}) {
          signs[i] = s;
          if (s * v > 0) {
            dfs(i + 1, x);
            continue;
          }
          std::vector<std::vector<std::int64_t>> cons = rows;
          for (std::size_t k = 0; k <= i; ++k) {
            std::vector<std::int64_t> r = hrow[k];
            if (signs[k] < 0)
              for (auto& e : r) e = -e;
            cons.push_back(r);
          }
          auto y = detail::strictly_feasible(cons);
          if (y) dfs(i + 1, *y);
        }
        signs[i] = 0;
      };
  dfs(0, witness0);

  // Certify each witness exactly.
  for (const auto& h : out) {
    Weight nu = Weight::from_twice(std::vector<int>(h.witness.begin(), h.witness.end()));
    for (const auto& b : acting.simple_roots())
      if (amb.form(nu, b) <= 0) throw Error("chamber witness outside the open chamber");
    for (const auto& [mu, m] : h.half)
      if (amb.form(nu, mu) <= 0) throw Error("chamber witness does not certify its half");
  }
  const TermOrder& o = acting.order();
  std::sort(out.begin(), out.end(),
            [&](const DominantHalf& a, const DominantHalf& b) { return o.higher(a.extreme, b.extreme); });
  return out;
}

std::vector<Weight> extreme_weights(const WeightSystem& ws, const Subsystem& acting, const Budget& budget) {
  std::vector<Weight> out;
  for (const auto& h : enumerate_dominant_halves(ws, acting, budget)) out.push_back(h.extreme);
  return out;
}

CoprimaryResult is_coprimary(const WeightSystem& ws, const Subsystem& acting, const Budget& budget) {
  Decomposition d = decompose(spin0_character(ws, budget), acting, budget);
  const bool ok = d.count() == 1 && d.summands[0].multiplicity == 1;
  return {ok, std::move(d)};
}

GenerationResult is_decomposably_generated(const WeightSystem& ws, const Subsystem& acting,
                                           const Budget& budget) {
  GenerationResult r;
  r.spin0 = decompose(spin0_character(ws, budget), acting, budget);
  r.extreme = extreme_weights(ws, acting, budget);
  bool ok = r.spin0.multiplicity_free() && r.spin0.count() == r.extreme.size();
  if (ok)
    for (const auto& e : r.extreme)
      if (r.spin0.multiplicity(e) != 1) ok = false;
  r.decomposably_generated = ok;
  return r;
}

bool weights_on_root_lines(const WeightSystem& ws, const Subsystem& acting) {
  for (const auto& [mu, m] : ws.nonzero()) {
    bool found = false;
    for (const auto& a : acting.positive_roots()) {
      int j = 0;
      while (a.twice(j) == 0) ++j;
      if (mu.twice(j) % a.twice(j) != 0) continue;
      if (mu == a * (mu.twice(j) / a.twice(j))) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Weight> dominant_weights(const Subsystem& sub, const Weight& lambda, const Budget& budget) {
  if (!sub.is_integral_dominant(lambda))
    throw InvalidArgument(lambda.str() + " is not dominant integral for " + sub.type_label());
  std::vector<Weight> dom{lambda};
  std::unordered_set<Weight, WeightHash> seen{lambda};
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (const auto& a : sub.positive_roots()) {
      Weight nu = dom[i] - a;
      if (sub.is_dominant(nu) && seen.insert(nu).second) {
        dom.push_back(nu);
        if (dom.size() > budget.terms) throw BudgetExceeded("terms", dom.size(), budget.terms);
      }
    }
  const TermOrder& o = sub.order();
  std::sort(dom.begin(), dom.end(), [&](const Weight& a, const Weight& b) { return o.higher(a, b); });
  return dom;
}

std::vector<std::pair<std::string, std::vector<int>>> ClassificationReport::coprimary() const {
  std::vector<std::pair<std::string, std::vector<int>>> out;
  for (const auto& c : candidates)
    if (c.stage == "coprimary") out.push_back({c.type, c.labels});
  return out;
}

namespace {

std::vector<std::pair<char, int>> sweep_types(int rank_bound) {
  std::vector<std::pair<char, int>> t;
  for (int n = 1; n <= rank_bound; ++n) t.push_back({'A', n});
  for (int n = 2; n <= rank_bound; ++n) t.push_back({'B', n});
  for (int n = 2; n <= rank_bound; ++n) t.push_back({'C', n});
  for (int n = 4; n <= rank_bound; ++n) t.push_back({'D', n});
  for (int n = 6; n <= std::min(rank_bound, 8); ++n) t.push_back({'E', n});
  if (rank_bound >= 4) t.push_back({'F', 4});
  if (rank_bound >= 2) t.push_back({'G', 2});
  return t;
}

void label_vectors(int rank, int height, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == rank) {
    int s = std::accumulate(cur.begin(), cur.end(), 0);
    if (s > 0) out.push_back(cur);
    return;
  }
  int used = std::accumulate(cur.begin(), cur.end(), 0);
  for (int v = 0; v + used <= height; ++v) {
    cur.push_back(v);
    label_vectors(rank, height, cur, out);
    cur.pop_back();
  }
}

CandidateReport examine(const Subsystem& g, const std::vector<int>& labels, const Budget& budget) {
  CandidateReport r;
  r.type = g.ambient().label();
  r.labels = labels;
  const Weight lambda = g.ambient().weight(labels);
  try {
    if (g.dominant_conjugate(-lambda) != lambda) {
      r.stage = "not-self-dual";
      return r;
    }
    for (const auto& c : g.ambient().root_coordinates(lambda))
      if (!c.is_integer()) {
        r.stage = "no-zero-weight";
        return r;
      }
    for (const auto& mu : dominant_weights(g, lambda, budget)) {
      if (mu.is_zero()) continue;
      WeightSystem one(g.ambient_ptr());
      one.add(mu, 1);
      if (!weights_on_root_lines(one, g)) {
        r.stage = "off-root-lines";
        return r;
      }
    }
    r.orthogonality = orthogonality_type(g, lambda, budget);
    if (*r.orthogonality != Orthogonality::orthogonal) {
      r.stage = "not-orthogonal";
      return r;
    }
    WeightSystem ws = WeightSystem::of_module(g, lambda, budget);
    auto cp = is_coprimary(ws, g, budget);
    r.spin0 = cp.spin0;
    r.extreme = extreme_weights(ws, g, budget);
    r.stage = cp.coprimary ? "coprimary" : "not-coprimary";
  } catch (const BudgetExceeded& e) {
    r.stage = "skipped";
    r.note = e.what();
  }
  return r;
}

}  // namespace

ClassificationReport classify_coprimary(int rank_bound, int height_bound, const Budget& budget, int jobs) {
  if (rank_bound < 1 || height_bound < 1) throw InvalidArgument("sweep bounds must be positive");
  ClassificationReport report{rank_bound, height_bound, {}, 0};
  struct Task {
    std::shared_ptr<Subsystem> g;
    std::vector<int> labels;
  };
  std::vector<Task> tasks;
  for (auto [f, n] : sweep_types(rank_bound)) {
    auto g = std::make_shared<Subsystem>(Subsystem::full(RootSystem::simple(f, n)));
    std::vector<std::vector<int>> lv;
    std::vector<int> cur;
    label_vectors(n, height_bound, cur, lv);
    for (auto& l : lv) tasks.push_back({g, l});
  }
  report.examined = tasks.size();
  report.candidates.resize(tasks.size());
  jobs = std::max(1, jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++)
      report.candidates[i] = examine(*tasks[i].g, tasks[i].labels, budget);
  };
  std::vector<std::future<void>> pool;
  for (int j = 1; j < jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& f : pool) f.get();
  return report;
}

}  // namespace spinrep
