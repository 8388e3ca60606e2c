#include "spinrep/weyl.hpp"

#include "spinrep/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace spinrep {

namespace {

// Sort key for roots of a subsystem: ambient height, then simple-root
// coefficients (larger first), matching the ambient's own positive-root order.
bool root_before(const RootSystem& amb, const Weight& a, const Weight& b) {
  RatVector ca = amb.root_coordinates(a), cb = amb.root_coordinates(b);
  Rational ha(0), hb(0);
  for (auto& c : ca) ha += c;
  for (auto& c : cb) hb += c;
  if (ha != hb) return ha < hb;
  if (ca != cb) return ca > cb;
  return b.lex_less(a);
}

std::vector<std::vector<int>> standard_cartan(char family, int rank) {
  static std::mutex m;
  static std::map<std::pair<char, int>, std::vector<std::vector<int>>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_pair(family, rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto c = RootSystem::simple(family, rank)->cartan_matrix();
  cache[key] = c;
  return c;
}

bool family_allows(char f, int r) {
  switch (f) {
    case 'A': return r >= 1;
    case 'B': return r >= 2;
    case 'C': return r >= 3;
    case 'D': return r >= 4;
    case 'E': return r >= 6 && r <= 8;
    case 'F': return r == 4;
    case 'G': return r == 2;
  }
  return false;
}

// Lexicographically smallest assignment of component nodes to the standard
// numbering of (family, rank), or empty when the diagram does not match.
std::vector<int> match_component(const std::vector<std::vector<int>>& cartan,
                                 const std::vector<int>& nodes, char family) {
  const int r = static_cast<int>(nodes.size());
  auto std_c = standard_cartan(family, r);
  std::vector<int> pi(r, -1);
  std::vector<bool> used(r, false);
  std::function<bool(int)> place = [&](int a) -> bool {
    if (a == r) return true;
    for (int k = 0; k < r; ++k) {
      if (used[k]) continue;
      const int node = nodes[k];
      if (cartan[node][node] != std_c[a][a]) continue;
      bool ok = true;
      for (int b = 0; b < a && ok; ++b) {
        const int other = nodes[pi[b]];
        ok = cartan[node][other] == std_c[a][b] && cartan[other][node] == std_c[b][a];
      }
      if (!ok) continue;
      used[k] = true;
      pi[a] = k;
      if (place(a + 1)) return true;
      used[k] = false;
    }
    return false;
  };
  if (!place(0)) return {};
  std::vector<int> out(r);
  for (int a = 0; a < r; ++a) out[a] = nodes[pi[a]];
  return out;
}

}  // namespace

std::uint64_t weyl_group_order(char family, int rank) {
  auto fact = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  switch (family) {
    case 'A': return fact(rank + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << rank) * fact(rank);
    case 'D': return (std::uint64_t{1} << (rank - 1)) * fact(rank);
    case 'E': return rank == 6 ? 51840ULL : rank == 7 ? 2903040ULL : 696729600ULL;
    case 'F': return 1152;
    case 'G': return 12;
    case 'T': return 1;
  }
  throw InvalidArgument(std::string("unknown family ") + family);
}

Subsystem Subsystem::full(RootSystemPtr ambient) {
  Subsystem s;
  s.ambient_ = std::move(ambient);
  s.finish(s.ambient_->positive_roots());
  return s;
}

Subsystem Subsystem::from_roots(RootSystemPtr ambient, std::vector<Weight> roots) {
  Subsystem s;
  s.ambient_ = std::move(ambient);
  std::vector<Weight> pos;
  std::unordered_map<Weight, int, WeightHash> seen;
  for (const auto& r : roots) {
    if (r.dim() != s.ambient_->dim()) throw InvalidArgument("root dimension mismatch");
    if (r.is_zero()) throw InvalidArgument("zero vector is not a root");
    Weight p = s.ambient_->order().positive(r) ? r : -r;
    if (seen.emplace(p, 1).second) pos.push_back(p);
  }
  s.finish(std::move(pos));
  return s;
}

Subsystem Subsystem::from_positive_indices(RootSystemPtr ambient, std::span<const int> indices) {
  std::vector<Weight> roots;
  for (int i : indices) {
    if (i < 0 || i >= static_cast<int>(ambient->positive_roots().size()))
      throw InvalidArgument("positive root index " + std::to_string(i) + " out of range");
    roots.push_back(ambient->positive_roots()[i]);
  }
  return from_roots(std::move(ambient), std::move(roots));
}

Subsystem Subsystem::generated_by(RootSystemPtr ambient, std::vector<Weight> generators) {
  const RootSystem& amb = *ambient;
  std::vector<Weight> all;
  std::unordered_map<Weight, int, WeightHash> seen;
  auto add = [&](const Weight& w) {
    if (seen.emplace(w, 1).second) all.push_back(w);
  };
  for (const auto& g : generators) {
    if (g.is_zero()) throw InvalidArgument("zero vector is not a root");
    add(g);
    add(-g);
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      Rational p = amb.coroot_pairing(all[j], all[i]);
      if (p.denominator() != 1) throw InvalidArgument("generators are not crystallographic");
      Weight img = all[j] - all[i] * static_cast<int>(p.numerator());
      add(img);
      if (all.size() > 2000) throw InvalidArgument("generators do not span a finite root system");
    }
  }
  return from_roots(std::move(ambient), std::move(all));
}

Subsystem Subsystem::even_at(RootSystemPtr ambient, int index) {
  if (index < 0 || index >= ambient->rank())
    throw InvalidArgument("simple root index " + std::to_string(index) + " out of range");
  std::vector<int> chosen;
  const auto& coeffs = ambient->positive_root_coefficients();
  for (std::size_t r = 0; r < coeffs.size(); ++r)
    if (coeffs[r][index] % 2 == 0) chosen.push_back(static_cast<int>(r));
  return from_positive_indices(std::move(ambient), chosen);
}

void Subsystem::finish(std::vector<Weight> positive) {
  const RootSystem& amb = *ambient_;
  cache_ = std::make_shared<Cache>();
  std::sort(positive.begin(), positive.end(),
            [&](const Weight& a, const Weight& b) { return root_before(amb, a, b); });
  positive_ = std::move(positive);
  for (std::size_t i = 0; i < positive_.size(); ++i) {
    index_[positive_[i]] = static_cast<int>(i) + 1;
    index_[-positive_[i]] = -(static_cast<int>(i) + 1);
  }
  // Root system axioms: crystallographic and closed under own reflections.
  for (const auto& a : positive_) {
    for (const auto& b : positive_) {
      Rational p = amb.coroot_pairing(b, a);
      if (p.denominator() != 1)
        throw InvalidArgument("root set is not crystallographic: <" + b.str() + ", " + a.str() + "^v>");
      Weight img = b - a * static_cast<int>(p.numerator());
      if (!index_.count(img))
        throw InvalidArgument("root set is not closed under the reflection in " + a.str());
    }
    if (index_.count(a * 2))
      throw InvalidArgument("root set is not reduced: contains " + a.str() + " and its double");
  }
  // Simple roots: positive roots that are not a sum of two positive roots.
  std::vector<Weight> simple;
  for (const auto& a : positive_) {
    bool decomposable = false;
    for (const auto& b : positive_) {
      if (b == a) continue;
      Weight c = a - b;
      auto it = index_.find(c);
      if (it != index_.end() && it->second > 0) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(a);
  }
  const int r = static_cast<int>(simple.size());
  std::vector<std::vector<int>> cartan(r, std::vector<int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      cartan[i][j] = static_cast<int>(amb.coroot_pairing(simple[i], simple[j]).numerator());

  // Connected components in order of their first simple root.
  std::vector<int> comp(r, -1);
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < r; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> nodes;
    std::deque<int> q{i};
    comp[i] = static_cast<int>(groups.size());
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      nodes.push_back(v);
      for (int u = 0; u < r; ++u)
        if (comp[u] < 0 && cartan[v][u] != 0) {
          comp[u] = comp[i];
          q.push_back(u);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    groups.push_back(nodes);
  }
  weyl_order_ = 1;
  for (const auto& nodes : groups) {
    const int rk = static_cast<int>(nodes.size());
    std::vector<int> order;
    char fam = 0;
    for (char f : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
      if (!family_allows(f, rk)) continue;
      order = match_component(cartan, nodes, f);
      if (!order.empty()) {
        fam = f;
        break;
      }
    }
    if (!fam) throw InvalidArgument("could not identify a Dynkin component of rank " + std::to_string(rk));
    DynkinComponent dc{fam, rk, {}};
    for (int node : order) {
      dc.simple.push_back(static_cast<int>(simple_.size()));
      simple_.push_back(simple[node]);
    }
    components_.push_back(std::move(dc));
    weyl_order_ *= weyl_group_order(fam, rk);
  }

  // Doubled coordinates of rho are the plain coordinates of the root sum.
  rho_ = Weight(amb.dim());
  {
    Weight sum(amb.dim());
    for (const auto& a : positive_) sum += a;
    for (int i = 0; i < amb.dim(); ++i) rho_.set_twice(i, sum.twice(i) / 2);
  }

  // (mu, rho^vee) as an integral functional on doubled coordinates.
  RatVector h(amb.dim(), Rational(0));
  for (const auto& b : positive_) {
    for (int j = 0; j < amb.dim(); ++j)
      h[j] += amb.coroot_pairing(Weight::unit(amb.dim(), j), b) / 2;
  }
  std::int64_t l = lcm_of_denominators(h);
  std::vector<std::int64_t> hi(amb.dim());
  for (int j = 0; j < amb.dim(); ++j) hi[j] = (h[j] * l).numerator();
  order_ = TermOrder(std::move(hi));
}

std::string Subsystem::type_label() const {
  std::string s;
  for (const auto& c : components_) {
    if (!s.empty()) s += "x";
    s += c.family;
    s += std::to_string(c.rank);
  }
  return s;
}

std::string Subsystem::reductive_label() const {
  std::string s = type_label();
  const int center = ambient_->dim() - rank();
  if (center > 0) {
    if (!s.empty()) s += "x";
    s += "T" + std::to_string(center);
  }
  return s;
}

std::vector<std::vector<int>> Subsystem::cartan_matrix() const {
  const int r = rank();
  std::vector<std::vector<int>> c(r, std::vector<int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      c[i][j] = static_cast<int>(ambient_->coroot_pairing(simple_[i], simple_[j]).numerator());
  return c;
}

RatVector Subsystem::labels(const Weight& lambda) const {
  RatVector out;
  out.reserve(simple_.size());
  for (const auto& b : simple_) out.push_back(ambient_->coroot_pairing(lambda, b));
  return out;
}

bool Subsystem::is_dominant(const Weight& lambda) const {
  for (const auto& b : simple_)
    if (ambient_->form(lambda, b) < 0) return false;
  return true;
}

bool Subsystem::is_regular_dominant(const Weight& lambda) const {
  for (const auto& b : simple_)
    if (ambient_->form(lambda, b) <= 0) return false;
  return true;
}

bool Subsystem::is_integral_dominant(const Weight& lambda) const {
  for (const auto& l : labels(lambda))
    if (l < 0 || l.denominator() != 1) return false;
  return true;
}

Weight Subsystem::reflect(const Weight& lambda, const Weight& beta) const {
  Rational p = ambient_->coroot_pairing(lambda, beta);
  Weight out = lambda;
  for (int i = 0; i < lambda.dim(); ++i) {
    Rational v = Rational(lambda.twice(i)) - p * beta.twice(i);
    if (v.denominator() != 1) throw InvalidArgument("reflection leaves (1/2)P");
    out.set_twice(i, static_cast<int>(v.numerator()));
  }
  return out;
}

Weight Subsystem::dominant_conjugate(const Weight& lambda, int* sign) const {
  Weight w = lambda;
  int s = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& b : simple_) {
      if (ambient_->form(w, b) < 0) {
        w = reflect(w, b);
        s = -s;
        changed = true;
      }
    }
  }
  if (sign) *sign = s;
  return w;
}

bool Subsystem::is_positive_root(const Weight& root) const {
  auto it = index_.find(root);
  return it != index_.end() && it->second > 0;
}

bool Subsystem::is_closed() const {
  std::vector<Weight> all;
  for (const auto& a : positive_) {
    all.push_back(a);
    all.push_back(-a);
  }
  for (const auto& a : all)
    for (const auto& b : all) {
      Weight c = a + b;
      if (!c.is_zero() && ambient_->is_root(c) && !contains(c)) return false;
    }
  return true;
}

bool Subsystem::is_subsystem_of(const Subsystem& other) const {
  for (const auto& a : positive_)
    if (!other.is_positive_root(a)) return false;
  return true;
}

std::shared_ptr<const WeylGroup> Subsystem::weyl_group(const Budget& budget) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (cache_->group) return cache_->group;
  if (weyl_order_ > budget.weyl_order)
    throw BudgetExceeded("weyl_order", weyl_order_, budget.weyl_order);
  cache_->group = std::make_shared<WeylGroup>(*this, budget);
  return cache_->group;
}

std::vector<int> reflection_matrix(const RootSystem& ambient, const Weight& beta) {
  const int d = ambient.dim();
  std::vector<int> m(d * d, 0);
  for (int k = 0; k < d; ++k) {
    // column k: image of the k-th coordinate vector
    Rational p = ambient.coroot_pairing(Weight::unit(d, k), beta);
    for (int r = 0; r < d; ++r) {
      Rational v = Rational(r == k ? 1 : 0) - p * Rational(beta.twice(r), 2);
      if (v.denominator() != 1) throw InvalidArgument("reflection in " + beta.str() + " is not integral");
      m[r * d + k] = static_cast<int>(v.numerator());
    }
  }
  return m;
}

Weight apply_matrix(std::span<const int> m, const Weight& w) {
  const int d = w.dim();
  Weight out(d);
  for (int r = 0; r < d; ++r) {
    int s = 0;
    for (int k = 0; k < d; ++k) s += m[r * d + k] * w.twice(k);
    out.set_twice(r, s);
  }
  return out;
}

WeylGroup::WeylGroup(const Subsystem& sub, const Budget& budget) : dim_(sub.ambient().dim()) {
  rho_ = sub.rho();
  for (const auto& b : sub.simple_roots()) gens_.push_back(reflection_matrix(sub.ambient(), b));
  const std::size_t expected = sub.weyl_order();
  if (expected > budget.weyl_order) throw BudgetExceeded("weyl_order", expected, budget.weyl_order);
  const int dd = dim_ * dim_;
  mats_.reserve(expected * dd);
  auto push = [&](const std::vector<int>& m, int len, std::int64_t parent, int gen, const Weight& img) {
    by_image_.emplace(img, length_.size());
    mats_.insert(mats_.end(), m.begin(), m.end());
    length_.push_back(len);
    parent_.push_back(parent);
    gen_.push_back(gen);
    images_.push_back(img);
  };
  std::vector<int> id(dd, 0);
  for (int i = 0; i < dim_; ++i) id[i * dim_ + i] = 1;
  push(id, 0, -1, -1, rho_);
  std::size_t level_begin = 0, level_end = 1;
  int len = 0;
  while (level_begin < level_end) {
    struct Cand {
      Weight img;
      std::size_t parent;
      int gen;
    };
    std::vector<Cand> cands;
    std::unordered_map<Weight, int, WeightHash> fresh;
    for (std::size_t e = level_begin; e < level_end; ++e) {
      for (std::size_t g = 0; g < gens_.size(); ++g) {
        Weight img = apply_matrix(gens_[g], images_[e]);
        if (by_image_.count(img) || fresh.count(img)) continue;
        fresh.emplace(img, 1);
        cands.push_back({img, e, static_cast<int>(g)});
      }
    }
    std::sort(cands.begin(), cands.end(),
              [](const Cand& a, const Cand& b) { return a.img.lex_less(b.img); });
    ++len;
    for (const auto& c : cands) {
      std::vector<int> m(dd, 0);
      const auto& s = gens_[c.gen];
      const int* p = mats_.data() + c.parent * dd;
      for (int r = 0; r < dim_; ++r)
        for (int k = 0; k < dim_; ++k) {
          int v = 0;
          for (int t = 0; t < dim_; ++t) v += s[r * dim_ + t] * p[t * dim_ + k];
          m[r * dim_ + k] = v;
        }
      push(m, len, static_cast<std::int64_t>(c.parent), c.gen, c.img);
    }
    level_begin = level_end;
    level_end = length_.size();
  }
  if (length_.size() != expected)
    throw Error("Weyl group enumeration found " + std::to_string(length_.size()) +
                " elements, expected " + std::to_string(expected));
}

Weight WeylGroup::apply(std::size_t i, const Weight& w) const { return apply_matrix(matrix(i), w); }

std::optional<std::size_t> WeylGroup::find_by_rho_image(const Weight& image) const {
  auto it = by_image_.find(image);
  if (it == by_image_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> WeylGroup::find(std::span<const int> m) const {
  auto idx = find_by_rho_image(apply_matrix(m, rho_));
  if (!idx) return std::nullopt;
  auto mine = matrix(*idx);
  if (!std::equal(mine.begin(), mine.end(), m.begin())) return std::nullopt;
  return idx;
}

std::size_t WeylGroup::compose(std::size_t a, std::size_t b) const {
  auto idx = find_by_rho_image(apply(a, images_[b]));
  if (!idx) throw Error("Weyl group not closed under composition");
  return *idx;
}

std::size_t WeylGroup::inverse(std::size_t i) const {
  std::lock_guard<std::mutex> lock(inv_mutex_);
  if (inverse_.empty()) {
    inverse_.assign(size(), 0);
    for (std::size_t e = 0; e < size(); ++e) {
      // w = s_g p  =>  w^-1 (rho) = p^-1 (s_g rho)
      Weight x = rho_;
      for (std::int64_t c = static_cast<std::int64_t>(e); c > 0; c = parent_[c])
        x = apply_matrix(gens_[gen_[c]], x);
      inverse_[e] = by_image_.at(x);
    }
  }
  return inverse_[i];
}

std::vector<int> WeylGroup::reduced_word(std::size_t i) const {
  std::vector<int> w;
  for (std::int64_t c = static_cast<std::int64_t>(i); c > 0; c = parent_[c]) w.push_back(gen_[c]);
  return w;
}

Subsystem dual_root_system(const Subsystem& sub) {
  const RootSystem& amb = sub.ambient();
  std::vector<Weight> co;
  for (const auto& b : sub.positive_roots()) {
    Rational f = Rational(2) / amb.norm2(b);
    Weight c(amb.dim());
    for (int i = 0; i < amb.dim(); ++i) {
      Rational v = f * b.twice(i);
      if (v.denominator() != 1) throw InvalidArgument("coroot leaves (1/2)P");
      c.set_twice(i, static_cast<int>(v.numerator()));
    }
    co.push_back(c);
  }
  return Subsystem::from_roots(sub.ambient_ptr(), std::move(co));
}

namespace {

void require_inclusion(const Subsystem& big, const Subsystem& sub) {
  if (!sub.is_subsystem_of(big))
    throw InvalidArgument(sub.type_label() + " is not a subsystem of " + big.type_label());
}

}  // namespace

std::vector<std::size_t> minimal_coset_representatives(const Subsystem& big, const Subsystem& sub,
                                                       const Budget& budget) {
  require_inclusion(big, sub);
  auto W = big.weyl_group(budget);
  std::vector<std::size_t> reps;
  for (std::size_t w = 0; w < W->size(); ++w) {
    bool ok = true;
    for (const auto& b : sub.simple_roots())
      if (!big.order().positive(W->apply(w, b))) { ok = false; break; }
    if (ok) reps.push_back(w);
  }
  if (reps.size() * sub.weyl_order() != W->size())
    throw Error("coset representatives: " + std::to_string(reps.size()) + " x " +
                std::to_string(sub.weyl_order()) + " != " + std::to_string(W->size()));
  return reps;
}

CosetFactorization factorize(const Subsystem& big, const Subsystem& sub, std::size_t w,
                             const Budget& budget) {
  require_inclusion(big, sub);
  auto W = big.weyl_group(budget);
  auto W0 = sub.weyl_group(budget);
  std::vector<std::vector<int>> sref;
  for (const auto& b : sub.simple_roots()) sref.push_back(reflection_matrix(big.ambient(), b));
  std::size_t u = W->inverse(w);
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t k = 0; k < sub.simple_roots().size(); ++k) {
      if (!big.order().positive(W->apply(u, sub.simple_roots()[k]))) {
        Weight img = W->apply(u, apply_matrix(sref[k], big.rho()));
        u = *W->find_by_rho_image(img);
        moved = true;
      }
    }
  }
  // w_sub = w u
  std::size_t wu = W->compose(w, u);
  auto idx = W0->find_by_rho_image(W->apply(wu, sub.rho()));
  if (!idx) throw Error("coset factorization left W(sub)");
  return {*idx, u};
}

int sub_length(const Subsystem& big, const Subsystem& sub, std::size_t w, const Budget& budget) {
  require_inclusion(big, sub);
  auto W = big.weyl_group(budget);
  int count = 0;
  for (const auto& a : big.positive_roots())
    if (sub.is_positive_root(-W->apply(w, a))) ++count;
  return count;
}

}  // namespace spinrep
