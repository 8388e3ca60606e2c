#include "spinrep/exterior.hpp"

#include "spinrep/error.hpp"

#include <algorithm>

namespace spinrep {

WeightSystem::WeightSystem(RootSystemPtr ambient) : ambient_(std::move(ambient)) {}

WeightSystem WeightSystem::from_character(const Character& ch) {
  WeightSystem ws(ch.ambient_ptr());
  for (const auto& [w, c] : ch.terms()) {
    if (c < 0) throw NotAModule("negative multiplicity " + std::to_string(c) + " at " + w.str());
    ws.add(w, c);
  }
  return ws;
}

WeightSystem WeightSystem::of_module(const Subsystem& sub, const Weight& lambda, const Budget& budget) {
  return from_character(freudenthal_character(sub, lambda, budget));
}

void WeightSystem::add(const Weight& w, std::int64_t m) {
  if (m < 0) throw InvalidArgument("negative weight multiplicity");
  if (m == 0) return;
  mult_[w] += m;
}

std::int64_t WeightSystem::multiplicity(const Weight& w) const {
  auto it = mult_.find(w);
  return it == mult_.end() ? 0 : it->second;
}

std::int64_t WeightSystem::zero_multiplicity() const { return multiplicity(ambient_->zero()); }

std::int64_t WeightSystem::dimension() const {
  std::int64_t s = 0;
  for (const auto& [w, m] : mult_) s += m;
  return s;
}

std::size_t WeightSystem::num_nonzero() const {
  return mult_.size() - (mult_.count(ambient_->zero()) ? 1 : 0);
}

std::vector<std::pair<Weight, std::int64_t>> WeightSystem::nonzero() const {
  std::vector<std::pair<Weight, std::int64_t>> v;
  for (const auto& [w, m] : mult_)
    if (!w.is_zero()) v.push_back({w, m});
  const TermOrder& o = ambient_->order();
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return o.higher(a.first, b.first); });
  return v;
}

std::vector<std::pair<Weight, std::int64_t>> WeightSystem::positive_half(const TermOrder& order) const {
  std::vector<std::pair<Weight, std::int64_t>> v;
  for (const auto& [w, m] : nonzero())
    if (order.positive(w)) v.push_back({w, m});
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return order.higher(a.first, b.first); });
  return v;
}

bool WeightSystem::is_self_dual() const {
  for (const auto& [w, m] : mult_)
    if (multiplicity(-w) != m) return false;
  return true;
}

Weight WeightSystem::weight_sum() const {
  Weight s = ambient_->zero();
  for (const auto& [w, m] : mult_) s += w * static_cast<int>(m);
  return s;
}

Character WeightSystem::to_character() const {
  Character ch(ambient_);
  for (const auto& [w, m] : mult_) ch.add(w, m);
  return ch;
}

WeightSystem WeightSystem::direct_sum(const WeightSystem& o) const {
  WeightSystem r = *this;
  for (const auto& [w, m] : o.mult_) r.add(w, m);
  return r;
}

std::vector<Character> exterior_powers(const WeightSystem& ws, int max_degree, const Budget& budget) {
  const RootSystemPtr& amb = ws.ambient_ptr();
  const int n = static_cast<int>(ws.dimension());
  max_degree = std::min(max_degree, n);
  const Character ch = ws.to_character();
  std::vector<Character> p(max_degree + 1, Character(amb));
  for (int k = 1; k <= max_degree; ++k) p[k] = ch.adams(k);
  std::vector<Character> e;
  e.push_back(Character::one(amb));
  for (int i = 1; i <= max_degree; ++i) {
    Character acc(amb);
    for (int k = 1; k <= i; ++k) {
      Character t = multiply(p[k], e[i - k], budget);
      if (k % 2 == 1) acc += t;
      else acc -= t;
    }
    Character ei(amb);
    for (const auto& [w, c] : acc.terms()) {
      if (c % i != 0)
        throw InexactDivision("Newton recursion not divisible by " + std::to_string(i) + " in degree " +
                              std::to_string(i));
      ei.add(w, c / i);
    }
    if (ei.size() > budget.terms)
      throw BudgetExceeded("terms (exterior degree " + std::to_string(i) + ")", ei.size(), budget.terms);
    e.push_back(std::move(ei));
  }
  return e;
}

std::vector<Character> exterior_powers_by_product(const WeightSystem& ws, int max_degree,
                                                  const Budget& budget) {
  const RootSystemPtr& amb = ws.ambient_ptr();
  const int n = static_cast<int>(ws.dimension());
  max_degree = std::min(max_degree, n);
  std::vector<Character> e(max_degree + 1, Character(amb));
  e[0] = Character::one(amb);
  const Character ch = ws.to_character();
  for (const auto& [w, m] : ch.terms()) {
    for (std::int64_t rep = 0; rep < m; ++rep) {
      for (int d = max_degree; d >= 1; --d) {
        if (e[d - 1].is_zero()) continue;
        e[d] += e[d - 1].shifted(w);
        if (e[d].size() > budget.terms)
          throw BudgetExceeded("terms (exterior degree " + std::to_string(d) + ")", e[d].size(), budget.terms);
      }
    }
  }
  return e;
}

GradedPoincare GradedPoincare::from_factors(const std::vector<int>& degrees) {
  GradedPoincare p{{1}};
  for (int d : degrees) {
    std::vector<std::int64_t> next(p.coefficients.size() + d, 0);
    for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
      next[i] += p.coefficients[i];
      next[i + d] += p.coefficients[i];
    }
    p.coefficients = next;
  }
  return p;
}

int GradedPoincare::degree() const {
  for (int i = static_cast<int>(coefficients.size()) - 1; i >= 0; --i)
    if (coefficients[i] != 0) return i;
  return -1;
}

bool GradedPoincare::is_palindromic() const {
  const int d = degree();
  for (int i = 0; i <= d; ++i)
    if (coefficients[i] != coefficients[d - i]) return false;
  return true;
}

std::int64_t GradedPoincare::total() const {
  std::int64_t s = 0;
  for (auto c : coefficients) s += c;
  return s;
}

std::optional<std::vector<int>> GradedPoincare::factor_degrees() const {
  std::vector<std::int64_t> p = coefficients;
  p.resize(degree() + 1);
  if (p.empty() || p[0] != 1) return std::nullopt;
  std::vector<int> out;
  while (p.size() > 1) {
    int k = 1;
    while (k < static_cast<int>(p.size()) && p[k] == 0) ++k;
    const int deg = static_cast<int>(p.size()) - 1;
    if (k > deg) return std::nullopt;
    std::vector<std::int64_t> q(deg - k + 1, 0);
    for (int i = 0; i <= deg - k; ++i) q[i] = p[i] - (i >= k ? q[i - k] : 0);
    for (int i = deg - k + 1; i <= deg; ++i)
      if (p[i] != (i - k >= 0 ? q[i - k] : 0)) return std::nullopt;
    for (auto c : q)
      if (c < 0) return std::nullopt;
    out.push_back(k);
    p = q;
  }
  return out;
}

std::string GradedPoincare::expanded() const {
  std::string s;
  for (int i = 0; i <= degree(); ++i) {
    const auto c = coefficients[i];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c);
    s += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

std::string GradedPoincare::str() const {
  auto f = factor_degrees();
  if (!f) return expanded();
  if (f->empty()) return "1";
  if (f->size() == 1) return "1+t^" + std::to_string(f->front());
  std::string s;
  for (int d : *f) s += "(1+t^" + std::to_string(d) + ")";
  return s;
}

bool GradedPoincare::operator==(const GradedPoincare& o) const {
  const int d = degree();
  if (d != o.degree()) return false;
  for (int i = 0; i <= d; ++i)
    if (coefficients[i] != o.coefficients[i]) return false;
  return true;
}

GradedPoincare invariant_poincare(const WeightSystem& ws, const Subsystem& sub, const Budget& budget) {
  const int n = static_cast<int>(ws.dimension());
  // For a self-dual module with trivial determinant, wedge^i and wedge^{n-i}
  // have the same character, so half the degrees suffice.
  const bool mirror = ws.is_self_dual() && ws.weight_sum().is_zero();
  const int top = mirror ? n / 2 : n;
  auto e = exterior_powers(ws, top, budget);
  GradedPoincare p;
  p.coefficients.assign(n + 1, 0);
  const Weight zero = ws.ambient().zero();
  for (int i = 0; i <= top; ++i) p.coefficients[i] = multiplicity_of(e[i], sub, zero, budget);
  for (int i = top + 1; i <= n; ++i) p.coefficients[i] = p.coefficients[n - i];
  return p;
}

}  // namespace spinrep
