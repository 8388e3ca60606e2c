#include "spinrep/charring.hpp"

#include "spinrep/error.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace spinrep {

namespace {

void require_same_ambient(const Character& a, const Character& b) {
  if (a.ambient_ptr() != b.ambient_ptr() && a.ambient().label() != b.ambient().label())
    throw InvalidArgument("characters over different root systems: " + a.ambient().label() + " vs " +
                          b.ambient().label());
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("character coefficient overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("character coefficient overflow");
  return r;
}

void require_integral_dominant(const Subsystem& sub, const Weight& lambda) {
  if (!sub.is_integral_dominant(lambda))
    throw InvalidArgument(lambda.str() + " is not dominant integral for " + sub.type_label());
}

}  // namespace

Character::Character(RootSystemPtr ambient) : ambient_(std::move(ambient)) {}

Character Character::monomial(RootSystemPtr ambient, const Weight& w, std::int64_t c) {
  Character ch(std::move(ambient));
  ch.add(w, c);
  return ch;
}

Character Character::one(RootSystemPtr ambient) {
  Weight z(ambient->dim());
  return monomial(std::move(ambient), z, 1);
}

std::int64_t Character::coefficient(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t Character::dimension() const {
  std::int64_t s = 0;
  for (const auto& [w, c] : terms_) s = checked_add(s, c);
  return s;
}

bool Character::is_nonnegative() const {
  for (const auto& [w, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::vector<std::pair<Weight, std::int64_t>> Character::sorted_terms(const TermOrder* order) const {
  const TermOrder& o = order ? *order : ambient_->order();
  std::vector<std::pair<Weight, std::int64_t>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return o.higher(a.first, b.first); });
  return v;
}

void Character::add(const Weight& w, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Character& Character::operator+=(const Character& o) {
  if (!ambient_) ambient_ = o.ambient_;
  require_same_ambient(*this, o);
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  if (!ambient_) ambient_ = o.ambient_;
  require_same_ambient(*this, o);
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

Character& Character::operator*=(std::int64_t k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c = checked_mul(c, k);
  return *this;
}

Character Character::operator+(const Character& o) const {
  Character r = *this;
  r += o;
  return r;
}

Character Character::operator-(const Character& o) const {
  Character r = *this;
  r -= o;
  return r;
}

Character Character::operator-() const {
  Character r = *this;
  r *= -1;
  return r;
}

bool Character::operator==(const Character& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (const auto& [w, c] : terms_)
    if (o.coefficient(w) != c) return false;
  return true;
}

Character Character::shifted(const Weight& by) const {
  Character r(ambient_);
  r.terms_.reserve(terms_.size());
  for (const auto& [w, c] : terms_) r.terms_.emplace(w + by, c);
  return r;
}

Character Character::adams(int k) const {
  Character r(ambient_);
  for (const auto& [w, c] : terms_) r.add(w * k, c);
  return r;
}

Character Character::dual() const { return adams(-1); }

bool Character::is_invariant(const Subsystem& sub) const {
  for (const auto& [w, c] : terms_)
    for (const auto& b : sub.simple_roots())
      if (coefficient(sub.reflect(w, b)) != c) return false;
  return true;
}

Character multiply(const Character& a, const Character& b, const Budget& budget) {
  require_same_ambient(a, b);
  Character r(a.ambient_ptr());
  if (a.is_zero() || b.is_zero()) return r;
  // Support estimate: product of sizes, capped by the bounding box of the sum.
  const int d = a.ambient().dim();
  std::vector<int> lo(d, INT32_MAX), hi(d, INT32_MIN);
  for (const auto* ch : {&a, &b}) {
    std::vector<int> l(d, INT32_MAX), h(d, INT32_MIN);
    for (const auto& [w, c] : ch->terms())
      for (int i = 0; i < d; ++i) {
        l[i] = std::min(l[i], w.twice(i));
        h[i] = std::max(h[i], w.twice(i));
      }
    for (int i = 0; i < d; ++i) {
      lo[i] = lo[i] == INT32_MAX ? l[i] : lo[i] + l[i];
      hi[i] = hi[i] == INT32_MIN ? h[i] : hi[i] + h[i];
    }
  }
  long double box = 1;
  for (int i = 0; i < d; ++i) box *= static_cast<long double>(hi[i] - lo[i]) / 2 + 1;
  long double naive = static_cast<long double>(a.size()) * static_cast<long double>(b.size());
  const std::uint64_t estimate = static_cast<std::uint64_t>(std::min(box, naive));

  const Character& big = a.size() >= b.size() ? a : b;
  const Character& small = a.size() >= b.size() ? b : a;
  Character::Map acc;
  acc.reserve(std::min<std::uint64_t>(estimate, budget.terms) + 16);
  for (const auto& [ws, cs] : small.terms()) {
    for (const auto& [wb, cb] : big.terms()) {
      auto [it, ins] = acc.try_emplace(ws + wb, 0);
      it->second = checked_add(it->second, checked_mul(cs, cb));
    }
    if (acc.size() > budget.terms) throw BudgetExceeded("terms", estimate, budget.terms);
  }
  for (const auto& [w, c] : acc)
    if (c != 0) r.add(w, c);
  return r;
}

Character power(const Character& a, int k, const Budget& budget) {
  if (k < 0) throw InvalidArgument("negative power of a character");
  Character r = Character::one(a.ambient_ptr());
  for (int i = 0; i < k; ++i) r = multiply(r, a, budget);
  return r;
}

Character divide_by_binomial(const Character& num, const Weight& alpha, int sign) {
  if (!alpha.is_integral() || alpha.is_zero())
    throw InvalidArgument("binomial divisor needs a nonzero integral weight, got " + alpha.str());
  const int d = alpha.dim();
  int j = -1;
  for (int i = 0; i < d; ++i)
    if (alpha.twice(i) != 0 && (j < 0 || std::abs(alpha.twice(i)) < std::abs(alpha.twice(j)))) j = i;
  const int aj = alpha.twice(j);
  const Weight half = alpha.half();
  // Group terms along alpha-strings: y = rep + k alpha.
  std::unordered_map<Weight, std::vector<std::pair<int, std::int64_t>>, WeightHash> strings;
  for (const auto& [y, c] : num.terms()) {
    int yj = y.twice(j);
    int k = yj / aj;
    if ((yj % aj != 0) && ((yj < 0) != (aj < 0))) --k;  // floor division
    strings[y - alpha * k].push_back({k, c});
  }
  Character q(num.ambient_ptr());
  for (auto& [rep, pts] : strings) {
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    const int top = pts.front().first, bot = pts.back().first;
    std::size_t next = 0;
    std::int64_t prev = 0;
    for (int k = top; k >= bot; --k) {
      std::int64_t n = 0;
      if (next < pts.size() && pts[next].first == k) n = pts[next++].second;
      std::int64_t val = checked_add(n, -checked_mul(sign, prev));
      if (k == bot) {
        if (val != 0)
          throw InexactDivision("division by the binomial in " + alpha.str() + " leaves a remainder");
      } else if (val != 0) {
        q.add(rep + alpha * k - half, val);
      }
      prev = val;
    }
  }
  return q;
}

Character divide_exact(const Character& num, const Character& den, const TermOrder& order,
                       const Budget& budget) {
  require_same_ambient(num, den);
  if (den.is_zero()) throw InvalidArgument("division by the zero character");
  auto cmp = [&](const Weight& a, const Weight& b) { return order.compare(a, b) < 0; };
  std::map<Weight, std::int64_t, decltype(cmp)> rem(cmp);
  for (const auto& [w, c] : num.terms()) rem.emplace(w, c);
  auto dterms = den.sorted_terms(&order);
  const Weight& dlead = dterms.front().first;
  const std::int64_t dcoef = dterms.front().second;
  const Weight& dlow = dterms.back().first;
  Character q(num.ambient_ptr());
  if (rem.empty()) return q;
  const Weight floor_q = rem.begin()->first - dlow;  // lowest possible quotient term
  while (!rem.empty()) {
    auto lead = std::prev(rem.end());
    Weight qw = lead->first - dlead;
    if (order.compare(qw, floor_q) < 0 || lead->second % dcoef != 0)
      throw InexactDivision("leading-term division leaves a remainder");
    std::int64_t qc = lead->second / dcoef;
    q.add(qw, qc);
    if (q.size() > budget.terms) throw BudgetExceeded("terms", q.size(), budget.terms);
    for (const auto& [w, c] : dterms) {
      auto [it, ins] = rem.try_emplace(qw + w, 0);
      it->second = checked_add(it->second, -checked_mul(qc, c));
      if (it->second == 0) rem.erase(it);
    }
  }
  return q;
}

Character alternating_sum(const Subsystem& sub, const Weight& mu, const Budget& budget) {
  auto W = sub.weyl_group(budget);
  Character r(sub.ambient_ptr());
  for (std::size_t w = 0; w < W->size(); ++w) r.add(W->apply(w, mu), W->sign(w));
  return r;
}

Character weyl_denominator(const Subsystem& sub, const Budget& budget) {
  Character r = Character::one(sub.ambient_ptr());
  for (const auto& a : sub.positive_roots()) {
    Character f(sub.ambient_ptr());
    Weight h(a.dim());
    for (int i = 0; i < a.dim(); ++i) h.set_twice(i, a.twice(i) / 2);
    f.add(h, 1);
    f.add(-h, -1);
    r = multiply(r, f, budget);
  }
  return r;
}

BigInt weyl_dimension(const Subsystem& sub, const Weight& lambda) {
  const RootSystem& amb = sub.ambient();
  const Weight lr = lambda + sub.rho();
  BigInt num = 1, den = 1;
  for (const auto& a : sub.positive_roots()) {
    Rational f = amb.form(lr, a) / amb.form(sub.rho(), a);
    num *= f.numerator();
    den *= f.denominator();
  }
  if (num % den != 0) throw Error("Weyl dimension formula is not integral for " + lambda.str());
  return num / den;
}

Character irreducible_character(const Subsystem& sub, const Weight& lambda, const Budget& budget) {
  require_integral_dominant(sub, lambda);
  Character n = alternating_sum(sub, lambda + sub.rho(), budget);
  for (const auto& a : sub.positive_roots()) n = divide_by_binomial(n, a, -1);
  if (BigInt(n.dimension()) != weyl_dimension(sub, lambda))
    throw VerificationFailure("character dimension differs from the Weyl dimension formula");
  return n;
}

std::vector<std::pair<Weight, std::int64_t>> dominant_multiplicities(const Subsystem& sub,
                                                                     const Weight& lambda,
                                                                     const Budget& budget) {
  require_integral_dominant(sub, lambda);
  const RootSystem& amb = sub.ambient();
  std::vector<Weight> dom{lambda};
  std::unordered_set<Weight, WeightHash> seen{lambda};
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (const auto& a : sub.positive_roots()) {
      Weight nu = dom[i] - a;
      if (sub.is_dominant(nu) && seen.insert(nu).second) {
        dom.push_back(nu);
        if (dom.size() > budget.terms) throw BudgetExceeded("terms", dom.size(), budget.terms);
      }
    }
  }
  const TermOrder& order = sub.order();
  std::sort(dom.begin(), dom.end(), [&](const Weight& a, const Weight& b) { return order.higher(a, b); });
  std::unordered_map<Weight, std::int64_t, WeightHash> mult;
  const Weight rho = sub.rho();
  const Rational top = amb.norm2(lambda + rho);
  auto lookup = [&](const Weight& w) -> std::int64_t {
    Weight c = sub.dominant_conjugate(w);
    auto it = mult.find(c);
    return it == mult.end() ? 0 : it->second;
  };
  for (const auto& mu : dom) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Rational rhs(0);
    for (const auto& a : sub.positive_roots()) {
      Weight nu = mu + a;
      while (true) {
        std::int64_t m = lookup(nu);
        if (m == 0) break;
        rhs += Rational(m) * amb.form(nu, a);
        nu += a;
      }
    }
    Rational m = 2 * rhs / (top - amb.norm2(mu + rho));
    if (!m.is_integer()) throw Error("Freudenthal recursion produced a non-integer multiplicity");
    mult[mu] = m.numerator();
  }
  std::vector<std::pair<Weight, std::int64_t>> out;
  out.reserve(dom.size());
  for (const auto& mu : dom) out.push_back({mu, mult[mu]});
  return out;
}

std::vector<Weight> weyl_orbit(const Subsystem& sub, const Weight& mu, const Budget& budget) {
  std::vector<Weight> orbit{mu};
  std::unordered_set<Weight, WeightHash> seen{mu};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& b : sub.simple_roots()) {
      Weight r = sub.reflect(orbit[i], b);
      if (seen.insert(r).second) {
        orbit.push_back(r);
        if (orbit.size() > budget.terms) throw BudgetExceeded("terms", orbit.size(), budget.terms);
      }
    }
  return orbit;
}

Character freudenthal_character(const Subsystem& sub, const Weight& lambda, const Budget& budget) {
  Character ch(sub.ambient_ptr());
  for (const auto& [mu, m] : dominant_multiplicities(sub, lambda, budget)) {
    for (const auto& w : weyl_orbit(sub, mu, budget)) ch.add(w, m);
    if (ch.size() > budget.terms) throw BudgetExceeded("terms", ch.size(), budget.terms);
  }
  return ch;
}

std::int64_t Decomposition::total_multiplicity() const {
  std::int64_t s = 0;
  for (const auto& x : summands) s += x.multiplicity;
  return s;
}

bool Decomposition::multiplicity_free() const {
  for (const auto& x : summands)
    if (x.multiplicity != 1) return false;
  return true;
}

std::int64_t Decomposition::multiplicity(const Weight& w) const {
  for (const auto& x : summands)
    if (x.highest == w) return x.multiplicity;
  return 0;
}

BigInt Decomposition::dimension(const Subsystem& sub) const {
  BigInt s = 0;
  for (const auto& x : summands) s += weyl_dimension(sub, x.highest) * x.multiplicity;
  return s;
}

Decomposition decompose(const Character& ch, const Subsystem& sub, const Budget& budget) {
  if (!ch.is_invariant(sub))
    throw NotAModule("character is not invariant under the Weyl group of " + sub.type_label());
  const TermOrder& order = sub.order();
  auto cmp = [&](const Weight& a, const Weight& b) { return order.compare(a, b) < 0; };
  std::map<Weight, std::int64_t, decltype(cmp)> rem(cmp);
  for (const auto& [w, c] : ch.terms())
    if (sub.is_dominant(w)) rem.emplace(w, c);
  Decomposition out;
  while (!rem.empty()) {
    auto lead = std::prev(rem.end());
    const Weight lambda = lead->first;
    const std::int64_t c = lead->second;
    if (c < 0)
      throw NotAModule("negative multiplicity " + std::to_string(c) + " at " + lambda.str());
    if (!sub.is_integral_dominant(lambda))
      throw NotAModule("highest weight " + lambda.str() + " is not integral for " + sub.type_label());
    out.summands.push_back({lambda, c});
    for (const auto& [mu, m] : dominant_multiplicities(sub, lambda, budget)) {
      auto [it, ins] = rem.try_emplace(mu, 0);
      it->second = checked_add(it->second, -checked_mul(c, m));
      if (it->second == 0) rem.erase(it);
    }
  }
  return out;
}

std::int64_t multiplicity_of(const Character& ch, const Subsystem& sub, const Weight& lambda,
                             const Budget& budget) {
  auto W = sub.weyl_group(budget);
  const Weight rho = sub.rho();
  const Weight shifted = lambda + rho;
  std::int64_t s = 0;
  for (std::size_t w = 0; w < W->size(); ++w) {
    std::int64_t c = ch.coefficient(W->apply(w, shifted) - rho);
    if (c) s = checked_add(s, W->sign(w) * c);
  }
  return s;
}

}  // namespace spinrep
