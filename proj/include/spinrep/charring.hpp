#pragma once

#include "spinrep/budget.hpp"
#include "spinrep/rootsys.hpp"
#include "spinrep/weyl.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace spinrep {

using BigInt = boost::multiprecision::cpp_int;

// Element of the group ring Z[(1/2)P] of an ambient root system.
class Character {
 public:
  using Map = std::unordered_map<Weight, std::int64_t, WeightHash>;

  Character() = default;
  explicit Character(RootSystemPtr ambient);
  static Character monomial(RootSystemPtr ambient, const Weight& w, std::int64_t c = 1);
  static Character one(RootSystemPtr ambient);

  const RootSystem& ambient() const { return *ambient_; }
  const RootSystemPtr& ambient_ptr() const noexcept { return ambient_; }

  std::int64_t coefficient(const Weight& w) const;
  const Map& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  // Sum of coefficients; throws on overflow.
  std::int64_t dimension() const;
  bool is_nonnegative() const;

  // Highest first in the given order (the ambient order by default).
  std::vector<std::pair<Weight, std::int64_t>> sorted_terms(const TermOrder* order = nullptr) const;

  void add(const Weight& w, std::int64_t c);
  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  Character& operator*=(std::int64_t k);
  Character operator+(const Character& o) const;
  Character operator-(const Character& o) const;
  Character operator-() const;
  bool operator==(const Character& o) const;

  Character shifted(const Weight& by) const;
  // e^mu -> e^{k mu}
  Character adams(int k) const;
  // e^mu -> e^{-mu}
  Character dual() const;
  // Invariance under the simple reflections of `sub`.
  bool is_invariant(const Subsystem& sub) const;

 private:
  RootSystemPtr ambient_;
  Map terms_;
};

Character multiply(const Character& a, const Character& b, const Budget& budget = {});
Character power(const Character& a, int k, const Budget& budget = {});

// Exact quotient of `num` by e^{alpha/2} + sign * e^{-alpha/2}.
Character divide_by_binomial(const Character& num, const Weight& alpha, int sign);
// Exact quotient by leading-term elimination in `order`.
Character divide_exact(const Character& num, const Character& den, const TermOrder& order,
                       const Budget& budget = {});

// sum_w eps(w) e^{w(mu)}
Character alternating_sum(const Subsystem& sub, const Weight& mu, const Budget& budget = {});
// prod_{alpha>0} (e^{alpha/2} - e^{-alpha/2}), expanded.
Character weyl_denominator(const Subsystem& sub, const Budget& budget = {});

BigInt weyl_dimension(const Subsystem& sub, const Weight& lambda);

// Weyl character formula by exact division; checks the Weyl dimension.
Character irreducible_character(const Subsystem& sub, const Weight& lambda, const Budget& budget = {});

// Multiplicities of the dominant weights of V_lambda (Freudenthal), highest first.
std::vector<std::pair<Weight, std::int64_t>> dominant_multiplicities(const Subsystem& sub,
                                                                     const Weight& lambda,
                                                                     const Budget& budget = {});
// W-orbit of a weight, via simple reflections.
std::vector<Weight> weyl_orbit(const Subsystem& sub, const Weight& mu, const Budget& budget = {});
// Full character of V_lambda from Freudenthal multiplicities and orbits.
Character freudenthal_character(const Subsystem& sub, const Weight& lambda, const Budget& budget = {});

struct Summand {
  Weight highest;
  std::int64_t multiplicity;
};

struct Decomposition {
  std::vector<Summand> summands;  // in selection order: highest first
  std::size_t count() const noexcept { return summands.size(); }
  std::int64_t total_multiplicity() const;
  bool multiplicity_free() const;
  std::int64_t multiplicity(const Weight& w) const;
  BigInt dimension(const Subsystem& sub) const;
};

// Greedy peeling of highest weights; throws NotAModule on a negative or
// non-integral step or a character that is not W-invariant.
Decomposition decompose(const Character& ch, const Subsystem& sub, const Budget& budget = {});

// sum_w eps(w) coefficient(w(lambda + rho) - rho)
std::int64_t multiplicity_of(const Character& ch, const Subsystem& sub, const Weight& lambda,
                             const Budget& budget = {});

}  // namespace spinrep
