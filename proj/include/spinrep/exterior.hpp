#pragma once

#include "spinrep/charring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinrep {

// Multiset of weights of a module: zero multiplicity plus nonzero weights.
class WeightSystem {
 public:
  WeightSystem() = default;
  explicit WeightSystem(RootSystemPtr ambient);
  static WeightSystem from_character(const Character& ch);
  // Weights of V_lambda for the given subsystem (Freudenthal).
  static WeightSystem of_module(const Subsystem& sub, const Weight& lambda, const Budget& budget = {});

  const RootSystem& ambient() const { return *ambient_; }
  const RootSystemPtr& ambient_ptr() const noexcept { return ambient_; }

  void add(const Weight& w, std::int64_t m);
  std::int64_t multiplicity(const Weight& w) const;
  std::int64_t zero_multiplicity() const;
  std::int64_t dimension() const;
  std::size_t num_nonzero() const;
  // Nonzero weights, highest first in the ambient order.
  std::vector<std::pair<Weight, std::int64_t>> nonzero() const;
  // One representative of each {mu, -mu}: the nonzero weights above zero in `order`.
  std::vector<std::pair<Weight, std::int64_t>> positive_half(const TermOrder& order) const;
  bool is_self_dual() const;
  Weight weight_sum() const;
  Character to_character() const;
  WeightSystem direct_sum(const WeightSystem& o) const;

 private:
  RootSystemPtr ambient_;
  Character::Map mult_;
};

// Characters of the exterior powers 0..max_degree by the Newton recursion.
std::vector<Character> exterior_powers(const WeightSystem& ws, int max_degree, const Budget& budget = {});
// Same, by expanding prod (1 + t e^mu)^{m(mu)} degree by degree.
std::vector<Character> exterior_powers_by_product(const WeightSystem& ws, int max_degree,
                                                  const Budget& budget = {});

// Polynomial with nonnegative integer coefficients indexed by degree.
struct GradedPoincare {
  std::vector<std::int64_t> coefficients;

  static GradedPoincare from_factors(const std::vector<int>& degrees);
  bool is_palindromic() const;
  std::int64_t total() const;
  int degree() const;
  // Degrees d_i with P = prod (1 + t^{d_i}), found by trial division.
  std::optional<std::vector<int>> factor_degrees() const;
  // Factored form when available, else expanded.
  std::string str() const;
  std::string expanded() const;
  bool operator==(const GradedPoincare& o) const;
};

// Degree-wise dimension of invariants in the exterior algebra.
GradedPoincare invariant_poincare(const WeightSystem& ws, const Subsystem& sub, const Budget& budget = {});

}  // namespace spinrep
