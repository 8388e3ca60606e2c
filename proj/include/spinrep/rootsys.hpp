#pragma once

#include "spinrep/rational.hpp"
#include "spinrep/weight.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace spinrep {

// One factor of a reductive root datum: a simple type, or 'T' for a central
// torus of dimension `rank`.
struct SimpleFactor {
  char family;
  int rank;
  bool operator==(const SimpleFactor&) const = default;
};

// Additive total order on weights: an integral linear functional on the
// doubled coordinates, ties broken lexicographically (larger is higher).
class TermOrder {
 public:
  TermOrder() = default;
  explicit TermOrder(std::vector<std::int64_t> functional) : h_(std::move(functional)) {}

  std::int64_t key(const Weight& w) const noexcept;
  int compare(const Weight& a, const Weight& b) const noexcept;
  bool positive(const Weight& w) const noexcept;
  bool higher(const Weight& a, const Weight& b) const noexcept { return compare(a, b) > 0; }

 private:
  std::vector<std::int64_t> h_;
};

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

// Distinguished elements of a simple root system.
struct SpecialElements {
  Weight theta;     // highest root
  Weight theta_s;   // highest short root (= theta when simply laced)
  Weight rho;
  Weight rho_s;     // half sum of positive short roots
  Weight rho_l;     // half sum of positive long roots
  std::vector<int> short_simple;  // indices of short simple roots
  int coxeter_number = 0;         // (rho, theta_s^vee) + 1
};

// A reductive root datum with fixed simple roots. Coordinates are fundamental
// weights of the simple factors followed by torus coordinates. The form is
// normalized so that long roots have squared length 2.
//
// Simple roots are numbered as in Bourbaki, except F4, whose numbering is
// reversed (alpha_1, alpha_2 short) so that theta = w4 and theta_s = w1.
class RootSystem {
 public:
  static RootSystemPtr simple(char family, int rank);
  static RootSystemPtr product(std::vector<SimpleFactor> factors);
  // "F4", "B3", "A1xA1", "A1xT1", "C3+A1".
  static RootSystemPtr parse(std::string_view descriptor);

  std::string label() const;
  const std::vector<SimpleFactor>& factors() const noexcept { return factors_; }
  bool is_simple() const noexcept;
  bool is_semisimple() const noexcept { return torus_dim_ == 0; }
  int dim() const noexcept { return dim_; }
  int rank() const noexcept { return rank_; }
  int torus_dim() const noexcept { return torus_dim_; }

  // C[i][j] = <alpha_i, alpha_j^vee>
  const std::vector<std::vector<int>>& cartan_matrix() const noexcept { return cartan_; }
  // Form on the coordinate basis.
  const RatMatrix& gram() const noexcept { return gram_; }
  // Form on simple roots.
  const RatMatrix& root_gram() const noexcept { return root_gram_; }

  const std::vector<Weight>& simple_roots() const noexcept { return simple_; }
  // Ordered by height, ties by simple-root coefficients (larger first).
  const std::vector<Weight>& positive_roots() const noexcept { return positive_; }
  const std::vector<std::vector<int>>& positive_root_coefficients() const noexcept {
    return positive_coeffs_;
  }
  std::size_t num_roots() const noexcept { return 2 * positive_.size(); }

  int factor_of_simple_root(int i) const { return simple_factor_[i]; }
  // First simple-root index of factor f.
  int factor_offset(int f) const { return factor_offset_[f]; }

  Weight zero() const { return Weight(dim_); }
  Weight fundamental_weight(int i) const { return Weight::unit(dim_, i); }
  Weight rho() const;
  // Integral weight with the given coordinates.
  Weight weight(std::span<const int> coords) const;
  Weight weight(std::initializer_list<int> coords) const;

  Rational form(const Weight& a, const Weight& b) const;
  Rational norm2(const Weight& a) const { return form(a, a); }
  // 2 (lambda, beta) / (beta, beta)
  Rational coroot_pairing(const Weight& lambda, const Weight& beta) const;
  // Coordinates of a weight in the basis of simple roots (torus part dropped).
  RatVector root_coordinates(const Weight& w) const;
  Rational height(const Weight& w) const;
  const TermOrder& order() const noexcept { return order_; }

  bool is_root(const Weight& w) const;
  std::optional<int> positive_root_index(const Weight& w) const;
  // Long within its simple factor. Simply laced roots count as long.
  bool is_long(const Weight& root) const;
  Rational long_norm2() const { return Rational(2); }

  // Requires a simple system.
  SpecialElements special_elements() const;
  // Degrees minus one of the basic invariants, from the root height partition.
  std::vector<int> exponents() const;

  // Orthonormal-style realisation of types A-D, F4, G2 and tori.
  bool has_epsilon() const noexcept { return !eps_.empty() || (rank_ == 0 && dim_ > 0); }
  int epsilon_dim() const noexcept { return eps_dim_; }
  RatVector to_epsilon(const Weight& w) const;
  // Vectors outside the span of the roots are projected orthogonally.
  Weight from_epsilon(std::span<const Rational> v) const;
  Weight from_epsilon(std::initializer_list<Rational> v) const;
  // (eps_i, eps_j) = scale * delta_ij within the given factor.
  Rational epsilon_form_scale(int factor) const { return eps_scale_[factor]; }

  // Bourbaki index of internal simple root i (identity except F4).
  int bourbaki_index(int i) const;
  int internal_index_from_bourbaki(int b) const;

 private:
  RootSystem() = default;
  void build();

  std::vector<SimpleFactor> factors_;
  int dim_ = 0, rank_ = 0, torus_dim_ = 0;
  std::vector<std::vector<int>> cartan_;
  RatMatrix root_gram_, gram_, cartan_inv_;
  std::vector<Weight> simple_, positive_;
  std::vector<std::vector<int>> positive_coeffs_;
  std::vector<int> simple_factor_, factor_offset_;
  std::unordered_map<Weight, int, WeightHash> root_index_;  // +i+1 positive, -(i+1) negative
  std::vector<Rational> factor_long_norm_;
  TermOrder order_;
  // epsilon realisation
  int eps_dim_ = 0;
  std::vector<Rational> eps_scale_;
  std::vector<int> eps_offset_;
  RatMatrix eps_;  // row i: coordinate basis vector i in epsilon coordinates
};

}  // namespace spinrep
