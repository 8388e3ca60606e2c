#pragma once

#include "spinrep/budget.hpp"
#include "spinrep/rootsys.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace spinrep {

// One simple component of a subsystem. `simple` lists indices into the
// subsystem's simple roots, in the standard numbering of (family, rank).
struct DynkinComponent {
  char family;
  int rank;
  std::vector<int> simple;
};

class WeylGroup;

// A reduced root system living in the weight space of an ambient root system:
// the ambient system itself, a subset of its roots, or a rescaled system such
// as the coroots. Positive roots are those above zero in the ambient order.
class Subsystem {
 public:
  static Subsystem full(RootSystemPtr ambient);
  // All of +-roots must be supplied or recoverable by negation.
  static Subsystem from_roots(RootSystemPtr ambient, std::vector<Weight> roots);
  static Subsystem from_positive_indices(RootSystemPtr ambient, std::span<const int> indices);
  // Smallest reflection-closed set containing the generators.
  static Subsystem generated_by(RootSystemPtr ambient, std::vector<Weight> generators);
  // Roots of the ambient whose simple-root coefficient at `index` is even.
  static Subsystem even_at(RootSystemPtr ambient, int index);

  const RootSystem& ambient() const noexcept { return *ambient_; }
  const RootSystemPtr& ambient_ptr() const noexcept { return ambient_; }

  const std::vector<Weight>& positive_roots() const noexcept { return positive_; }
  const std::vector<Weight>& simple_roots() const noexcept { return simple_; }
  const std::vector<DynkinComponent>& components() const noexcept { return components_; }
  int rank() const noexcept { return static_cast<int>(simple_.size()); }
  // "B3xA1"; empty system gives "".
  std::string type_label() const;
  // type_label with the central torus appended: "A2xA1xT1", "T1".
  std::string reductive_label() const;
  std::vector<std::vector<int>> cartan_matrix() const;

  Weight rho() const { return rho_; }
  RatVector labels(const Weight& lambda) const;
  bool is_dominant(const Weight& lambda) const;
  bool is_regular_dominant(const Weight& lambda) const;
  // Dominant labels that are all integers.
  bool is_integral_dominant(const Weight& lambda) const;
  Weight reflect(const Weight& lambda, const Weight& beta) const;
  Weight dominant_conjugate(const Weight& lambda, int* sign = nullptr) const;
  // Additive order refining (., rho^vee) of this system.
  const TermOrder& order() const noexcept { return order_; }

  bool contains(const Weight& root) const { return index_.count(root) > 0; }
  bool is_positive_root(const Weight& root) const;
  // Closed under addition inside the ambient root system.
  bool is_closed() const;
  // Every positive root is a root of `other`.
  bool is_subsystem_of(const Subsystem& other) const;

  std::uint64_t weyl_order() const noexcept { return weyl_order_; }
  std::shared_ptr<const WeylGroup> weyl_group(const Budget& budget = {}) const;

 private:
  Subsystem() = default;
  void finish(std::vector<Weight> positive);

  RootSystemPtr ambient_;
  std::vector<Weight> positive_, simple_;
  std::vector<DynkinComponent> components_;
  std::unordered_map<Weight, int, WeightHash> index_;
  Weight rho_;
  TermOrder order_;
  std::uint64_t weyl_order_ = 1;

  struct Cache {
    std::mutex mutex;
    std::shared_ptr<const WeylGroup> group;
  };
  std::shared_ptr<Cache> cache_;
};

// Weyl group of a subsystem as integer matrices on the doubled ambient
// coordinates, enumerated breadth-first from the identity. Element 0 is the
// identity; elements are ordered by length, then lexicographically by w(rho).
class WeylGroup {
 public:
  WeylGroup(const Subsystem& sub, const Budget& budget);

  std::size_t size() const noexcept { return length_.size(); }
  int dim() const noexcept { return dim_; }
  int length(std::size_t i) const { return length_[i]; }
  int sign(std::size_t i) const { return (length_[i] % 2) ? -1 : 1; }
  std::span<const int> matrix(std::size_t i) const {
    return {mats_.data() + i * dim_ * dim_, static_cast<std::size_t>(dim_ * dim_)};
  }
  Weight apply(std::size_t i, const Weight& w) const;
  const Weight& rho_image(std::size_t i) const { return images_[i]; }
  // Element sending rho to the given image.
  std::optional<std::size_t> find_by_rho_image(const Weight& image) const;
  // Element with the given matrix, if it belongs to the group.
  std::optional<std::size_t> find(std::span<const int> matrix) const;
  std::size_t compose(std::size_t a, std::size_t b) const;  // a after b
  std::size_t inverse(std::size_t i) const;
  // Reduced word: w = s_{word[0]} s_{word[1]} ... in simple-root indices.
  std::vector<int> reduced_word(std::size_t i) const;
  std::size_t longest() const noexcept { return size() - 1; }
  const std::vector<std::vector<int>>& generators() const noexcept { return gens_; }

 private:
  int dim_;
  Weight rho_;
  std::vector<std::vector<int>> gens_;
  std::vector<int> mats_;
  std::vector<int> length_;
  std::vector<std::int64_t> parent_;
  std::vector<int> gen_;
  std::vector<Weight> images_;
  std::unordered_map<Weight, std::size_t, WeightHash> by_image_;
  mutable std::mutex inv_mutex_;
  mutable std::vector<std::size_t> inverse_;
};

// Integer matrix of the reflection in beta on doubled coordinates.
std::vector<int> reflection_matrix(const RootSystem& ambient, const Weight& beta);
Weight apply_matrix(std::span<const int> m, const Weight& w);
std::uint64_t weyl_group_order(char family, int rank);

// {beta^vee = 2 beta / (beta, beta)}: long roots kept, short roots scaled.
Subsystem dual_root_system(const Subsystem& sub);

// Representatives of W(big)/W(sub) of minimal length:
// {w : w(sub^+) inside big^+}. Indices into big.weyl_group().
std::vector<std::size_t> minimal_coset_representatives(const Subsystem& big, const Subsystem& sub,
                                                       const Budget& budget = {});

// w = w_sub * w_rep^{-1} with w_sub in W(sub), w_rep a minimal representative.
struct CosetFactorization {
  std::size_t w_sub;  // index into sub.weyl_group()
  std::size_t w_rep;  // index into big.weyl_group()
};
CosetFactorization factorize(const Subsystem& big, const Subsystem& sub, std::size_t w,
                             const Budget& budget = {});

// #{alpha in big^- : w(alpha) in sub^+}, which equals the W(sub)-length of
// the W(sub) factor of w.
int sub_length(const Subsystem& big, const Subsystem& sub, std::size_t w, const Budget& budget = {});
inline int coset_sign(const Subsystem& big, const Subsystem& sub, std::size_t w,
                      const Budget& budget = {}) {
  return (sub_length(big, sub, w, budget) % 2) ? -1 : 1;
}

}  // namespace spinrep
