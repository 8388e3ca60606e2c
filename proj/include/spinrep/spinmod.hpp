#pragma once

#include "spinrep/exterior.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinrep {

enum class Orthogonality { orthogonal, symplectic, neither };
std::string to_string(Orthogonality o);

struct OrthogonalityInfo {
  Orthogonality type = Orthogonality::neither;
  bool self_dual = false;
  std::int64_t symmetric_invariants = 0;    // dim (S^2 V)^g
  std::int64_t alternating_invariants = 0;  // dim (wedge^2 V)^g
};

OrthogonalityInfo orthogonality(const Subsystem& g, const Weight& lambda, const Budget& budget = {});
inline Orthogonality orthogonality_type(const Subsystem& g, const Weight& lambda,
                                        const Budget& budget = {}) {
  return orthogonality(g, lambda, budget).type;
}

// prod over a half of the nonzero weights of (e^{mu/2} + e^{-mu/2})^{m(mu)};
// the half is {mu : mu > 0 in `order`} (ambient order by default).
Character spin0_character(const WeightSystem& ws, const Budget& budget = {});
Character spin0_character(const WeightSystem& ws, const TermOrder& half_order, const Budget& budget = {});

struct SpinCharacter {
  std::int64_t scalar;  // 2^{floor(m(0)/2)}
  Character reduced;
  Character full() const;
};
SpinCharacter spin_character(const WeightSystem& ws, const Budget& budget = {});

struct DominantHalf {
  std::vector<std::pair<Weight, std::int64_t>> half;
  // Integer coordinates of a point in the open chamber, positive on the half.
  std::vector<std::int64_t> witness;
  // (1/2) sum of m(mu) mu over the half.
  Weight extreme;
};

// One half per connected component of the open dominant chamber of `acting`
// cut by the hyperplanes orthogonal to the weights of ws.
std::vector<DominantHalf> enumerate_dominant_halves(const WeightSystem& ws, const Subsystem& acting,
                                                    const Budget& budget = {});
std::vector<Weight> extreme_weights(const WeightSystem& ws, const Subsystem& acting,
                                    const Budget& budget = {});

struct CoprimaryResult {
  bool coprimary;
  Decomposition spin0;
};
CoprimaryResult is_coprimary(const WeightSystem& ws, const Subsystem& acting, const Budget& budget = {});

struct GenerationResult {
  bool decomposably_generated;
  Decomposition spin0;
  std::vector<Weight> extreme;
};
GenerationResult is_decomposably_generated(const WeightSystem& ws, const Subsystem& acting,
                                           const Budget& budget = {});

// Every weight is an integer multiple of a root of `acting`.
bool weights_on_root_lines(const WeightSystem& ws, const Subsystem& acting);
// Dominant weights of V_lambda, without multiplicities.
std::vector<Weight> dominant_weights(const Subsystem& sub, const Weight& lambda, const Budget& budget = {});

struct CandidateReport {
  std::string type;
  std::vector<int> labels;
  std::string stage;  // filter that rejected it, or "coprimary" / "not-coprimary" / "skipped"
  std::optional<Orthogonality> orthogonality;  // unset when an earlier filter decided
  std::optional<Decomposition> spin0;
  std::vector<Weight> extreme;
  std::string note;
};

struct ClassificationReport {
  int rank_bound;
  int height_bound;
  std::vector<CandidateReport> candidates;  // every candidate examined, with its deciding stage
  std::size_t examined = 0;
  std::vector<std::pair<std::string, std::vector<int>>> coprimary() const;
};

// Simple types of rank <= rank_bound (A, B>=2, C>=2, D>=4, E, F4, G2) and
// dominant lambda with 0 < sum of labels <= height_bound.
ClassificationReport classify_coprimary(int rank_bound, int height_bound, const Budget& budget = {},
                                        int jobs = 1);

}  // namespace spinrep
