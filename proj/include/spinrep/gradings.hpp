#pragma once

#include "spinrep/spinmod.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spinrep {

enum class GradingKind { inner, outer, adjoint };
std::string to_string(GradingKind k);

// Outer involutions, one per row of the classical table.
enum class OuterFamily {
  sl_even,  // sl(2n) > so(2n), diagram partner sp(2n)
  so_even,  // so(2n+2m+2) > so(2n+1) + so(2m+1), diagram partner so(2n+2m+1)
  e6,       // e6 > sp8, diagram partner f4
  sl_odd,   // sl(2n+1) > so(2n+1), itself a diagram involution
};

// g = g0 + g1 described inside a common weight space. For inner gradings the
// ambient system is g itself; for outer ones it is the diagram subalgebra
// (restricted roots), and Weyl group computations run over its Weyl group.
struct Z2Grading {
  std::string name;  // catalog name, e.g. "F4/B4", "E6/C4"
  GradingKind kind = GradingKind::inner;
  RootSystemPtr ambient;
  std::optional<Subsystem> big;  // roots whose Weyl group supplies W (or the diagram W)
  std::optional<Subsystem> g0;
  WeightSystem g1;
  Rational form_scale{1};  // restricted form = form_scale * ambient form
  std::string g_label;     // "sl4", "e6", "F4"
  int pivot = -1;          // inner: internal index of the pivot simple root
  std::vector<int> params;
  std::size_t g_roots = 0;  // number of roots of g
  int g_rank = 0;

  const Subsystem& whole() const { return *big; }
  const Subsystem& sub() const { return *g0; }
  Weight rho0() const { return g0->rho(); }
  // Half the sum of the g1 weights above zero in the ambient order, with multiplicity.
  Weight rho1() const;
  Weight rho() const { return rho0() + rho1(); }
  std::int64_t zero_multiplicity() const { return g1.zero_multiplicity(); }
};

// Pivot coefficient in theta must be 1 (Hermitian case, g0 has a centre) or 2.
Z2Grading inner_grading(RootSystemPtr rs, int pivot);
// n >= 2 for sl_even, n, m >= 1 for so_even, n >= 2 for sl_odd; e6 takes none.
Z2Grading outer_grading(OuterFamily family, int n = 0, int m = 0);
// g = h + h with the diagonal h as g0, so g1 is the adjoint module of h.
Z2Grading adjoint_grading(RootSystemPtr h);

// Pivots with theta-coefficient 1 or 2, in internal numbering.
std::vector<int> involution_pivots(const RootSystem& rs);
// Inner gradings of the simple types of rank <= rank_bound (E-types included
// when the bound allows), every admissible pivot.
std::vector<Z2Grading> inner_catalog(int rank_bound);
// The four outer families at small parameters.
std::vector<Z2Grading> outer_catalog();
// Lookup by name: "F4/B4", "B3/D3", "SL4/SO4", "E6/C4", "adjoint:G2"; inner
// names may carry "@k" with a Bourbaki pivot index to disambiguate.
Z2Grading grading_by_name(std::string_view name);

// Checks the structural invariants of a grading (partition, parity rule,
// root counts, rho bookkeeping); throws VerificationFailure.
void validate_grading(const Z2Grading& gr);

struct SpinSummand {
  std::size_t w;                 // index into whole().weyl_group()
  std::vector<int> word;         // reduced word, Bourbaki labels of the ambient
  std::vector<RatVector> action;  // images of the epsilon basis when e_i are weights (not A, G2)
  Weight lambda;                 // w^{-1} rho - rho0
  BigInt dim;
};

struct SpinG1Result {
  std::int64_t scalar = 1;              // 2^{[m(0)/2]}
  std::vector<SpinSummand> summands;    // formula route, highest first
  Decomposition direct;                 // decompose(spin0(g1)) over g0
  bool routes_agree = false;
  bool multiplicity_free = false;
  std::size_t coset_count = 0;          // #W / #W0
};

// Both routes are always computed; a mismatch throws VerificationFailure.
SpinG1Result spin_g1(const Z2Grading& gr, const Budget& budget = {});

struct IdentityResult {
  bool holds = false;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
};

// sum_w tau(w) e^{w rho} against prod_{Delta0+} (e^{a/2} - e^{-a/2}) prod_{Delta1+} (e^{m/2} + e^{-m/2})^{m(mu)}.
IdentityResult verify_tau_identity(const Subsystem& big, const Subsystem& sub, const WeightSystem& delta1,
                                   const Weight& rho, const Budget& budget = {});
IdentityResult verify_tau_identity(const Z2Grading& gr, const Budget& budget = {});

// Outer families with a diagram partner: the identity for the dual pair
// (coroots of g0 inside coroots of the partner, long part of Delta1), and its
// rewriting into the identity for (Delta0, Delta1).
struct DualBridgeResult {
  bool rho_matches = false;     // rho of the dual partner equals rho0 + rho1
  bool dual_identity = false;   // identity for the dual partition
  bool rewritten = false;       // its right side equals the (Delta0, Delta1) product
};
DualBridgeResult verify_dual_bridge(const Z2Grading& gr, const Budget& budget = {});

struct CasimirResult {
  Rational value;                  // ((rho, rho) - (rho0, rho0)) in the restricted form
  std::vector<Rational> per_summand;
};
// Throws VerificationFailure if any summand deviates.
CasimirResult casimir_check(const Z2Grading& gr, const SpinG1Result& spin);

struct HermitianResult {
  std::vector<Weight> exterior_highest;  // highest weights of the exterior algebra of W
  std::vector<Weight> exterior_lowest;   // w0 of g0 applied to those
  std::vector<Weight> dual_highest;      // highest weights of the exterior algebra of W*
  std::vector<Weight> predicted;         // rho - w^{-1} rho, w a minimal representative
  bool multiplicity_free = false;
  bool lowest_match = false;             // exterior_lowest == predicted as sets
  bool dual_match = false;               // dual_highest == -predicted as sets
  bool holds = false;
};
// For a grading whose pivot has theta-coefficient 1; W is spanned by the
// root vectors of Delta1+. The set {rho - w^{-1} rho} consists of the lowest
// weights of the exterior algebra of W, i.e. minus the highest weights of
// its dual.
HermitianResult verify_hermitian(const Z2Grading& gr, const Budget& budget = {});

struct EqualRankReport {
  std::string label;                 // "G2/A2"
  std::size_t coset_count = 0;       // #W^h
  GradedPoincare invariants;         // of the exterior algebra of m
  std::size_t extreme_count = 0;
  Decomposition spin0;
  bool symmetric = false;            // [m, m] inside h
  bool condition_ii = false;         // dim invariants = #W^h
  bool condition_iii = false;        // Spin0 is decomposably generated
  bool condition_iv = false;         // tau identity
};
// h is generated by `generators`; it must be closed and of full rank.
EqualRankReport equal_rank_pair(RootSystemPtr rs, const std::vector<Weight>& generators,
                                const Budget& budget = {});

// Quotient sum_w eps(w) e^{w rho~} / prod_{a>0} (e^{a/2} - e^{-a/2}) with rho~
// the rho of the coroot system: ch V_{rho_s} for ratio 2, ch V_{2 rho_s} for G2.
Character dual_system_quotient(const Subsystem& g, const Budget& budget = {});

}  // namespace spinrep
