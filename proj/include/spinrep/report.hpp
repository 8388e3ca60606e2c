#pragma once

#include "spinrep/gradings.hpp"

#include <json.hpp>

#include <string>

namespace spinrep {

using Json = nlohmann::ordered_json;

// Exact rationals print as integers when possible, else as "p/q" strings.
Json rational_json(const Rational& q);
// Labels of `w` with respect to each simple component of `sub`, in the
// standard numbering of that component: [[1, 0, 0], [1]].
Json component_labels_json(const Subsystem& sub, const Weight& w);
// "2w1+w4", "0"; components joined with " ; ".
std::string weight_label(const Subsystem& sub, const Weight& w);
// {"labels", "bourbaki", "epsilon"} for a weight of a simple root system.
Json weight_json(const RootSystem& rs, const Weight& w);

Json to_json(const Character& ch);
Json to_json(const Decomposition& d, const Subsystem& sub);
Json to_json(const GradedPoincare& p);
Json to_json(const ClassificationReport& r);

// Orthogonality, Spin0 decomposition, extreme weights and the coprimary flag
// for V_lambda of a simple root system. With `with_dual` the module is
// V + V*, which is always orthogonal.
Json spin_report(const RootSystemPtr& rs, const Weight& lambda, bool with_dual, const Budget& budget = {});
// Summands with coset maps and weights, identity and Casimir checks.
Json grading_report(const Z2Grading& gr, const Budget& budget = {});
// Simple roots, positive roots, special elements and the numbering table.
Json rootsys_report(const RootSystemPtr& rs);

std::string classification_markdown(const ClassificationReport& r);
std::string spin_markdown(const Json& spin);
std::string grading_markdown(const Json& grading);

}  // namespace spinrep
