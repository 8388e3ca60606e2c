#include "spinrep/report.hpp"

#include "spinrep/error.hpp"

#include <map>
#include <sstream>

namespace spinrep {

Json rational_json(const Rational& q) {
  if (q.is_integer()) return q.numerator();
  return to_string(q);
}

namespace {

Json rat_vector_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(rational_json(q));
  return a;
}

std::vector<RatVector> component_labels(const Subsystem& sub, const Weight& w) {
  const RatVector all = sub.labels(w);
  std::vector<RatVector> out;
  for (const auto& c : sub.components()) {
    RatVector v;
    for (int i : c.simple) v.push_back(all[i]);
    out.push_back(std::move(v));
  }
  return out;
}

std::string component_string(const RatVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == Rational(0)) continue;
    if (!s.empty()) s += "+";
    if (v[i] != Rational(1)) s += to_string(v[i]);
    s += "w" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

std::string status_word(bool ok) { return ok ? "yes" : "no"; }

}  // namespace

Json component_labels_json(const Subsystem& sub, const Weight& w) {
  Json a = Json::array();
  for (const auto& v : component_labels(sub, w)) a.push_back(rat_vector_json(v));
  return a;
}

std::string weight_label(const Subsystem& sub, const Weight& w) {
  std::string s;
  for (const auto& v : component_labels(sub, w)) {
    if (!s.empty()) s += " ; ";
    s += component_string(v);
  }
  return s.empty() ? "0" : s;
}

Json weight_json(const RootSystem& rs, const Weight& w) {
  Json j;
  RatVector labels, bourbaki(rs.rank());
  for (int i = 0; i < rs.dim(); ++i) labels.push_back(w.coord(i));
  for (int i = 0; i < rs.rank(); ++i) bourbaki[rs.bourbaki_index(i)] = w.coord(i);
  j["labels"] = rat_vector_json(labels);
  j["bourbaki"] = rat_vector_json(bourbaki);
  if (rs.has_epsilon()) j["epsilon"] = rat_vector_json(rs.to_epsilon(w));
  return j;
}

Json to_json(const Character& ch) {
  Json a = Json::array();
  for (const auto& [w, c] : ch.sorted_terms()) {
    RatVector v;
    for (int i = 0; i < w.dim(); ++i) v.push_back(w.coord(i));
    a.push_back({{"weight", rat_vector_json(v)}, {"coefficient", c}});
  }
  return a;
}

Json to_json(const Decomposition& d, const Subsystem& sub) {
  Json a = Json::array();
  for (const auto& s : d.summands) {
    Json e;
    e["highest"] = component_labels_json(sub, s.highest);
    e["label"] = weight_label(sub, s.highest);
    if (sub.ambient().has_epsilon()) e["epsilon"] = rat_vector_json(sub.ambient().to_epsilon(s.highest));
    e["multiplicity"] = s.multiplicity;
    e["dim"] = weyl_dimension(sub, s.highest).str();
    a.push_back(std::move(e));
  }
  return a;
}

Json to_json(const GradedPoincare& p) {
  Json j;
  j["coefficients"] = p.coefficients;
  j["factored"] = p.str();
  j["expanded"] = p.expanded();
  j["total"] = p.total();
  if (auto f = p.factor_degrees()) j["factor_degrees"] = *f;
  return j;
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["rank_bound"] = r.rank_bound;
  j["height_bound"] = r.height_bound;
  j["examined"] = r.examined;
  Json cop = Json::array();
  for (const auto& [type, labels] : r.coprimary()) cop.push_back({{"type", type}, {"labels", labels}});
  j["coprimary"] = std::move(cop);
  std::map<std::string, int> stages;
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    ++stages[c.stage];
    Json e;
    e["type"] = c.type;
    e["labels"] = c.labels;
    e["stage"] = c.stage;
    if (c.orthogonality) e["orthogonality"] = to_string(*c.orthogonality);
    if (c.spin0) {
      auto g = Subsystem::full(RootSystem::parse(c.type));
      e["spin0"] = to_json(*c.spin0, g);
      Json ext = Json::array();
      for (const auto& w : c.extreme) ext.push_back(weight_label(g, w));
      e["extreme_weights"] = std::move(ext);
    }
    if (!c.note.empty()) e["note"] = c.note;
    cands.push_back(std::move(e));
  }
  j["stages"] = stages;
  j["candidates"] = std::move(cands);
  return j;
}

Json spin_report(const RootSystemPtr& rs, const Weight& lambda, bool with_dual, const Budget& budget) {
  const Subsystem g = Subsystem::full(rs);
  if (!g.is_integral_dominant(lambda)) throw InvalidArgument(lambda.str() + " is not dominant integral");
  const OrthogonalityInfo info = orthogonality(g, lambda, budget);
  WeightSystem ws = WeightSystem::of_module(g, lambda, budget);
  Json j;
  j["type"] = rs->label();
  j["lambda"] = weight_json(*rs, lambda);
  j["module"] = with_dual ? "V+V*" : "V";
  j["orthogonality"] = to_string(info.type);
  if (with_dual) ws = ws.direct_sum(WeightSystem::from_character(ws.to_character().dual()));
  else if (info.type != Orthogonality::orthogonal)
    throw InvalidArgument(rs->label() + " module V(" + weight_label(g, lambda) + ") is " +
                          (info.type == Orthogonality::symplectic ? "symplectic" : "not self-dual") +
                          "; use --with-dual for the orthogonal module V + V*");
  j["dim_V"] = ws.dimension();
  const std::int64_t m0 = ws.zero_multiplicity();
  const auto gen = is_decomposably_generated(ws, g, budget);
  j["zero_multiplicity"] = m0;
  j["scalar"] = std::int64_t{1} << (m0 / 2);
  j["spin0"] = to_json(gen.spin0, g);
  Json ext = Json::array();
  for (const auto& w : gen.extreme) ext.push_back(weight_label(g, w));
  j["extreme_weights"] = std::move(ext);
  j["coprimary"] = gen.spin0.count() == 1 && gen.spin0.summands[0].multiplicity == 1;
  j["decomposably_generated"] = gen.decomposably_generated;
  const BigInt expect = BigInt(1) << ((ws.dimension() - m0) / 2);
  j["dim_spin0"] = gen.spin0.dimension(g).str();
  j["dim_check"] = gen.spin0.dimension(g) == expect;
  return j;
}

Json grading_report(const Z2Grading& gr, const Budget& budget) {
  validate_grading(gr);
  const auto spin = spin_g1(gr, budget);
  const Subsystem& g0 = gr.sub();
  const RootSystem& amb = *gr.ambient;
  Json j;
  j["grading"] = gr.name;
  j["kind"] = to_string(gr.kind);
  j["g"] = gr.g_label;
  j["ambient"] = amb.label();
  j["g0"] = g0.reductive_label();
  j["dim_g1"] = gr.g1.dimension();
  j["zero_multiplicity"] = gr.zero_multiplicity();
  j["scalar"] = spin.scalar;
  j["coset_count"] = spin.coset_count;
  j["form_scale"] = rational_json(gr.form_scale);
  Json sums = Json::array();
  for (const auto& s : spin.summands) {
    Json e;
    e["w_word"] = s.word;
    Json act = Json::array();
    for (const auto& v : s.action) act.push_back(rat_vector_json(v));
    e["w_action"] = std::move(act);
    e["lambda"] = component_labels_json(g0, s.lambda);
    e["label"] = weight_label(g0, s.lambda);
    if (amb.has_epsilon()) e["epsilon"] = rat_vector_json(amb.to_epsilon(s.lambda));
    e["dim"] = s.dim.str();
    sums.push_back(std::move(e));
  }
  j["summands"] = std::move(sums);
  j["routes_agree"] = spin.routes_agree;
  j["multiplicity_free"] = spin.multiplicity_free;
  try {
    j["identity_ok"] = verify_tau_identity(gr, budget).holds;
  } catch (const BudgetExceeded& e) {
    j["identity_ok"] = nullptr;
    j["identity_note"] = e.what();
  }
  j["casimir_value"] = rational_json(casimir_check(gr, spin).value);
  if (gr.kind == GradingKind::outer && gr.form_scale == Rational(1)) {
    const auto d = verify_dual_bridge(gr, budget);
    j["dual_bridge"] = {{"rho_matches", d.rho_matches}, {"dual_identity", d.dual_identity},
                        {"rewritten", d.rewritten}};
  }
  return j;
}

Json rootsys_report(const RootSystemPtr& ptr) {
  const RootSystem& rs = *ptr;
  Json j;
  j["type"] = rs.label();
  j["rank"] = rs.rank();
  j["positive_roots"] = rs.positive_roots().size();
  const Subsystem full = Subsystem::full(ptr);
  j["weyl_order"] = full.weyl_order();
  j["cartan_matrix"] = rs.cartan_matrix();
  Json simple = Json::array();
  for (const auto& a : rs.simple_roots()) simple.push_back(weight_json(rs, a));
  j["simple_roots"] = std::move(simple);
  Json numbering = Json::array();
  for (int i = 0; i < rs.rank(); ++i) numbering.push_back({{"internal", i + 1}, {"bourbaki", rs.bourbaki_index(i) + 1}});
  j["numbering"] = std::move(numbering);
  if (rs.is_simple()) {
    const auto sp = rs.special_elements();
    j["theta"] = weight_json(rs, sp.theta);
    j["theta_s"] = weight_json(rs, sp.theta_s);
    j["rho"] = weight_json(rs, sp.rho);
    j["rho_s"] = weight_json(rs, sp.rho_s);
    j["exponents"] = rs.exponents();
    j["coxeter_number"] = sp.coxeter_number;
    Json piv = Json::array();
    for (int p : involution_pivots(rs)) piv.push_back(inner_grading(ptr, p).name);
    j["inner_gradings"] = std::move(piv);
  }
  return j;
}

std::string classification_markdown(const ClassificationReport& r) {
  std::ostringstream out;
  out << "Co-primary sweep: rank <= " << r.rank_bound << ", height <= " << r.height_bound << ", " << r.examined
      << " candidates\n\n";
  out << "| type | labels | stage | Spin0 |\n|---|---|---|---|\n";
  for (const auto& c : r.candidates) {
    if (c.stage != "coprimary" && c.stage != "skipped") continue;
    out << "| " << c.type << " | (";
    for (std::size_t i = 0; i < c.labels.size(); ++i) out << (i ? "," : "") << c.labels[i];
    out << ") | " << c.stage << " | ";
    if (c.spin0) {
      auto g = Subsystem::full(RootSystem::parse(c.type));
      for (std::size_t i = 0; i < c.spin0->summands.size(); ++i)
        out << (i ? " + " : "") << "V(" << weight_label(g, c.spin0->summands[i].highest) << ")";
    } else {
      out << c.note;
    }
    out << " |\n";
  }
  return out.str();
}

std::string spin_markdown(const Json& s) {
  std::ostringstream out;
  out << "**" << s["type"].get<std::string>() << "**, highest weight " << s["lambda"]["labels"].dump() << " ("
      << s["module"].get<std::string>() << ", dim " << s["dim_V"] << ")\n\n";
  out << "- orthogonality: " << s["orthogonality"].get<std::string>() << "\n";
  out << "- m(0) = " << s["zero_multiplicity"] << ", Spin = " << s["scalar"] << " x Spin0\n";
  out << "- Spin0 =";
  bool first = true;
  for (const auto& e : s["spin0"]) {
    out << (first ? " " : " + ");
    if (e["multiplicity"].get<std::int64_t>() != 1) out << e["multiplicity"] << " ";
    out << "V(" << e["label"].get<std::string>() << ")";
    first = false;
  }
  out << " (dim " << s["dim_spin0"].get<std::string>() << ")\n";
  out << "- extreme weights:";
  for (const auto& e : s["extreme_weights"]) out << " " << e.get<std::string>();
  out << "\n- co-primary: " << status_word(s["coprimary"].get<bool>()) << "\n";
  out << "- decomposably generated: " << status_word(s["decomposably_generated"].get<bool>()) << "\n";
  return out.str();
}

std::string grading_markdown(const Json& g) {
  std::ostringstream out;
  out << "**" << g["grading"].get<std::string>() << "** (" << g["kind"].get<std::string>()
      << "), g0 = " << g["g0"].get<std::string>() << ", dim g1 = " << g["dim_g1"]
      << ", m(0) = " << g["zero_multiplicity"] << "\n\n";
  out << "| w | lambda_w | dim |\n|---|---|---|\n";
  for (const auto& s : g["summands"]) {
    std::string word;
    for (const auto& k : s["w_word"]) word += (word.empty() ? "s" : " s") + std::to_string(k.get<int>());
    out << "| " << (word.empty() ? "id" : word) << " | " << s["label"].get<std::string>() << " | "
        << s["dim"].get<std::string>() << " |\n";
  }
  out << "\n- Spin(g1) = " << g["scalar"] << " x (sum above), multiplicity free: "
      << status_word(g["multiplicity_free"].get<bool>()) << "\n";
  out << "- identity: "
      << (g["identity_ok"].is_null() ? std::string("skipped") : status_word(g["identity_ok"].get<bool>())) << "\n";
  out << "- Casimir value: " << g["casimir_value"].dump() << "\n";
  return out.str();
}

}  // namespace spinrep
