// Command-line front end: spin, verify, classify, rootsys, grading, poincare, tables.
//
// Exit status: 0 success, 1 a check failed, 2 usage error, 3 budget refusal.

#include "spinrep/error.hpp"
#include "spinrep/report.hpp"
#include "spinrep/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

namespace {

using namespace spinrep;

enum Exit { ok = 0, failed = 1, usage = 2, budget = 3 };

struct Options {
  std::string type;
  int rank = 0;
  std::string weight;
  std::string suite = "all";
  std::string grading;
  int rank_bound = 3;
  int height_bound = 6;
  std::uint64_t weyl_budget = Budget{}.weyl_order;
  std::size_t term_budget = Budget{}.terms;
  int jobs = 1;
  std::string format = "json";
  bool with_dual = false;
  bool list = false;

  Budget make_budget() const {
    Budget b;
    b.weyl_order = weyl_budget;
    b.terms = term_budget;
    return b;
  }
};

RootSystemPtr parse_type(const Options& o) {
  if (o.type.empty()) throw InvalidArgument("--type is required");
  std::string d = o.type;
  if (o.rank > 0) {
    if (d.size() != 1) throw InvalidArgument("--rank needs a bare family letter in --type, e.g. --type B --rank 3");
    d += std::to_string(o.rank);
  }
  return RootSystem::parse(d);
}

// "8", "0,1,0", "0 1 0"
Weight parse_weight(const RootSystem& rs, const std::string& s) {
  std::string t = s;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  std::vector<int> labels;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      labels.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw InvalidArgument("weight label '" + tok + "' is not an integer");
    }
  }
  if (static_cast<int>(labels.size()) != rs.rank())
    throw InvalidArgument("--weight needs " + std::to_string(rs.rank()) + " labels, got " +
                          std::to_string(labels.size()));
  for (int l : labels)
    if (l < 0) throw InvalidArgument("--weight must be dominant (non-negative labels)");
  return rs.weight(labels);
}

void emit(const Options& o, const Json& j, const std::string& markdown) {
  if (o.format == "json" || o.format == "both") std::cout << j.dump(2) << "\n";
  if (o.format == "both") std::cout << "\n";
  if (o.format == "markdown" || o.format == "both") std::cout << markdown;
}

int cmd_spin(const Options& o) {
  auto rs = parse_type(o);
  const Json j = spin_report(rs, parse_weight(*rs, o.weight), o.with_dual, o.make_budget());
  emit(o, j, spin_markdown(j));
  return ok;
}

int cmd_poincare(const Options& o) {
  auto rs = parse_type(o);
  const Subsystem g = Subsystem::full(rs);
  const Budget b = o.make_budget();
  const Weight lambda = parse_weight(*rs, o.weight);
  WeightSystem ws = WeightSystem::of_module(g, lambda, b);
  if (o.with_dual) ws = ws.direct_sum(WeightSystem::from_character(ws.to_character().dual()));
  const GradedPoincare p = invariant_poincare(ws, g, b);
  Json j;
  j["type"] = rs->label();
  j["lambda"] = weight_json(*rs, lambda);
  j["with_dual"] = o.with_dual;
  j["dim_V"] = ws.dimension();
  j["poincare"] = to_json(p);
  std::ostringstream md;
  md << "invariants of the exterior algebra of V(" << weight_label(g, lambda) << (o.with_dual ? ") + dual" : ")")
     << " for " << rs->label() << ": " << p.str() << "\n";
  emit(o, j, md.str());
  return ok;
}

int cmd_verify(const Options& o) {
  RunConfig cfg{o.make_budget(), o.jobs};
  std::vector<std::string> names;
  if (o.suite == "all") names = suite_names();
  else names.push_back(o.suite);
  Json all = Json::array();
  std::string md;
  bool good = true;
  for (const auto& n : names) {
    const SuiteReport r = run_suite(n, cfg);
    good = good && r.ok();
    all.push_back(to_json(r));
    md += to_markdown(r) + "\n";
  }
  emit(o, names.size() == 1 ? all[0] : all, md);
  return good ? ok : failed;
}

int cmd_classify(const Options& o) {
  const ClassificationReport r = classify_coprimary(o.rank_bound, o.height_bound, o.make_budget(), o.jobs);
  emit(o, to_json(r), classification_markdown(r));
  return ok;
}

int cmd_rootsys(const Options& o) {
  auto rs = parse_type(o);
  const Json j = rootsys_report(rs);
  std::ostringstream md;
  md << "### " << rs->label() << "\n\n| internal | Bourbaki |\n|---|---|\n";
  for (int i = 0; i < rs->rank(); ++i) md << "| " << i + 1 << " | " << rs->bourbaki_index(i) + 1 << " |\n";
  emit(o, j, md.str());
  return ok;
}

int cmd_grading(const Options& o) {
  if (o.list) {
    Json j = Json::array();
    std::string md;
    for (const auto& g : inner_catalog(4)) {
      j.push_back(g.name);
      md += g.name + "\n";
    }
    for (const auto& g : outer_catalog()) {
      j.push_back(g.name);
      md += g.name + "\n";
    }
    emit(o, j, md);
    return ok;
  }
  if (o.grading.empty()) throw InvalidArgument("--name or --list is required");
  const Json j = grading_report(grading_by_name(o.grading), o.make_budget());
  emit(o, j, grading_markdown(j));
  return j.value("identity_ok", true) && j.value("routes_agree", true) ? ok : failed;
}

int cmd_tables(const Options& o) {
  RunConfig cfg{o.make_budget(), o.jobs};
  std::cout << "## Free skew-invariant algebras (table1)\n\n" << table1_markdown(cfg);
  std::cout << "\n## Outer symmetric pairs (table2)\n\n" << table2_markdown(cfg);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace spinrep;
  CLI::App app{"Spin modules of orthogonal representations: compute, decompose, verify"};
  app.require_subcommand(1);
  Options o;

  auto budgets = [&](CLI::App* s) {
    s->add_option("--weyl-budget", o.weyl_budget, "largest Weyl group to enumerate")
        ->envname("SPINREP_WEYL_BUDGET")
        ->check(CLI::PositiveNumber);
    s->add_option("--term-budget", o.term_budget, "largest character support")
        ->envname("SPINREP_TERM_BUDGET")
        ->check(CLI::PositiveNumber);
    s->add_option("--jobs", o.jobs, "worker threads")->envname("SPINREP_JOBS")->check(CLI::PositiveNumber);
    s->add_option("--format", o.format, "json, markdown or both")
        ->envname("SPINREP_FORMAT")
        ->check(CLI::IsMember({"json", "markdown", "both"}));
  };
  auto module = [&](CLI::App* s) {
    s->add_option("--type", o.type, "root system: B3, A1xA1, or a family letter with --rank")
        ->envname("SPINREP_TYPE");
    s->add_option("--rank", o.rank, "rank when --type is a family letter")->envname("SPINREP_RANK");
    s->add_option("--weight", o.weight, "highest weight labels, internal numbering: 0,1,0")
        ->envname("SPINREP_WEIGHT")
        ->required();
    s->add_flag("--with-dual", o.with_dual, "use V + V* (always orthogonal)");
  };

  auto* spin = app.add_subcommand("spin", "orthogonality, Spin0 decomposition, extreme weights");
  module(spin);
  budgets(spin);
  auto* poincare = app.add_subcommand("poincare", "graded invariants of the exterior algebra");
  module(poincare);
  budgets(poincare);
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "suite name or 'all'")->envname("SPINREP_SUITE");
  budgets(verify);
  auto* classify = app.add_subcommand("classify", "co-primary sweep over simple types");
  classify->add_option("--rank-bound", o.rank_bound)->envname("SPINREP_RANK_BOUND")->check(CLI::PositiveNumber);
  classify->add_option("--height-bound", o.height_bound)->envname("SPINREP_HEIGHT_BOUND")->check(CLI::PositiveNumber);
  budgets(classify);
  auto* rootsys = app.add_subcommand("rootsys", "root data and the numbering table");
  rootsys->add_option("--type", o.type)->envname("SPINREP_TYPE")->required();
  rootsys->add_option("--rank", o.rank)->envname("SPINREP_RANK");
  rootsys->add_option("--format", o.format)->envname("SPINREP_FORMAT")->check(CLI::IsMember({"json", "markdown", "both"}));
  auto* grading = app.add_subcommand("grading", "Spin(g1) of a symmetric pair");
  grading->add_option("--name", o.grading, "grading name, e.g. F4/B4 (see --list)");
  grading->add_flag("--list", o.list, "list the catalog");
  budgets(grading);
  auto* tables = app.add_subcommand("tables", "skew-invariant and outer-pair tables in markdown");
  budgets(tables);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  if (verify->parsed() && o.suite != "all") {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
      std::cerr << "unknown suite '" << o.suite << "'\n";
      return usage;
    }
  }

  try {
    if (spin->parsed()) return cmd_spin(o);
    if (poincare->parsed()) return cmd_poincare(o);
    if (verify->parsed()) return cmd_verify(o);
    if (classify->parsed()) return cmd_classify(o);
    if (rootsys->parsed()) return cmd_rootsys(o);
    if (grading->parsed()) return cmd_grading(o);
    if (tables->parsed()) return cmd_tables(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return budget;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return failed;
  }
  return usage;
}
