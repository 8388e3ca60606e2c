#pragma once

#include "spinrep/report.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace spinrep {

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;     // "table1/so7:w1"
  std::string claim;  // descriptive tag of the statement being checked
  CheckStatus status = CheckStatus::fail;
  std::string detail;
  Json data = Json::object();
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;  // sorted by id
  std::size_t count(CheckStatus s) const;
  // No check failed; budget skips do not count as failures.
  bool ok() const { return count(CheckStatus::fail) == 0; }
};

struct RunConfig {
  Budget budget;
  int jobs = 1;
};

// A check body fills status/detail/data; exceptions are mapped to statuses
// by the runner (BudgetExceeded -> skipped, anything else -> fail).
struct Check {
  std::string id;
  std::string claim;
  std::function<void(CheckResult&, const Budget&)> body;
};

// Runs checks on up to cfg.jobs workers; the result order is by id.
SuiteReport run_checks(std::string suite, std::vector<Check> checks, const RunConfig& cfg);

// table1, table1-f4, a1-series, little-adjoint, vector-square, inner,
// identity, outer, casimir, conjecture, classify, properties.
const std::vector<std::string>& suite_names();
SuiteReport run_suite(std::string_view name, const RunConfig& cfg = {});

Json to_json(const SuiteReport& r);
std::string to_markdown(const SuiteReport& r);

// Table layouts with computed entries next to the printed ones.
struct Table1Row {
  std::string algebra;  // "so7"
  std::string module;   // "V_{w1}"
  std::string type;     // "B3"
  std::vector<int> labels;
  std::vector<int> expected_degrees;  // Poincare polynomial prod (1 + t^d)
};
std::vector<Table1Row> table1_rows(bool include_f4);
std::string table1_markdown(const RunConfig& cfg = {});
std::string table2_markdown(const RunConfig& cfg = {});

}  // namespace spinrep
