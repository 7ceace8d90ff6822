#ifndef EQG_SUITES_HPP
#define EQG_SUITES_HPP

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "eqg/json_io.hpp"

namespace eqg {

// One verdict: the operation that produced it, its worst residual and the pinned tolerance.
struct CheckResult {
  std::string id;
  std::string operation;
  bool numeric_pass = false;
  double residual = 0;
  double tolerance = 0;
  double seconds = 0;
  double time_limit = 0;  // 0: none
  std::string detail;
  bool pass() const { return numeric_pass && (time_limit <= 0 || seconds < time_limit); }
  Json to_json() const;  // no timings, so reports stay byte-stable
  std::string line() const;
};

struct SuiteReport {
  std::string suite;
  unsigned seed = 0;
  std::vector<CheckResult> checks;
  bool pass() const;
  Json to_json() const;
  std::string text() const;
};

// The ten acceptance criteria, in order.
struct AcceptanceCriterion {
  int number;
  std::string name;
  std::function<CheckResult(unsigned seed)> run;
};
const std::vector<AcceptanceCriterion>& acceptance_criteria();

// hopf, algebraic, loop, su2, exact, lens, pseudo, all
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, unsigned seed = 0);  // std::invalid_argument if unknown

// Group-direction coboundary on rational cochains (k >= 1) of a context.
TriComponent group_coboundary(const DeligneContext& ctx, const Degree3& d, const TriComponent& c);
// Random rational cochain of total degree m, every allowed component filled.
TriGradedCochain random_cochain(const DeligneContext& ctx, int m, std::mt19937_64& rng, int den = 5);

}  // namespace eqg

#endif
