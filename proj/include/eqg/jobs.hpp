#ifndef EQG_JOBS_HPP
#define EQG_JOBS_HPP

#include <optional>
#include <string>
#include <vector>

#include "eqg/json_io.hpp"

namespace eqg {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode { kExitOk = 0, kExitVerdictFail = 1, kExitUsage = 2, kExitIndeterminate = 3, kExitBackend = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One batch job. Model ids: "hopf" (optionally "hopf:2" for two sheets), "lens:n", "su2:k", "loop:M,k".
struct Job {
  std::string command;  // cohomology, obstruction, reduce, compare, verify, model-check
  std::string model;
  std::string input;
  std::vector<std::string> lambda;  // "r=1.5" or "1.5"
  std::string xi = "standard";      // standard, perturbed, perturbed:eps
  std::optional<double> tolerance;
  unsigned seed = 0;
  std::string output;
  std::string suite;
  int degree = -1;
  std::string coeff = "Z";  // Z, Q, or D (Deligne, with level)
  int level = -1;
  std::string space;  // cover or quotient, for complexes with an action
  std::string check;
};

// {"command": ..., "model": ..., "params": {...}, "output": ...}; unknown keys raise SchemaError.
Job job_from_json(const Json& j);

struct JobResult {
  int exit_code = kExitOk;
  Json report;
  std::string text;
};

// Runs the job and writes the report atomically when job.output is set.
// UsageError and SchemaError for invalid jobs; Indeterminate is mapped to exit code 3.
JobResult run_job(const Job& job);

}  // namespace eqg

#endif
