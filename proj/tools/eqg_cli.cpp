#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "eqg/jobs.hpp"
#include "eqg/reduction.hpp"

namespace {

void add_common(CLI::App* sub, eqg::Job& job) {
  sub->add_option("--model", job.model, "model id: hopf, hopf:2, lens:n, su2:k, loop:M,k, sphere");
  sub->add_option("--input", job.input, "complex JSON file");
  sub->add_option("--lambda", job.lambda, "moment parameter r=<value>; repeat for compare");
  sub->add_option("--xi", job.xi, "connection: standard, perturbed, perturbed:<eps>");
  sub->add_option("--tolerance", job.tolerance, "tolerance for model-check");
  sub->add_option("--seed", job.seed, "seed for sampled checks");
  sub->add_option("--output", job.output, "report path (JSON, written atomically)");
  sub->add_option("--suite", job.suite, "suite: hopf, algebraic, loop, su2, exact, lens, pseudo, all");
  sub->add_option("--degree", job.degree, "cohomological degree");
  sub->add_option("--coeff", job.coeff, "coefficients: Z, Q, D");
  sub->add_option("--level", job.level, "Deligne level N for --coeff D");
  sub->add_option("--space", job.space, "cover or quotient");
  sub->add_option("--check", job.check, "model-check name");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant gerbe toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", eqg::kToolVersion);
  eqg::Job job;
  std::string job_file;
  for (const char* name : {"cohomology", "obstruction", "reduce", "compare", "verify", "model-check"}) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub, job);
    sub->callback([&job, name] { job.command = name; });
  }
  CLI::App* run = app.add_subcommand("run", "run a JSON job file");
  run->add_option("job", job_file, "job JSON")->required();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? eqg::kExitOk : eqg::kExitUsage;
  }
  try {
    if (!job_file.empty()) {
      std::ifstream f(job_file);
      if (!f) throw eqg::SchemaError("cannot open " + job_file);
      eqg::Json j;
      try {
        j = eqg::Json::parse(f);
      } catch (const eqg::Json::parse_error& e) {
        throw eqg::SchemaError(job_file + ": " + e.what());
      }
      job = eqg::job_from_json(j);
    }
    eqg::JobResult r = eqg::run_job(job);
    std::cout << r.text;
    if (!job.output.empty()) std::cout << "report written to " << job.output << "\n";
    return r.exit_code;
  } catch (const eqg::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return eqg::kExitUsage;
  } catch (const eqg::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return eqg::kExitUsage;
  } catch (const eqg::Indeterminate& e) {
    std::cerr << "indeterminate: " << e.what() << "\n";
    return eqg::kExitIndeterminate;
  } catch (const std::exception& e) {
    std::cerr << "error in " << job.command << ": " << e.what() << "\n";
    return eqg::kExitBackend;
  }
}
