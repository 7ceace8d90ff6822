#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "eqg/json_io.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(EQG_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::filesystem::path tmpdir() {
  auto d = std::filesystem::temp_directory_path() / "eqg_cli_test";
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("reduce reports the Hopf curving and verdict") {
  const auto out = tmpdir() / "reduce.json";
  Run r = cli("reduce --model hopf --lambda r=1.5 --xi standard --output " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("nontrivial") != std::string::npos);
  eqg::Json j = eqg::Json::parse(slurp(out));
  CHECK(std::abs(std::abs(j["values"]["fbar_over_F_Xi"].get<double>()) - 1.5) < 1e-9);
  CHECK(j["verdicts"][0]["verdict"] == "nontrivial");
  CHECK(j["verdicts"][0]["operation"] == "hopf_reduction + integrality");
  CHECK(j["provenance"]["seed"] == 0);
  CHECK_FALSE(std::filesystem::exists(out.string() + ".tmp"));

  Run t = cli("reduce --model hopf --lambda r=2");
  CHECK(t.code == 0);
  CHECK(t.out.find("reduced class: trivial") != std::string::npos);
}

TEST_CASE("model-check of the SU(2) period") {
  Run r = cli("model-check --model su2:1 --check chi-period");
  CHECK(r.code == 0);
  CHECK(r.out.find("chi-period: pass") != std::string::npos);
}

TEST_CASE("cohomology of the lens space file") {
  Run r = cli("cohomology --input " + std::string(EQG_DATA_DIR) + "/lens3.json --degree 2 --coeff Z");
  CHECK(r.code == 0);
  CHECK(r.out.find("= Z/3") != std::string::npos);
  Run c = cli("cohomology --input " + std::string(EQG_DATA_DIR) + "/lens3.json --degree 3 --coeff Z --space cover");
  CHECK(c.out.find("= Z") != std::string::npos);
}

TEST_CASE("verify suites") {
  Run a = cli("verify --suite algebraic");
  CHECK(a.code == 0);
  CHECK(a.out.find("FAIL") == std::string::npos);
  Run l = cli("verify --suite loop");
  CHECK(l.code == 0);
  Run h = cli("verify --suite hopf");
  CHECK(h.code == 0);
  CHECK(h.out.find("FAIL") == std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  const auto a = tmpdir() / "a.json", b = tmpdir() / "b.json";
  cli("compare --model hopf --lambda r=0.5 --lambda r=2.5 --seed 3 --output " + a.string());
  cli("compare --model hopf --lambda r=0.5 --lambda r=2.5 --seed 3 --output " + b.string());
  CHECK(slurp(a) == slurp(b));
  cli("verify --suite loop --output " + a.string());
  cli("verify --suite loop --output " + b.string());
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("compare and obstruction verdicts") {
  Run c = cli("compare --model hopf --lambda r=0.5 --lambda r=2.5");
  CHECK(c.code == 0);
  CHECK(c.out.find("stable isomorphism: stably isomorphic") != std::string::npos);
  Run n = cli("compare --model hopf --lambda r=0.5 --lambda r=1");
  CHECK(n.out.find("not stably isomorphic") != std::string::npos);
  Run o = cli("obstruction --model loop:3,1");
  CHECK(o.code == 0);
  CHECK(o.out.find("nonvanishing") != std::string::npos);
  Run h = cli("obstruction --model hopf:2");
  CHECK(h.out.find("obstruction: vanishes") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli("").code == 2);
  CHECK(cli("reduce --model nowhere").code == 2);
  CHECK(cli("reduce --model hopf --lambda r=abc").code == 2);
  CHECK(cli("verify --suite nosuch").code == 2);
  CHECK(cli("cohomology --model lens:3").code == 2);
  CHECK(cli("compare --model hopf --lambda r=0").code == 2);
  CHECK(cli("reduce --model hopf --lambda r=0.005").code == 3);
  CHECK(cli("model-check --model su2:1 --check chi-period --tolerance 1e-30").code == 1);
}

TEST_CASE("JSON jobs") {
  const auto dir = tmpdir();
  const auto job = dir / "job.json";
  const auto out = dir / "job_report.json";
  {
    std::ofstream f(job);
    f << R"({"command": "cohomology", "params": {"input": ")" << EQG_DATA_DIR
      << R"(/lens3.json", "degree": 2, "coeff": "Z"}, "output": ")" << out.string() << R"("})";
  }
  Run r = cli("run " + job.string());
  CHECK(r.code == 0);
  eqg::Json j = eqg::Json::parse(slurp(out));
  CHECK(j["values"]["result"]["group"] == "Z/3");
  {
    std::ofstream f(job);
    f << R"({"command": "cohomology", "params": {"degree": 2, "colour": "red"}})";
  }
  CHECK(cli("run " + job.string()).code == 2);
  {
    std::ofstream f(job);
    f << R"({"command": "reduce", "model": "hopf", "params": {"lambda": "r=1"}, "extra": 1})";
  }
  CHECK(cli("run " + job.string()).code == 2);
  {
    std::ofstream f(job);
    f << R"({"command": "reduce", "model": "hopf", "params": {"lambda": 1.25}})";
  }
  Run red = cli("run " + job.string());
  CHECK(red.code == 0);
  CHECK(red.out.find("nontrivial") != std::string::npos);
}

TEST_CASE("discrete reduction job") {
  Run r = cli("reduce --model lens:3");
  CHECK(r.code == 0);
  CHECK(r.out.find("descent: pass") != std::string::npos);
}
