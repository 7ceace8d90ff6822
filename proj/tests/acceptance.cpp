#include <iostream>

#include "eqg/suites.hpp"

int main() {
  int failed = 0;
  for (const auto& c : eqg::acceptance_criteria()) {
    const eqg::CheckResult r = c.run(0);
    std::cout << "criterion " << c.number << ": " << r.line() << std::endl;
    failed += !r.pass();
  }
  std::cout << (10 - failed) << "/10 acceptance criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
