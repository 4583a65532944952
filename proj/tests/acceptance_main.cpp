// Acceptance suite: one PASS/FAIL/SKIP line per criterion; exit status 0 iff
// every criterion that ran passed. Pass --long to include the h=4 run.

#include <cstring>
#include <iostream>

#include "quatcode/acceptance.hpp"

int main(int argc, char** argv) {
  quatcode::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long") == 0) options.long_mode = true;
  }
  bool ok = true;
  quatcode::run_acceptance(options, [&ok](const quatcode::CriterionResult& r) {
    std::cout << r.line() << std::endl;
    ok = ok && r.passed();
  });
  return ok ? 0 : 1;
}
