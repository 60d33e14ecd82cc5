// Standalone runner for the randomized and exhaustive property suites.
#include <cstdlib>
#include <iostream>

#include "property_suites.hpp"

int main(int argc, char** argv) {
  int trials = argc > 1 ? std::atoi(argv[1]) : 10000;
  bool ok = true;
  for (const auto& r : suites::run_all(trials)) {
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases";
    if (r.failures) std::cout << ", " << r.failures << " failures, first: " << r.first_failure;
    std::cout << ")\n";
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}
