// monvar - equational reasoning for monoid varieties
//
// Acceptance gate: runs the ten criteria and prints one PASS/FAIL line per
// criterion. Usage: acceptance [traces-dir]

#include <iostream>  // for cout

#include "monvar/acceptance.hpp"

int main(int argc, char** argv) {
  monvar::AcceptanceOptions o;
  o.traces_dir = argc > 1 ? argv[1] : MONVAR_DATA_DIR "/traces";
  int failed   = 0;
  monvar::run_acceptance(o, [&failed](monvar::CriterionResult const& r) {
    std::cout << monvar::format(r) << std::endl;
    failed += r.passed ? 0 : 1;
  });
  std::cout << (failed == 0 ? "all criteria passed"
                            : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
