// Runs every acceptance criterion and prints one line per criterion.

#include <cstdlib>
#include <iostream>

#include "gridhfl/acceptance.hpp"
#include "gridhfl/config.hpp"

int main() {
  gridhfl::RunConfig cfg;
  gridhfl::apply_environment(cfg);
  gridhfl::AcceptanceOptions opt{cfg.caps, false};
  bool ok = true;
  gridhfl::run_acceptance(opt, [&](const gridhfl::CriterionResult& r) {
    std::cout << gridhfl::format_result_line(r) << std::endl;
    if (r.status != gridhfl::CriterionStatus::pass) ok = false;
  });
  std::cout << (ok ? "acceptance: all criteria pass" : "acceptance: FAILED") << std::endl;
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
