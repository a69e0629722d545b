// Acceptance suite: runs the built-in catalog case for each criterion and
// prints one PASS/FAIL line per criterion. Exit status is non-zero if any
// executed criterion fails.

#include <cstring>
#include <iostream>
#include <string>

#include "semiends/catalog.hpp"

int main(int argc, char** argv) {
  int only_criterion = 0;
  bool verbose = false;
  unsigned seed = 0xC0FFEE;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only_criterion = std::atoi(argv[++i]);
    } else if (arg == "--seed" && i + 1 < argc) {
      seed = static_cast<unsigned>(std::strtoul(argv[++i], nullptr, 10));
    } else if (arg == "--verbose") {
      verbose = true;
    } else {
      std::cerr << "usage: semiends_acceptance [--criterion N] [--seed S] "
                   "[--verbose]\n";
      return 2;
    }
  }

  semiends::catalog::RunConfig cfg;
  cfg.seed = seed;
  bool all_pass = true;
  int executed = 0;
  for (const auto& name : semiends::catalog::case_names()) {
    if (only_criterion != 0 &&
        semiends::catalog::case_criterion(name) != only_criterion) {
      continue;
    }
    semiends::catalog::CaseResult result =
        semiends::catalog::run_case(name, cfg);
    ++executed;
    std::cout << semiends::catalog::format_result(result, verbose);
    all_pass = all_pass && result.pass();
  }
  if (executed == 0) {
    std::cerr << "no case matches criterion " << only_criterion << "\n";
    return 2;
  }
  std::cout << (all_pass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
            << executed << " criterion" << (executed == 1 ? "" : "s")
            << ")\n";
  return all_pass ? 0 : 1;
}
