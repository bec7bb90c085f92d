#include "zetaperiod/acceptance.hpp"

#include <iostream>

int main(int argc, char** argv) {
  const std::string corpus = argc > 1 ? argv[1] : ZETAPERIOD_CORPUS_DIR;
  const auto results = zetaperiod::run_acceptance(corpus, std::cout);
  int failed = 0;
  for (const auto& r : results) failed += !r.passed;
  std::cout << results.size() - failed << "/" << results.size() << " acceptance criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
