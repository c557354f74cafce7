// Acceptance gate: one pass/fail line per criterion. With no arguments runs
// all ten; --criterion n runs one; --seed s overrides the master seed.

#include "fraclab/experiments.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

int main(int argc, char** argv) {
  std::vector<int> ids;
  unsigned long long seed = 20260824ULL;
  for (int a = 1; a < argc; ++a) {
    if (!std::strcmp(argv[a], "--criterion") && a + 1 < argc) {
      ids.push_back(std::atoi(argv[++a]));
    } else if (!std::strcmp(argv[a], "--seed") && a + 1 < argc) {
      seed = std::strtoull(argv[++a], nullptr, 10);
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion n] [--seed s]\n");
      return 2;
    }
  }
  if (ids.empty())
    for (int id = 1; id <= 10; ++id) ids.push_back(id);

  int failures = 0;
  for (int id : ids) {
    try {
      const fraclab::CriterionResult res = fraclab::run_criterion(id, seed);
      std::printf("criterion %2d: %s (%s)\n", id, res.pass ? "PASS" : "FAIL",
                  res.detail.c_str());
      std::fflush(stdout);
      if (!res.pass) ++failures;
    } catch (const std::exception& e) {
      std::printf("criterion %2d: FAIL (exception: %s)\n", id, e.what());
      std::fflush(stdout);
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
