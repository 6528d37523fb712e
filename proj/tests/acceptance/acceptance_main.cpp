#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "azposet/verify/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  std::size_t failed = 0;
  azposet::verify::run_acceptance(ids, [&](const azposet::verify::CriterionResult& r) {
    if (!r.pass) ++failed;
    std::printf("[%s] criterion %d: %s (%.3fs) %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
  });
  std::printf("%s: %zu failed\n", failed == 0 ? "ALL PASS" : "FAILURES", failed);
  return failed == 0 ? 0 : 1;
}
