// Acceptance gate: one line per criterion, PASS only when every underlying
// exact comparison holds. Exits nonzero if any criterion fails.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>

#include "orc/verify.hpp"

int main() {
  using namespace orc::verify;
  const std::uint64_t seed = kDefaultSeed;

  struct Criterion {
    const char* name;
    std::function<SuiteResult()> run;
  };
  const Criterion criteria[] = {
      {"family constants and critical points", [] { return family_constants(); }},
      {"breakpoint cap sharpness", [] { return family_sharpness(); }},
      {"hexagonal tiling edge and sphere curvatures", [] { return hexagon_suite(); }},
      {"regular tree curvatures", [] { return tree_suite(); }},
      {"Cartesian product formula", [&] { return product_suite(seed); }},
      {"solver equals enumeration oracle", [&] { return oracle_suite(seed); }},
      {"profile structure on random graphs", [&] { return structure_suite(seed); }},
      {"five-vertex example and radius bound", [] { return figure3_suite(); }},
      {"positively curved pair always exists", [&] { return positivity_suite(seed); }},
  };

  bool all = true;
  int index = 0;
  for (const auto& criterion : criteria) {
    ++index;
    SuiteResult result = criterion.run();
    const int total = static_cast<int>(result.checks.size());
    const int passed = total - result.failed_count();
    if (result.all_pass()) {
      std::printf("criterion %d PASS  %s  [%d/%d checks]\n", index, criterion.name,
                  passed, total);
    } else {
      all = false;
      std::string first;
      for (const auto& check : result.checks) {
        if (!check.pass) {
          first = check.name + " expected=" + check.expected +
                  " computed=" + check.computed;
          break;
        }
      }
      std::printf("criterion %d FAIL  %s  [%d/%d checks; first failure: %s]\n", index,
                  criterion.name, passed, total, first.c_str());
    }
    std::fflush(stdout);
  }
  std::printf(all ? "acceptance: all 9 criteria passed\n"
                  : "acceptance: FAILURES above\n");
  return all ? 0 : 1;
}
