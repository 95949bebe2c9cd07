// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <map>

#include "bisimkit/suites.hpp"

using namespace bisimkit;

int main() {
  const std::map<int, double> time_limit{{1, 300.0}, {11, 600.0}};
  const SuiteOptions options;
  int failed = 0;
  for (const auto& s : suites()) {
    SuiteReport r = run_suite(s, options);
    bool ok = r.passed();
    std::string extra;
    if (auto it = time_limit.find(r.id); it != time_limit.end() && r.seconds > it->second) {
      ok = false;
      extra = ", over the " + std::to_string(static_cast<int>(it->second)) + "s target";
    }
    failed += !ok;
    std::printf("%s [%2d] %-20s %s (checked %llu, failures %llu, %.2fs%s)\n", ok ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.title.c_str(), static_cast<unsigned long long>(r.checked),
                static_cast<unsigned long long>(r.failures), r.seconds, extra.c_str());
    for (const auto& note : r.notes) std::printf("       %s\n", note.c_str());
    if (!r.counterexample.empty()) std::printf("       first counterexample: %s\n", r.counterexample.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(suites().size()) - failed, suites().size());
  return failed == 0 ? 0 : 1;
}
