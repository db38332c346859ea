// Acceptance suite: one line per criterion, every expectation checked at
// exact precision through the scenario registry. Returns nonzero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "curvspace/scenario.hpp"

namespace {

struct Criterion {
  int number;
  const char* description;
  double budget_seconds;
  std::vector<std::pair<std::string, curvspace::ParamMap>> runs;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table = {
      {1,
       "cubic sl2 entry: layers (4,1,0), 14-dim simple assembled algebra, Killing-graded",
       10.0,
       {{"lemma-tan", {}}}},
      {2,
       "full sp(4) base: first layer has dimension 24 = 4 + 20",
       10.0,
       {{"full-sp-g1", {}}}},
      {3,
       "weak curvature of sl2 (x) k is two copies of the first layer, via the explicit map",
       60.0,
       {{"prop-c2-g1", {{"k", "sl2:sym(3)"}}},
        {"prop-c2-g1", {{"k", "sl2:sym(5)"}}},
        {"prop-c2-g1", {{"k", "sp(4)"}}}}},
      {4,
       "weak curvature of the orthogonal and symplectic tensor pairs has the space dimension",
       120.0,
       {{"pspace-so-pair", {{"n1", "3"}, {"n2", "3"}}},
        {"pspace-sp-pair", {{"m1", "2"}, {"m2", "2"}}}}},
      {5,
       "first prolongations: sp(4) gives 20, the cubic sl2 entry and so(3) give 0",
       5.0,
       {{"first-prolongation", {}}}},
      {6,
       "splitting equivalences between weak and full curvature on entries of size >= 4",
       120.0,
       {{"p-r-split-equiv", {}}}},
      {7,
       "contraction compatibility: tau carries the invariant part onto the complement and "
       "the Ricci-flat part onto the kernel",
       60.0,
       {{"tau-compat", {}}}},
      {8,
       "100 seeded random maps over so(3) and so(4): T + T* is always a curvature tensor",
       60.0,
       {{"star-lemma", {{"seed", "1"}, {"count", "100"}}}}},
      {9,
       "symmetric reconstruction: so(3) gives two ideals, so(4) one; Jacobi matches the flags "
       "on 50 random samples per algebra",
       60.0,
       {{"symmetric-reconstruction", {{"seed", "1"}, {"samples", "50"}}}}},
      {10,
       "standard-module multiplicities: 1 for so(4) and sp(4), 2 for sl2 (x) cubic sl2",
       30.0,
       {{"multiplicity", {}}}},
      {11,
       "negative control: the quintic sl2 entry has no first layer and no weak curvature",
       120.0,
       {{"negative-control", {}}}},
  };
  return table;
}

bool run_criterion(const Criterion& c, bool verbose) {
  auto start = std::chrono::steady_clock::now();
  std::vector<curvspace::Report> reports;
  for (const auto& [name, params] : c.runs)
    reports.push_back(curvspace::run_scenario(name, params));
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass && r.error.empty();

  std::printf("%-4s criterion %2d  [%6.2fs / budget %3.0fs%s]  %s\n", pass ? "PASS" : "FAIL",
              c.number, seconds, c.budget_seconds,
              seconds <= c.budget_seconds ? "" : ", over budget", c.description);
  for (const auto& r : reports) {
    if (!r.error.empty())
      std::printf("      error in %s: %s\n", r.scenario.c_str(), r.error.c_str());
    for (const auto& chk : r.checks)
      if (!chk.pass)
        std::printf("      failed %s/%s: expected %s, computed %s (%s)\n", r.scenario.c_str(),
                    chk.name.c_str(), chk.expected.c_str(), chk.computed.c_str(),
                    chk.origin.c_str());
    if (verbose)
      for (const auto& chk : r.checks)
        if (chk.pass)
          std::printf("      ok     %s/%s: %s (%s)\n", r.scenario.c_str(), chk.name.c_str(),
                      chk.computed.c_str(), chk.origin.c_str());
  }
  return pass;
}

} // namespace

int main(int argc, char** argv) {
  int only = 0;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
      only = std::atoi(argv[++i]);
    else if (std::strcmp(argv[i], "--verbose") == 0)
      verbose = true;
    else {
      std::fprintf(stderr, "usage: %s [--criterion N] [--verbose]\n", argv[0]);
      return 2;
    }
  }

  int failures = 0;
  bool matched = false;
  for (const Criterion& c : criteria()) {
    if (only != 0 && c.number != only) continue;
    matched = true;
    if (!run_criterion(c, verbose)) ++failures;
  }
  if (!matched) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  if (only == 0)
    std::printf("%zu/%zu criteria passed\n", criteria().size() - failures, criteria().size());
  return failures == 0 ? 0 : 1;
}
