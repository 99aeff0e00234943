#pragma once
// Randomized property suites driven by the CLI `props` command and reused by
// the test binaries.  Deterministic for a fixed seed.
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "obf/generator.hpp"
#include "obf/slcalc.hpp"

namespace obf::props {

struct SuiteResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::vector<std::string> notes;  // first few failure descriptions
};

// Run all suites, or just the named one; results sorted by suite name.
std::vector<SuiteResult> run_suites(uint64_t seed, const std::string& only = "");
std::vector<std::string> suite_names();

// Shared random generators.
MappingClass random_mapclass(std::mt19937_64& rng, SurfaceSig sig, int len);
RelClass random_rel(std::mt19937_64& rng, SurfaceSig sig, int radius);
BraidWord random_braid(std::mt19937_64& rng, SurfaceSig sig, int maxn, int len);

}  // namespace obf::props
