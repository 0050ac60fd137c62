#pragma once

#include <set>
#include <vector>

#include "constelloid/core.hpp"

namespace constelloid::testing {

// Generate-and-filter enumeration of constellations on n elements, kept
// deliberately independent of the optimized enumerator: it walks every
// possible table, derives the domain map from the unique-right-identity
// law, and filters with its own inline axiom checks.  Retained permanently
// as the provenance oracle for the class counts.
struct NaiveCensus {
  std::set<std::vector<ElementId>> canonical_keys;
  long long tables_scanned = 0;
};

NaiveCensus naive_enumerate(int n);

}  // namespace constelloid::testing
