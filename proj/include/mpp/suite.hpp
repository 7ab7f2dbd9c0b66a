#pragma once

#include <string>
#include <vector>

#include "mpp/builders.hpp"

namespace mpp {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail; // first counterexample on failure
};

// The fixed example corpus.  Quick keeps dimensions at most 3; full adds the
// 4- and 5-dimensional products and pyramids.
std::vector<std::string> corpusExpressions(bool full);

// Runs every structural invariant over the corpus: lattice sanity,
// stratification duality, relation containments and closures, dimension
// laws, purity, heredity, CH facet classification, the Minkowski oracle,
// simplicity agreement, kernel axioms and the main-theorem equality.
std::vector<CheckResult> runSuite(bool full);

} // namespace mpp
