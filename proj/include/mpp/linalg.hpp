#pragma once

#include <optional>
#include <vector>

#include "mpp/rational.hpp"

namespace mpp {

// Exact rational linear algebra, sized for desk-scale polytopes: everything
// is dense Gaussian elimination.

int rankOf(std::vector<RatVec> rows);

// Solves A x = b for square A.  Returns nullopt when A is singular.
std::optional<RatVec> solveSquare(const std::vector<RatVec>& a, const RatVec& b);

// Basis of { x : rows * x = 0 }.
std::vector<RatVec> nullspaceBasis(const std::vector<RatVec>& rows, int ncols);

// Incrementally maintained row echelon form, used to test whether a new
// vector enlarges the span (the affine-independence DFS in the hull code).
class SpanTracker {
public:
  explicit SpanTracker(int ncols) : ncols_(ncols) {}
  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduces v against the current basis; returns the residual.
  RatVec reduce(RatVec v) const;
  bool contains(const RatVec& v) const { return isZeroVec(reduce(v)); }

  // Adds v to the span.  Returns false (and leaves the span unchanged) if v
  // was already in it.
  bool add(const RatVec& v);
  void pop(); // undoes the most recent successful add

private:
  int ncols_;
  std::vector<RatVec> rows_; // normalized echelon rows
  std::vector<int> pivots_;
};

// Exact feasibility test: is p a convex combination of the given points?
// Phase-one simplex with Bland's rule on rationals, so it terminates and is
// exact.  `points` must all have the same dimension as p.
bool inConvexHull(const RatVec& p, const std::vector<RatVec>& points);

} // namespace mpp
