#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mpp/linalg.hpp"
#include "mpp/rational.hpp"

namespace mpp {

using Point = RatVec;

struct LinForm {
  RatVec coeffs;
  Rat constant = 0;

  Rat eval(const Point& p) const { return dot(coeffs, p) + constant; }
  LinForm negated() const {
    LinForm r;
    r.coeffs.reserve(coeffs.size());
    for (const auto& c : coeffs) r.coeffs.push_back(-c);
    r.constant = -constant;
    return r;
  }
};

// A face is identified by the sorted set of polytope vertex indices lying on
// it.  dim == -1 encodes the empty face.
struct Face {
  std::vector<int> verts;
  int dim = -1;

  bool operator==(const Face& o) const { return verts == o.verts; }
};

inline bool vertsSubset(const std::vector<int>& a, const std::vector<int>& b) {
  // both sorted
  size_t i = 0;
  for (int x : a) {
    while (i < b.size() && b[i] < x) ++i;
    if (i == b.size() || b[i] != x) return false;
    ++i;
  }
  return true;
}

std::vector<int> vertsIntersect(const std::vector<int>& a, const std::vector<int>& b);

class FaceLattice {
public:
  int dim() const { return dim_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int i) const { return faces_[i]; }
  int numFaces() const { return static_cast<int>(faces_.size()); }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  int emptyFaceIndex() const { return 0; }
  int topFaceIndex() const { return numFaces() - 1; }

  // Face index by exact vertex set; -1 when no such face.
  int indexOf(const std::vector<int>& verts) const;
  const std::vector<int>& facesOfDim(int d) const; // d from -1 to dim()
  std::vector<int> fVector() const;                // counts from dim -1 upward

  // Smallest face containing the given vertex set (intersection of all
  // facets containing it; the whole polytope if none does).
  int minimalFaceContaining(const std::vector<int>& verts) const;

  // All facet indices (dim == dim()-1); for a 0-dimensional polytope this is
  // empty.
  std::vector<int> facetIndices() const;

  // Faces covered by / covering the given face.
  std::vector<int> coversOf(int faceIdx) const;   // faces it covers (below)
  std::vector<int> coveredBy(int faceIdx) const;  // faces covering it (above)

  friend class LatticeBuilder;

private:
  int dim_ = -1;
  std::vector<Face> faces_; // sorted by (dim, verts lexicographically)
  std::vector<std::pair<int, int>> covers_; // (lowerIdx, upperIdx)
  std::map<std::vector<int>, int> byVerts_;
  std::vector<std::vector<int>> byDim_; // index 0 holds dim -1
  std::vector<std::vector<int>> upAdj_, downAdj_;
};

struct Polytope {
  int ambientDim = 0;
  int dim = -1;
  std::vector<Point> vertices;
  FaceLattice lattice;

  // chart of the affine hull: vertex i is chartOrigin + basis * chartCoords[i]
  Point chartOrigin;
  std::vector<RatVec> chartBasis;   // dim vectors of length ambientDim
  std::vector<RatVec> chartCoords;  // per vertex, length dim

  int faceDim(const std::vector<int>& verts) const;
};

// Reads the hull-size guard (default 32) from MONOPATH_MAX_VERTICES.
int maxHullVertices();

// Builds the full face lattice of conv(vertices).  Every input point must be
// a vertex of the hull (NotAVertex otherwise); fewer than one point is
// DegenerateInput; more points than the guard allows is TooManyVertices.
Polytope polytopeFromVertices(std::vector<Point> vertices);

enum class Sense { Min, Max };

// The face on which mu attains its minimum (or maximum) over P.
Face faceOfLinForm(const Polytope& p, const LinForm& mu, Sense sense);

// P cut with the hyperplane { ell = c }; requires min < c < max over P.
Polytope sliceAtLevel(const Polytope& p, const LinForm& ell, const Rat& c);

// Minkowski sum of the given polytopes (all in the same ambient space).
Polytope minkowskiSum(const std::vector<Polytope>& ps);

// Graded-lattice isomorphism with a witness bijection (L1 index -> L2 index).
struct IsoResult {
  bool isomorphic = false;
  std::vector<int> bijection;
};

// A lattice abstracted to ranks and cover edges, so polytope lattices and
// combinatorial CH lattices can be compared by one routine.
struct AbstractLattice {
  std::vector<int> dims;
  std::vector<std::pair<int, int>> covers;
};

AbstractLattice abstractOf(const FaceLattice& l);
IsoResult latticeIsomorphic(const AbstractLattice& a, const AbstractLattice& b);
IsoResult latticeIsomorphic(const FaceLattice& a, const FaceLattice& b);

// Structural sanity of a lattice against its polytope: intersection closure,
// Euler relation, unique extremes, faces are intersections of facets.
// Throws Internal on violation (exercised heavily by the test suite).
void checkLatticeInvariants(const Polytope& p);

} // namespace mpp
