#pragma once

#include <vector>

#include "mpp/oriented.hpp"

namespace mpp {

// A face of CH(P) under the stratification assumption: a sequence of
// positive-dimensional faces linked max-to-min from source to sink.
struct MonotoneChain {
  std::vector<int> faceSeq; // face indices into the base lattice
  int dim = 0;              // sum of member dims minus length

  bool operator==(const MonotoneChain& o) const { return faceSeq == o.faceSeq; }
  bool operator<(const MonotoneChain& o) const {
    if (dim != o.dim) return dim < o.dim;
    return faceSeq < o.faceSeq;
  }
};

struct CHLattice {
  std::vector<MonotoneChain> chains;        // sorted by (dim, faceSeq)
  std::vector<std::pair<int, int>> covers;  // (lowerIdx, upperIdx)
  std::vector<int> fVector;                 // counts from dim -1 (empty face) to dim P - 1
  int dim = -1;                             // dim P - 1

  int indexOf(const MonotoneChain& c) const;
  std::vector<int> chainsOfDim(int d) const;
};

// Throws NotStratified unless all eight equivalent conditions hold.
void requireStratified(const OrientedPolytope& op);

CHLattice chFaces(const OrientedPolytope& op);

// Monotone paths source -> sink, each a list of vertex indices.
std::vector<std::vector<int>> chVertices(const OrientedPolytope& op);

struct CHFacets {
  std::vector<MonotoneChain> type1; // single facets of P containing source and sink
  std::vector<MonotoneChain> type2; // (F^-(v), F^+(v)) for v not extreme
};

CHFacets chFacets(const OrientedPolytope& op, const CHLattice& lattice);

// Faces covering the given chain: consecutive merges and single-member
// enlargements.
std::vector<MonotoneChain> chCovers(const OrientedPolytope& op, const MonotoneChain& chain);

// The unique face containing F1 and F2 with dim = dim F1 + dim F2, when the
// max vertex of F1 is the min vertex of F2.
int joinFaces(const OrientedPolytope& op, int f1, int f2);

struct SimplicityReport {
  bool verdict[4] = {false, false, false, false};
  bool simple = false;
  std::string detail;
};

SimplicityReport chIsSimple(const OrientedPolytope& op, const CHLattice& lattice);

// The geometric construction: Minkowski sum of the level-set slices taken at
// midpoints between consecutive distinct vertex values.  Works without the
// stratification assumption.
Polytope chGeometric(const OrientedPolytope& op);

// Oracle equivalence: combinatorial lattice vs geometric face lattice.
bool chVerify(const OrientedPolytope& op);

AbstractLattice abstractOf(const CHLattice& l);

// Number of triangles (v, x, w) with v->x and x->w directed edges.
int countTrianglesOver(const OrientedPolytope& op, int v, int w);

// dim F^-(w) cap F^+(v) for vertices v, w (as faces; requires irreducible closures).
int interfaceDim(const OrientedPolytope& op, const BBData& bb, int v, int w);

} // namespace mpp
