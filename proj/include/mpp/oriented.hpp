#pragma once

#include <optional>
#include <vector>

#include "mpp/geometry.hpp"

namespace mpp {

// A polytope with a linear functional that is nonconstant on every edge.
// Every face then has a unique minimal and maximal vertex, which is what the
// whole orientation layer is built on.
struct OrientedPolytope {
  Polytope base;
  LinForm ell;
  RatVec ellValues;                            // per vertex
  std::vector<std::pair<int, int>> directedEdges; // (lower, higher)
  int source = -1;
  int sink = -1;
  std::vector<int> faceMin, faceMax; // per face index; -1 for the empty face

  int dim() const { return base.dim; }
  int numVertices() const { return static_cast<int>(base.vertices.size()); }
};

OrientedPolytope orient(Polytope p, LinForm ell);

// Bialynicki-Birula data: for each vertex, the faces whose union is
// F^-(v) (ell-max at v) and F^+(v) (ell-min at v).
struct BBData {
  std::vector<std::vector<int>> fminusFaces, fplusFaces;       // all members
  std::vector<std::vector<int>> fminusMaximal, fplusMaximal;   // inclusion-maximal members
  std::vector<int> fminusDim, fplusDim;

  // is face contained in the closed union F^-(v) (resp. F^+(v))?
  bool faceInFminus(const FaceLattice& l, int faceIdx, int v) const;
  bool faceInFplus(const FaceLattice& l, int faceIdx, int v) const;
  std::vector<int> fminusVertices(const FaceLattice& l, int v) const;
  std::vector<int> fplusVertices(const FaceLattice& l, int v) const;
};

BBData bbData(const OrientedPolytope& op);

struct VertexRelations {
  // row-major over vertex pairs (v, w)
  std::vector<std::vector<bool>> O, Bminus, Bplus, C;
  std::vector<std::vector<int>> witness; // face index witnessing O(v,w), -1 if none
};

VertexRelations relations(const OrientedPolytope& op, const BBData& bb);

enum class Side { Minus, Plus };

struct StratificationResult {
  bool isStratification = true;
  // violation witness: strata pair (v, w) and the offending face of F^side(v)
  int v = -1, w = -1, face = -1;
};

StratificationResult isStratification(const OrientedPolytope& op, const BBData& bb, Side side);

struct IrreducibilityResult {
  bool holds = true;
  int violatingVertex = -1;
};

IrreducibilityResult irreducibility(const BBData& bb);

struct EquivalenceReport {
  bool cond[8] = {false, false, false, false, false, false, false, false};
  // first violation witness per failing condition, textual
  std::string witness[8];
  bool allTrue() const {
    for (bool b : cond)
      if (!b) return false;
    return true;
  }
};

EquivalenceReport equivalenceReport(const OrientedPolytope& op, const BBData& bb,
                                    const VertexRelations& rel);

// Restriction of (P, ell) to a face; vertices keep their relative order.
// vertexMap[i] is the index in op.base of the restriction's vertex i.
struct InducedPolytope {
  OrientedPolytope op;
  std::vector<int> vertexMap;
};

InducedPolytope inducedOnFace(const OrientedPolytope& op, int faceIdx);

struct VertexPoset {
  std::vector<std::vector<bool>> leq; // the relation O (= C when the partitions stratify)
  std::vector<int> rank;              // rho(v) = dim F^-(v)
};

// Requires the eight equivalent conditions; NotStratified otherwise.
VertexPoset vertexPoset(const OrientedPolytope& op, const BBData& bb, const VertexRelations& rel);

// Simplicity of the polytope itself: every vertex has exactly dim(P) edges.
bool isSimplePolytope(const Polytope& p);

} // namespace mpp
