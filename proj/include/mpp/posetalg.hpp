#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpp/intpoly.hpp"
#include "mpp/oriented.hpp"
#include "mpp/pathpoly.hpp"

namespace mpp {

struct GradedPoset {
  int n = 0;
  std::vector<std::vector<bool>> leq;
  std::vector<int> rank;
  std::vector<int> linext; // element ids sorted by (rank, id)

  bool le(int s, int t) const { return leq[s][t]; }
  int rho(int s, int t) const { return rank[t] - rank[s]; }

  static GradedPoset fromRelation(std::vector<std::vector<bool>> leq, std::vector<int> rank);
  static GradedPoset chain(int length); // length+1 elements 0 < 1 < ... < length
};

GradedPoset posetOfVertexPoset(const VertexPoset& vp);

// Face poset of a polytope on the faces of dim >= 0, graded by dimension.
// faceIds maps poset element index -> face index in the lattice.
struct FacePoset {
  GradedPoset poset;
  std::vector<int> faceIds;
  std::vector<int> elemOfFace; // face index -> poset element (-1 for empty face)
};

FacePoset facePosetOf(const Polytope& p);

// An element of the incidence algebra I(X): a polynomial per closed interval.
class IncElem {
public:
  IncElem() = default;
  explicit IncElem(const GradedPoset* x)
      : x_(x), a_(x->n, std::vector<IntPoly>(x->n)) {}

  const GradedPoset& poset() const { return *x_; }
  const IntPoly& at(int s, int t) const { return a_[s][t]; }
  IntPoly& at(int s, int t) { return a_[s][t]; }

  bool operator==(const IncElem& o) const { return a_ == o.a_; }

  // membership in I_rho: deg a_st <= rho_st on every interval
  bool inIrho() const;

private:
  const GradedPoset* x_ = nullptr;
  std::vector<std::vector<IntPoly>> a_;
};

IncElem identityElem(const GradedPoset& x);
IncElem zetaElem(const GradedPoset& x);
IncElem multiply(const IncElem& a, const IncElem& b);

// Two-sided inverse by triangular substitution; NotInvertible unless every
// diagonal entry is +-1.
IncElem invert(const IncElem& a);

// Interval-wise coefficient reversal to degree rho_st; DegreeExceedsRank if
// the element is not in I_rho.
IncElem rev(const IncElem& a);

IncElem mobius(const GradedPoset& x);
IncElem charKernel(const GradedPoset& x);

struct KernelCheck {
  bool isKernel = true;
  int s = -1, t = -1; // first failing interval
  std::string reason;
};

KernelCheck isKernel(const IncElem& kappa);

// kappa_vw = sum over faces F with min F = v, max F = w of (x-1)^dim F;
// kappa_vv = 1.  The poset must be the vertex poset of op (stratified case).
IncElem faceKernel(const OrientedPolytope& op, const GradedPoset& x);

// The face-poset kernel lambda_FG = (x-1)^(dim G - dim F).
IncElem lambdaKernel(const FacePoset& fp);

IncElem reducedKernel(const IncElem& kappa);

// H = -(reduced kappa)^{-1}; asserts both defining recursions exactly.
IncElem chowPolynomial(const IncElem& kappa);

struct KLSPair {
  IncElem f; // right: rev(f) = kappa * f
  IncElem g; // left:  rev(g) = g * kappa
};

KLSPair klsFunctions(const IncElem& kappa);

// h-polynomial of the dual polytope from an f-vector (counts from dim -1):
// sum_{i=0..d} f_i (x-1)^i.
IntPoly hPolynomialDual(const std::vector<int>& fVector, int d);

struct ChowDualityReport {
  bool allPass = true;
  // entries (v, w, pass, chow, hDual) for every interval v <= w of the poset
  struct Entry {
    int v, w;
    bool pass;
    IntPoly chow, hDual;
  };
  std::vector<Entry> entries;
};

// For every interval [v, w] of the vertex poset: restrict to
// F^+(v) cap F^-(w), build CH of the restriction, and compare the
// h-polynomial of its dual against the Chow polynomial of the face kernel.
ChowDualityReport verifyChowDuality(const OrientedPolytope& op);

} // namespace mpp
