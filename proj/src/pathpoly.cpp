#include "mpp/pathpoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "mpp/errors.hpp"

namespace mpp {

int CHLattice::indexOf(const MonotoneChain& c) const {
  auto it = std::lower_bound(chains.begin(), chains.end(), c);
  if (it == chains.end() || !(*it == c)) return -1;
  return static_cast<int>(it - chains.begin());
}

std::vector<int> CHLattice::chainsOfDim(int d) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(chains.size()); ++i)
    if (chains[i].dim == d) out.push_back(i);
  return out;
}

void requireStratified(const OrientedPolytope& op) {
  BBData bb = bbData(op);
  VertexRelations rel = relations(op, bb);
  EquivalenceReport rep = equivalenceReport(op, bb, rel);
  require(rep.allTrue(), ErrKind::NotStratified,
          "the stratification assumption fails for this input");
}

namespace {

// is every member of a a subface of some member of b?
bool chainLeq(const FaceLattice& l, const MonotoneChain& a, const MonotoneChain& b) {
  for (int ga : a.faceSeq) {
    bool in = false;
    for (int fb : b.faceSeq)
      if (vertsSubset(l.face(ga).verts, l.face(fb).verts)) { in = true; break; }
    if (!in) return false;
  }
  return true;
}

} // namespace

CHLattice chFaces(const OrientedPolytope& op) {
  require(op.dim() >= 1, ErrKind::DegenerateInput, "chFaces needs dim >= 1");
  requireStratified(op);

  const auto& l = op.base.lattice;
  // face-hop graph: from each vertex, positive-dimensional faces with that
  // minimal vertex move us to their maximal vertex
  std::vector<std::vector<int>> hops(op.numVertices());
  for (int fi = 0; fi < l.numFaces(); ++fi)
    if (l.face(fi).dim >= 1) hops[op.faceMin[fi]].push_back(fi);

  CHLattice out;
  out.dim = op.dim() - 1;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int v) {
    if (v == op.sink && !cur.empty()) {
      MonotoneChain c;
      c.faceSeq = cur;
      c.dim = -static_cast<int>(cur.size());
      for (int fi : cur) c.dim += l.face(fi).dim;
      out.chains.push_back(std::move(c));
      // chains may continue past the sink only if some face starts there,
      // which cannot happen (the sink has no outgoing structure); stop.
      return;
    }
    for (int fi : hops[v]) {
      cur.push_back(fi);
      rec(op.faceMax[fi]);
      cur.pop_back();
    }
  };
  rec(op.source);

  std::sort(out.chains.begin(), out.chains.end());

  // dimension sanity: 0 .. dimP-1 with a unique top
  out.fVector.assign(op.dim() + 1, 0);
  for (const auto& c : out.chains) {
    require(c.dim >= 0 && c.dim <= out.dim, ErrKind::Internal, "chain dimension out of range");
    ++out.fVector[c.dim + 1];
  }
  out.fVector[0] = 1; // empty face
  require(out.fVector[out.dim + 1] == 1, ErrKind::Internal, "CH top face not unique");

  const int n = static_cast<int>(out.chains.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (out.chains[i].dim + 1 != out.chains[j].dim) continue;
      if (chainLeq(l, out.chains[i], out.chains[j])) out.covers.push_back({i, j});
    }
  return out;
}

std::vector<std::vector<int>> chVertices(const OrientedPolytope& op) {
  requireStratified(op);
  std::vector<std::vector<int>> adj(op.numVertices());
  for (auto& [a, b] : op.directedEdges) adj[a].push_back(b);
  for (auto& v : adj) std::sort(v.begin(), v.end());

  std::vector<std::vector<int>> paths;
  std::vector<int> cur{op.source};
  std::function<void(int)> rec = [&](int v) {
    if (v == op.sink) {
      if (cur.size() >= 2) paths.push_back(cur);
      return;
    }
    for (int w : adj[v]) {
      cur.push_back(w);
      rec(w);
      cur.pop_back();
    }
  };
  rec(op.source);
  std::sort(paths.begin(), paths.end());
  return paths;
}

CHFacets chFacets(const OrientedPolytope& op, const CHLattice& lattice) {
  requireStratified(op);
  const auto& l = op.base.lattice;
  BBData bb = bbData(op);
  CHFacets out;

  for (int fi : l.facetIndices()) {
    const auto& vs = l.face(fi).verts;
    if (std::binary_search(vs.begin(), vs.end(), op.source) &&
        std::binary_search(vs.begin(), vs.end(), op.sink)) {
      MonotoneChain c;
      c.faceSeq = {fi};
      c.dim = l.face(fi).dim - 1;
      out.type1.push_back(std::move(c));
    }
  }
  for (int v = 0; v < op.numVertices(); ++v) {
    if (v == op.source || v == op.sink) continue;
    int fm = bb.fminusMaximal[v][0];
    int fp = bb.fplusMaximal[v][0];
    MonotoneChain c;
    c.faceSeq = {fm, fp};
    c.dim = l.face(fm).dim + l.face(fp).dim - 2;
    out.type2.push_back(std::move(c));
  }

  // these must be exactly the maximal proper nonempty faces of CH(P)
  std::set<std::vector<int>> got;
  for (const auto& c : out.type1) got.insert(c.faceSeq);
  for (const auto& c : out.type2) got.insert(c.faceSeq);
  std::set<std::vector<int>> want;
  for (const auto& c : lattice.chains)
    if (c.dim == lattice.dim - 1) want.insert(c.faceSeq);
  require(got == want, ErrKind::Internal,
          "facet classification disagrees with the assembled lattice");
  return out;
}

int joinFaces(const OrientedPolytope& op, int f1, int f2) {
  const auto& l = op.base.lattice;
  require(op.faceMax[f1] == op.faceMin[f2], ErrKind::DegenerateInput,
          "joinFaces: faces are not linked max-to-min");
  require(l.face(f1).dim >= 1 && l.face(f2).dim >= 1, ErrKind::DegenerateInput,
          "joinFaces: members must be positive-dimensional");
  std::vector<int> u;
  std::set_union(l.face(f1).verts.begin(), l.face(f1).verts.end(), l.face(f2).verts.begin(),
                 l.face(f2).verts.end(), std::back_inserter(u));
  int j = l.minimalFaceContaining(u);
  require(l.face(j).dim == l.face(f1).dim + l.face(f2).dim, ErrKind::JoinDimensionMismatch,
          "join of linked faces has unexpected dimension");
  require(op.faceMin[j] == op.faceMin[f1] && op.faceMax[j] == op.faceMax[f2], ErrKind::Internal,
          "join endpoints mismatch");
  return j;
}

std::vector<MonotoneChain> chCovers(const OrientedPolytope& op, const MonotoneChain& chain) {
  requireStratified(op);
  const auto& l = op.base.lattice;
  std::set<MonotoneChain> out;

  auto chainDim = [&](const std::vector<int>& seq) {
    int d = -static_cast<int>(seq.size());
    for (int fi : seq) d += l.face(fi).dim;
    return d;
  };

  // merges of consecutive members
  for (size_t i = 0; i + 1 < chain.faceSeq.size(); ++i) {
    std::vector<int> seq;
    for (size_t j = 0; j < chain.faceSeq.size(); ++j) {
      if (j == i) seq.push_back(joinFaces(op, chain.faceSeq[i], chain.faceSeq[i + 1]));
      else if (j != i + 1) seq.push_back(chain.faceSeq[j]);
    }
    MonotoneChain c;
    c.faceSeq = std::move(seq);
    c.dim = chainDim(c.faceSeq);
    out.insert(std::move(c));
  }

  // single-member enlargements with the same endpoints
  for (size_t i = 0; i < chain.faceSeq.size(); ++i) {
    int fi = chain.faceSeq[i];
    for (int up : l.coveredBy(fi)) {
      if (l.face(up).dim != l.face(fi).dim + 1) continue;
      if (op.faceMin[up] != op.faceMin[fi] || op.faceMax[up] != op.faceMax[fi]) continue;
      MonotoneChain c;
      c.faceSeq = chain.faceSeq;
      c.faceSeq[i] = up;
      c.dim = chainDim(c.faceSeq);
      out.insert(std::move(c));
    }
  }
  return {out.begin(), out.end()};
}

int countTrianglesOver(const OrientedPolytope& op, int v, int w) {
  const auto& l = op.base.lattice;
  int count = 0;
  for (int fi : l.facesOfDim(2)) {
    const auto& vs = l.face(fi).verts;
    if (vs.size() != 3) continue;
    if (!std::binary_search(vs.begin(), vs.end(), v) ||
        !std::binary_search(vs.begin(), vs.end(), w))
      continue;
    int x = -1;
    for (int u : vs)
      if (u != v && u != w) x = u;
    if (op.ellValues[v] < op.ellValues[x] && op.ellValues[x] < op.ellValues[w]) ++count;
  }
  return count;
}

int interfaceDim(const OrientedPolytope& op, const BBData& bb, int v, int w) {
  const auto& l = op.base.lattice;
  require(bb.fminusMaximal[w].size() == 1 && bb.fplusMaximal[v].size() == 1, ErrKind::Internal,
          "interfaceDim requires irreducible closures");
  auto g = vertsIntersect(l.face(bb.fminusMaximal[w][0]).verts,
                          l.face(bb.fplusMaximal[v][0]).verts);
  int idx = l.indexOf(g);
  require(idx >= 0, ErrKind::Internal, "F^-(w) cap F^+(v) is not a face");
  return l.face(idx).dim;
}

SimplicityReport chIsSimple(const OrientedPolytope& op, const CHLattice& lattice) {
  requireStratified(op);
  const auto& l = op.base.lattice;
  BBData bb = bbData(op);
  SimplicityReport rep;

  // (1) every CH vertex lies on exactly dim P - 1 edges
  rep.verdict[0] = true;
  {
    std::vector<int> degree(lattice.chains.size(), 0);
    for (auto& [lo, hi] : lattice.covers)
      if (lattice.chains[lo].dim == 0 && lattice.chains[hi].dim == 1) ++degree[lo];
    for (int ci : lattice.chainsOfDim(0))
      if (degree[ci] != op.dim() - 1) {
        rep.verdict[0] = false;
        rep.detail = "CH vertex with degree " + std::to_string(degree[ci]);
        break;
      }
  }

  // (2) triangle counts over each directed edge
  rep.verdict[1] = true;
  for (auto& [v, w] : op.directedEdges) {
    int triangles = countTrianglesOver(op, v, w);
    int need = interfaceDim(op, bb, v, w) - 1;
    if (triangles != need) {
      rep.verdict[1] = false;
      if (rep.detail.empty())
        rep.detail = "edge (" + std::to_string(v) + "," + std::to_string(w) + "): " +
                     std::to_string(triangles) + " triangles vs " + std::to_string(need);
      break;
    }
  }

  // (3) stars of directed edges in F^-(w) cap F^+(v) are simple
  rep.verdict[2] = true;
  for (auto& [v, w] : op.directedEdges) {
    auto dvw = vertsIntersect(l.face(bb.fminusMaximal[w][0]).verts,
                              l.face(bb.fplusMaximal[v][0]).verts);
    int dIdx = l.indexOf(dvw);
    require(dIdx >= 0, ErrKind::Internal, "edge interface is not a face");
    int twoFaces = 0;
    for (int fi : l.facesOfDim(2)) {
      const auto& vs = l.face(fi).verts;
      if (std::binary_search(vs.begin(), vs.end(), v) &&
          std::binary_search(vs.begin(), vs.end(), w) && vertsSubset(vs, dvw))
        ++twoFaces;
    }
    if (twoFaces != l.face(dIdx).dim - 1) {
      rep.verdict[2] = false;
      break;
    }
  }

  // (4) stars of positive-dimensional faces in F^+(min) cap F^-(max) are simple
  rep.verdict[3] = true;
  for (int fi = 0; fi < l.numFaces() && rep.verdict[3]; ++fi) {
    if (l.face(fi).dim < 1) continue;
    int v = op.faceMin[fi], w = op.faceMax[fi];
    auto dvw = vertsIntersect(l.face(bb.fminusMaximal[w][0]).verts,
                              l.face(bb.fplusMaximal[v][0]).verts);
    int dIdx = l.indexOf(dvw);
    require(dIdx >= 0, ErrKind::Internal, "face interface is not a face");
    int coversCount = 0;
    for (int up : l.coveredBy(fi))
      if (vertsSubset(l.face(up).verts, dvw)) ++coversCount;
    if (coversCount != l.face(dIdx).dim - l.face(fi).dim) rep.verdict[3] = false;
  }

  rep.simple = rep.verdict[0];
  for (int i = 1; i < 4; ++i)
    require(rep.verdict[i] == rep.simple, ErrKind::Internal,
            "simplicity conditions disagree: " + std::to_string(i));
  return rep;
}

Polytope chGeometric(const OrientedPolytope& op) {
  require(op.dim() >= 1, ErrKind::DegenerateInput, "chGeometric needs dim >= 1");
  std::vector<Rat> vals = op.ellValues;
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());

  std::vector<Polytope> slices;
  for (size_t i = 0; i + 1 < vals.size(); ++i) {
    Rat mid = (vals[i] + vals[i + 1]) / 2;
    slices.push_back(sliceAtLevel(op.base, op.ell, mid));
  }
  Polytope result = minkowskiSum(slices);
  require(result.dim == op.dim() - 1, ErrKind::Internal,
          "monotone path polytope has wrong dimension");
  return result;
}

AbstractLattice abstractOf(const CHLattice& l) {
  AbstractLattice a;
  a.dims.push_back(-1); // empty face at index 0
  for (const auto& c : l.chains) a.dims.push_back(c.dim);
  for (auto& [lo, hi] : l.covers) a.covers.push_back({lo + 1, hi + 1});
  for (int i = 0; i < static_cast<int>(l.chains.size()); ++i)
    if (l.chains[i].dim == 0) a.covers.push_back({0, i + 1});
  return a;
}

bool chVerify(const OrientedPolytope& op) {
  CHLattice comb = chFaces(op);
  Polytope geom = chGeometric(op);
  return latticeIsomorphic(abstractOf(comb), abstractOf(geom.lattice)).isomorphic;
}

} // namespace mpp
