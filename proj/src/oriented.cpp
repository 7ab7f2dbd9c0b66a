#include "mpp/oriented.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mpp/errors.hpp"

namespace mpp {

OrientedPolytope orient(Polytope p, LinForm ell) {
  require(p.dim >= 0, ErrKind::DegenerateInput, "orient: empty polytope");
  OrientedPolytope op;
  op.ellValues.reserve(p.vertices.size());
  for (const auto& v : p.vertices) op.ellValues.push_back(ell.eval(v));

  for (int ei : p.lattice.facesOfDim(1)) {
    const auto& e = p.lattice.face(ei).verts;
    if (op.ellValues[e[0]] == op.ellValues[e[1]])
      fail(ErrKind::EllConstantOnEdge,
           "ell constant on edge (" + std::to_string(e[0]) + "," + std::to_string(e[1]) + ")");
    if (op.ellValues[e[0]] < op.ellValues[e[1]])
      op.directedEdges.push_back({e[0], e[1]});
    else
      op.directedEdges.push_back({e[1], e[0]});
  }

  Face minF = faceOfLinForm(p, ell, Sense::Min);
  Face maxF = faceOfLinForm(p, ell, Sense::Max);
  require(minF.dim == 0, ErrKind::NonSimpleExtremum, "ell-minimum face is positive-dimensional");
  require(maxF.dim == 0, ErrKind::NonSimpleExtremum, "ell-maximum face is positive-dimensional");
  op.source = minF.verts[0];
  op.sink = maxF.verts[0];

  // per-face unique extremes (unique because no edge is level)
  const auto& l = p.lattice;
  op.faceMin.assign(l.numFaces(), -1);
  op.faceMax.assign(l.numFaces(), -1);
  for (int fi = 0; fi < l.numFaces(); ++fi) {
    const auto& f = l.face(fi);
    if (f.dim < 0) continue;
    int mn = f.verts[0], mx = f.verts[0];
    for (int v : f.verts) {
      if (op.ellValues[v] < op.ellValues[mn]) mn = v;
      if (op.ellValues[v] > op.ellValues[mx]) mx = v;
    }
    for (int v : f.verts) {
      require(v == mn || op.ellValues[v] != op.ellValues[mn], ErrKind::Internal,
              "tied face minimum survived edge checks");
      require(v == mx || op.ellValues[v] != op.ellValues[mx], ErrKind::Internal,
              "tied face maximum survived edge checks");
    }
    op.faceMin[fi] = mn;
    op.faceMax[fi] = mx;
  }

  op.base = std::move(p);
  op.ell = std::move(ell);
  return op;
}

bool BBData::faceInFminus(const FaceLattice& l, int faceIdx, int v) const {
  for (int m : fminusMaximal[v])
    if (vertsSubset(l.face(faceIdx).verts, l.face(m).verts)) return true;
  return false;
}

bool BBData::faceInFplus(const FaceLattice& l, int faceIdx, int v) const {
  for (int m : fplusMaximal[v])
    if (vertsSubset(l.face(faceIdx).verts, l.face(m).verts)) return true;
  return false;
}

std::vector<int> BBData::fminusVertices(const FaceLattice& l, int v) const {
  std::set<int> s;
  for (int m : fminusMaximal[v]) {
    const auto& vs = l.face(m).verts;
    s.insert(vs.begin(), vs.end());
  }
  return {s.begin(), s.end()};
}

std::vector<int> BBData::fplusVertices(const FaceLattice& l, int v) const {
  std::set<int> s;
  for (int m : fplusMaximal[v]) {
    const auto& vs = l.face(m).verts;
    s.insert(vs.begin(), vs.end());
  }
  return {s.begin(), s.end()};
}

namespace {

std::vector<int> maximalMembers(const FaceLattice& l, const std::vector<int>& members) {
  std::vector<int> out;
  for (int a : members) {
    bool maximal = true;
    for (int b : members) {
      if (a == b) continue;
      if (vertsSubset(l.face(a).verts, l.face(b).verts)) { maximal = false; break; }
    }
    if (maximal) out.push_back(a);
  }
  return out;
}

} // namespace

BBData bbData(const OrientedPolytope& op) {
  const auto& l = op.base.lattice;
  const int n = op.numVertices();
  BBData bb;
  bb.fminusFaces.assign(n, {});
  bb.fplusFaces.assign(n, {});
  bb.fminusDim.assign(n, 0);
  bb.fplusDim.assign(n, 0);
  for (int fi = 0; fi < l.numFaces(); ++fi) {
    if (l.face(fi).dim < 0) continue;
    bb.fminusFaces[op.faceMax[fi]].push_back(fi);
    bb.fplusFaces[op.faceMin[fi]].push_back(fi);
  }
  bb.fminusMaximal.assign(n, {});
  bb.fplusMaximal.assign(n, {});
  for (int v = 0; v < n; ++v) {
    bb.fminusMaximal[v] = maximalMembers(l, bb.fminusFaces[v]);
    bb.fplusMaximal[v] = maximalMembers(l, bb.fplusFaces[v]);
    for (int fi : bb.fminusFaces[v]) bb.fminusDim[v] = std::max(bb.fminusDim[v], l.face(fi).dim);
    for (int fi : bb.fplusFaces[v]) bb.fplusDim[v] = std::max(bb.fplusDim[v], l.face(fi).dim);
  }
  return bb;
}

VertexRelations relations(const OrientedPolytope& op, const BBData& bb) {
  const auto& l = op.base.lattice;
  const int n = op.numVertices();
  VertexRelations r;
  r.O.assign(n, std::vector<bool>(n, false));
  r.Bminus.assign(n, std::vector<bool>(n, false));
  r.Bplus.assign(n, std::vector<bool>(n, false));
  r.C.assign(n, std::vector<bool>(n, false));
  r.witness.assign(n, std::vector<int>(n, -1));

  // O: scan faces in canonical order, keep the first witness
  for (int fi = 0; fi < l.numFaces(); ++fi) {
    if (l.face(fi).dim < 0) continue;
    int v = op.faceMin[fi], w = op.faceMax[fi];
    if (!r.O[v][w]) {
      r.O[v][w] = true;
      r.witness[v][w] = fi;
    }
  }

  // Bruhat relations via membership in the closures
  for (int w = 0; w < n; ++w) {
    for (int v : bb.fminusVertices(l, w)) r.Bminus[v][w] = true;
    for (int x : bb.fplusVertices(l, w)) r.Bplus[w][x] = true;
  }

  // C: reflexive-transitive closure of the directed edges
  for (int v = 0; v < n; ++v) r.C[v][v] = true;
  for (auto& [a, b] : op.directedEdges) r.C[a][b] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (r.C[i][k])
        for (int j = 0; j < n; ++j)
          if (r.C[k][j]) r.C[i][j] = true;
  return r;
}

StratificationResult isStratification(const OrientedPolytope& op, const BBData& bb, Side side) {
  const auto& l = op.base.lattice;
  const int n = op.numVertices();
  StratificationResult res;
  for (int w = 0; w < n; ++w) {
    auto closVerts = (side == Side::Minus) ? bb.fminusVertices(l, w) : bb.fplusVertices(l, w);
    for (int v : closVerts) {
      // O^side(v) meets closure of O^side(w); need every face of F^side(v)
      // inside the closed union F^side(w).
      const auto& mem = (side == Side::Minus) ? bb.fminusMaximal[v] : bb.fplusMaximal[v];
      for (int g : mem) {
        bool inside = (side == Side::Minus) ? bb.faceInFminus(l, g, w) : bb.faceInFplus(l, g, w);
        if (!inside) {
          res.isStratification = false;
          res.v = v;
          res.w = w;
          res.face = g;
          return res;
        }
      }
    }
  }
  return res;
}

IrreducibilityResult irreducibility(const BBData& bb) {
  IrreducibilityResult r;
  for (int v = 0; v < static_cast<int>(bb.fminusMaximal.size()); ++v) {
    if (bb.fminusMaximal[v].size() != 1 || bb.fplusMaximal[v].size() != 1) {
      r.holds = false;
      r.violatingVertex = v;
      return r;
    }
  }
  return r;
}

namespace {

// downward closure (as a sorted face-index set) of the faces with min v, max w
std::vector<int> closedWitnessFaces(const OrientedPolytope& op, int v, int w) {
  const auto& l = op.base.lattice;
  std::set<int> out;
  for (int fi = 0; fi < l.numFaces(); ++fi) {
    if (l.face(fi).dim < 0) continue;
    if (op.faceMin[fi] != v || op.faceMax[fi] != w) continue;
    for (int gj = 0; gj < l.numFaces(); ++gj) {
      if (l.face(gj).dim < 0) continue;
      if (vertsSubset(l.face(gj).verts, l.face(fi).verts)) out.insert(gj);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<int> facesInBothClosures(const OrientedPolytope& op, const BBData& bb, int v, int w) {
  const auto& l = op.base.lattice;
  std::vector<int> out;
  for (int gj = 0; gj < l.numFaces(); ++gj) {
    if (l.face(gj).dim < 0) continue;
    if (bb.faceInFplus(l, gj, v) && bb.faceInFminus(l, gj, w)) out.push_back(gj);
  }
  return out;
}

} // namespace

EquivalenceReport equivalenceReport(const OrientedPolytope& op, const BBData& bb,
                                    const VertexRelations& rel) {
  const auto& l = op.base.lattice;
  const int n = op.numVertices();
  EquivalenceReport rep;

  auto strat = [&](Side s, int idx) {
    auto r = isStratification(op, bb, s);
    rep.cond[idx] = r.isStratification;
    if (!r.isStratification) {
      std::ostringstream os;
      os << "strata (" << r.v << ", " << r.w << "), face {";
      for (int x : l.face(r.face).verts) os << x << " ";
      os << "}";
      rep.witness[idx] = os.str();
    }
  };
  strat(Side::Minus, 0);
  strat(Side::Plus, 1);

  // (3) no F^-(v) has an incoming directed edge; (4) dual for F^+
  rep.cond[2] = true;
  rep.cond[3] = true;
  for (int v = 0; v < n && (rep.cond[2] || rep.cond[3]); ++v) {
    auto minusVerts = bb.fminusVertices(l, v);
    auto plusVerts = bb.fplusVertices(l, v);
    auto contains = [](const std::vector<int>& sorted, int x) {
      return std::binary_search(sorted.begin(), sorted.end(), x);
    };
    for (auto& [a, b] : op.directedEdges) {
      if (rep.cond[2] && contains(minusVerts, b) && !contains(minusVerts, a)) {
        rep.cond[2] = false;
        rep.witness[2] = "F^-(" + std::to_string(v) + ") has incoming edge (" +
                         std::to_string(a) + "," + std::to_string(b) + ")";
      }
      if (rep.cond[3] && contains(plusVerts, a) && !contains(plusVerts, b)) {
        rep.cond[3] = false;
        rep.witness[3] = "F^+(" + std::to_string(v) + ") has outgoing edge (" +
                         std::to_string(a) + "," + std::to_string(b) + ")";
      }
    }
  }

  // (5) O = C
  rep.cond[4] = true;
  for (int i = 0; i < n && rep.cond[4]; ++i)
    for (int j = 0; j < n; ++j)
      if (rel.O[i][j] != rel.C[i][j]) {
        rep.cond[4] = false;
        rep.witness[4] = "O and C differ at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        break;
      }

  // (6) O is a poset: reflexive, antisymmetric, transitive
  rep.cond[5] = true;
  for (int i = 0; i < n && rep.cond[5]; ++i) {
    if (!rel.O[i][i]) {
      rep.cond[5] = false;
      rep.witness[5] = "O not reflexive at " + std::to_string(i);
    }
    for (int j = 0; j < n && rep.cond[5]; ++j) {
      if (i != j && rel.O[i][j] && rel.O[j][i]) {
        rep.cond[5] = false;
        rep.witness[5] = "O not antisymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
      if (rel.O[i][j])
        for (int k = 0; k < n; ++k)
          if (rel.O[j][k] && !rel.O[i][k]) {
            rep.cond[5] = false;
            rep.witness[5] = "O not transitive: (" + std::to_string(i) + "," + std::to_string(j) +
                             "," + std::to_string(k) + ")";
            break;
          }
    }
  }

  // (7) O is a graded poset with rho(v) = dim F^-(v): poset + covers raise rho by 1
  rep.cond[6] = rep.cond[5];
  if (rep.cond[6]) {
    for (int i = 0; i < n && rep.cond[6]; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || !rel.O[i][j]) continue;
        bool cover = true;
        for (int k = 0; k < n; ++k)
          if (k != i && k != j && rel.O[i][k] && rel.O[k][j]) { cover = false; break; }
        if (cover && bb.fminusDim[j] != bb.fminusDim[i] + 1) {
          rep.cond[6] = false;
          rep.witness[6] = "cover (" + std::to_string(i) + "," + std::to_string(j) +
                           ") raises rho by " + std::to_string(bb.fminusDim[j] - bb.fminusDim[i]);
          break;
        }
      }
  } else {
    rep.witness[6] = "O is not a poset";
  }

  // (8) closure of O^+(v) cap O^-(w) equals F^+(v) cap F^-(w), as face sets
  rep.cond[7] = true;
  for (int v = 0; v < n && rep.cond[7]; ++v)
    for (int w = 0; w < n; ++w) {
      auto lhs = closedWitnessFaces(op, v, w);
      auto rhs = facesInBothClosures(op, bb, v, w);
      if (lhs != rhs) {
        rep.cond[7] = false;
        rep.witness[7] = "closure equality fails at (" + std::to_string(v) + "," +
                         std::to_string(w) + ")";
        break;
      }
    }

  return rep;
}

InducedPolytope inducedOnFace(const OrientedPolytope& op, int faceIdx) {
  const auto& l = op.base.lattice;
  const Face& g = l.face(faceIdx);
  require(g.dim >= 0, ErrKind::DegenerateInput, "inducedOnFace: empty face");

  InducedPolytope out;
  out.vertexMap = g.verts;
  std::vector<Point> pts;
  for (int v : g.verts) pts.push_back(op.base.vertices[v]);
  Polytope sub = polytopeFromVertices(std::move(pts));
  out.op = orient(std::move(sub), op.ell);
  return out;
}

VertexPoset vertexPoset(const OrientedPolytope& op, const BBData& bb, const VertexRelations& rel) {
  auto rep = equivalenceReport(op, bb, rel);
  require(rep.allTrue(), ErrKind::NotStratified,
          "vertex poset requires the stratification assumption");
  VertexPoset vp;
  vp.leq = rel.O;
  vp.rank = bb.fminusDim;
  require(vp.rank[op.sink] == op.dim(), ErrKind::Internal, "rank of sink must be dim P");
  return vp;
}

bool isSimplePolytope(const Polytope& p) {
  std::vector<int> deg(p.vertices.size(), 0);
  for (int ei : p.lattice.facesOfDim(1)) {
    for (int v : p.lattice.face(ei).verts) ++deg[v];
  }
  for (int d : deg)
    if (d != p.dim) return false;
  return true;
}

} // namespace mpp
