#include "mpp/suite.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "mpp/errors.hpp"
#include "mpp/posetalg.hpp"

namespace mpp {

std::vector<std::string> corpusExpressions(bool full) {
  std::vector<std::string> c = {
      "simplex(1)", "simplex(2)", "simplex(3)",
      "cube(1)",    "cube(2)",    "cube(3)",
      "ngon(3)",    "ngon(4)",    "ngon(5)",    "ngon(6)",
      "quadSep",    "quadAdj",    "nostrat5",
      "trapezohedron(3)", "trapezohedron(4)",
      "prod(simplex(1),simplex(1))",
      "pyrMin(quadSep)",
  };
  if (full) {
    c.insert(c.end(), {
        "simplex(4)", "ngon(7)", "ngon(8)",
        "prod(simplex(2),simplex(1))",
        "prod(cube(2),simplex(1))",
        "prod(simplex(3),simplex(1))",
        "pyrMax(pyrMin(quadSep))",
        "pyrMin(pyrMin(quadSep))",
        "trapezohedron(5)",
    });
  }
  return c;
}

namespace {

struct Ctx {
  std::string expr;
  OrientedPolytope op;
  BBData bb;
  VertexRelations rel;
  EquivalenceReport rep;
  IrreducibilityResult ai;
};

void checkMember(const Ctx& c, std::vector<CheckResult>& out, bool full) {
  const auto& l = c.op.base.lattice;
  const int n = c.op.numVertices();
  auto add = [&](const std::string& what, bool ok, const std::string& detail = "") {
    out.push_back({c.expr + ": " + what, ok, ok ? "" : detail});
  };

  // hull engine sanity
  try {
    checkLatticeInvariants(c.op.base);
    add("lattice invariants", true);
  } catch (const Error& e) {
    add("lattice invariants", false, e.what());
  }

  // stratification duality
  auto sMinus = isStratification(c.op, c.bb, Side::Minus);
  auto sPlus = isStratification(c.op, c.bb, Side::Plus);
  add("stratification duality", sMinus.isStratification == sPlus.isStratification,
      "minus/plus verdicts differ");

  // containments O <= B- cap B+, B-,B+ <= C; C = transitive closure of O
  {
    bool ok = true;
    std::string why;
    for (int v = 0; v < n && ok; ++v)
      for (int w = 0; w < n && ok; ++w) {
        if (c.rel.O[v][w] && !(c.rel.Bminus[v][w] && c.rel.Bplus[v][w])) {
          ok = false;
          why = "O not within B- cap B+";
        }
        if ((c.rel.Bminus[v][w] || c.rel.Bplus[v][w]) && !c.rel.C[v][w]) {
          ok = false;
          why = "Bruhat relation escapes C";
        }
      }
    // transitive closure of O equals C
    auto clos = c.rel.O;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (clos[i][k])
          for (int j = 0; j < n; ++j)
            if (clos[k][j]) clos[i][j] = true;
    if (clos != c.rel.C) {
      ok = false;
      why = "transitive closure of O differs from C";
    }
    add("relation containments and closure", ok, why);
  }

  // dimension law
  {
    bool ok = true;
    std::string why;
    for (int v = 0; v < n; ++v) {
      int s = c.bb.fminusDim[v] + c.bb.fplusDim[v];
      if (s < c.op.dim()) {
        ok = false;
        why = "dim F^- + dim F^+ < dim P at vertex " + std::to_string(v);
      }
      if (sMinus.isStratification && s != c.op.dim()) {
        ok = false;
        why = "stratified but dim F^- + dim F^+ != dim P at vertex " + std::to_string(v);
      }
    }
    add("dimension law", ok, why);
  }

  // irreducible closures => the eight conditions agree
  if (c.ai.holds) {
    bool allSame = true;
    for (int i = 1; i < 8; ++i)
      if (c.rep.cond[i] != c.rep.cond[0]) allSame = false;
    add("eight-condition vector constant under irreducibility", allSame, "vector is mixed");
  }

  if (!c.rep.allTrue()) return;

  // ---- from here on the stratification assumption holds ----

  // purity and extreme membership
  {
    bool ok = true;
    std::string why;
    for (int v = 0; v < n && ok; ++v) {
      for (int m : c.bb.fminusMaximal[v]) {
        if (l.face(m).dim != c.bb.fminusDim[v]) { ok = false; why = "F^- not pure"; }
        const auto& vs = l.face(m).verts;
        if (!std::binary_search(vs.begin(), vs.end(), c.op.source)) {
          ok = false;
          why = "maximal face of F^- misses the source";
        }
      }
      for (int m : c.bb.fplusMaximal[v]) {
        if (l.face(m).dim != c.bb.fplusDim[v]) { ok = false; why = "F^+ not pure"; }
        const auto& vs = l.face(m).verts;
        if (!std::binary_search(vs.begin(), vs.end(), c.op.sink)) {
          ok = false;
          why = "maximal face of F^+ misses the sink";
        }
      }
    }
    add("purity and extreme membership", ok, why);
  }

  // maximal saturated chains in every face have length dim F
  {
    bool ok = true;
    std::string why;
    for (int fi = 0; fi < l.numFaces() && ok; ++fi) {
      const Face& f = l.face(fi);
      if (f.dim < 1) continue;
      // directed edges within the face, saturated = no longer route inside
      std::vector<std::pair<int, int>> inEdges;
      for (auto& [a, b] : c.op.directedEdges)
        if (std::binary_search(f.verts.begin(), f.verts.end(), a) &&
            std::binary_search(f.verts.begin(), f.verts.end(), b))
          inEdges.push_back({a, b});
      std::map<int, std::vector<int>> adj;
      for (auto& [a, b] : inEdges) adj[a].push_back(b);
      // longest directed path within the face, from the face min to max
      std::map<int, int> longest;
      std::vector<int> order(f.verts.begin(), f.verts.end());
      std::sort(order.begin(), order.end(), [&](int x, int y) {
        return c.op.ellValues[x] < c.op.ellValues[y];
      });
      for (int v : order) longest[v] = 0;
      for (int v : order)
        for (int w : adj[v]) longest[w] = std::max(longest[w], longest[v] + 1);
      // every maximal saturated chain has length dim F; the longest chain is
      // saturated after refinement, so it must equal dim F, and a greedy
      // minimal extension must too
      if (longest[c.op.faceMax[fi]] != f.dim) {
        ok = false;
        why = "longest chain in a face differs from its dimension";
      }
      // minimal saturated chain: follow covers of the restriction
      InducedPolytope sub = inducedOnFace(c.op, fi);
      BBData sbb = bbData(sub.op);
      VertexRelations srel = relations(sub.op, sbb);
      int steps = 0, cur = sub.op.source;
      const int sn = sub.op.numVertices();
      while (cur != sub.op.sink && steps <= sn) {
        int next = -1;
        for (int w2 = 0; w2 < sn; ++w2) {
          if (w2 == cur || !srel.C[cur][w2]) continue;
          bool cover = true;
          for (int z = 0; z < sn; ++z)
            if (z != cur && z != w2 && srel.C[cur][z] && srel.C[z][w2]) { cover = false; break; }
          if (cover) { next = w2; break; }
        }
        if (next < 0) break;
        cur = next;
        ++steps;
      }
      if (steps != f.dim) {
        ok = false;
        why = "saturated chain length differs from face dimension";
      }
    }
    add("saturated chain lengths", ok, why);
  }

  // heredity: every positive-dimensional face inherits the assumption
  {
    bool ok = true;
    for (int fi = 0; fi < l.numFaces() && ok; ++fi) {
      if (l.face(fi).dim < 1) continue;
      InducedPolytope sub = inducedOnFace(c.op, fi);
      BBData sbb = bbData(sub.op);
      VertexRelations srel = relations(sub.op, sbb);
      EquivalenceReport srep = equivalenceReport(sub.op, sbb, srel);
      if (!srep.allTrue()) ok = false;
      // restriction lemma: F^-_G(w) = F^-_P(w) cap G
      const auto& sl = sub.op.base.lattice;
      for (int w = 0; w < sub.op.numVertices() && ok; ++w) {
        auto sVerts = sbb.fminusVertices(sl, w);
        std::vector<int> mapped;
        for (int x : sVerts) mapped.push_back(sub.vertexMap[x]);
        std::sort(mapped.begin(), mapped.end());
        auto pVerts = c.bb.fminusVertices(l, sub.vertexMap[w]);
        auto expect = vertsIntersect(pVerts, l.face(fi).verts);
        if (mapped != expect) ok = false;
      }
    }
    add("heredity and restriction lemma", ok, "a face violates heredity");
  }

  // 2-face census for simple polytopes
  if (isSimplePolytope(c.op.base)) {
    bool ok = true;
    for (int fi : l.facesOfDim(2)) {
      size_t sz = l.face(fi).verts.size();
      if (sz != 3 && sz != 4) ok = false;
    }
    add("2-face census (simple, stratified)", ok, "a 2-face is an n-gon with n >= 5");
  }

  if (c.op.dim() < 1) return;
  // CH facet bound on dimensions of chains
  CHLattice ch = chFaces(c.op);
  {
    bool ok = true;
    for (const auto& chain : ch.chains) {
      int sum = 0;
      for (int fi : chain.faceSeq) sum += l.face(fi).dim;
      if (sum > c.op.dim()) ok = false;
    }
    add("chain dimension bound", ok, "sum of member dims exceeds dim P");
  }

  // facet classification is checked inside chFacets
  try {
    chFacets(c.op, ch);
    add("CH facet classification", true);
  } catch (const Error& e) {
    add("CH facet classification", false, e.what());
  }

  // edges of CH have exactly one 2-dimensional member and path endpoints
  // differing inside it
  {
    bool ok = true;
    for (int ei : ch.chainsOfDim(1)) {
      const auto& chain = ch.chains[ei];
      int twos = 0;
      for (int fi : chain.faceSeq) {
        int d = l.face(fi).dim;
        if (d == 2) ++twos;
        else if (d != 1) ok = false;
      }
      if (twos != 1) ok = false;
      std::vector<int> ends;
      for (auto& [lo, hi] : ch.covers)
        if (hi == ei && ch.chains[lo].dim == 0) ends.push_back(lo);
      if (ends.size() != 2) { ok = false; continue; }
      // symmetric difference of the two paths sits inside the 2-face
      std::set<int> p0(ch.chains[ends[0]].faceSeq.begin(), ch.chains[ends[0]].faceSeq.end());
      std::set<int> p1(ch.chains[ends[1]].faceSeq.begin(), ch.chains[ends[1]].faceSeq.end());
      int twoFace = -1;
      for (int fi : chain.faceSeq)
        if (l.face(fi).dim == 2) twoFace = fi;
      for (int fi : p0)
        if (!p1.count(fi) && !vertsSubset(l.face(fi).verts, l.face(twoFace).verts)) ok = false;
      for (int fi : p1)
        if (!p0.count(fi) && !vertsSubset(l.face(fi).verts, l.face(twoFace).verts)) ok = false;
    }
    add("CH edge structure", ok, "an edge chain is malformed");
  }

  // covers computed by the merge/enlargement rule agree with the lattice
  {
    bool ok = true;
    for (int ci = 0; ci < static_cast<int>(ch.chains.size()) && ok; ++ci) {
      auto covers = chCovers(c.op, ch.chains[ci]);
      std::set<std::vector<int>> got;
      for (const auto& cc : covers) got.insert(cc.faceSeq);
      std::set<std::vector<int>> want;
      for (auto& [lo, hi] : ch.covers)
        if (lo == ci) want.insert(ch.chains[hi].faceSeq);
      if (got != want) ok = false;
    }
    add("CH covers agree with merge/enlargement rule", ok, "cover sets differ");
  }

  // consecutive directed edges extend to a 2-face
  {
    bool ok = true;
    for (auto& [a, b] : c.op.directedEdges)
      for (auto& [b2, d] : c.op.directedEdges) {
        if (b2 != b) continue;
        int e1 = l.indexOf(std::vector<int>{std::min(a, b), std::max(a, b)});
        int e2 = l.indexOf(std::vector<int>{std::min(b2, d), std::max(b2, d)});
        try {
          joinFaces(c.op, e1, e2);
        } catch (const Error&) {
          ok = false;
        }
      }
    add("consecutive edges extend to a 2-face", ok, "join failed");
  }

  // triangle bound when the source-sink edge exists
  {
    std::vector<int> ssEdge = {std::min(c.op.source, c.op.sink), std::max(c.op.source, c.op.sink)};
    if (l.indexOf(ssEdge) >= 0) {
      int t = countTrianglesOver(c.op, c.op.source, c.op.sink);
      add("triangle bound at the source-sink edge", t >= c.op.dim() - 1,
          "only " + std::to_string(t) + " triangles");
    }
  }

  // interval dimension law
  {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      for (int w = 0; w < n; ++w) {
        if (!c.rel.O[v][w]) continue;
        int mid = interfaceDim(c.op, c.bb, v, w); // dim F^-(w) cap F^+(v)
        if (c.bb.fminusDim[v] + mid + c.bb.fplusDim[w] != c.op.dim()) { ok = false; break; }
      }
    add("interval dimension law", ok, "dim F^-(u) + dim interval + dim F^+(w) != dim P");
  }

  // simplicity report consistency (the four verdicts must agree)
  SimplicityReport sr;
  try {
    sr = chIsSimple(c.op, ch);
    add("simplicity conditions agree", true);
  } catch (const Error& e) {
    add("simplicity conditions agree", false, e.what());
    return;
  }

  // Minkowski-slice oracle
  {
    bool ok = chVerify(c.op);
    add("Minkowski oracle lattice isomorphism", ok, "combinatorial and geometric CH differ");
  }

  // kernel axiom and KLS identities when CH is simple
  {
    VertexPoset vp = vertexPoset(c.op, c.bb, c.rel);
    GradedPoset x = posetOfVertexPoset(vp);
    IncElem kappa = faceKernel(c.op, x);
    if (sr.simple) {
      KernelCheck kc = isKernel(kappa);
      add("paper kernel is a kernel (simple CH)", kc.isKernel, kc.reason);
      try {
        klsFunctions(kappa);
        add("KLS identities", true);
      } catch (const Error& e) {
        add("KLS identities", false, e.what());
      }
    }
    // main theorem on every interval
    ChowDualityReport mt = verifyChowDuality(c.op);
    std::string detail;
    if (!mt.allPass)
      for (const auto& e : mt.entries)
        if (!e.pass) {
          detail = "interval (" + std::to_string(e.v) + "," + std::to_string(e.w) + "): H=" +
                   e.chow.toString() + " vs h=" + e.hDual.toString();
          break;
        }
    add("main theorem (Chow = dual h) on all intervals", mt.allPass, detail);

    if (sr.simple) {
      IntPoly h = chowPolynomial(kappa).at(c.op.source, c.op.sink);
      ShapeFlags fl = shapeChecks(h, c.op.dim() - 1);
      add("H palindromic and unimodal (simple CH)", fl.palindromic && fl.unimodal,
          "H = " + h.toString());
    }
  }
  (void)full;
}

} // namespace

std::vector<CheckResult> runSuite(bool full) {
  std::vector<CheckResult> out;
  for (const auto& expr : corpusExpressions(full)) {
    Ctx c;
    c.expr = expr;
    try {
      c.op = buildOriented(expr);
      c.bb = bbData(c.op);
      c.rel = relations(c.op, c.bb);
      c.rep = equivalenceReport(c.op, c.bb, c.rel);
      c.ai = irreducibility(c.bb);
    } catch (const Error& e) {
      out.push_back({expr + ": build", false, e.what()});
      continue;
    }
    checkMember(c, out, full);
  }
  return out;
}

} // namespace mpp
