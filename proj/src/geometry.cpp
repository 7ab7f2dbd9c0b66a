#include "mpp/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <tuple>

#include "mpp/errors.hpp"

namespace mpp {

std::vector<int> vertsIntersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

int maxHullVertices() {
  if (const char* env = std::getenv("MONOPATH_MAX_VERTICES")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 32;
}

namespace {

struct FaceSortKey {
  bool operator()(const Face& a, const Face& b) const {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.verts < b.verts;
  }
};

// Canonical integral form of a hyperplane (normal, offset) in chart
// coordinates: cleared denominators, gcd 1, first nonzero entry positive.
std::pair<RatVec, Rat> canonicalHyperplane(RatVec normal, Rat offset) {
  Int l = 1;
  for (const auto& x : normal) l = lcm(l, ratDen(x));
  l = lcm(l, ratDen(offset));
  Int g = 0;
  for (auto& x : normal) { x *= l; g = gcd(g, ratNum(x)); }
  offset *= l;
  g = gcd(g, ratNum(offset));
  if (g == 0) g = 1;
  int sign = 0;
  for (const auto& x : normal)
    if (x != 0) { sign = x.sign(); break; }
  if (sign == 0 && offset != 0) sign = offset.sign();
  Rat f = Rat(sign < 0 ? -g : g);
  for (auto& x : normal) x /= f;
  offset /= f;
  return {std::move(normal), std::move(offset)};
}

} // namespace

class LatticeBuilder {
public:
  static FaceLattice build(int dim, std::vector<Face> faces,
                           std::vector<std::pair<int, int>> covers) {
    FaceLattice l;
    l.dim_ = dim;
    l.faces_ = std::move(faces);
    l.covers_ = std::move(covers);
    l.byDim_.assign(dim + 2, {});
    l.upAdj_.assign(l.faces_.size(), {});
    l.downAdj_.assign(l.faces_.size(), {});
    for (int i = 0; i < static_cast<int>(l.faces_.size()); ++i) {
      l.byVerts_[l.faces_[i].verts] = i;
      l.byDim_[l.faces_[i].dim + 1].push_back(i);
    }
    for (auto& [lo, hi] : l.covers_) {
      l.downAdj_[hi].push_back(lo);
      l.upAdj_[lo].push_back(hi);
    }
    return l;
  }
};

int FaceLattice::indexOf(const std::vector<int>& verts) const {
  auto it = byVerts_.find(verts);
  return it == byVerts_.end() ? -1 : it->second;
}

const std::vector<int>& FaceLattice::facesOfDim(int d) const {
  static const std::vector<int> empty;
  int idx = d + 1;
  if (idx < 0 || idx >= static_cast<int>(byDim_.size())) return empty;
  return byDim_[idx];
}

std::vector<int> FaceLattice::fVector() const {
  std::vector<int> f;
  for (int d = -1; d <= dim_; ++d) f.push_back(static_cast<int>(facesOfDim(d).size()));
  return f;
}

std::vector<int> FaceLattice::facetIndices() const { return facesOfDim(dim_ - 1); }

int FaceLattice::minimalFaceContaining(const std::vector<int>& verts) const {
  std::vector<int> cur = faces_[topFaceIndex()].verts;
  for (int fi : facetIndices()) {
    if (vertsSubset(verts, faces_[fi].verts))
      cur = vertsIntersect(cur, faces_[fi].verts);
  }
  int idx = indexOf(cur);
  require(idx >= 0, ErrKind::Internal, "minimalFaceContaining: intersection is not a face");
  return idx;
}

std::vector<int> FaceLattice::coversOf(int faceIdx) const { return downAdj_[faceIdx]; }
std::vector<int> FaceLattice::coveredBy(int faceIdx) const { return upAdj_[faceIdx]; }

int Polytope::faceDim(const std::vector<int>& verts) const {
  if (verts.empty()) return -1;
  std::vector<RatVec> diffs;
  for (size_t i = 1; i < verts.size(); ++i)
    diffs.push_back(chartCoords[verts[i]] - chartCoords[verts[0]]);
  return diffs.empty() ? 0 : rankOf(diffs);
}

namespace {

// Enumerates all supporting hyperplanes spanned by affinely independent
// vertex subsets inside the affine hull; returns facets as vertex index sets.
std::vector<std::vector<int>> enumerateFacets(const std::vector<RatVec>& pts, int d) {
  const int m = static_cast<int>(pts.size());
  std::vector<std::vector<int>> facets;
  if (d == 0) return facets;

  std::set<std::pair<RatVec, Rat>> seen;
  std::set<std::vector<int>> facetSets;

  // DFS over increasing index subsets whose difference vectors stay
  // independent; at size d the subset spans a candidate hyperplane.
  std::vector<int> chosen;
  SpanTracker span(d);
  auto testHyperplane = [&]() {
    // normal = nullspace of the d-1 difference vectors
    std::vector<RatVec> rows;
    for (size_t i = 1; i < chosen.size(); ++i)
      rows.push_back(pts[chosen[i]] - pts[chosen[0]]);
    auto ns = nullspaceBasis(rows, d);
    if (ns.size() != 1) return;
    auto [normal, offset] = canonicalHyperplane(ns[0], dot(ns[0], pts[chosen[0]]));
    if (!seen.insert({normal, offset}).second) return;
    int pos = 0, neg = 0;
    std::vector<int> on;
    for (int i = 0; i < m; ++i) {
      int s = ratSign(dot(normal, pts[i]) - offset);
      if (s > 0) ++pos;
      else if (s < 0) ++neg;
      else on.push_back(i);
    }
    if (pos > 0 && neg > 0) return;
    facetSets.insert(std::move(on));
  };

  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(chosen.size()) == d) {
      testHyperplane();
      return;
    }
    int need = d - static_cast<int>(chosen.size());
    for (int i = start; i + need <= m; ++i) {
      if (chosen.empty()) {
        chosen.push_back(i);
        rec(i + 1);
        chosen.pop_back();
      } else {
        if (!span.add(pts[i] - pts[chosen[0]])) continue;
        chosen.push_back(i);
        rec(i + 1);
        chosen.pop_back();
        span.pop();
      }
    }
  };
  rec(0);

  facets.assign(facetSets.begin(), facetSets.end());
  return facets;
}

} // namespace

Polytope polytopeFromVertices(std::vector<Point> vertices) {
  require(!vertices.empty(), ErrKind::DegenerateInput, "polytope needs at least 1 point");
  const int n = static_cast<int>(vertices[0].size());
  for (const auto& v : vertices)
    require(static_cast<int>(v.size()) == n, ErrKind::DimensionMismatch,
            "points of mixed ambient dimension");
  require(static_cast<int>(vertices.size()) <= maxHullVertices(), ErrKind::TooManyVertices,
          "vertex count " + std::to_string(vertices.size()) + " exceeds MONOPATH_MAX_VERTICES");

  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      require(vertices[i] != vertices[j], ErrKind::NotAVertex,
              "duplicate point at index " + std::to_string(j));

  Polytope p;
  p.ambientDim = n;
  p.vertices = std::move(vertices);
  const int m = static_cast<int>(p.vertices.size());

  // affine hull chart
  p.chartOrigin = p.vertices[0];
  SpanTracker span(n);
  for (int i = 1; i < m; ++i) {
    RatVec d = p.vertices[i] - p.chartOrigin;
    if (span.add(d)) p.chartBasis.push_back(std::move(d));
  }
  p.dim = static_cast<int>(p.chartBasis.size());

  // chart coordinates: solve basis^T stacked as columns
  p.chartCoords.assign(m, RatVec(p.dim, Rat(0)));
  if (p.dim > 0) {
    // least-squares-free exact solve: pick p.dim independent coordinate rows
    // of the basis matrix and invert that square subsystem.
    std::vector<RatVec> brows(n, RatVec(p.dim));
    for (int j = 0; j < p.dim; ++j)
      for (int i = 0; i < n; ++i) brows[i][j] = p.chartBasis[j][i];
    SpanTracker rowSpan(p.dim);
    std::vector<int> keep;
    for (int i = 0; i < n && static_cast<int>(keep.size()) < p.dim; ++i)
      if (rowSpan.add(brows[i])) keep.push_back(i);
    require(static_cast<int>(keep.size()) == p.dim, ErrKind::Internal, "chart basis rank");
    std::vector<RatVec> sq(p.dim, RatVec(p.dim));
    for (int i = 0; i < p.dim; ++i) sq[i] = brows[keep[i]];
    for (int v = 0; v < m; ++v) {
      RatVec rhs(p.dim);
      for (int i = 0; i < p.dim; ++i) rhs[i] = p.vertices[v][keep[i]] - p.chartOrigin[keep[i]];
      auto sol = solveSquare(sq, rhs);
      require(sol.has_value(), ErrKind::Internal, "chart solve failed");
      // consistency across all ambient coordinates
      for (int i = 0; i < n; ++i) {
        Rat acc = p.chartOrigin[i];
        for (int j = 0; j < p.dim; ++j) acc += p.chartBasis[j][i] * (*sol)[j];
        require(acc == p.vertices[v][i], ErrKind::Internal, "point outside affine hull chart");
      }
      p.chartCoords[v] = std::move(*sol);
    }
  }

  // 0-dimensional polytope: empty face + the point
  if (p.dim == 0) {
    std::vector<Face> faces{{{}, -1}, {{0}, 0}};
    std::vector<std::pair<int, int>> covers{{0, 1}};
    p.lattice = LatticeBuilder::build(0, std::move(faces), std::move(covers));
    return p;
  }

  auto facetSets = enumerateFacets(p.chartCoords, p.dim);

  // close downward under intersection with facets
  std::map<std::vector<int>, int> dimOf; // vertex set -> dim
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);
  dimOf[all] = p.dim;
  std::vector<std::vector<int>> frontier{all};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& f : frontier) {
      for (const auto& h : facetSets) {
        auto g = vertsIntersect(f, h);
        if (g == f || g.empty()) continue;
        if (dimOf.count(g)) continue;
        dimOf[g] = p.faceDim(g);
        next.push_back(g);
      }
    }
    frontier = std::move(next);
  }

  // every input point must itself appear as a vertex of the hull
  for (int i = 0; i < m; ++i)
    require(dimOf.count({i}) > 0, ErrKind::NotAVertex,
            "input point " + std::to_string(i) + " is not a vertex of the hull");

  std::vector<Face> faces;
  faces.push_back({{}, -1});
  for (auto& [vs, d] : dimOf) faces.push_back({vs, d});
  std::sort(faces.begin(), faces.end(), FaceSortKey{});

  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < static_cast<int>(faces.size()); ++i)
    for (int j = 0; j < static_cast<int>(faces.size()); ++j) {
      if (faces[j].dim != faces[i].dim + 1) continue;
      if (vertsSubset(faces[i].verts, faces[j].verts)) covers.push_back({i, j});
    }

  p.lattice = LatticeBuilder::build(p.dim, std::move(faces), std::move(covers));
  return p;
}

Face faceOfLinForm(const Polytope& p, const LinForm& mu, Sense sense) {
  require(!p.vertices.empty(), ErrKind::DegenerateInput, "empty polytope");
  Rat best;
  bool first = true;
  for (const auto& v : p.vertices) {
    Rat val = mu.eval(v);
    if (first || (sense == Sense::Min ? val < best : val > best)) {
      best = val;
      first = false;
    }
  }
  std::vector<int> opt;
  for (int i = 0; i < static_cast<int>(p.vertices.size()); ++i)
    if (mu.eval(p.vertices[i]) == best) opt.push_back(i);
  int idx = p.lattice.indexOf(opt);
  require(idx >= 0, ErrKind::Internal, "optimal vertex set is not a face");
  return p.lattice.face(idx);
}

Polytope sliceAtLevel(const Polytope& p, const LinForm& ell, const Rat& c) {
  Rat lo, hi;
  bool first = true;
  for (const auto& v : p.vertices) {
    Rat val = ell.eval(v);
    if (first) { lo = hi = val; first = false; }
    else { lo = std::min(lo, val); hi = std::max(hi, val); }
  }
  require(lo < c && c < hi, ErrKind::EmptySlice,
          "slice level " + ratToString(c) + " outside open range (" + ratToString(lo) +
              ", " + ratToString(hi) + ")");

  std::vector<Point> pts;
  for (const auto& v : p.vertices)
    if (ell.eval(v) == c) pts.push_back(v);
  for (int ei : p.lattice.facesOfDim(1)) {
    const auto& e = p.lattice.face(ei).verts;
    const Point& a = p.vertices[e[0]];
    const Point& b = p.vertices[e[1]];
    Rat va = ell.eval(a), vb = ell.eval(b);
    if ((va < c && vb > c) || (va > c && vb < c)) {
      Rat t = (c - va) / (vb - va);
      pts.push_back(a + scaled(b - a, t));
    }
  }
  std::sort(pts.begin(), pts.end());
  return polytopeFromVertices(std::move(pts));
}

namespace {

Polytope minkowskiPair(const Polytope& a, const Polytope& b) {
  require(a.ambientDim == b.ambientDim, ErrKind::DimensionMismatch,
          "Minkowski summands in different ambient spaces");
  std::set<Point> cands;
  for (const auto& va : a.vertices)
    for (const auto& vb : b.vertices) cands.insert(va + vb);
  std::vector<Point> all(cands.begin(), cands.end());

  // keep the true hull vertices only
  std::vector<Point> verts;
  for (size_t i = 0; i < all.size(); ++i) {
    std::vector<Point> others;
    others.reserve(all.size() - 1);
    for (size_t j = 0; j < all.size(); ++j)
      if (j != i) others.push_back(all[j]);
    if (!inConvexHull(all[i], others)) verts.push_back(all[i]);
  }
  return polytopeFromVertices(std::move(verts));
}

} // namespace

Polytope minkowskiSum(const std::vector<Polytope>& ps) {
  require(!ps.empty(), ErrKind::DegenerateInput, "Minkowski sum of nothing");
  Polytope acc = ps[0];
  for (size_t i = 1; i < ps.size(); ++i) acc = minkowskiPair(acc, ps[i]);
  return acc;
}

AbstractLattice abstractOf(const FaceLattice& l) {
  AbstractLattice a;
  for (const auto& f : l.faces()) a.dims.push_back(f.dim);
  a.covers = l.covers();
  return a;
}

namespace {

std::vector<long long> refineLabels(std::vector<long long> labels,
                                    const std::vector<std::vector<int>>& up,
                                    const std::vector<std::vector<int>>& down) {
  const int n = static_cast<int>(labels.size());
  for (int round = 0; round < n; ++round) {
    std::map<std::tuple<long long, std::vector<long long>, std::vector<long long>>, long long> remap;
    std::vector<long long> next(n);
    for (int i = 0; i < n; ++i) {
      std::vector<long long> us, ds;
      for (int j : up[i]) us.push_back(labels[j]);
      for (int j : down[i]) ds.push_back(labels[j]);
      std::sort(us.begin(), us.end());
      std::sort(ds.begin(), ds.end());
      auto key = std::make_tuple(labels[i], std::move(us), std::move(ds));
      auto it = remap.find(key);
      if (it == remap.end()) it = remap.emplace(std::move(key), static_cast<long long>(remap.size())).first;
      next[i] = it->second;
    }
    if (next == labels) break;
    labels = std::move(next);
  }
  return labels;
}

} // namespace

IsoResult latticeIsomorphic(const AbstractLattice& a, const AbstractLattice& b) {
  IsoResult res;
  const int n = static_cast<int>(a.dims.size());
  if (n != static_cast<int>(b.dims.size())) return res;

  auto adjacency = [](const AbstractLattice& l) {
    std::vector<std::vector<int>> up(l.dims.size()), down(l.dims.size());
    for (auto& [lo, hi] : l.covers) {
      up[lo].push_back(hi);
      down[hi].push_back(lo);
    }
    return std::make_pair(up, down);
  };
  auto adjA = adjacency(a);
  auto adjB = adjacency(b);
  const auto& upA = adjA.first;
  const auto& downA = adjA.second;
  const auto& upB = adjB.first;
  const auto& downB = adjB.second;

  std::vector<long long> la(a.dims.begin(), a.dims.end());
  std::vector<long long> lb(b.dims.begin(), b.dims.end());
  // shared refinement: run on the disjoint union so label ids are comparable
  {
    AbstractLattice u;
    u.dims = a.dims;
    u.dims.insert(u.dims.end(), b.dims.begin(), b.dims.end());
    u.covers = a.covers;
    for (auto& [lo, hi] : b.covers) u.covers.push_back({lo + n, hi + n});
    std::vector<std::vector<int>> up(2 * n), down(2 * n);
    for (auto& [lo, hi] : u.covers) {
      up[lo].push_back(hi);
      down[hi].push_back(lo);
    }
    std::vector<long long> l0(u.dims.begin(), u.dims.end());
    auto lu = refineLabels(l0, up, down);
    la.assign(lu.begin(), lu.begin() + n);
    lb.assign(lu.begin() + n, lu.end());
  }
  {
    auto sa = la, sb = lb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return res;
  }

  // backtracking, most-constrained-first ordering
  std::map<long long, std::vector<int>> classB;
  for (int i = 0; i < n; ++i) classB[lb[i]].push_back(i);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    size_t cx = classB[la[x]].size(), cy = classB[la[y]].size();
    if (cx != cy) return cx < cy;
    return x < y;
  });

  std::vector<int> mapAB(n, -1), mapBA(n, -1);
  auto consistent = [&](int x, int y) {
    if (la[x] != lb[y]) return false;
    for (int xn : upA[x]) {
      int ym = mapAB[xn];
      if (ym >= 0 && std::find(upB[y].begin(), upB[y].end(), ym) == upB[y].end()) return false;
    }
    for (int xn : downA[x]) {
      int ym = mapAB[xn];
      if (ym >= 0 && std::find(downB[y].begin(), downB[y].end(), ym) == downB[y].end()) return false;
    }
    // reverse direction: matched neighbors of y must be images of neighbors of x
    for (int yn : upB[y]) {
      int xm = mapBA[yn];
      if (xm >= 0 && std::find(upA[x].begin(), upA[x].end(), xm) == upA[x].end()) return false;
    }
    for (int yn : downB[y]) {
      int xm = mapBA[yn];
      if (xm >= 0 && std::find(downA[x].begin(), downA[x].end(), xm) == downA[x].end()) return false;
    }
    return true;
  };

  std::function<bool(int)> search = [&](int k) -> bool {
    if (k == n) return true;
    int x = order[k];
    for (int y : classB[la[x]]) {
      if (mapBA[y] >= 0 || !consistent(x, y)) continue;
      mapAB[x] = y;
      mapBA[y] = x;
      if (search(k + 1)) return true;
      mapAB[x] = -1;
      mapBA[y] = -1;
    }
    return false;
  };

  if (!search(0)) return res;
  res.isomorphic = true;
  res.bijection = mapAB;
  return res;
}

IsoResult latticeIsomorphic(const FaceLattice& a, const FaceLattice& b) {
  return latticeIsomorphic(abstractOf(a), abstractOf(b));
}

void checkLatticeInvariants(const Polytope& p) {
  const auto& l = p.lattice;
  auto die = [&](const std::string& m) { fail(ErrKind::Internal, "lattice invariant: " + m); };

  // unique minimum and maximum
  if (l.facesOfDim(-1).size() != 1) die("empty face not unique");
  if (l.facesOfDim(l.dim()).size() != 1) die("top face not unique");

  // Euler relation sum_{k=-1..d} (-1)^k f_k = 0
  long long euler = 0;
  auto f = l.fVector();
  for (int k = -1; k <= l.dim(); ++k) euler += ((k % 2 == 0) ? 1 : -1) * f[k + 1];
  if (euler != 0) die("Euler relation fails");

  // closed under pairwise intersection
  for (int i = 0; i < l.numFaces(); ++i)
    for (int j = i + 1; j < l.numFaces(); ++j) {
      auto g = vertsIntersect(l.face(i).verts, l.face(j).verts);
      if (l.indexOf(g) < 0) die("intersection of two faces is not a face");
    }

  // every proper nonempty face equals the intersection of facets containing it
  for (int i = 0; i < l.numFaces(); ++i) {
    const auto& fc = l.face(i);
    if (fc.dim == l.dim() || fc.dim == -1) continue;
    std::vector<int> acc = l.face(l.topFaceIndex()).verts;
    for (int fi : l.facetIndices())
      if (vertsSubset(fc.verts, l.face(fi).verts)) acc = vertsIntersect(acc, l.face(fi).verts);
    if (acc != fc.verts) die("face is not the intersection of the facets containing it");
  }

  // dimensions are exact
  for (int i = 0; i < l.numFaces(); ++i)
    if (p.faceDim(l.face(i).verts) != l.face(i).dim) die("face dimension mismatch");
}

} // namespace mpp
