#include "mpp/posetalg.hpp"

#include <algorithm>
#include <numeric>

#include "mpp/errors.hpp"

namespace mpp {

GradedPoset GradedPoset::fromRelation(std::vector<std::vector<bool>> leq, std::vector<int> rank) {
  GradedPoset x;
  x.n = static_cast<int>(rank.size());
  x.leq = std::move(leq);
  x.rank = std::move(rank);
  for (int s = 0; s < x.n; ++s)
    for (int t = 0; t < x.n; ++t)
      require(!x.leq[s][t] || x.rank[s] <= x.rank[t], ErrKind::Internal,
              "grading not monotone with the order");
  // linear extension: topological, ties broken by (rank, id) for determinism
  std::vector<bool> done(x.n, false);
  while (static_cast<int>(x.linext.size()) < x.n) {
    int best = -1;
    for (int v = 0; v < x.n; ++v) {
      if (done[v]) continue;
      bool ready = true;
      for (int u = 0; u < x.n; ++u)
        if (u != v && !done[u] && x.leq[u][v]) { ready = false; break; }
      if (!ready) continue;
      if (best < 0 || x.rank[v] < x.rank[best] || (x.rank[v] == x.rank[best] && v < best))
        best = v;
    }
    require(best >= 0, ErrKind::Internal, "relation is not a partial order");
    done[best] = true;
    x.linext.push_back(best);
  }
  return x;
}

GradedPoset GradedPoset::chain(int length) {
  int n = length + 1;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) {
    rank[i] = i;
    for (int j = i; j < n; ++j) leq[i][j] = true;
  }
  return fromRelation(std::move(leq), std::move(rank));
}

GradedPoset posetOfVertexPoset(const VertexPoset& vp) {
  return GradedPoset::fromRelation(vp.leq, vp.rank);
}

FacePoset facePosetOf(const Polytope& p) {
  const auto& l = p.lattice;
  FacePoset fp;
  fp.elemOfFace.assign(l.numFaces(), -1);
  for (int fi = 0; fi < l.numFaces(); ++fi) {
    if (l.face(fi).dim < 0) continue;
    fp.elemOfFace[fi] = static_cast<int>(fp.faceIds.size());
    fp.faceIds.push_back(fi);
  }
  int n = static_cast<int>(fp.faceIds.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) {
    rank[i] = l.face(fp.faceIds[i]).dim;
    for (int j = 0; j < n; ++j)
      leq[i][j] = vertsSubset(l.face(fp.faceIds[i]).verts, l.face(fp.faceIds[j]).verts);
  }
  fp.poset = GradedPoset::fromRelation(std::move(leq), std::move(rank));
  return fp;
}

bool IncElem::inIrho() const {
  for (int s = 0; s < x_->n; ++s)
    for (int t = 0; t < x_->n; ++t)
      if (x_->le(s, t) && a_[s][t].degree() > x_->rho(s, t)) return false;
  return true;
}

IncElem identityElem(const GradedPoset& x) {
  IncElem d(&x);
  for (int s = 0; s < x.n; ++s) d.at(s, s) = IntPoly::one();
  return d;
}

IncElem zetaElem(const GradedPoset& x) {
  IncElem z(&x);
  for (int s = 0; s < x.n; ++s)
    for (int t = 0; t < x.n; ++t)
      if (x.le(s, t)) z.at(s, t) = IntPoly::one();
  return z;
}

IncElem multiply(const IncElem& a, const IncElem& b) {
  const GradedPoset& x = a.poset();
  IncElem r(&x);
  for (int s = 0; s < x.n; ++s)
    for (int t = 0; t < x.n; ++t) {
      if (!x.le(s, t)) continue;
      IntPoly acc;
      for (int w = 0; w < x.n; ++w)
        if (x.le(s, w) && x.le(w, t)) acc = acc + a.at(s, w) * b.at(w, t);
      r.at(s, t) = std::move(acc);
    }
  return r;
}

IncElem invert(const IncElem& a) {
  const GradedPoset& x = a.poset();
  for (int s = 0; s < x.n; ++s) {
    const IntPoly& d = a.at(s, s);
    require(d == IntPoly::one() || d == -IntPoly::one(), ErrKind::NotInvertible,
            "diagonal entry at element " + std::to_string(s) + " is not +-1");
  }
  IncElem inv(&x);
  // process target t in linear-extension order; within it, sources s from
  // nearest to farthest so shorter intervals are ready first
  for (int s = 0; s < x.n; ++s) inv.at(s, s) = a.at(s, s); // 1/(+-1) = +-1
  for (int ti = 0; ti < x.n; ++ti) {
    int t = x.linext[ti];
    for (int si = ti - 1; si >= 0; --si) {
      int s = x.linext[si];
      if (!x.le(s, t) || s == t) continue;
      IntPoly acc;
      for (int w = 0; w < x.n; ++w)
        if (w != s && x.le(s, w) && x.le(w, t)) acc = acc + a.at(s, w) * inv.at(w, t);
      // a_ss * inv_st + acc = 0  =>  inv_st = -acc / a_ss = -acc * a_ss
      inv.at(s, t) = -(acc * a.at(s, s));
    }
  }
  // two-sided check
  IncElem left = multiply(inv, a);
  IncElem right = multiply(a, inv);
  IncElem id = identityElem(x);
  require(left == id && right == id, ErrKind::Internal, "inverse is not two-sided");
  return inv;
}

IncElem rev(const IncElem& a) {
  const GradedPoset& x = a.poset();
  IncElem r(&x);
  for (int s = 0; s < x.n; ++s)
    for (int t = 0; t < x.n; ++t)
      if (x.le(s, t)) r.at(s, t) = a.at(s, t).reverse(x.rho(s, t));
  return r;
}

IncElem mobius(const GradedPoset& x) {
  IncElem mu(&x);
  // by induction on interval size in linear-extension order
  for (int s = 0; s < x.n; ++s) mu.at(s, s) = IntPoly::one();
  for (int si = x.n - 1; si >= 0; --si) {
    int s = x.linext[si];
    for (int ti = si + 1; ti < x.n; ++ti) {
      int t = x.linext[ti];
      if (!x.le(s, t)) continue;
      IntPoly acc;
      for (int w = 0; w < x.n; ++w)
        if (x.le(s, w) && x.le(w, t) && w != t) acc = acc + mu.at(s, w);
      mu.at(s, t) = -acc;
    }
  }
  return mu;
}

IncElem charKernel(const GradedPoset& x) {
  IncElem mu = mobius(x);
  IncElem chi(&x);
  for (int s = 0; s < x.n; ++s)
    for (int t = 0; t < x.n; ++t) {
      if (!x.le(s, t)) continue;
      IntPoly acc;
      for (int w = 0; w < x.n; ++w)
        if (x.le(s, w) && x.le(w, t)) {
          // mu_sw * x^{rho_wt}
          std::vector<Int> mono(x.rho(w, t) + 1, Int(0));
          mono[x.rho(w, t)] = 1;
          acc = acc + mu.at(s, w) * IntPoly(std::move(mono));
        }
      chi.at(s, t) = std::move(acc);
    }
  // identity chi = mu * rev(zeta)
  require(chi == multiply(mu, rev(zetaElem(x))), ErrKind::Internal,
          "characteristic kernel identity failed");
  return chi;
}

KernelCheck isKernel(const IncElem& kappa) {
  const GradedPoset& x = kappa.poset();
  KernelCheck out;
  for (int s = 0; s < x.n; ++s) {
    if (!(kappa.at(s, s) == IntPoly::one())) {
      out = {false, s, s, "diagonal entry is not 1"};
      return out;
    }
  }
  if (!kappa.inIrho()) {
    out = {false, -1, -1, "element not in I_rho"};
    return out;
  }
  for (int s = 0; s < x.n; ++s)
    for (int t = 0; t < x.n; ++t)
      if (x.le(s, t) && s != t && !kappa.at(s, t).divisibleByXMinusOne()) {
        out = {false, s, t, "off-diagonal entry not divisible by x-1"};
        return out;
      }
  IncElem inv = invert(kappa);
  IncElem rv = rev(kappa);
  for (int s = 0; s < x.n; ++s)
    for (int t = 0; t < x.n; ++t)
      if (x.le(s, t) && !(inv.at(s, t) == rv.at(s, t))) {
        out = {false, s, t, "kappa^{-1} differs from kappa^{rev}"};
        return out;
      }
  return out;
}

IncElem faceKernel(const OrientedPolytope& op, const GradedPoset& x) {
  const auto& l = op.base.lattice;
  IncElem kappa(&x);
  for (int s = 0; s < x.n; ++s) kappa.at(s, s) = IntPoly::one();
  for (int fi = 0; fi < l.numFaces(); ++fi) {
    if (l.face(fi).dim < 1) continue;
    int v = op.faceMin[fi], w = op.faceMax[fi];
    require(x.le(v, w), ErrKind::Internal, "face endpoints not comparable in the vertex poset");
    kappa.at(v, w) = kappa.at(v, w) + IntPoly::xMinusOnePow(l.face(fi).dim);
  }
  return kappa;
}

IncElem lambdaKernel(const FacePoset& fp) {
  const GradedPoset& x = fp.poset;
  IncElem lam(&x);
  for (int s = 0; s < x.n; ++s)
    for (int t = 0; t < x.n; ++t)
      if (x.le(s, t)) lam.at(s, t) = IntPoly::xMinusOnePow(x.rho(s, t));
  return lam;
}

IncElem reducedKernel(const IncElem& kappa) {
  const GradedPoset& x = kappa.poset();
  IncElem r(&x);
  for (int s = 0; s < x.n; ++s)
    for (int t = 0; t < x.n; ++t) {
      if (!x.le(s, t)) continue;
      if (s == t) r.at(s, t) = -IntPoly::one();
      else r.at(s, t) = kappa.at(s, t).divideByXMinusOne();
    }
  return r;
}

IncElem chowPolynomial(const IncElem& kappa) {
  const GradedPoset& x = kappa.poset();
  IncElem kbar = reducedKernel(kappa);
  IncElem h(&x);
  {
    IncElem inv = invert(kbar);
    for (int s = 0; s < x.n; ++s)
      for (int t = 0; t < x.n; ++t)
        if (x.le(s, t)) h.at(s, t) = -inv.at(s, t);
  }
  // both defining recursions, exactly
  for (int s = 0; s < x.n; ++s)
    for (int t = 0; t < x.n; ++t) {
      if (!x.le(s, t) || s == t) continue;
      IntPoly r1, r2;
      for (int w = 0; w < x.n; ++w) {
        if (x.le(s, w) && x.le(w, t)) {
          if (w != s) r1 = r1 + kbar.at(s, w) * h.at(w, t);
          if (w != t) r2 = r2 + h.at(s, w) * kbar.at(w, t);
        }
      }
      require(h.at(s, t) == r1 && h.at(s, t) == r2, ErrKind::Internal,
              "Chow polynomial recursions failed");
    }
  return h;
}

KLSPair klsFunctions(const IncElem& kappa) {
  const GradedPoset& x = kappa.poset();
  KLSPair out{IncElem(&x), IncElem(&x)};
  for (int s = 0; s < x.n; ++s) {
    out.f.at(s, s) = IntPoly::one();
    out.g.at(s, s) = IntPoly::one();
  }

  // intervals by increasing cardinality, so the sub-intervals a solve needs
  // are always ready first
  auto cardinality = [&](int s, int t) {
    int c = 0;
    for (int w = 0; w < x.n; ++w)
      if (x.le(s, w) && x.le(w, t)) ++c;
    return c;
  };
  std::vector<std::pair<int, int>> intervals;
  for (int s = 0; s < x.n; ++s)
    for (int t = 0; t < x.n; ++t)
      if (x.le(s, t) && s != t) intervals.push_back({s, t});
  std::sort(intervals.begin(), intervals.end(), [&](auto& a, auto& b) {
    int ca = cardinality(a.first, a.second), cb = cardinality(b.first, b.second);
    if (ca != cb) return ca < cb;
    return a < b;
  });

  for (auto& [s, t] : intervals) {
    int rho = x.rho(s, t);
    // right KLS: x^rho f_st(1/x) - f_st = q with q = sum_{s<w<=t} kappa_sw f_wt
    IntPoly q;
    for (int w = 0; w < x.n; ++w)
      if (w != s && x.le(s, w) && x.le(w, t)) q = q + kappa.at(s, w) * out.f.at(w, t);
    std::vector<Int> fc;
    for (int j = 0; 2 * j < rho; ++j) fc.push_back(q.coeff(rho - j));
    out.f.at(s, t) = IntPoly(std::move(fc));

    // left KLS: x^rho g_st(1/x) - g_st = q' with q' = sum_{s<=w<t} g_sw kappa_wt
    IntPoly q2;
    for (int w = 0; w < x.n; ++w)
      if (w != t && x.le(s, w) && x.le(w, t)) q2 = q2 + out.g.at(s, w) * kappa.at(w, t);
    std::vector<Int> gc;
    for (int j = 0; 2 * j < rho; ++j) gc.push_back(q2.coeff(rho - j));
    out.g.at(s, t) = IntPoly(std::move(gc));
  }

  // verify the defining identities exactly
  IncElem frev = rev(out.f);
  IncElem grev = rev(out.g);
  IncElem kf = multiply(kappa, out.f);
  IncElem gk = multiply(out.g, kappa);
  for (int s = 0; s < x.n; ++s)
    for (int t = 0; t < x.n; ++t) {
      if (!x.le(s, t)) continue;
      require(frev.at(s, t) == kf.at(s, t), ErrKind::NoSolution,
              "right KLS identity failed; the element is not a kernel");
      require(grev.at(s, t) == gk.at(s, t), ErrKind::NoSolution,
              "left KLS identity failed; the element is not a kernel");
      if (s != t) {
        require(2 * out.f.at(s, t).degree() < x.rho(s, t) || out.f.at(s, t).isZero(),
                ErrKind::Internal, "right KLS degree bound violated");
        require(2 * out.g.at(s, t).degree() < x.rho(s, t) || out.g.at(s, t).isZero(),
                ErrKind::Internal, "left KLS degree bound violated");
      }
    }
  return out;
}

IntPoly hPolynomialDual(const std::vector<int>& fVector, int d) {
  require(static_cast<int>(fVector.size()) == d + 2, ErrKind::DegenerateInput,
          "f-vector length does not match dimension");
  IntPoly h;
  for (int i = 0; i <= d; ++i)
    h = h + IntPoly(Int(fVector[i + 1])) * IntPoly::xMinusOnePow(i);
  return h;
}

ChowDualityReport verifyChowDuality(const OrientedPolytope& op) {
  BBData bb = bbData(op);
  VertexRelations rel = relations(op, bb);
  VertexPoset vp = vertexPoset(op, bb, rel);
  GradedPoset x = posetOfVertexPoset(vp);

  IncElem kappa = faceKernel(op, x);
  IncElem h = chowPolynomial(kappa);
  const auto& l = op.base.lattice;

  ChowDualityReport rep;
  for (int v = 0; v < op.numVertices(); ++v)
    for (int w = 0; w < op.numVertices(); ++w) {
      if (!vp.leq[v][w]) continue;
      auto qverts = vertsIntersect(l.face(bb.fplusMaximal[v][0]).verts,
                                   l.face(bb.fminusMaximal[w][0]).verts);
      int qIdx = l.indexOf(qverts);
      require(qIdx >= 0, ErrKind::Internal, "interval face is not a face");
      int qDim = l.face(qIdx).dim;
      IntPoly hDual;
      if (qDim == 0) {
        hDual = IntPoly::one(); // CH of a point is a point
      } else {
        InducedPolytope sub = inducedOnFace(op, qIdx);
        CHLattice subCH = chFaces(sub.op);
        hDual = hPolynomialDual(subCH.fVector, subCH.dim);
      }
      bool pass = (hDual == h.at(v, w));
      rep.allPass = rep.allPass && pass;
      rep.entries.push_back({v, w, pass, h.at(v, w), hDual});
    }
  return rep;
}

} // namespace mpp
