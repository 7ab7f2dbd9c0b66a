#include "mpp/jsonio.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "mpp/errors.hpp"

namespace mpp {

json polytopeToJson(const Polytope& p, const LinForm& ell) {
  json j;
  j["ambient_dim"] = p.ambientDim;
  json verts = json::array();
  for (const auto& v : p.vertices) {
    json row = json::array();
    for (const auto& c : v) row.push_back(ratToString(c));
    verts.push_back(row);
  }
  j["vertices"] = verts;
  json coeffs = json::array();
  for (const auto& c : ell.coeffs) coeffs.push_back(ratToString(c));
  j["ell"] = {{"coeffs", coeffs}, {"constant", ratToString(ell.constant)}};
  return j;
}

BuiltPolytope polytopeFromJson(const json& j) {
  require(j.is_object() && j.contains("ambient_dim") && j.contains("vertices") &&
              j.contains("ell"),
          ErrKind::BadInput, "polytope JSON needs ambient_dim, vertices, ell");
  int n = 0;
  try {
    n = j.at("ambient_dim").get<int>();
  } catch (const std::exception&) {
    fail(ErrKind::BadInput, "ambient_dim must be an integer");
  }
  require(n >= 1, ErrKind::BadInput, "ambient_dim must be >= 1");

  auto parseRat = [](const json& v) -> Rat {
    if (v.is_string()) return ratFromString(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long long>());
    fail(ErrKind::BadInput, "rational must be a string or integer");
    return Rat();
  };

  std::vector<Point> pts;
  require(j.at("vertices").is_array() && !j.at("vertices").empty(), ErrKind::BadInput,
          "vertices must be a nonempty array");
  for (const auto& row : j.at("vertices")) {
    require(row.is_array() && static_cast<int>(row.size()) == n, ErrKind::BadInput,
            "each vertex needs ambient_dim coordinates");
    Point p;
    for (const auto& c : row) p.push_back(parseRat(c));
    pts.push_back(std::move(p));
  }
  const auto& je = j.at("ell");
  require(je.is_object() && je.contains("coeffs"), ErrKind::BadInput, "ell needs coeffs");
  LinForm ell;
  require(je.at("coeffs").is_array() && static_cast<int>(je.at("coeffs").size()) == n,
          ErrKind::BadInput, "ell.coeffs must have ambient_dim entries");
  for (const auto& c : je.at("coeffs")) ell.coeffs.push_back(parseRat(c));
  if (je.contains("constant")) ell.constant = parseRat(je.at("constant"));

  return {polytopeFromVertices(std::move(pts)), std::move(ell)};
}

json latticeToJson(const FaceLattice& l) {
  json faces = json::array();
  for (const auto& f : l.faces()) faces.push_back({{"dim", f.dim}, {"vertices", f.verts}});
  json covers = json::array();
  auto cs = l.covers();
  std::sort(cs.begin(), cs.end());
  for (auto& [lo, hi] : cs) covers.push_back({lo, hi});
  return {{"faces", faces}, {"covers", covers}};
}

json polyToJson(const IntPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) {
    require(c >= std::numeric_limits<long long>::min() &&
                c <= std::numeric_limits<long long>::max(),
            ErrKind::Internal, "polynomial coefficient exceeds 64 bits");
    arr.push_back(static_cast<long long>(c));
  }
  return arr;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrKind::BadInput, "cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrKind::BadInput, "cannot write file: " + path);
  out << content;
}

namespace {

std::string bitstring(const std::vector<std::vector<bool>>& m) {
  std::string s;
  for (const auto& row : m)
    for (bool b : row) s += b ? '1' : '0';
  return s;
}

} // namespace

json analyzeReport(const OrientedPolytope& op) {
  BBData bb = bbData(op);
  VertexRelations rel = relations(op, bb);
  EquivalenceReport rep = equivalenceReport(op, bb, rel);
  IrreducibilityResult ai = irreducibility(bb);
  const auto& l = op.base.lattice;

  json j;
  j["dim"] = op.dim();
  j["num_vertices"] = op.numVertices();
  j["source"] = op.source;
  j["sink"] = op.sink;
  json edges = json::array();
  for (auto& [a, b] : op.directedEdges) edges.push_back({a, b});
  j["directed_edges"] = edges;

  json perVertex = json::array();
  for (int v = 0; v < op.numVertices(); ++v) {
    json fm = json::array(), fp = json::array();
    for (int fi : bb.fminusMaximal[v]) fm.push_back(l.face(fi).verts);
    for (int fi : bb.fplusMaximal[v]) fp.push_back(l.face(fi).verts);
    perVertex.push_back({{"vertex", v},
                         {"Fminus", fm},
                         {"Fplus", fp},
                         {"FminusDim", bb.fminusDim[v]},
                         {"FplusDim", bb.fplusDim[v]}});
  }
  j["bb_data"] = perVertex;

  j["relations"] = {{"O", bitstring(rel.O)},
                    {"Bminus", bitstring(rel.Bminus)},
                    {"Bplus", bitstring(rel.Bplus)},
                    {"C", bitstring(rel.C)}};

  j["irreducibility"] = {{"holds", ai.holds}, {"violating_vertex", ai.violatingVertex}};
  json conds = json::array(), witnesses = json::array();
  for (int i = 0; i < 8; ++i) {
    conds.push_back(rep.cond[i]);
    witnesses.push_back(rep.witness[i]);
  }
  j["conditions"] = conds;
  j["violations"] = witnesses;
  j["stratified"] = rep.allTrue();
  j["lattice"] = latticeToJson(l);
  return j;
}

json chowReport(const OrientedPolytope& op, bool withOracle, bool withSimplicity) {
  CHLattice ch = chFaces(op);
  const auto& bl = op.base.lattice;
  json j;
  j["dim"] = ch.dim;
  j["f_vector"] = ch.fVector;

  // the CH lattice itself: each face keyed by its chain of vertex sets
  json chFacesJson = json::array();
  for (const auto& c : ch.chains) {
    json seq = json::array();
    for (int fi : c.faceSeq) seq.push_back(bl.face(fi).verts);
    chFacesJson.push_back({{"dim", c.dim}, {"chain", seq}});
  }
  json chCoversJson = json::array();
  {
    auto cs = ch.covers;
    std::sort(cs.begin(), cs.end());
    for (auto& [lo, hi] : cs) chCoversJson.push_back({lo, hi});
  }
  j["lattice"] = {{"faces", chFacesJson}, {"covers", chCoversJson}};

  CHFacets facets = chFacets(op, ch);
  const auto& l = bl;
  json t1 = json::array(), t2 = json::array();
  for (const auto& c : facets.type1) t1.push_back(l.face(c.faceSeq[0]).verts);
  for (const auto& c : facets.type2)
    t2.push_back({l.face(c.faceSeq[0]).verts, l.face(c.faceSeq[1]).verts});
  j["facets"] = {{"type1", t1}, {"type2", t2}};

  json vertices = json::array();
  for (const auto& path : chVertices(op)) vertices.push_back(path);
  j["monotone_paths"] = vertices;

  if (withSimplicity) {
    SimplicityReport sr = chIsSimple(op, ch);
    j["simple"] = {{"verdict", sr.simple},
                   {"conditions", {sr.verdict[0], sr.verdict[1], sr.verdict[2], sr.verdict[3]}},
                   {"detail", sr.detail}};
  }
  if (withOracle) {
    Polytope geo = chGeometric(op);
    bool ok = latticeIsomorphic(abstractOf(ch), abstractOf(geo.lattice)).isomorphic;
    j["oracle"] = {{"isomorphic", ok}, {"geometric_f_vector", geo.lattice.fVector()}};
  }
  return j;
}

json polyReport(const OrientedPolytope& op, const std::string& kernelChoice, bool verifyMain) {
  BBData bb = bbData(op);
  VertexRelations rel = relations(op, bb);
  VertexPoset vp = vertexPoset(op, bb, rel);
  GradedPoset x = posetOfVertexPoset(vp);

  IncElem kappa = (kernelChoice == "chi") ? charKernel(x) : faceKernel(op, x);
  IncElem chi = charKernel(x);
  KernelCheck kc = isKernel(kappa);
  IncElem kbar = reducedKernel(kappa);
  IncElem h = chowPolynomial(kappa);

  std::optional<KLSPair> kls;
  if (kc.isKernel) kls = klsFunctions(kappa);

  json intervals = json::array();
  for (int s = 0; s < x.n; ++s)
    for (int t = 0; t < x.n; ++t) {
      if (!x.le(s, t)) continue;
      json e;
      e["v"] = s;
      e["w"] = t;
      e["kappa"] = polyToJson(kappa.at(s, t));
      e["kappaBar"] = polyToJson(kbar.at(s, t));
      e["chi"] = polyToJson(chi.at(s, t));
      e["H"] = polyToJson(h.at(s, t));
      if (kls) {
        e["f"] = polyToJson(kls->f.at(s, t));
        e["g"] = polyToJson(kls->g.at(s, t));
      }
      ShapeFlags fl = shapeChecks(h.at(s, t), x.rho(s, t) > 0 ? x.rho(s, t) - 1 : 0);
      e["flags"] = {{"nonnegative", fl.nonnegative},
                    {"palindromic", fl.palindromic},
                    {"unimodal", fl.unimodal},
                    {"gammaPositive", fl.gammaPositive}};
      intervals.push_back(std::move(e));
    }

  json j;
  j["kernel"] = (kernelChoice == "chi") ? "chi" : "paper";
  j["is_kernel"] = kc.isKernel;
  if (!kc.isKernel) j["kernel_failure"] = kc.reason;
  j["ranks"] = x.rank;
  j["intervals"] = intervals;

  if (verifyMain) {
    ChowDualityReport mt = verifyChowDuality(op);
    json entries = json::array();
    for (const auto& e : mt.entries)
      entries.push_back({{"v", e.v},
                         {"w", e.w},
                         {"pass", e.pass},
                         {"chow", polyToJson(e.chow)},
                         {"h_dual", polyToJson(e.hDual)}});
    j["chow_duality"] = {{"all_pass", mt.allPass}, {"intervals", entries}};
  }
  return j;
}

std::string skeletonDot(const OrientedPolytope& op) {
  std::ostringstream os;
  os << "digraph skeleton {\n";
  for (int v = 0; v < op.numVertices(); ++v)
    os << "  v" << v << " [label=\"" << v << " (" << ratToString(op.ellValues[v]) << ")\"];\n";
  for (auto& [a, b] : op.directedEdges) os << "  v" << a << " -> v" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string hasseDot(const OrientedPolytope& op) {
  BBData bb = bbData(op);
  VertexRelations rel = relations(op, bb);
  const int n = op.numVertices();
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int v = 0; v < n; ++v) os << "  v" << v << " [label=\"" << v << "\"];\n";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !rel.O[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < n; ++c)
        if (c != a && c != b && rel.O[a][c] && rel.O[c][b]) { cover = false; break; }
      if (cover) os << "  v" << a << " -> v" << b << ";\n";
    }
  os << "}\n";
  return os.str();
}

std::string chSkeletonDot(const OrientedPolytope& op, const CHLattice& l) {
  std::ostringstream os;
  os << "graph ch_skeleton {\n";
  std::vector<int> verts = l.chainsOfDim(0);
  for (int ci : verts) {
    // a dim-0 chain is a monotone path; label it by its vertex sequence
    os << "  c" << ci << " [label=\"";
    const auto& seq = l.chains[ci].faceSeq;
    os << op.faceMin[seq[0]];
    for (int fi : seq) os << "-" << op.faceMax[fi];
    os << "\"];\n";
  }
  for (auto& [lo, hi] : l.covers)
    if (l.chains[lo].dim == 0 && l.chains[hi].dim == 1) {
      // each CH edge joins exactly two CH vertices; emit once per pair
      for (auto& [lo2, hi2] : l.covers)
        if (hi2 == hi && lo2 > lo && l.chains[lo2].dim == 0)
          os << "  c" << lo << " -- c" << lo2 << ";\n";
    }
  os << "}\n";
  return os.str();
}

} // namespace mpp
