#include "mpp/builders.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "mpp/errors.hpp"

namespace mpp {

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Parser(const std::string& t) : text(t) {}

  [[noreturn]] void err(const std::string& expected) {
    fail(ErrKind::ParseError, "parse error at line " + std::to_string(line) + ", col " +
                                  std::to_string(col) + ": expected " + expected);
  }

  void advance() {
    if (pos < text.size()) {
      if (text[pos] == '\n') { ++line; col = 1; }
      else ++col;
      ++pos;
    }
  }
  void skipWs() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
  }
  bool peekIs(char c) {
    skipWs();
    return pos < text.size() && text[pos] == c;
  }
  void expect(char c) {
    skipWs();
    if (pos >= text.size() || text[pos] != c) err(std::string("'") + c + "'");
    advance();
  }

  std::string ident() {
    skipWs();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      advance();
    if (pos == start) err("constructor name");
    return text.substr(start, pos - start);
  }

  int integer() {
    skipWs();
    size_t start = pos;
    if (pos < text.size() && text[pos] == '-') advance();
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) advance();
    if (pos == start || (text[start] == '-' && pos == start + 1)) err("integer");
    return std::stoi(text.substr(start, pos - start));
  }

  ConstructorExpr expr() {
    std::string name = ident();
    using K = ConstructorExpr::Kind;
    static const std::map<std::string, std::pair<K, int>> table = {
        // arity: 0 = none, 1 = int, 2 = one expr, 3 = two exprs
        {"simplex", {K::Simplex, 1}},        {"cube", {K::Cube, 1}},
        {"ngon", {K::Ngon, 1}},              {"quadSep", {K::QuadSep, 0}},
        {"quadAdj", {K::QuadAdj, 0}},        {"nostrat5", {K::Nostrat5, 0}},
        {"trapezohedron", {K::Trapezohedron, 1}}, {"prod", {K::Prod, 3}},
        {"pyrMin", {K::PyrMin, 2}},          {"pyrMax", {K::PyrMax, 2}},
    };
    auto it = table.find(name);
    if (it == table.end()) err("known constructor (got '" + name + "')");
    ConstructorExpr e;
    e.kind = it->second.first;
    auto arityError = [&](const char* want) {
      fail(ErrKind::BadArity, name + " takes " + want + " (at line " + std::to_string(line) +
                                  ", col " + std::to_string(col) + ")");
    };
    switch (it->second.second) {
    case 0:
      if (peekIs('(')) {
        expect('(');
        if (!peekIs(')')) arityError("no arguments");
        expect(')');
      }
      break;
    case 1:
      if (!peekIs('(')) arityError("one integer argument");
      expect('(');
      e.param = integer();
      if (peekIs(',')) arityError("one integer argument");
      expect(')');
      break;
    case 2:
      if (!peekIs('(')) arityError("one argument");
      expect('(');
      e.args.push_back(expr());
      if (peekIs(',')) arityError("one argument");
      expect(')');
      break;
    case 3:
      if (!peekIs('(')) arityError("two arguments");
      expect('(');
      e.args.push_back(expr());
      if (peekIs(')')) arityError("two arguments");
      expect(',');
      e.args.push_back(expr());
      if (peekIs(',')) arityError("two arguments");
      expect(')');
      break;
    }
    return e;
  }
};

void validate(const ConstructorExpr& e) {
  using K = ConstructorExpr::Kind;
  switch (e.kind) {
  case K::Simplex:
  case K::Cube:
    require(e.param >= 1, ErrKind::BadParameter, "dimension parameter must be >= 1");
    require(e.param <= 8, ErrKind::BadParameter, "dimension parameter too large for desk scale");
    break;
  case K::Ngon:
  case K::Trapezohedron:
    require(e.param >= 3, ErrKind::BadParameter, "gon/trapezohedron parameter must be >= 3");
    require(e.param <= 12, ErrKind::BadParameter, "parameter too large for desk scale");
    break;
  default:
    break;
  }
  for (const auto& a : e.args) validate(a);
}

BuiltPolytope buildSimplex(int n) {
  std::vector<Point> pts;
  pts.push_back(Point(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    Point p(n, Rat(0));
    p[i] = 1;
    pts.push_back(std::move(p));
  }
  LinForm ell;
  ell.coeffs.resize(n);
  for (int i = 0; i < n; ++i) ell.coeffs[i] = i + 1;
  return {polytopeFromVertices(std::move(pts)), std::move(ell)};
}

BuiltPolytope buildCube(int n) {
  std::vector<Point> pts;
  for (int k = 0; k < (1 << n); ++k) {
    Point p(n);
    for (int i = 0; i < n; ++i) p[i] = (k >> i) & 1;
    pts.push_back(std::move(p));
  }
  LinForm ell;
  ell.coeffs.assign(n, Rat(1));
  return {polytopeFromVertices(std::move(pts)), std::move(ell)};
}

BuiltPolytope buildNgon(int n) {
  // points on the parabola (t, t^2); all are hull vertices, ell = x + y is
  // strictly increasing along the parameter
  std::vector<Point> pts;
  for (int t = 0; t < n; ++t) pts.push_back({Rat(t), Rat(t) * Rat(t)});
  LinForm ell;
  ell.coeffs = {Rat(1), Rat(1)};
  return {polytopeFromVertices(std::move(pts)), std::move(ell)};
}

BuiltPolytope buildQuadSep() {
  // no edge between source (0,-1) and sink (0,1)
  std::vector<Point> pts = {{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}};
  LinForm ell;
  ell.coeffs = {Rat(0), Rat(1)};
  return {polytopeFromVertices(std::move(pts)), std::move(ell)};
}

BuiltPolytope buildQuadAdj() {
  // the left side joins source (0,-1) and sink (0,1) directly
  std::vector<Point> pts = {
      {Rat(0), Rat(1)}, {Rat(0), Rat(-1)}, {Rat(2), Rat(-1, 2)}, {Rat(2), Rat(1, 2)}};
  LinForm ell;
  ell.coeffs = {Rat(0), Rat(1)};
  return {polytopeFromVertices(std::move(pts)), std::move(ell)};
}

BuiltPolytope buildNostrat5() {
  // Triangular bipyramid with apexes B and D over the equator A, C, E; the
  // functional orders the vertices B < A < C < E < D and orients the edges
  // as: B->A, B->C, B->E, A->C, A->D, A->E, C->D, C->E, E->D.
  // Vertex order: A, B, C, D, E.
  std::vector<Point> pts = {
      {Rat(2), Rat(0), Rat(0)},            // A
      {Rat(1, 2), Rat(1, 2), Rat(-1)},     // B
      {Rat(0), Rat(2), Rat(0)},            // C
      {Rat(1, 2), Rat(1, 2), Rat(1)},      // D
      {Rat(0), Rat(0), Rat(0)},            // E
  };
  LinForm ell;
  ell.coeffs = {Rat(-2), Rat(-1), Rat(3)};
  return {polytopeFromVertices(std::move(pts)), std::move(ell)};
}

// Rational point on the unit circle via the tangent half-angle map.
Point circlePoint(const Rat& t) {
  Rat t2 = t * t;
  return {(1 - t2) / (1 + t2), 2 * t / (1 + t2)};
}

BuiltPolytope buildTrapezohedron(int n) {
  // Polar dual of a rational antiprism: rings of n points each on the unit
  // circle at heights +1/-1, interleaved in angular order.  The polar swaps
  // the two n-gon facets for the apexes and the 2n side triangles for the
  // ring vertices, producing 2n kite facets.
  std::vector<Point> ap;
  for (int k = 0; k < 2 * n; ++k) {
    Rat t = Rat(2 * k - (2 * n - 1), 2) + Rat(1, 3 + k);
    Point c = circlePoint(t);
    ap.push_back({c[0], c[1], (k % 2 == 0) ? Rat(1) : Rat(-1)});
  }
  Polytope anti = polytopeFromVertices(std::move(ap));
  require(anti.dim == 3, ErrKind::Internal, "antiprism is not full-dimensional");

  std::vector<Point> polar;
  for (int fi : anti.lattice.facetIndices()) {
    const auto& fverts = anti.lattice.face(fi).verts;
    // supporting functional <a, x> = 1 (origin is interior)
    std::optional<RatVec> a;
    for (size_t i = 0; i < fverts.size() && !a; ++i)
      for (size_t j = i + 1; j < fverts.size() && !a; ++j)
        for (size_t k = j + 1; k < fverts.size() && !a; ++k) {
          std::vector<RatVec> rows = {anti.vertices[fverts[i]], anti.vertices[fverts[j]],
                                      anti.vertices[fverts[k]]};
          a = solveSquare(rows, {Rat(1), Rat(1), Rat(1)});
        }
    require(a.has_value(), ErrKind::Internal, "no supporting functional for facet");
    for (int v : fverts)
      require(dot(*a, anti.vertices[v]) == 1, ErrKind::Internal, "supporting functional check");
    polar.push_back(*a);
  }
  std::sort(polar.begin(), polar.end());
  Polytope trap = polytopeFromVertices(std::move(polar));

  require(static_cast<int>(trap.vertices.size()) == 2 * n + 2, ErrKind::Internal,
          "trapezohedron vertex count");
  int kites = 0;
  for (int fi : trap.lattice.facetIndices()) {
    require(trap.lattice.face(fi).verts.size() == 4, ErrKind::Internal,
            "trapezohedron facet is not a kite");
    ++kites;
  }
  require(kites == 2 * n, ErrKind::Internal, "trapezohedron kite count");

  LinForm ell;
  ell.coeffs = {Rat(0), Rat(0), Rat(1)};
  return {std::move(trap), std::move(ell)};
}

BuiltPolytope buildProd(const BuiltPolytope& a, const BuiltPolytope& b) {
  // ell = ell1 + eps * ell2 with eps small enough that distinct ell1-levels
  // stay separated; within a level vertices are ordered by ell2.
  std::vector<Rat> va, vb;
  for (const auto& p : a.polytope.vertices) va.push_back(a.ell.eval(p));
  for (const auto& p : b.polytope.vertices) vb.push_back(b.ell.eval(p));
  Rat gap1 = 1;
  {
    std::vector<Rat> sorted = va;
    std::sort(sorted.begin(), sorted.end());
    bool found = false;
    for (size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i] != sorted[i - 1]) {
        Rat g = sorted[i] - sorted[i - 1];
        if (!found || g < gap1) gap1 = g;
        found = true;
      }
    if (!found) gap1 = 1;
  }
  Rat spread2 = 0;
  if (!vb.empty()) spread2 = *std::max_element(vb.begin(), vb.end()) -
                             *std::min_element(vb.begin(), vb.end());
  Rat eps = gap1 / (2 * (spread2 + 1));

  int n1 = a.polytope.ambientDim, n2 = b.polytope.ambientDim;
  std::vector<Point> pts;
  for (const auto& p : a.polytope.vertices)
    for (const auto& q : b.polytope.vertices) {
      Point r = p;
      r.insert(r.end(), q.begin(), q.end());
      pts.push_back(std::move(r));
    }
  LinForm ell;
  ell.coeffs.resize(n1 + n2);
  for (int i = 0; i < n1; ++i) ell.coeffs[i] = a.ell.coeffs[i];
  for (int i = 0; i < n2; ++i) ell.coeffs[n1 + i] = eps * b.ell.coeffs[i];
  ell.constant = a.ell.constant + eps * b.ell.constant;
  return {polytopeFromVertices(std::move(pts)), std::move(ell)};
}

BuiltPolytope buildPyramid(const BuiltPolytope& base, bool apexIsMax) {
  int n = base.polytope.ambientDim;
  std::vector<Point> pts;
  for (const auto& p : base.polytope.vertices) {
    Point q = p;
    q.push_back(Rat(0));
    pts.push_back(std::move(q));
  }
  Point centroid(n, Rat(0));
  for (const auto& p : base.polytope.vertices) centroid = centroid + p;
  centroid = scaled(centroid, Rat(1, static_cast<int>(base.polytope.vertices.size())));
  Point apex = centroid;
  apex.push_back(Rat(1));
  pts.push_back(apex);

  Rat lo, hi;
  bool first = true;
  for (const auto& p : base.polytope.vertices) {
    Rat v = base.ell.eval(p);
    if (first) { lo = hi = v; first = false; }
    else { lo = std::min(lo, v); hi = std::max(hi, v); }
  }
  Rat atCentroid = base.ell.eval(centroid);
  Rat m = apexIsMax ? Rat(hi - atCentroid + 1) : Rat(lo - atCentroid - 1);

  LinForm ell;
  ell.coeffs = base.ell.coeffs;
  ell.coeffs.push_back(m);
  ell.constant = base.ell.constant;
  return {polytopeFromVertices(std::move(pts)), std::move(ell)};
}

} // namespace

ConstructorExpr parseExpr(const std::string& text) {
  Parser p(text);
  ConstructorExpr e = p.expr();
  p.skipWs();
  if (p.pos != text.size()) p.err("end of input");
  validate(e);
  return e;
}

BuiltPolytope build(const ConstructorExpr& e) {
  using K = ConstructorExpr::Kind;
  switch (e.kind) {
  case K::Simplex: return buildSimplex(e.param);
  case K::Cube: return buildCube(e.param);
  case K::Ngon: return buildNgon(e.param);
  case K::QuadSep: return buildQuadSep();
  case K::QuadAdj: return buildQuadAdj();
  case K::Nostrat5: return buildNostrat5();
  case K::Trapezohedron: return buildTrapezohedron(e.param);
  case K::Prod: return buildProd(build(e.args[0]), build(e.args[1]));
  case K::PyrMin: return buildPyramid(build(e.args[0]), false);
  case K::PyrMax: return buildPyramid(build(e.args[0]), true);
  }
  fail(ErrKind::Internal, "unhandled constructor");
}

BuiltPolytope build(const std::string& text) { return build(parseExpr(text)); }

OrientedPolytope buildOriented(const ConstructorExpr& e) {
  BuiltPolytope bp = build(e);
  return orient(std::move(bp.polytope), std::move(bp.ell));
}

OrientedPolytope buildOriented(const std::string& text) { return buildOriented(parseExpr(text)); }

} // namespace mpp
