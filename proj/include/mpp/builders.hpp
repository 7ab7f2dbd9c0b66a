#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mpp/oriented.hpp"

namespace mpp {

// Constructor DSL:
//   simplex(n) | cube(n) | ngon(n) | quadSep | quadAdj | nostrat5
//   | trapezohedron(n) | prod(e1, e2) | pyrMin(e) | pyrMax(e)
struct ConstructorExpr {
  enum class Kind { Simplex, Cube, Ngon, QuadSep, QuadAdj, Nostrat5, Trapezohedron, Prod, PyrMin, PyrMax };
  Kind kind;
  int param = 0;
  std::vector<ConstructorExpr> args;

  int leafCount() const {
    if (args.empty()) return 1;
    int c = 0;
    for (const auto& a : args) c += a.leafCount();
    return c;
  }
};

// Parses the DSL; ParseError carries line/column/expectation.
ConstructorExpr parseExpr(const std::string& text);

struct BuiltPolytope {
  Polytope polytope;
  LinForm ell;
};

BuiltPolytope build(const ConstructorExpr& e);
BuiltPolytope build(const std::string& text); // parse + build

OrientedPolytope buildOriented(const ConstructorExpr& e);
OrientedPolytope buildOriented(const std::string& text);

} // namespace mpp
