#pragma once

#include <string>

#include <json.hpp>

#include "mpp/builders.hpp"
#include "mpp/posetalg.hpp"

namespace mpp {

using nlohmann::json;

// Polytope file schema:
//   {"ambient_dim": n,
//    "vertices": [["p/q", ...], ...],
//    "ell": {"coeffs": ["p/q", ...], "constant": "p/q"}}
json polytopeToJson(const Polytope& p, const LinForm& ell);
BuiltPolytope polytopeFromJson(const json& j);

json latticeToJson(const FaceLattice& l);
json polyToJson(const IntPoly& p); // ascending integer coefficient array

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& content);

// Report payloads for the CLI.
json analyzeReport(const OrientedPolytope& op);
json chowReport(const OrientedPolytope& op, bool withOracle, bool withSimplicity);
json polyReport(const OrientedPolytope& op, const std::string& kernelChoice, bool verifyMain);

// Graphviz emitters.
std::string skeletonDot(const OrientedPolytope& op);
std::string hasseDot(const OrientedPolytope& op);
std::string chSkeletonDot(const OrientedPolytope& op, const CHLattice& l);

} // namespace mpp
