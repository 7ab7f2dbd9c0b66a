#include "mpp/cli.hpp"

#include <CLI11.hpp>

#include "mpp/errors.hpp"
#include "mpp/jsonio.hpp"
#include "mpp/suite.hpp"

namespace mpp {

namespace {

OrientedPolytope loadOriented(const std::string& path) {
  json j;
  try {
    j = json::parse(readFile(path));
  } catch (const json::exception& e) {
    fail(ErrKind::BadInput, std::string("invalid JSON: ") + e.what());
  }
  BuiltPolytope bp = polytopeFromJson(j);
  return orient(std::move(bp.polytope), std::move(bp.ell));
}

} // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact monotone path polytope toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "build a polytope from a constructor expression");
  std::string genExpr, genOut;
  gen->add_option("expr", genExpr, "constructor expression, e.g. prod(cube(2),simplex(1))")
      ->required();
  gen->add_option("-o,--out", genOut, "output file (stdout when omitted)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "orientation, BB data, relations, equivalences");
  std::string anIn, anDot;
  analyze->add_option("input", anIn, "polytope JSON file")->required();
  analyze->add_option("--dot", anDot, "emit a graph instead: skeleton|hasse")
      ->check(CLI::IsMember({"skeleton", "hasse"}));

  // chow
  auto* chow = app.add_subcommand("chow", "monotone path polytope face lattice");
  std::string chIn, chDot;
  bool chOracle = false, chSimple = false;
  chow->add_option("input", chIn, "polytope JSON file")->required();
  chow->add_flag("--oracle", chOracle, "also run the Minkowski-slice oracle");
  chow->add_flag("--simple", chSimple, "evaluate the simplicity conditions");
  chow->add_option("--dot", chDot, "emit the CH 1-skeleton as graphviz")
      ->check(CLI::IsMember({"skeleton"}));

  // poly
  auto* poly = app.add_subcommand("poly", "kernels, KLS and Chow polynomials");
  std::string pIn, pKernel = "paper";
  bool pVerifyMain = false;
  poly->add_option("input", pIn, "polytope JSON file")->required();
  poly->add_option("--kernel", pKernel, "kernel choice: paper|chi")
      ->check(CLI::IsMember({"paper", "chi"}));
  poly->add_flag("--verify-main", pVerifyMain, "check Chow = dual h on every interval");

  // verify
  auto* verify = app.add_subcommand("verify", "run the invariant suite over the corpus");
  std::string vSuite = "quick";
  verify->add_option("--suite", vSuite, "quick|full")->check(CLI::IsMember({"quick", "full"}));

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*gen) {
      BuiltPolytope bp = build(genExpr);
      std::string text = polytopeToJson(bp.polytope, bp.ell).dump(2) + "\n";
      if (genOut.empty()) out << text;
      else writeFile(genOut, text);
      return 0;
    }
    if (*analyze) {
      OrientedPolytope op = loadOriented(anIn);
      if (anDot == "skeleton") { out << skeletonDot(op); return 0; }
      if (anDot == "hasse") { out << hasseDot(op); return 0; }
      out << analyzeReport(op).dump(2) << "\n";
      return 0;
    }
    if (*chow) {
      OrientedPolytope op = loadOriented(chIn);
      if (!chDot.empty()) {
        out << chSkeletonDot(op, chFaces(op));
        return 0;
      }
      out << chowReport(op, chOracle, chSimple).dump(2) << "\n";
      return 0;
    }
    if (*poly) {
      OrientedPolytope op = loadOriented(pIn);
      json rep = polyReport(op, pKernel, pVerifyMain);
      out << rep.dump(2) << "\n";
      if (pVerifyMain && !rep["chow_duality"]["all_pass"].get<bool>()) return 1;
      return 0;
    }
    if (*verify) {
      auto results = runSuite(vSuite == "full");
      json j;
      json table = json::array();
      bool allPass = true;
      std::string firstFailure;
      for (const auto& r : results) {
        table.push_back({{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        if (!r.pass && allPass) firstFailure = r.name + ": " + r.detail;
        allPass = allPass && r.pass;
        err << (r.pass ? "PASS  " : "FAIL  ") << r.name
            << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
      }
      j["checks"] = table;
      j["all_pass"] = allPass;
      if (!allPass) j["first_failure"] = firstFailure;
      out << j.dump(2) << "\n";
      return allPass ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.isInputError() ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace mpp
