#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mpp/cli.hpp"
#include "mpp/jsonio.hpp"

using namespace mpp;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = runCli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/mpp_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("gen writes canonical polytope JSON") {
  TempFile f("cube3.json");
  CliRun r = run({"gen", "cube(3)", "-o", f.path});
  CHECK(r.code == 0);
  json j = json::parse(readFile(f.path));
  CHECK(j["ambient_dim"] == 3);
  CHECK(j["vertices"].size() == 8);

  CliRun t = run({"gen", "trapezohedron(4)"});
  CHECK(t.code == 0);
  CHECK(json::parse(t.out)["vertices"].size() == 10);

  CliRun p = run({"gen", "prod(simplex(2),simplex(1))"});
  CHECK(json::parse(p.out)["vertices"].size() == 6);
}

TEST_CASE("gen rejects malformed expressions with exit 2") {
  CHECK(run({"gen", "cube(0)"}).code == 2);
  CHECK(run({"gen", "frobnicate(2)"}).code == 2);
  CHECK(run({"gen", "prod(cube(2)"}).code == 2);
}

TEST_CASE("analyze") {
  TempFile f("ns5.json");
  REQUIRE(run({"gen", "nostrat5", "-o", f.path}).code == 0);
  CliRun r = run({"analyze", f.path});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["conditions"] ==
        json::array({false, false, true, true, true, true, false, false}));
  CHECK(j["irreducibility"]["holds"] == false);

  TempFile g("ngon5.json");
  REQUIRE(run({"gen", "ngon(5)", "-o", g.path}).code == 0);
  json j5 = json::parse(run({"analyze", g.path}).out);
  CHECK(j5["stratified"] == false);

  TempFile c("c3.json");
  REQUIRE(run({"gen", "cube(3)", "-o", c.path}).code == 0);
  json jc = json::parse(run({"analyze", c.path}).out);
  CHECK(jc["stratified"] == true);
  // serialized face lattice: faces sorted by (dim, vertex set), with covers
  CHECK(jc["lattice"]["faces"].size() == 28);
  CHECK(jc["lattice"]["faces"][0]["dim"] == -1);
  CHECK(jc["lattice"]["faces"][27]["dim"] == 3);
  for (size_t i = 1; i < jc["lattice"]["faces"].size(); ++i) {
    auto& a = jc["lattice"]["faces"][i - 1];
    auto& b = jc["lattice"]["faces"][i];
    bool ordered = a["dim"] < b["dim"] ||
                   (a["dim"] == b["dim"] &&
                    a["vertices"].get<std::vector<int>>() < b["vertices"].get<std::vector<int>>());
    CHECK(ordered);
  }

  // corrupted input exits 2
  TempFile bad("bad.json");
  writeFile(bad.path, "{ not json ]");
  CHECK(run({"analyze", bad.path}).code == 2);
  CHECK(run({"analyze", "/nonexistent/file.json"}).code == 2);
}

TEST_CASE("analyze emits DOT graphs") {
  TempFile f("c2.json");
  REQUIRE(run({"gen", "cube(2)", "-o", f.path}).code == 0);
  CliRun sk = run({"analyze", f.path, "--dot", "skeleton"});
  CHECK(sk.code == 0);
  CHECK(sk.out.find("digraph skeleton") != std::string::npos);
  CHECK(sk.out.find("->") != std::string::npos);
  CliRun ha = run({"analyze", f.path, "--dot", "hasse"});
  CHECK(ha.code == 0);
  CHECK(ha.out.find("digraph hasse") != std::string::npos);
}

TEST_CASE("chow") {
  TempFile f("c3.json");
  REQUIRE(run({"gen", "cube(3)", "-o", f.path}).code == 0);
  CliRun r = run({"chow", f.path, "--oracle", "--simple"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["f_vector"] == json::array({1, 6, 6, 1}));
  CHECK(j["simple"]["verdict"] == true);
  CHECK(j["oracle"]["isomorphic"] == true);
  CHECK(j["monotone_paths"].size() == 6);

  TempFile d("dp.json");
  REQUIRE(run({"gen", "pyrMax(pyrMin(quadSep))", "-o", d.path}).code == 0);
  json jd = json::parse(run({"chow", d.path, "--simple"}).out);
  CHECK(jd["simple"]["verdict"] == false);

  TempFile s("s3.json");
  REQUIRE(run({"gen", "simplex(3)", "-o", s.path}).code == 0);
  json js = json::parse(run({"chow", s.path}).out);
  CHECK(js["monotone_paths"].size() == 4);

  // the serialized CH lattice: faces keyed by chains of vertex sets
  CHECK(js["lattice"]["faces"].size() == 9); // the quadrilateral: 4 + 4 + 1
  for (const auto& fc : js["lattice"]["faces"]) {
    CHECK(fc.contains("dim"));
    CHECK(fc.contains("chain"));
  }
  CHECK(js["lattice"]["covers"].size() == 8 + 4); // edge covers + top covers

  // DOT emission of the CH skeleton
  CliRun dot = run({"chow", s.path, "--dot", "skeleton"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("graph ch_skeleton") != std::string::npos);

  // NotStratified exits 1
  TempFile q("qa.json");
  REQUIRE(run({"gen", "quadAdj", "-o", q.path}).code == 0);
  CliRun rq = run({"chow", q.path});
  CHECK(rq.code == 1);
}

TEST_CASE("poly") {
  TempFile f("s4.json");
  REQUIRE(run({"gen", "simplex(4)", "-o", f.path}).code == 0);
  json j = json::parse(run({"poly", f.path, "--verify-main"}).out);
  CHECK(j["is_kernel"] == true);
  CHECK(j["chow_duality"]["all_pass"] == true);
  // kappa on the full interval is x^4 - x^3
  bool found = false;
  for (const auto& e : j["intervals"])
    if (e["v"] == 0 && e["w"] == 4) {
      CHECK(e["kappa"] == json::array({0, 0, 0, -1, 1}));
      found = true;
    }
  CHECK(found);

  TempFile t("t4.json");
  REQUIRE(run({"gen", "trapezohedron(4)", "-o", t.path}).code == 0);
  json jt = json::parse(run({"poly", t.path}).out);
  CHECK(jt["is_kernel"] == true);
  json jc = json::parse(run({"poly", t.path, "--kernel", "chi"}).out);
  CHECK(jc["kernel"] == "chi");

  TempFile q("qa2.json");
  REQUIRE(run({"gen", "quadAdj", "-o", q.path}).code == 0);
  CHECK(run({"poly", q.path}).code == 1);
}

TEST_CASE("pipelines do not mutate the polytope file") {
  TempFile f("roundtrip.json");
  REQUIRE(run({"gen", "trapezohedron(3)", "-o", f.path}).code == 0);
  std::string before = readFile(f.path);
  (void)run({"analyze", f.path});
  (void)run({"chow", f.path, "--oracle"});
  (void)run({"poly", f.path, "--verify-main"});
  CHECK(readFile(f.path) == before);
}

TEST_CASE("deterministic byte-identical output") {
  TempFile f("det.json");
  REQUIRE(run({"gen", "prod(cube(2),simplex(1))", "-o", f.path}).code == 0);
  CliRun a = run({"analyze", f.path});
  CliRun b = run({"analyze", f.path});
  CHECK(a.out == b.out);
  CliRun c = run({"chow", f.path, "--oracle", "--simple"});
  CliRun d = run({"chow", f.path, "--oracle", "--simple"});
  CHECK(c.out == d.out);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
}
