#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qga/cli/cli.hpp"
#include "qga/cli/document.hpp"
#include "qga/cli/sampler.hpp"
#include "qga/core/error.hpp"

using namespace qga;
using namespace qga::cli;

namespace {

const std::string kFixtures = std::string(QGA_TEST_DIR) + "/fixtures/";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qga");
  std::ostringstream out, err;
  const int code = execute_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("qga_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("quadric from points") {
    const auto r = run({"quadric-from-points", "--n", "2", "-p", "-1,0", "-p", "1,0", "-p", "0,-1", "-p", "0,1"});
    REQUIRE(r.code == 0);
    const auto doc = parse_document(json::parse(r.out));
    CHECK(doc.kind == "quadric");
    QgaContext<double> c(2);
    const auto v = document_multivector(doc, c);
    CHECK(proportional(v, Multivector<double>::vector(c.algebra(), std::vector<double>{4, 0, -1, 4, 0, -1})));
  }

  TEST_CASE("invert a point") {
    const auto r = run({"invert", "--quadric", kFixtures + "unit-circle.json", "--point", "1,2"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out) == json::parse(R"({"point":[0.2,0.4]})"));
    const auto exact = run({"--mode", "rational", "invert", "--quadric", kFixtures + "unit-circle.json", "--point", "1,2"});
    CHECK(json::parse(exact.out) == json::parse(R"({"point":["1/5","2/5"]})"));
    const auto center = run({"invert", "--quadric", kFixtures + "ellipsoid.json", "--point", "0,0,0"});
    CHECK(json::parse(center.out) == json::parse(R"({"point":"infinity"})"));
  }

  TEST_CASE("global options after the subcommand") {
    const auto r = run({"invert", "--quadric", kFixtures + "unit-circle.json", "--point", "1,2", "--mode", "rational"});
    CHECK(json::parse(r.out)["point"][0] == "1/5");
  }

  TEST_CASE("mode from the environment") {
    ::setenv("QGA_MODE", "rational", 1);
    const auto r = run({"--mode", "float", "invert", "--quadric", kFixtures + "unit-circle.json", "--point", "1,2"});
    ::unsetenv("QGA_MODE");
    CHECK(json::parse(r.out)["point"][0] == "1/5");
    ::setenv("QGA_MODE", "fast", 1);
    const auto bad = run({"embed", "--point", "1,2"});
    ::unsetenv("QGA_MODE");
    CHECK(bad.code == 2);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"invert", "--point", "1,2"}).code == 2);
    CHECK(run({"embed", "--point", "1,2", "--mode", "quad"}).code == 2);
    CHECK(run({"invert", "--quadric", "/nonexistent.json", "--point", "1,2"}).code == 2);
    const auto r = run({"cayley"});
    CHECK(r.code == 2);
    CHECK(json::parse(r.err)["error"]["code"] == "UsageError");
    CHECK(r.out.empty());
  }

  TEST_CASE("domain errors exit with 1 and an error object") {
    const auto r = run({"quadric-from-points", "-p", "1,0", "-p", "1,0", "-p", "0,1", "-p", "0,-1"});
    CHECK(r.code == 1);
    CHECK(json::parse(r.err)["error"]["code"] == "DegeneratePoints");
    const auto point = temp_file("point.json", R"({"kind":"point","n":2,"data":{"coords":[1,2]}})");
    const auto null = run({"invert", "--quadric", point, "--point", "1,0"});
    CHECK(null.code == 1);
    CHECK(json::parse(null.err)["error"]["code"] == "NotAQuadric");
    const auto bad = temp_file("bad.json", R"({"kind":"circle","n":2,"data":{"terms":[]}})");
    CHECK(json::parse(run({"classify", "--object", bad}).err)["error"]["code"] == "InvalidDocument");
    const auto garbage = temp_file("garbage.json", "{not json");
    CHECK(run({"classify", "--object", garbage}).code == 1);
    CHECK(json::parse(run({"embed", "--point", "1,x"}).err)["error"]["code"] == "InvalidArgument");
    CHECK(json::parse(run({"embed", "--point", "1,2", "--n", "3"}).err)["error"]["code"] == "DimensionMismatch");
  }

  TEST_CASE("embed and classify") {
    const auto r = run({"--mode", "rational", "embed", "--point", "1,2"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["kind"] == "point");
    CHECK(doc["data"]["coords"] == json::parse(R"(["1","2"])"));
    const auto file = temp_file("embedded.json", r.out);
    const auto cls = json::parse(run({"classify", "--object", file}).out);
    CHECK(cls["classification"] == "NormalizedPoint");
    CHECK(cls["point"] == json::parse("[1.0,2.0]"));
    const auto ideal = json::parse(run({"classify", "--vector", "0,0,1,0,0,1"}).out);
    CHECK(ideal["classification"] == "IdealPoint");
    const auto parabola = json::parse(run({"classify", "--vector", "2,0,1,0,1,0"}).out);
    CHECK(parabola["classification"] == "QuadricVector");
    CHECK(parabola["conic"] == "ParabolaYAxis");
  }

  TEST_CASE("hyperplane and chi") {
    const auto plane = json::parse(run({"--mode", "rational", "hyperplane", "-p", "1,1,1", "-p", "1,1,-1", "-p", "1,-1,1"}).out);
    CHECK(plane["kind"] == "plane");
    const auto line = json::parse(run({"hyperplane", "-p", "-1,0", "-p", "1,0"}).out);
    CHECK(line["kind"] == "line");
    const auto v = json::parse(run({"--mode", "rational", "chi", "--matrix", "[[1,0,0],[0,-1,0],[0,0,-1]]"}).out);
    CHECK(v["data"]["terms"][0]["coeff"] == "-2");
    const auto file = temp_file("chi.json", v.dump());
    const auto back = json::parse(run({"--mode", "rational", "chi", "--object", file}).out);
    CHECK(back["matrix"] == json::parse(R"([["1","0","0"],["0","-1","0"],["0","0","-1"]])"));
    const auto mfile = temp_file("matrix.json", R"({"matrix":[[1,0,0],[0,-1,0],[0,0,-1]]})");
    CHECK(json::parse(run({"chi", "--matrix-file", mfile}).out)["kind"] == "quadric");
    CHECK(run({"chi", "--matrix", "[[0,0],[0,0]]"}).code == 1);
  }

  TEST_CASE("documents round trip") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--mode", "rational", "embed", "--point", "1/3,-2"},
             {"quadric-from-points", "-p", "0.5,0", "-p", "1,0.25", "-p", "0,-1", "-p", "0.125,1"},
             {"--mode", "rational", "chi", "--matrix", "[[-2,1,0],[1,1,0],[0,0,3]]"}}) {
      const auto r = run(args);
      REQUIRE(r.code == 0);
      const auto doc = parse_document(json::parse(r.out));
      QgaContext<Rational> c(doc.n);
      const auto v = document_multivector(doc, c);
      const auto again = object_document(doc.kind, v, doc.n);
      CHECK(proportional(document_multivector(parse_document(again), c), v));
    }
  }

  TEST_CASE("documents without terms") {
    QgaContext<Rational> c(2);
    const auto m = parse_document(json::parse(R"({"kind":"quadric","n":2,"data":{"matrix":[[-1,0,0],[0,1,0],[0,0,1]]}})"));
    CHECK(proportional(document_multivector(m, c),
                       c.vector({Rational(4), Rational(0), Rational(-1), Rational(4), Rational(0), Rational(-1)})));
    const auto p = parse_document(json::parse(R"({"kind":"point","n":2,"data":{"coords":["1/2",3]}})"));
    CHECK(document_multivector(p, c) == embed(BasePoint<Rational>{{Rational(1, 2), Rational(3)}}, c));
    CHECK_THROWS_AS(parse_document(json::parse(R"({"kind":"point","n":2,"data":{}})")), Error);
    CHECK_THROWS_AS(parse_document(json::parse(R"({"kind":"point","n":2,"data":{"terms":[{"generators":[2,1],"coeff":1}]}})")), Error);
    CHECK_THROWS_AS(parse_document(json::parse(R"({"kind":"point","n":1,"data":{"terms":[{"generators":[4],"coeff":1}]}})")), Error);
    CHECK_THROWS_AS(parse_document(json::parse(R"({"kind":"point","n":0,"data":{"terms":[]}})")), Error);
    QgaContext<Rational> c3(3);
    CHECK_THROWS_AS(document_multivector(p, c3), Error);
  }

  TEST_CASE("dualize and gipns") {
    const auto quad = run({"--mode", "rational", "quadric-from-points", "-p", "-1,0", "-p", "1,0", "-p", "0,-1", "-p", "0,1"});
    const auto file = temp_file("circle.json", quad.out);
    const auto g = json::parse(run({"--mode", "rational", "gipns", "--object", file}).out);
    CHECK(g["components"][0]["polynomial"] == "-2*x^2 - 2*y^2 + 2");
    CHECK(g["rank"] == 1);
    const auto opns = json::parse(run({"dualize", "--object", file, "--direction", "to-opns"}).out);
    CHECK(opns["kind"] == "blade");
    const auto ofile = temp_file("opns.json", opns.dump());
    const auto back = json::parse(run({"dualize", "--object", ofile, "--direction", "to-ipns"}).out);
    CHECK(back["kind"] == "quadric");
    const auto sys = json::parse(run({"gipns", "--object", ofile, "--space", "opns"}).out);
    CHECK(sys["space"] == "opns");
  }

  TEST_CASE("invert objects") {
    const auto img = run({"--mode", "rational", "--variant", "inverse", "invert", "--quadric", kFixtures + "unit-circle.json",
                          "--object", kFixtures + "point-1-2.json"});
    REQUIRE(img.code == 0);
    const auto doc = json::parse(img.out);
    CHECK(doc["kind"] == "quadric");
    CHECK(doc["data"]["terms"][0]["coeff"] == "5");
    const auto conj = json::parse(run({"--mode", "rational", "invert", "--quadric", kFixtures + "unit-circle.json",
                                       "--object", kFixtures + "point-1-2.json"})
                                      .out);
    CHECK(conj["data"]["terms"][0]["coeff"] == "-20");
  }

  TEST_CASE("motor") {
    const auto r = json::parse(run({"--mode", "rational", "motor", "--rotor", "1/2,0", "--translator", "0,1,0", "--point", "1,0"}).out);
    CHECK(r["image"] == json::parse(R"(["-7/25","26/25"])"));
    CHECK(r["dual_quaternion"]["real"] == "6/5");
    const auto t = json::parse(run({"motor", "--translator", "0,1,0", "--point", "0.5,0.25"}).out);
    CHECK(t["image"][1].get<double>() == doctest::Approx(2.25));
    const auto rot = json::parse(run({"motor", "--rotor", "0.7853981633974483,0", "--point", "1,0"}).out);
    CHECK(rot["image"][1].get<double>() == doctest::Approx(-1.0));
    CHECK(run({"motor"}).code == 2);
    CHECK(run({"motor", "--rotor", "1,2,3"}).code == 2);
  }

  TEST_CASE("sample the unit circle") {
    const double step = 0.01;
    const auto r = run({"sample", "--quadric", kFixtures + "unit-circle.json", "--box", "-2,2", "--step", "0.01"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "x,y");
    int count = 0;
    while (std::getline(in, line)) {
      const auto comma = line.find(',');
      const double x = std::stod(line.substr(0, comma)), y = std::stod(line.substr(comma + 1));
      CHECK(std::abs(x * x + y * y - 1) <= 2 * step);
      ++count;
    }
    CHECK(count > 600);
    const auto again = run({"sample", "--quadric", kFixtures + "unit-circle.json", "--box", "-2,2", "--step", "0.01"});
    CHECK(again.out == r.out);
  }

  TEST_CASE("sample in three dimensions") {
    const auto r = run({"sample", "--quadric", kFixtures + "ellipsoid.json", "--box", "-1.5,1.5", "--step", "0.25"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("x,y,z\n", 0) == 0);
    CHECK(run({"sample", "--quadric", kFixtures + "ellipsoid.json", "--box", "-1,1,2"}).code == 2);
    CHECK(run({"sample", "--quadric", kFixtures + "ellipsoid.json", "--box", "1,-1"}).code == 1);
  }

  TEST_CASE("cayley") {
    const auto r = json::parse(run({"--mode", "rational", "cayley", "--n", "1"}).out);
    CHECK(r["entries"].size() == 16);
    bool found = false;
    for (const auto& entry : r["entries"]) {
      if (entry["left"] == json::parse("[3]") && entry["right"] == json::parse("[1]")) {
        CHECK(entry["product"] == json::parse(R"([{"coeff":"-1","generators":[]},{"coeff":"-1","generators":[1,3]}])"));
        found = true;
      }
    }
    CHECK(found);
    CHECK(json::parse(run({"cayley", "--n", "1", "--max-grade", "3"}).out)["entries"].size() == 64);
  }

  TEST_CASE("help") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("quadric-from-points") != std::string::npos);
  }
}

TEST_SUITE("sampler") {
  TEST_CASE("grid order and csv") {
    ImplicitPolynomial<double> p(1);
    p.add_term({1}, 1.0);
    p.add_term({0}, -0.3);
    const auto pts = sample_zero_set(p, Box::cube(1, 0, 1), 0.25);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0][0] == doctest::Approx(0.3));
    std::ostringstream out;
    write_csv(out, pts, 1);
    CHECK(out.str().rfind("x\n0.3", 0) == 0);
    CHECK_THROWS_AS(sample_zero_set(p, Box::cube(1, 0, 1), 0.0), Error);
    CHECK_THROWS_AS(sample_zero_set(p, Box::cube(2, 0, 1), 0.5), Error);
  }
}
