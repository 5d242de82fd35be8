#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "wtop/cli.hpp"
#include "wtop/json_io.hpp"

using namespace wtop;
using namespace wtop::testing;
using io::json;

namespace {

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content)
        : path("wtop_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const char* kAnnulus = R"({"type":"holed_plane","bounds":["1","1"],
    "holes":[["1/3","1/3","2/3","2/3"]],
    "marked":[["0","0"],["1/3","1/3"],["2/3","2/3"],["1","1"]]})";

}  // namespace

TEST_CASE("delta space json round trip") {
    Rng rng(2029);
    for (int t = 0; t < 10; ++t) {
        auto X = random_delta_space(rng, 4);
        auto back = io::delta_space_from_json(io::to_json(X));
        CHECK(back.points == X.points);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) CHECK(back.d[i][j] == X.d[i][j]);
    }
    // The documented wire format parses.
    auto space = io::delta_space_from_json(json::parse(
        R"({"type":"finite_delta","points":["a","b"],"matrix":[["0","1"],["inf","0"]]})"));
    CHECK(space.d[1][0].is_infinite());
}

TEST_CASE("path json round trip") {
    auto j = json::parse(
        R"({"model":"delta_line","times":["0","1/2","1"],"values":["0","1/4","1"]})");
    auto path = io::path_from_json(j);
    CHECK(path.values[1][0] == Rational(1, 4));
    auto back = io::path_from_json(io::to_json(path));
    CHECK(back.times == path.times);
    CHECK(back.values == path.values);

    auto j2 = json::parse(
        R"({"model":"delta_line","power":2,"times":["0","1"],
            "values":[["0","0"],["1","1/2"]]})");
    auto path2 = io::path_from_json(j2);
    CHECK(path2.model.power == 2);
    auto back2 = io::path_from_json(io::to_json(path2));
    CHECK(back2.values == path2.values);

    CHECK_THROWS_AS(io::path_from_json(json::parse(
                        R"({"model":"wiggly","times":["0","1"],"values":["0","1"]})")),
                    ParseError);
}

TEST_CASE("weighted category json round trip") {
    auto plane = io::plane_from_json(json::parse(kAnnulus));
    auto cat = fundamental_category(plane).category;
    auto back = io::wcat_from_json(io::to_json(cat));
    CHECK(is_valid_wcat(back));
    CHECK(back.objects == cat.objects);
    CHECK(back.morphisms.size() == cat.morphisms.size());
    for (std::size_t f = 0; f < cat.morphisms.size(); ++f) {
        CHECK(back.morphisms[f].w == cat.morphisms[f].w);
        for (std::size_t g = 0; g < cat.morphisms.size(); ++g)
            CHECK(back.then_table[f][g] == cat.then_table[f][g]);
    }
}

TEST_CASE("plane and wspace and theta round trips") {
    auto plane = io::plane_from_json(json::parse(kAnnulus));
    auto plane2 = io::plane_from_json(io::to_json(plane));
    CHECK(plane2.holes.size() == 1);
    CHECK(plane2.marked == plane.marked);

    auto w = io::wspace_from_json(json::parse(
        R"({"type":"chain_wspace","vertices":["x","y"],"edges":[["x","y"]],
            "weights":{"mode":"linear","edge_weights":["3"]}})"));
    auto w2 = io::wspace_from_json(io::to_json(w));
    CHECK(w2.weight({0}) == ExtWeight(Rational(3)));

    ChainWSpace tab;
    tab.vertices = {"a"};
    tab.edges = {{0, 0}};
    tab.mode = ChainWSpace::Mode::Tabled;
    tab.bound = 2;
    tab.table[{0}] = ExtWeight(Rational(1));
    tab.table[{0, 0}] = ExtWeight(Rational(3, 2));
    auto tab2 = io::wspace_from_json(io::to_json(validate_wspace(tab)));
    CHECK(tab2.weight({0, 0}) == ExtWeight(Rational(3, 2)));

    auto theta = io::theta_from_json(json::parse(R"({"theta":{"p":0,"q":1,"r":1,"d":2}})"));
    CHECK(theta.d == 2);
    auto theta2 = io::theta_from_json(io::to_json(theta));
    CHECK(theta2.p == theta.p);
    CHECK(theta2.q == theta.q);
}

TEST_CASE("cli: fundcat table for the annulus") {
    TempFile plane("annulus.json", kAnnulus);
    auto result = run_cli({"fundcat", plane.path});
    CHECK(result.code == 0);
    const std::string expected =
        "objects: 4\n"
        "hom((0,0), (1/3,1/3)): 1 class, weight 2/3 (~0.6667)\n"
        "hom((0,0), (2/3,2/3)): 2 classes, weight 4/3 (~1.3333)\n"
        "hom((0,0), (1,1)): 2 classes, weight 2\n"
        "hom((1/3,1/3), (2/3,2/3)): 2 classes, weight 2/3 (~0.6667)\n"
        "hom((1/3,1/3), (1,1)): 2 classes, weight 4/3 (~1.3333)\n"
        "hom((2/3,2/3), (1,1)): 1 class, weight 2/3 (~0.6667)\n"
        "generators:\n"
        "  (0,0)->(1/3,1/3):RU  weight 2/3 (~0.6667)\n"
        "  (1/3,1/3)->(2/3,2/3):RU  weight 2/3 (~0.6667)\n"
        "  (1/3,1/3)->(2/3,2/3):UR  weight 2/3 (~0.6667)\n"
        "  (2/3,2/3)->(1,1):RU  weight 2/3 (~0.6667)\n"
        "geodetically simple: yes\n"
        "1-simple: no\n";
    CHECK(result.out == expected);
    // Byte-for-byte determinism.
    CHECK(run_cli({"fundcat", plane.path}).out == expected);
}

TEST_CASE("cli: spectrum of the annulus category") {
    TempFile plane("annulus2.json", kAnnulus);
    auto catjson = run_cli({"fundcat", plane.path, "--format", "json"});
    REQUIRE(catjson.code == 0);
    TempFile cat("annulus_cat.json", json::parse(catjson.out)["category"].dump());
    auto result = run_cli({"spectrum", cat.path});
    CHECK(result.code == 0);
    CHECK(result.out == "sp+ = {(1/3,1/3), (1,1)}; sp- = {(0,0), (2/3,2/3)}\n");
}

TEST_CASE("cli: vankampen on the annulus") {
    TempFile plane("annulus3.json", kAnnulus);
    auto result = run_cli({"vankampen", plane.path, "--cut", "1/3,2/3"});
    CHECK(result.code == 0);
    CHECK(result.out ==
          "pushout: 14 morphisms; direct: 14 morphisms\n"
          "comparison: isometric isomorphism\n");
}

TEST_CASE("cli: rotation classification verdicts") {
    TempFile sqrt2("sqrt2.json", R"({"theta":{"p":0,"q":1,"r":1,"d":2}})");
    TempFile sqrt3("sqrt3.json", R"({"theta":{"p":0,"q":1,"r":1,"d":3}})");
    TempFile half("halfsqrt2.json", R"({"theta":{"p":0,"q":1,"r":2,"d":2}})");
    auto none = run_cli({"rotation-classify", sqrt2.path, sqrt3.path});
    CHECK(none.code == 0);
    CHECK(none.out == "isometric: no; lipschitz: no\n");
    auto lip = run_cli({"rotation-classify", sqrt2.path, half.path});
    CHECK(lip.code == 0);
    CHECK(lip.out == "isometric: no; lipschitz: yes (word T-1 R R T R)\n");
}

TEST_CASE("cli: dmetric ops") {
    auto homplus = run_cli({"dmetric-op", "hom-plus", "2", "5"});
    CHECK(homplus.out == "3\n");
    TempFile arrow("arrow.json",
                   R"({"type":"finite_delta","points":["a","b"],
                       "matrix":[["0","1"],["inf","0"]]})");
    auto sym = run_cli({"dmetric-op", "symmetrize", arrow.path});
    CHECK(sym.code == 0);
    CHECK(sym.out == "points: 2\na: 0 1\nb: 1 0\n");
    auto tens = run_cli({"dmetric-op", "tensor", arrow.path, arrow.path, "--format", "json"});
    CHECK(tens.code == 0);
    auto parsed = json::parse(tens.out);
    CHECK(parsed["points"].size() == 4);

    auto quo = run_cli({"dmetric-op", "hom-plus", "bogus"});
    CHECK(quo.code == 2);
}

TEST_CASE("cli: validate dispatches on the type field") {
    TempFile arrow("arrow2.json",
                   R"({"type":"finite_delta","points":["a","b"],
                       "matrix":[["0","1"],["inf","0"]]})");
    auto ok = run_cli({"validate", arrow.path});
    CHECK(ok.code == 0);
    CHECK(ok.out == arrow.path + ": valid finite_delta with 2 points\n");

    TempFile bad("bad_space.json",
                 R"({"type":"finite_delta","points":["a","b"],
                     "matrix":[["0","1"],["1","1"]]})");
    auto fail = run_cli({"validate", bad.path});
    CHECK(fail.code == 2);
    CHECK(fail.err.find("reflexivity") != std::string::npos);

    auto missing = run_cli({"validate", "no_such_file.json"});
    CHECK(missing.code == 2);
}

TEST_CASE("cli: size caps exit with code 1") {
    TempFile wide("wide.json", [] {
        json j;
        j["type"] = "finite_delta";
        json pts = json::array(), matrix = json::array();
        for (int i = 0; i < 9; ++i) pts.push_back("p" + std::to_string(i));
        for (int i = 0; i < 9; ++i) {
            json row = json::array();
            for (int k = 0; k < 9; ++k) row.push_back(i == k ? "0" : "1");
            matrix.push_back(row);
        }
        j["points"] = pts;
        j["matrix"] = matrix;
        return j.dump();
    }());
    auto result = run_cli({"dmetric-op", "internal-hom", wide.path, wide.path, "--cap", "100"});
    CHECK(result.code == 1);
    CHECK(result.err.find("cap") != std::string::npos);
}

TEST_CASE("cli: paths and wspace and monoid verbs") {
    TempFile path("incpath.json",
                  R"({"model":"delta_line","times":["0","1/2","1"],
                      "values":["0","1","1"]})");
    CHECK(run_cli({"paths-op", "span", path.path}).out == "1\n");
    CHECK(run_cli({"paths-op", "length", path.path}).out == "1\n");
    CHECK(run_cli({"paths-op", "lipschitz-weight", path.path}).out == "2\n");
    auto lattice = run_cli({"paths-op", "lattice-check"});
    CHECK(lattice.code == 0);
    CHECK(lattice.out.find("all equations hold") != std::string::npos);

    TempFile wsp("wline.json",
                 R"({"type":"chain_wspace","vertices":["0","1","2"],
                     "edges":[["0","1"],["1","2"]],
                     "weights":{"mode":"linear","edge_weights":["1","1"]}})");
    auto classify = run_cli({"wspace-op", "classify", wsp.path});
    CHECK(classify.code == 0);
    CHECK(classify.out ==
          "span_metrizable: yes\nlength_metrizable: yes\nlinear: yes\n");
    auto galois = run_cli({"wspace-op", "galois", wsp.path});
    CHECK(galois.code == 0);

    TempFile axes("axes.json",
                  R"({"space":{"type":"finite_delta","points":["y","o","y'"],
                      "matrix":[["0","1","1"],["inf","0","1"],["inf","inf","0"]]},
                      "admissible":[["y","o"],["o","y'"]]})");
    auto flags = run_cli({"wspace-op", "classify", axes.path});
    CHECK(flags.out == "geodetic: yes\nlinearly_geodetic: no\n");

    TempFile sqrt2("sqrt2b.json", R"({"theta":{"p":0,"q":1,"r":1,"d":2}})");
    auto monoid = run_cli({"rotation-monoid", sqrt2.path, "--count", "3", "--bound", "4"});
    CHECK(monoid.code == 0);
    CHECK(monoid.out ==
          "0: (0,0)  weight 0\n"
          "1: (3,-2)  weight (3-2√2)/1\n"
          "2: (-4,3)  weight (-4+3√2)/1\n");
}

TEST_CASE("cli: path concatenation and reflection round-trip through json") {
    TempFile a("path_a.json",
               R"({"model":"delta_line","times":["0","1"],"values":["0","1/2"]})");
    TempFile b("path_b.json",
               R"({"model":"delta_line","times":["0","1"],"values":["1/2","1"]})");
    auto cc = run_cli({"paths-op", "concatenate", a.path, b.path});
    REQUIRE(cc.code == 0);
    auto parsed = io::path_from_json(json::parse(cc.out));
    CHECK(length(parsed) == ExtWeight(Rational(1)));
    auto rf = run_cli({"paths-op", "reflect", a.path});
    REQUIRE(rf.code == 0);
    auto reflected = io::path_from_json(json::parse(rf.out));
    CHECK(reflected.model.reversed);
    CHECK(length(reflected) == ExtWeight(Rational(1, 2)));
    CHECK(run_cli({"paths-op", "concatenate", b.path, a.path}).code == 2);
}

TEST_CASE("cli: wspace constructions") {
    TempFile edge1("edge1.json",
                   R"({"type":"chain_wspace","vertices":["a","b"],"edges":[["a","b"]],
                       "weights":{"mode":"linear","edge_weights":["1"]}})");
    TempFile edge2("edge2.json",
                   R"({"type":"chain_wspace","vertices":["c","d"],"edges":[["c","d"]],
                       "weights":{"mode":"linear","edge_weights":["2"]}})");
    auto tens = run_cli({"wspace-op", "tensor", edge1.path, edge2.path, "--format", "json"});
    REQUIRE(tens.code == 0);
    auto T = io::wspace_from_json(json::parse(tens.out));
    CHECK(T.mode == ChainWSpace::Mode::Linear);
    CHECK(T.vertices.size() == 4);
    auto prod = run_cli({"wspace-op", "product", edge1.path, edge2.path, "--format", "json"});
    REQUIRE(prod.code == 0);
    CHECK(io::wspace_from_json(json::parse(prod.out)).mode == ChainWSpace::Mode::Tabled);

    TempFile rel("glue.json", R"({"pairs":[["a","b"]]})");
    auto quo = run_cli({"wspace-op", "quotient", edge1.path, rel.path, "--format", "json"});
    REQUIRE(quo.code == 0);
    CHECK(io::wspace_from_json(json::parse(quo.out)).vertices.size() == 1);

    auto delta = run_cli({"wspace-op", "delta", edge1.path, "--format", "json"});
    REQUIRE(delta.code == 0);
    auto D = io::delta_space_from_json(json::parse(delta.out));
    CHECK(D.d[0][1] == ExtWeight(Rational(1)));
    CHECK(D.d[1][0].is_infinite());

    TempFile spin("axes_sp.json",
                  R"({"space":{"type":"finite_delta","points":["y","o","y'"],
                      "matrix":[["0","1","1"],["inf","0","1"],["inf","inf","0"]]},
                      "admissible":[["y","o"],["o","y'"]]})");
    auto sp = run_cli({"wspace-op", "sp", spin.path, "--format", "json"});
    REQUIRE(sp.code == 0);
    auto S = io::wspace_from_json(json::parse(sp.out));
    CHECK(S.mode == ChainWSpace::Mode::Tabled);
    CHECK(S.weight({0, 1}) == ExtWeight(Rational(1)));
    auto lm = run_cli({"wspace-op", "length-model", spin.path, "--format", "json"});
    REQUIRE(lm.code == 0);
    CHECK(io::wspace_from_json(json::parse(lm.out)).weight({0, 1}) == ExtWeight(Rational(2)));
    auto dual = run_cli({"wspace-op", "galois-dual", spin.path});
    CHECK(dual.code == 0);
    auto linz = run_cli({"wspace-op", "linearize", edge1.path, "--format", "json"});
    CHECK(linz.code == 0);
}

TEST_CASE("cli: more dmetric verbs") {
    TempFile arrow("arrow3.json",
                   R"({"type":"finite_delta","points":["a","b"],
                       "matrix":[["0","1"],["inf","0"]]})");
    CHECK(run_cli({"dmetric-op", "opposite", arrow.path}).out ==
          "points: 2\na: 0 inf\nb: 1 0\n");
    CHECK(run_cli({"dmetric-op", "scale", arrow.path, "2"}).out ==
          "points: 2\na: 0 2\nb: inf 0\n");
    CHECK(run_cli({"dmetric-op", "subspace", arrow.path, "b"}).out == "points: 1\nb: 0\n");
    CHECK(run_cli({"dmetric-op", "preorder", arrow.path}).out == "a <= b\n");
    TempFile rel("rel.json", R"({"pairs":[["a","b"]]})");
    auto quo = run_cli({"dmetric-op", "quotient", arrow.path, rel.path, "--format", "json"});
    REQUIRE(quo.code == 0);
    auto parsed = json::parse(quo.out);
    CHECK(parsed["space"]["points"].size() == 1);
    CHECK(parsed["projection"]["a"] == parsed["projection"]["b"]);
    TempFile map("map.json",
                 R"({"source":{"type":"finite_delta","points":["a","b"],
                     "matrix":[["0","1"],["inf","0"]]},
                     "target":{"type":"finite_delta","points":["a","b"],
                     "matrix":[["0","2"],["inf","0"]]},
                     "assignment":{"a":"a","b":"b"}})");
    CHECK(run_cli({"dmetric-op", "lipschitz-weight", map.path}).out == "2\n");
    auto hom = run_cli({"dmetric-op", "internal-hom", arrow.path, arrow.path});
    CHECK(hom.code == 0);
    CHECK(hom.out.substr(0, 9) == "points: 3");
}

TEST_CASE("cli: rotation json output") {
    TempFile sqrt2("sqrt2c.json", R"({"theta":{"p":0,"q":1,"r":1,"d":2}})");
    TempFile half("halfc.json", R"({"theta":{"p":0,"q":1,"r":2,"d":2}})");
    auto out = run_cli({"rotation-classify", sqrt2.path, half.path, "--format", "json"});
    REQUIRE(out.code == 0);
    auto j = json::parse(out.out);
    CHECK(j["isometric"]["verdict"] == false);
    CHECK(j["lipschitz"]["verdict"] == true);
    // The emitted word really maps sqrt2 to sqrt2/2.
    std::vector<std::string> word;
    for (const auto& t : j["lipschitz"]["word"]) word.push_back(t.get<std::string>());
    CHECK(apply_word(word, make_quadratic_irrational(0, 1, 1, 2).value()) ==
          make_quadratic_irrational(0, 1, 2, 2).value());
    CHECK(run_cli({"validate", sqrt2.path}).code == 0);
}

TEST_CASE("cli: unknown verbs and empty invocation") {
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"dmetric-op"}).code == 2);
    CHECK(run_cli({"vankampen", "nope.json"}).code == 2);  // missing --cut and file
    CHECK(run_cli({"--format", "yaml", "validate", "x"}).code == 2);
}
