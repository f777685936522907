#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "lctpoly/json_io.hpp"

using namespace lctpoly;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_command(const std::string& command) {
  const std::string full = command + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  while (std::fgets(buffer, sizeof(buffer), pipe)) result.out += buffer;
  const int status = pclose(pipe);
  REQUIRE(status != -1);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

CliResult run_cli(const std::string& args) {
  return run_command(std::string(LCTPOLY_BIN_PATH) + " " + args);
}

class TempDir {
 public:
  TempDir() {
    std::string pattern =
        (std::filesystem::temp_directory_path() / "lctpoly-cli-XXXXXX")
            .string();
    std::vector<char> buf(pattern.begin(), pattern.end());
    buf.push_back('\0');
    REQUIRE(mkdtemp(buf.data()) != nullptr);
    path_ = buf.data();
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string file(const std::string& name, const std::string& content) const {
    const std::filesystem::path p = path_ / name;
    std::ofstream out(p);
    out << content;
    out.close();
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

const char* kAxesInput =
    R"({"format":1,"vars":2,"ideals":[{"monomials":[[1,0]]},{"monomials":[[0,1]]}]})";
const char* kCuspInput =
    R"({"format":1,"vars":2,"ideals":[{"monomials":[[2,0],[0,3]]}]})";
const char* kTangentResolution =
    R"({"format":1,"resolution":{"ideals":2,"kappa":[1,2,0,0],)"
    R"("alpha":[[1,1],[2,2],[1,0],[0,1]],"through_x":[0,1,2,3]}})";
const char* kCuspPairResolution =
    R"({"format":1,"resolution":{"ideals":2,"kappa":[1,2,3,6,0,2,3,6,0],)"
    R"("alpha":[[2,2],[4,2],[5,2],[10,4],[1,0],[2,4],[2,5],[4,10],[0,1]],)"
    R"("through_x":[0,1,2,3,4,5,6,7,8]}})";
const char* kAwayDivisorResolution =
    R"({"format":1,"resolution":{"ideals":1,"kappa":[0,0],)"
    R"("alpha":[[0],[1]],"through_x":[0]}})";

}  // namespace

TEST_CASE("input object parsing") {
  SECTION("ideal payload") {
    const InputFile in = parse_input(json::parse(kCuspInput));
    REQUIRE(in.ideals);
    REQUIRE(in.ideals->size() == 1);
    CHECK((*in.ideals)[0].vars == 2);
    CHECK((*in.ideals)[0].gens == std::vector<Monomial>{{0, 3}, {2, 0}});
  }
  SECTION("resolution payload") {
    const InputFile in = parse_input(json::parse(kTangentResolution));
    REQUIRE(in.resolution);
    CHECK(in.resolution->ideals == 2);
    CHECK(in.resolution->kappa == RatVec{1, 2, 0, 0});
    CHECK(in.resolution->through_x == std::vector<int>{0, 1, 2, 3});
  }
  SECTION("rejections") {
    CHECK_THROWS_AS(parse_input(json::parse(
                        R"({"format":2,"vars":1,"ideals":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_input(json::parse(
                        R"({"format":1,"vars":1,"extra":0,"ideals":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        parse_input(json::parse(
            R"({"format":1,"ideals":[{"monomials":[[1]]}]})")),
        std::invalid_argument);
    CHECK_THROWS_AS(
        parse_input(json::parse(
            R"({"format":1,"vars":1,"ideals":[{"monomials":[[1]]}],)"
            R"("polytope":{"dim":1,"inequalities":[]}})")),
        std::invalid_argument);
    CHECK_THROWS_AS(parse_input(json::parse(R"({"format":1})")),
                    std::invalid_argument);
  }
}

TEST_CASE("rational serialization") {
  CHECK(detail::rational_json(Rational(3)) == json(3));
  CHECK(detail::rational_json(Rational(5) / 6) == json("5/6"));
  CHECK(detail::rational_from_json(json(-2), "x") == Rational(-2));
  CHECK(detail::rational_from_json(json("7/10"), "x") == Rational(7) / 10);
  CHECK_THROWS_AS(detail::rational_from_json(json(0.5), "x"),
                  std::invalid_argument);
  CHECK_THROWS_AS(detail::rational_from_json(json("3/0"), "x"),
                  std::invalid_argument);
}

TEST_CASE("polytope serialization round trip") {
  const HPolyhedron p = canonicalize(make_hpoly(
      2,
      {halfspace({1, 0}, 1), halfspace({0, 1}, 1),
       halfspace({2, 2}, 3)},
      true));
  const json j = polytope_json(p, "resolution");
  const InputFile in = parse_input(j);
  REQUIRE(in.polytope);
  CHECK(canonicalize(*in.polytope) == p);
  CHECK(j.at("polytope").at("provenance") == "resolution");
}

TEST_CASE("compute subcommand") {
  TempDir dir;
  const std::string input = dir.file("axes.json", kAxesInput);

  SECTION("json output") {
    const CliResult r = run_cli("compute " + input);
    REQUIRE(r.exit_code == 0);
    const json out = json::parse(r.out);
    CHECK(out.at("format") == 1);
    const json& poly = out.at("polytope");
    CHECK(poly.at("dim") == 2);
    CHECK(poly.at("provenance") == "monomial");
    CHECK(poly.at("inequalities").size() == 4);
    CHECK(poly.at("vertices") ==
          json::parse("[[0,0],[0,1],[1,0],[1,1]]"));
  }
  SECTION("output files feed back as polytope inputs") {
    const CliResult first = run_cli("compute " + input);
    REQUIRE(first.exit_code == 0);
    const std::string saved = dir.file("square.json", first.out);
    const CliResult second = run_cli("compute " + saved);
    REQUIRE(second.exit_code == 0);
    const json a = json::parse(first.out).at("polytope");
    const json b = json::parse(second.out).at("polytope");
    CHECK(b.at("provenance") == "polytope");
    CHECK(a.at("inequalities") == b.at("inequalities"));
    CHECK(a.at("vertices") == b.at("vertices"));
  }
  SECTION("runs are deterministic") {
    const CliResult a = run_cli("compute " + input);
    const CliResult b = run_cli("compute " + input);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
  SECTION("text output") {
    const CliResult r = run_cli("compute " + input + " --output text");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("polytope dim=2 provenance=monomial\n", 0) == 0);
    CHECK(r.out.find("vertex: (1,1)\n") != std::string::npos);
  }
  SECTION("approximate decorations") {
    const CliResult r = run_cli("compute " + input + " --approx");
    REQUIRE(r.exit_code == 0);
    const json poly = json::parse(r.out).at("polytope");
    CHECK(poly.contains("vertices_approx"));
    CHECK(poly.at("inequalities")[0].contains("offset_approx"));
  }
}

TEST_CASE("resolution inputs and locality") {
  TempDir dir;
  const std::string pair =
      dir.file("pair.json", kCuspPairResolution);
  const CliResult r = run_cli("compute " + pair);
  REQUIRE(r.exit_code == 0);
  const json poly = json::parse(r.out).at("polytope");
  CHECK(poly.at("provenance") == "resolution");
  CHECK(poly.at("inequalities").size() == 4);
  CHECK(poly.at("vertices") ==
        json::parse(R"([[0,0],[0,"7/10"],["1/2","1/2"],["7/10",0]])"));

  const std::string away =
      dir.file("away.json", kAwayDivisorResolution);
  CHECK(run_cli("compute " + away).exit_code == 2);
  const CliResult global = run_cli("compute " + away + " --global");
  REQUIRE(global.exit_code == 0);
  CHECK(json::parse(global.out).at("polytope").at("vertices") ==
        json::parse("[[0],[1]]"));
}

TEST_CASE("lct subcommand") {
  TempDir dir;
  const std::string cusp = dir.file("cusp.json", kCuspInput);
  const std::string axes = dir.file("axes.json", kAxesInput);

  const CliResult r = run_cli("lct " + cusp);
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out).at("lct") == json("5/6"));

  const CliResult text = run_cli("lct " + cusp + " --output text");
  REQUIRE(text.exit_code == 0);
  CHECK(text.out == "5/6\n");

  const CliResult approx = run_cli("lct " + cusp + " --approx");
  REQUIRE(approx.exit_code == 0);
  const double lct_approx = json::parse(approx.out).at("lct_approx");
  CHECK(lct_approx > 0.83);
  CHECK(lct_approx < 0.84);

  CHECK(run_cli("lct " + axes).exit_code == 2);
  const CliResult second = run_cli("lct " + axes + " --coordinate 2");
  REQUIRE(second.exit_code == 0);
  CHECK(json::parse(second.out).at("lct") == json(1));
  CHECK(run_cli("lct " + axes + " --coordinate 3").exit_code == 2);
}

TEST_CASE("distance subcommand") {
  TempDir dir;
  const std::string axes = dir.file("axes.json", kAxesInput);
  const std::string tangent =
      dir.file("tangent.json", kTangentResolution);

  const CliResult zero = run_cli("distance " + axes + " " + axes);
  REQUIRE(zero.exit_code == 0);
  CHECK(json::parse(zero.out).at("sq_hausdorff") == json(0));

  const CliResult mixed = run_cli("distance " + axes + " " + tangent);
  REQUIRE(mixed.exit_code == 0);
  CHECK(json::parse(mixed.out).at("sq_hausdorff") == json("1/8"));

  const CliResult swapped = run_cli("distance " + tangent + " " + axes);
  CHECK(json::parse(swapped.out).at("sq_hausdorff") == json("1/8"));

  const std::string cusp = dir.file("cusp.json", kCuspInput);
  CHECK(run_cli("distance " + axes + " " + cusp).exit_code == 2);
}

TEST_CASE("sequence subcommand") {
  TempDir dir;
  const std::string cusp = dir.file("cusp.json", kCuspInput);
  const std::string axes = dir.file("axes.json", kAxesInput);

  SECTION("truncation family stabilizes") {
    const CliResult r =
        run_cli("sequence " + cusp + " --mode truncate --prefix 8");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out).at("limit_report");
    CHECK(report.at("prefix_length") == 8);
    CHECK(report.at("stationary") == true);
    CHECK(report.at("m0") == 3);
    CHECK(report.at("terms").size() == 8);
    CHECK(report.at("sq_distance_profile") ==
          json::parse(R"(["49/36","1/36",0,0,0,0,0,0])"));
    CHECK(report.at("candidate").at("vertices") ==
          json::parse(R"([[0],["5/6"]])"));
  }
  SECTION("prism family keeps descending") {
    const CliResult r =
        run_cli("sequence " + axes + " --mode ex11 --prefix 6 --axis 1");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out).at("limit_report");
    CHECK(report.at("stationary") == false);
    CHECK(report.at("m0").is_null());
    CHECK(report.at("sq_distance_profile") ==
          json::parse(R"([1,"1/4","1/9","1/16","1/25","1/36"])"));
    CHECK(report.at("candidate").at("vertices") ==
          json::parse("[[0,0],[0,1],[1,0],[1,1]]"));
  }
  SECTION("bad arguments") {
    CHECK(run_cli("sequence " + cusp + " --mode truncate --prefix 4")
              .exit_code == 2);
    CHECK(run_cli("sequence " + axes + " --mode ex11 --axis 3").exit_code ==
          2);
    CHECK(run_cli("sequence " + cusp + " --mode spiral").exit_code == 2);
    TempDir other;
    const std::string tangent =
        other.file("tangent.json", kTangentResolution);
    CHECK(run_cli("sequence " + tangent + " --mode truncate").exit_code == 2);
  }
}

TEST_CASE("verify subcommand") {
  const CliResult r = run_cli("verify --suite order --seed 7 --count 4");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.out).at("verify");
  CHECK(report.at("suite") == "order");
  CHECK(report.at("seed") == 7);
  CHECK(report.at("count") == 4);
  CHECK(report.at("ok") == true);
  CHECK(report.at("failures").empty());

  CHECK(run_cli("verify --suite nonsense").exit_code == 2);

  const CliResult one = run_command(
      std::string("LCTPOLY_THREADS=1 ") + LCTPOLY_BIN_PATH +
      " verify --suite order --seed 7 --count 4");
  const CliResult many = run_command(
      std::string("LCTPOLY_THREADS=3 ") + LCTPOLY_BIN_PATH +
      " verify --suite order --seed 7 --count 4");
  CHECK(one.exit_code == 0);
  CHECK(one.out == many.out);
  CHECK(one.out == r.out);
}

TEST_CASE("error exit codes") {
  TempDir dir;
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("compute " + dir.file("empty.json",
                                      R"({"format":1,"vars":2,"ideals":[]})"))
            .exit_code == 2);
  CHECK(run_cli("compute " +
                dir.file("unit.json",
                         R"({"format":1,"vars":2,)"
                         R"("ideals":[{"monomials":[[0,0]]}]})"))
            .exit_code == 3);
  CHECK(run_cli("compute " +
                dir.file("zero.json",
                         R"({"format":1,"vars":2,)"
                         R"("ideals":[{"monomials":[]}]})"))
            .exit_code == 3);
  CHECK(run_cli("compute " + dir.file("broken.json", "{\"format\":1,"))
            .exit_code == 2);
  CHECK(run_cli("compute " +
                dir.file("extra.json",
                         R"({"format":1,"vars":2,"flavor":"sour",)"
                         R"("ideals":[{"monomials":[[1,0]]}]})"))
            .exit_code == 2);
  CHECK(run_cli("compute /nonexistent/input.json").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}
