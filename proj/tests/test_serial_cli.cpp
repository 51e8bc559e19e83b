#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "quotshrink/cli.hpp"
#include "quotshrink/serial.hpp"
#include "quotshrink/standard_groups.hpp"

using namespace quotshrink;

namespace {

const char* kTightInput = R"({
  "schema": 1,
  "degree": 5,
  "generators": ["(1 2 3 4 5)", "(1 2)"],
  "normal_generators": ["(1 2 3 4 5)", "(3 4 5)"]
})";

std::string write_temp(const std::string& text, const std::string& name) {
  std::string path = std::string("/tmp/quotshrink_test_") + name;
  std::ofstream out(path);
  out << text;
  return path;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("problem JSON round trip") {
  ProblemInput input = parse_problem_json(kTightInput, Mode::kReduce);
  CHECK(input.degree == 5);
  CHECK(input.generators.size() == 2);
  CHECK(input.normal_generators.size() == 2);
  ProblemInput again =
      parse_problem_json(emit_problem_json(input), Mode::kReduce);
  CHECK(again.degree == input.degree);
  CHECK(again.generators == input.generators);
  CHECK(again.normal_generators == input.normal_generators);
}

TEST_CASE("text format") {
  ProblemInput input = parse_problem_txt(
      "# a comment\n"
      "degree 5\n"
      "(1 2 3 4 5)\n"
      "(1 2)\n"
      "normal\n"
      "(1 2 3 4 5)\n"
      "(3 4 5)\n",
      Mode::kReduce);
  CHECK(input.degree == 5);
  CHECK(input.generators.size() == 2);
  CHECK(input.normal_generators.size() == 2);
  CHECK_THROWS_AS(parse_problem_txt("nonsense", Mode::kReduce),
                  MalformedInput);
  CHECK_THROWS_AS(parse_problem_txt("degree 5\n(1 2)\n", Mode::kReduce),
                  MalformedInput);
}

TEST_CASE("mode validation") {
  CHECK_THROWS_AS(
      parse_problem_json(R"({"schema":1,"degree":3,"generators":["(1 2)"]})",
                         Mode::kReduce),
      MalformedInput);
  CHECK_THROWS_AS(
      parse_problem_json(
          R"({"schema":1,"degree":3,"generators":["(1 2)"],
              "normal_generators":["(1 2)"]})",
          Mode::kMinDegree),
      MalformedInput);
  CHECK_THROWS_AS(parse_problem_json("{not json", Mode::kReduce),
                  MalformedInput);
}

TEST_CASE("certificates round trip and verify") {
  ProblemInput input = parse_problem_json(kTightInput, Mode::kReduce);
  QuotientRep rep =
      embed_quotient(build_group(input), build_normal_subgroup(input));
  Certificate cert = make_certificate(input, rep);
  std::string doc = emit_certificate_json(cert);
  Certificate parsed = parse_certificate_json(doc);
  CHECK(parsed.m == cert.m);
  CHECK(parsed.images == cert.images);
  CHECK(parsed.kernel_order == cert.kernel_order);
  CHECK(parsed.trace.size() == cert.trace.size());
  CHECK_NOTHROW(verify_certificate(parsed));

  SUBCASE("tampered image") {
    Certificate bad = parsed;
    bad.images[1] = "()";  // the image of (1 2) cannot be trivial
    CHECK_THROWS_AS(verify_certificate(bad), KernelMismatch);
  }
  SUBCASE("tampered degree") {
    Certificate bad = parsed;
    bad.m = 3;
    CHECK_THROWS_AS(verify_certificate(bad), BoundMismatch);
  }
  SUBCASE("tampered kernel order") {
    Certificate bad = parsed;
    bad.kernel_order = "61";
    CHECK_THROWS_AS(verify_certificate(bad), KernelMismatch);
  }
}

TEST_CASE("cli reduce") {
  std::string path = write_temp(kTightInput, "tight.json");
  CliRun human = cli({"reduce", path});
  CHECK(human.code == 0);
  CHECK(human.out.find("5 -> 2") != std::string::npos);
  CHECK(human.out.find("kernel order: 60") != std::string::npos);

  CliRun json = cli({"reduce", "--json", path});
  CHECK(json.code == 0);
  Certificate cert = parse_certificate_json(json.out);
  CHECK(cert.m == 2);
  CHECK_NOTHROW(verify_certificate(cert));

  CliRun traced = cli({"reduce", "--trace", path});
  CHECK(traced.code == 0);
  CHECK(traced.out.find("transitive-base") != std::string::npos);
}

TEST_CASE("cli verify accepts fresh certificates and rejects tampering") {
  std::string path = write_temp(kTightInput, "tight2.json");
  CliRun json = cli({"reduce", "--json", path});
  REQUIRE(json.code == 0);
  std::string cert_path = write_temp(json.out, "cert.json");
  CliRun ok = cli({"verify", cert_path});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("verifies") != std::string::npos);

  Certificate cert = parse_certificate_json(json.out);
  cert.images[0] = "(1 2)";
  cert.images[1] = "(1 2)";
  std::string bad_path =
      write_temp(emit_certificate_json(cert), "cert_bad.json");
  CliRun bad = cli({"verify", bad_path});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("KernelMismatch") != std::string::npos);
}

TEST_CASE("cli error paths") {
  std::string bad = write_temp("{", "bad.json");
  CliRun parse_fail = cli({"reduce", bad});
  CHECK(parse_fail.code == 1);

  std::string not_normal = write_temp(R"({
    "schema": 1, "degree": 5,
    "generators": ["(1 2 3 4 5)", "(1 2)"],
    "normal_generators": ["(1 2)"]
  })",
                                      "notnormal.json");
  CliRun nn = cli({"reduce", not_normal});
  CHECK(nn.code == 1);
  CHECK(nn.err.find("NotNormal") != std::string::npos);

  CliRun nocmd = cli({});
  CHECK(nocmd.code != 0);
}

TEST_CASE("cli min-degree") {
  std::string path = write_temp(R"({
    "schema": 1, "degree": 4,
    "generators": ["(1 2)(3 4)", "(1 3)(2 4)"]
  })",
                                "v4.json");
  CliRun run = cli({"min-degree", path});
  CHECK(run.code == 0);
  CHECK(run.out.find("minimal faithful degree: 4") != std::string::npos);

  CliRun json = cli({"min-degree", "--json", path});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"min_degree\": 4") != std::string::npos);
}

TEST_CASE("cli analyze") {
  std::string path = write_temp(kTightInput, "tight3.json");
  CliRun run = cli({"analyze", path});
  CHECK(run.code == 0);
  CHECK(run.out.find("order: 120") != std::string::npos);
  CHECK(run.out.find("minimal normal: yes") != std::string::npos);
  CliRun json = cli({"analyze", "--json", path});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"semisimple\": true") != std::string::npos);
}

TEST_CASE("cli batch") {
  std::string batch = std::string("[") + kTightInput + "," + kTightInput + "]";
  std::string path = write_temp(batch, "batch.json");
  CliRun run = cli({"reduce", "--batch", path, "--json"});
  CHECK(run.code == 0);
  CHECK(run.out.find("\"m\": 2") != std::string::npos);
}

TEST_CASE("cli text format input") {
  std::string path = write_temp(
      "degree 5\n(1 2 3 4 5)\n(1 2)\nnormal\n(1 2 3 4 5)\n(3 4 5)\n",
      "tight.txt");
  CliRun run = cli({"reduce", "--format", "txt", path});
  CHECK(run.code == 0);
  CHECK(run.out.find("5 -> 2") != std::string::npos);
}

TEST_CASE("order cap override via the environment") {
  std::string path = write_temp(kTightInput, "tight4.json");
  setenv("QUOTSHRINK_ORDER_CAP", "1", 1);
  CliRun capped = cli({"reduce", path});
  unsetenv("QUOTSHRINK_ORDER_CAP");
  CHECK(capped.code == 1);
  CHECK(capped.err.find("OrderCapExceeded") != std::string::npos);

  setenv("QUOTSHRINK_ORDER_CAP", "garbage", 1);
  CliRun bad = cli({"reduce", path});
  unsetenv("QUOTSHRINK_ORDER_CAP");
  CHECK(bad.code == 1);
}

TEST_CASE("cli selftest") {
  CliRun run = cli({"selftest"});
  CHECK(run.code == 0);
  CHECK(run.out.find("FAIL") == std::string::npos);
}
