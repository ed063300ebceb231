#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "zcat/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "zcat");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = zcat::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ZCAT_SOURCE_DIR) + "/data/" + name; }

}  // namespace

TEST_CASE("center of the discrete S3 file has one object") {
  auto r = invoke({"center", data("s3-discrete.json")});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["objects"].size() == 1);
  CHECK(j["objects"][0]["carrier"] == "e");
  CHECK(j["valid"] == true);
}

TEST_CASE("braid equal confirms the braid relation") {
  auto r = invoke({"braid", "equal", "s1 s2 s1", "s2 s1 s2", "--strands", "3"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["equal"] == true);
  auto no = invoke({"braid", "equal", "s1 s2", "s2 s1", "--strands", "3"});
  CHECK(no.code == 0);
  CHECK(json::parse(no.out)["equal"] == false);
}

TEST_CASE("cofree comonoid over 10 in D30") {
  auto r = invoke({"cofree", data("d30.json"), "--over", "10"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["found"] == true);
  CHECK(j["cofree"]["carrier"] == "10");
  CHECK(j["arrow"] == "id_10");
}

TEST_CASE("cofree over n > 0 in the braid window is a reported discrepancy") {
  for (const auto& n : {"1", "2", "4"}) {
    auto r = invoke({"braid", "cofree", "--over", n, "--max-n", "4", "--max-letters", "1"});
    CHECK(r.code == zcat::cli::kExitViolation);
    auto j = json::parse(r.out);
    CHECK(j["found"] == false);
    CHECK(j["comma_objects"] == 0);
    CHECK(j["trace"].empty());
    CHECK(j.contains("discrepancy"));
  }
  auto zero = invoke({"braid", "cofree", "--over", "0"});
  CHECK(zero.code == 0);
  CHECK(json::parse(zero.out)["found"] == true);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::vector<std::string>> runs = {
      {"comonoids", data("d30.json")},
      {"braid", "theorems", "--seed", "3"},
      {"generators", data("z2-delooping.json"), "--lift"},
      {"colimit", data("d30.json"), "--diagram", data("d30-pair-6-10.json"), "--in", "center"},
  };
  for (const auto& args : runs) {
    auto a = invoke(args);
    auto b = invoke(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
  CHECK(invoke({"braid", "theorems", "--seed", "3"}).out != invoke({"braid", "theorems", "--seed", "4"}).out);
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"center"}).code == 1);
  CHECK(invoke({"center", data("missing.json")}).code == 1);
  CHECK(invoke({"centralizer", data("d30.json")}).code == 1);
  CHECK(invoke({"centralizer", data("d30.json"), "--object", "6", "--morphism", "id_6"}).code == 1);
  CHECK(invoke({"quotients", data("d30.json"), "--of", "nope"}).code == 1);
  CHECK(invoke({"braid", "nf", "x1", "--strands", "3"}).code == 1);
  CHECK(invoke({"--format", "yaml", "catalog"}).code == 1);
  // Refusal on M3: P_a does not preserve the join of b and c.
  auto m3 = invoke({"colimit", data("m3.json"), "--diagram", data("m3-pair-b-c.json"), "--in", "zx",
                  "--param", "a"});
  CHECK(m3.code == 1);
  CHECK(json::parse(m3.out)["refused"].get<std::string>().find("P_a") != std::string::npos);
  // Lifting failures are theorem-check violations.
  CHECK(invoke({"generators", data("super-z2.json"), "--lift"}).code == 2);
  CHECK(invoke({"generators", data("d30.json"), "--lift"}).code == 0);
  CHECK(invoke({"generators", data("parallel-pair.json"), "--lift"}).code == 1);
}

TEST_CASE("guardrails from flags and environment") {
  auto r = invoke({"center", data("d30.json"), "--max-objects", "4"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["error"]["kind"] == "guardrail");
  setenv("ZCAT_MAX_OBJECTS", "4", 1);
  CHECK(invoke({"center", data("d30.json")}).code == 1);
  CHECK(invoke({"center", data("d30.json"), "--max-objects", "64"}).code == 0);
  unsetenv("ZCAT_MAX_OBJECTS");
  CHECK(invoke({"center", data("d30.json")}).code == 0);
}

TEST_CASE("text output") {
  auto r = invoke({"--format", "text", "braid", "nf", "s1 s1", "--strands", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("normal_form: D^2 |") != std::string::npos);
  auto e = invoke({"--format", "text", "center", data("missing.json")});
  CHECK(e.out.find("kind: malformed_input") != std::string::npos);
}

TEST_CASE("catalog entries load back through the file format") {
  auto list = json::parse(invoke({"catalog"}).out)["entries"];
  CHECK(list.size() >= 10);
  auto v = invoke({"validate", "catalog:z3-by-z2"});
  CHECK(v.code == 0);
  CHECK(json::parse(v.out)["ok"] == true);
}
