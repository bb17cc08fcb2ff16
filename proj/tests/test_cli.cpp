#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/dot_check.hpp"
#include "vafw/cli.hpp"
#include "vafw/fixtures.hpp"

using namespace vafw;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "vafw");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("solve under one audience") {
  const Run r = run({"solve", "hal-carla", "--order", "life,property"});
  CHECK(r.code == 0);
  CHECK(r.out == "{b,d,e,f}\n");
  CHECK(run({"solve", "hal-carla", "--order", "property,life"}).out == "{b,d,f}\n");
}

TEST_CASE("solve under every audience") {
  const Run r = run({"solve", "hal-carla"});
  CHECK(r.code == 0);
  CHECK(r.out == "life > property: {b,d,e,f}\nproperty > life: {b,d,f}\n");
  CHECK(run({"solve", "hal-carla", "--oracle"}).out == r.out);
}

TEST_CASE("status") {
  const Run r = run({"status", "hal-carla"});
  CHECK(r.code == 0);
  CHECK(r.out.find("b: Objective") != std::string::npos);
  CHECK(r.out.find("e: Subjective") != std::string::npos);
  CHECK(r.out.find("a: Indefensible") != std::string::npos);

  const Run given = run({"status", "seven-cycle", "--given", "green>red,red>blue"});
  CHECK(given.code == 0);
  CHECK(given.out.find("b1: accepted") != std::string::npos);
}

TEST_CASE("structured output parses") {
  const Run r = run({"--output", "structured", "status", "hal-carla"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("statuses").at("b") == "Objective");
  const auto solved = nlohmann::json::parse(run({"--output", "structured", "solve", "hal-carla"}).out);
  CHECK_FALSE(solved.empty());
}

TEST_CASE("chains and suggestions") {
  const Run chains = run({"chains", "figure-3"});
  CHECK(chains.code == 0);
  CHECK(chains.out.find("e: Indefensible") != std::string::npos);
  CHECK(run({"chains", "seven-cycle"}).code == 1);

  const Run sug = run({"suggest", "pharmacist", "--target", "b", "--desired", "Objective"});
  CHECK(sug.code == 0);
  CHECK(sug.out.find("attacks a") != std::string::npos);
}

TEST_CASE("export") {
  const Run dot_run = run({"export", "hal-carla", "--format", "dot", "--statuses"});
  CHECK(dot_run.code == 0);
  std::string why;
  const auto g = dot::parse(dot_run.out, &why);
  REQUIRE_MESSAGE(g, why);
  CHECK(g->nodes.size() == 6);
  const Run canon = run({"export", "hal-carla", "--format", "canonical"});
  CHECK(canon.out == serialize_framework(load_fixture("hal-carla").document));
}

TEST_CASE("reading files") {
  const auto doc = temp_file("vafw-cli-test.vaf", serialize_framework(load_fixture("pharmacist").document));
  CHECK(run({"solve", doc.string(), "--order", "life,property"}).out == "{a,c}\n");
  const auto facts = temp_file("vafw-cli-test.apx", "arg(a).\narg(b).\natt(a,b).\n");
  const Run r = run({"--default-value", "v", "solve", facts.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "v: {a}\n");
  std::filesystem::remove(doc);
  std::filesystem::remove(facts);
}

TEST_CASE("fixtures and verification") {
  const Run list = run({"fixtures"});
  CHECK(list.code == 0);
  for (const auto& name : fixture_names()) CHECK(list.out.find(name) != std::string::npos);
  CHECK(run({"fixtures", "seven-cycle"}).code == 0);
  CHECK(run({"fixtures", "absent"}).code == 1);
  const Run v = run({"verify", "--seed", "3", "--count", "20"});
  CHECK(v.code == 0);
  CHECK(v.out.find("0 failures") != std::string::npos);
}

TEST_CASE("exit codes") {
  const Run missing = run({"solve", "missing.vaf"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("IoError") != std::string::npos);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"solve", "hal-carla", "--order", "life,honour"}).code == 1);
  CHECK(run({"--output", "xml", "check", "hal-carla"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"check", "hal-carla"}).code == 0);
}
