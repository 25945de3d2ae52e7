#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "support.hpp"

namespace ncat {
namespace {

using testing::fixture_path;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "ncat_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::size_t count_matches(const std::string& text, const std::string& pattern) {
  std::regex re(pattern);
  return static_cast<std::size_t>(
      std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

std::size_t count_vertices(const nlohmann::json& node) {
  std::size_t n = 1;
  for (const auto& child : node["children"]) n += count_vertices(child);
  return n;
}

TEST(Cli, ValidateValidAndBroken) {
  auto ok = run({"validate", fixture_path("z3.cat")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("valid"), std::string::npos);

  auto bad = run({"validate", fixture_path("broken.cat")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("unit-left: id:* g"), std::string::npos);

  auto json = run({"validate", fixture_path("broken.cat"), "--format", "json"});
  EXPECT_EQ(json.code, 1);
  auto doc = nlohmann::json::parse(json.out);
  EXPECT_EQ(doc["valid"], false);
  EXPECT_EQ(doc["violations"].size(), 3u);
}

TEST(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(run({"validate", "/does/not/exist.cat"}).code, 2);
  EXPECT_EQ(run({"validate", write_temp("bad.cat", "{ not json")}).code, 2);
  auto dangling = run({"validate", write_temp("dangling.cat", R"({"dimension": 1, "cells": [
      {"id": "x", "dim": 0}, {"id": "f", "dim": 1, "src": "x", "tgt": "y"}]})")});
  EXPECT_EQ(dangling.code, 2);
  EXPECT_NE(dangling.err.find("cells[1].tgt"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"cohomology", fixture_path("z3.cat")}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "shape", fixture_path("i2.cat")}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DomainErrorsExitOne) {
  // The shift of a 1-category is undefined.
  EXPECT_EQ(run({"shift", fixture_path("z2.cat")}).code, 1);
  EXPECT_EQ(run({"shift", fixture_path("i2.cat"), "--times", "2"}).code, 1);
  EXPECT_EQ(run({"cohomology", fixture_path("z2.cat"), "--degree", "5", "--max-degree", "4"}).code, 1);
}

TEST(Cli, ShapeOfGeneratorFixture) {
  auto r = run({"shape", fixture_path("g3.cat")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[[()][()][[][][][]][[][][][]]]\n");
  EXPECT_NE(r.err.find("warning"), std::string::npos);

  auto strict = run({"--require-valid", "shape", fixture_path("g3.cat")});
  EXPECT_EQ(strict.code, 1);
  EXPECT_TRUE(strict.out.empty());
}

TEST(Cli, ShapeFormatsAgree) {
  auto json = run({"shape", fixture_path("g3.cat"), "--format", "json"});
  auto dot = run({"shape", fixture_path("g3.cat"), "--format", "dot"});
  ASSERT_EQ(json.code, 0);
  ASSERT_EQ(dot.code, 0);
  EXPECT_EQ(count_vertices(nlohmann::json::parse(json.out)), 13u);
  EXPECT_EQ(count_matches(dot.out, R"(v\d+ \[shape=circle)"), 13u);
}

TEST(Cli, TreeAndPlaneFormatsAgree) {
  for (const char* cmd : {"tree", "plane"}) {
    auto text = run({cmd, fixture_path("g3.cat")});
    auto json = run({cmd, fixture_path("g3.cat"), "--format", "json"});
    auto dot = run({cmd, fixture_path("g3.cat"), "--format", "dot"});
    ASSERT_EQ(json.code, 0) << cmd;
    EXPECT_EQ(count_vertices(nlohmann::json::parse(json.out)), 15u);
    EXPECT_EQ(count_matches(dot.out, R"(\n  v\d+_\d+ \[)"), 15u);
    EXPECT_EQ(count_matches(text.out, R"(\(\d+,\d+\))"), 15u);
  }
}

TEST(Cli, ShiftListsParts) {
  auto r = run({"shift", fixture_path("i2.cat")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Hom(x,x)"), std::string::npos);
  auto twice = run({"shift", fixture_path("g3.cat"), "--times", "2"});
  EXPECT_EQ(twice.code, 0);
  EXPECT_EQ(count_matches(twice.out, "Hom\\(x\\d,x\\d\\) / "), 10u);
}

TEST(Cli, Isomorphism) {
  auto yes = run({"iso", fixture_path("z3.cat"), fixture_path("z3.cat")});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.out.rfind("isomorphic", 0), 0u);
  auto no = run({"iso", fixture_path("z2.cat"), fixture_path("z3.cat")});
  EXPECT_EQ(no.out, "not isomorphic\n");
}

TEST(Cli, Cohomology) {
  auto r = run({"cohomology", fixture_path("z3.cat"), "--degree", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Z/3\n");
  auto coeff = run({"cohomology", fixture_path("z2.cat"), "--degree", "1", "--coefficients",
                    "const:Z/2"});
  EXPECT_EQ(coeff.out, "Z/2\n");
  auto file = write_temp("sign.json", R"({"objects": {"*": "Z"}, "arrows": {"g": [[-1]]}})");
  auto sign = run({"cohomology", fixture_path("z2.cat"), "--degree", "1", "--coefficients", file});
  EXPECT_EQ(sign.code, 0);
  EXPECT_EQ(sign.out, "Z/2\n");
  auto json = run({"cohomology", fixture_path("z3.cat"), "--degree", "2", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(json.out)["group"], "Z/3");
  auto paper = run({"cohomology", fixture_path("c_double_prime.cat"), "--degree", "2",
                    "--convention", "paper"});
  EXPECT_EQ(paper.code, 0);
  EXPECT_EQ(run({"cohomology", fixture_path("z3.cat"), "--degree", "1", "--paper-differential"}).code, 0);
}

TEST(Cli, CohomologyTree) {
  auto json = run({"cohomology", fixture_path("g3.cat"), "--degree", "0", "--tree", "--format", "json"});
  ASSERT_EQ(json.code, 0);
  auto doc = nlohmann::json::parse(json.out);
  EXPECT_EQ(count_vertices(doc), 15u);
  EXPECT_EQ(doc["group"], "Z");
  auto dot = run({"cohomology", fixture_path("g3.cat"), "--degree", "0", "--tree", "--format", "dot"});
  EXPECT_EQ(count_matches(dot.out, R"(\n  v\d+_\d+ \[)"), 15u);
}

TEST(Cli, SearchEmbeddings) {
  const auto dir = scratch_dir() / "hits";
  std::filesystem::remove_all(dir);
  auto r = run({"search-embeddings", fixture_path("parts_three_points.json"), "--output-dir",
                dir.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("2 hit(s)", 0), 0u);
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    ++files;
    EXPECT_EQ(run({"validate", entry.path().string()}).code, 0);
  }
  EXPECT_EQ(files, 2u);
}

TEST(Cli, OutputIsDeterministic) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"tree", fixture_path("g3.cat"), "--format", "json"},
        std::vector<std::string>{"search-embeddings", fixture_path("parts_three_points.json")},
        std::vector<std::string>{"iso", fixture_path("g3.cat"), fixture_path("g3.cat")}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

}  // namespace
}  // namespace ncat
