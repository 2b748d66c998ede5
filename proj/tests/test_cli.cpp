#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "bigeo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = bigeo::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

std::size_t line_count(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("cli analyze fig4") {
  const auto r = invoke({"analyze", "fig4"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "diameter: 4\n"));
  CHECK(has(r.out, "vertex connectivity: 4\n"));
  CHECK(has(r.out, "geodetic index: 2\n"));
  CHECK(has(r.out, "class: B(4,4,4)\n"));

  const auto j = invoke({"analyze", "fig4", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["class_membership"] == nlohmann::json::array({4, 4, 4}));
  CHECK(doc["intersection"]["mu"] == 2);
}

TEST_CASE("cli brc") {
  const auto r = invoke({"brc", "22", "7", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "fails: k−λ = 5 not a perfect square\n");

  const auto j = invoke({"--json", "brc", "11", "5", "2"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["passes"] == true);
  CHECK(doc["case"] == "odd");
  CHECK(doc["witness"] == nlohmann::json::array({1, 1, 1}));
  CHECK(doc["ryser_applies"] == true);
}

TEST_CASE("cli scan 12") {
  const auto r = invoke({"scan", "12"});
  CHECK(r.code == 0);
  CHECK(line_count(r.out) == 12);  // header + 11 rows

  const auto j = invoke({"scan", "12", "--json"});
  std::istringstream lines(j.out);
  std::vector<long long> holds;
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line); ++rows) {
    const auto doc = nlohmann::json::parse(line);
    if (doc["pattern"] == true) holds.push_back(doc["n"].get<long long>());
  }
  CHECK(rows == 11);
  CHECK(holds == std::vector<long long>{2, 3, 4, 5, 8, 10, 12});
}

TEST_CASE("cli verify reports invalid designs with exit code 0") {
  const auto path = std::filesystem::temp_directory_path() / "bigeo_cli_invalid.txt";
  std::ofstream(path) << "x1 x2 x3\nx1 x2 x4\nx1 x3 x4\n";
  const auto r = invoke({"verify", path.string()});
  CHECK(r.code == 0);
  CHECK(has(r.out, "invalid"));
  CHECK(has(r.out, "non-uniform replication"));
  std::filesystem::remove(path);

  const auto ok = invoke({"verify", "fig1"});
  CHECK(ok.out == "valid: (10, 6, 5, 3, 2)\nnecessary conditions: hold\n");
}

TEST_CASE("cli search emits the design as JSON") {
  const auto r = invoke({"search", "10", "6", "5", "3", "2"});
  CHECK(r.code == 0);
  const auto newline = r.out.find('\n');
  CHECK(r.out.substr(0, newline).rfind("found (10, 6, 5, 3, 2)", 0) == 0);
  const auto doc = nlohmann::json::parse(r.out.substr(newline + 1));
  CHECK(doc["n"] == 6);
  CHECK(doc["blocks"].size() == 10);
  CHECK(has(r.err, "search found"));

  const auto bad = invoke({"search", "7", "7", "3", "3", "2"});
  CHECK(bad.code == 2);
}

TEST_CASE("cli construct and export write DOT") {
  const auto dot = std::filesystem::temp_directory_path() / "bigeo_cli_fig3.dot";
  const auto r = invoke({"construct", "fig3", "--dot", dot.string()});
  CHECK(r.code == 0);
  CHECK(has(r.out, "16 vertices, 24 edges"));
  std::ifstream in(dot);
  std::stringstream text;
  text << in.rdbuf();
  const auto exported = invoke({"export", "fig3", "--format", "dot"});
  CHECK(exported.out == text.str());
  std::filesystem::remove(dot);

  const auto design = invoke({"export", "fig3", "--format", "design-json"});
  CHECK(nlohmann::json::parse(design.out)["n"] == 4);
}

TEST_CASE("cli catalog") {
  const auto r = invoke({"catalog"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "fig2"));
  CHECK(has(r.out, "(79, 13, 2)"));
  const auto one = invoke({"catalog", "fig3"});
  CHECK(has(one.out, "x1 x2 x3\n"));
}

TEST_CASE("cli operational errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"brc", "22", "seven", "2"}).code == 2);
  CHECK(invoke({"verify", "/nonexistent/design.json"}).code == 2);
  CHECK(invoke({"brc", "7", "2", "2"}).code == 2);
  const auto usage = invoke({"frobnicate"});
  CHECK(has(usage.err, "Usage"));
}

TEST_CASE("cli output is deterministic") {
  CHECK(invoke({"analyze", "fig2"}).out == invoke({"analyze", "fig2"}).out);
  CHECK(invoke({"scan", "20"}).out == invoke({"scan", "20"}).out);
}
