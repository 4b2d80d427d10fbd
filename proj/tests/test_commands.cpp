#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "evidence/commands.hpp"
#include "evidence/model_document.hpp"

using namespace evidence;

namespace {

const std::string kData = EVIDENCE_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run eval(const std::string& file, std::vector<std::string> prop = {}) {
  std::ostringstream out, err;
  int code = cmd_eval({kData + "/" + file, std::move(prop)}, out, err);
  return {code, out.str(), err.str()};
}

Run bayes(const BayesFlags& flags) {
  std::ostringstream out, err;
  int code = cmd_bayes(flags, out, err);
  return {code, out.str(), err.str()};
}

Run compare(const std::string& file, std::vector<std::string> prop, const BayesFlags& flags) {
  std::ostringstream out, err;
  int code = cmd_compare({kData + "/" + file, std::move(prop), flags}, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("eval: witness alone") {
  auto r = eval("fred.json");
  CHECK(r.code == 0);
  CHECK(r.out == "conflict 0.0000\nyes Bel=0.8000 Pl=1.0000\nno Bel=0.0000 Pl=0.2000\n");
  CHECK(r.err.empty());
}

TEST_CASE("eval: witness and thermometer") {
  auto r = eval("fred_thermometer.json");
  CHECK(r.code == 0);
  CHECK(r.out == "conflict 0.7920\nyes Bel=0.0385 Pl=0.0481\nno Bel=0.9519 Pl=0.9615\n");
  CHECK(r.err.find("warning:") == 0);
  CHECK(r.err.find("independent") != std::string::npos);
}

TEST_CASE("eval: separate sources and the precomputed joint agree") {
  CHECK(eval("fred_thermometer.json").out == eval("table1_joint.json").out);
}

TEST_CASE("eval: dependent joint") {
  auto r = eval("table2_joint.json");
  CHECK(r.code == 0);
  CHECK(r.out.find("yes Bel=0.0050") != std::string::npos);
  CHECK(r.out.find("no Bel=0.9502") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("eval: queried proposition") {
  auto r = eval("fred.json", {"no", "yes"});
  CHECK(r.code == 0);
  CHECK(r.out.find("{yes,no} Bel=1.0000 Pl=1.0000\n") != std::string::npos);
  CHECK(eval("fred.json", {"maybe"}).code == kExitValidation);
}

TEST_CASE("eval: exit codes") {
  CHECK(eval("missing.json").code == kExitOther);

  auto bad = write_temp("evidence_bad_prior.json", R"({"target_frame": ["yes", "no"],
    "sources": [{"name": "x", "frame": ["a", "b"], "prior": {"a": 0.5, "b": 0.4},
                 "compatibility": {"a": ["yes"], "b": ["no"]}}]})");
  std::ostringstream out, err;
  CHECK(cmd_eval({bad, {}}, out, err) == kExitValidation);
  CHECK(out.str().empty());
  CHECK(err.str().find("prior does not sum to 1") != std::string::npos);

  auto conflict = write_temp("evidence_total_conflict.json", R"({"target_frame": ["yes", "no"],
    "sources": [{"name": "x", "frame": ["a"], "prior": {"a": 1}, "compatibility": {"a": ["yes"]}},
                {"name": "y", "frame": ["b"], "prior": {"b": 1}, "compatibility": {"b": ["no"]}}]})");
  std::ostringstream out2, err2;
  CHECK(cmd_eval({conflict, {}}, out2, err2) == kExitTotalConflict);
  CHECK(out2.str().empty());
}

TEST_CASE("parse_sweep") {
  auto axes = parse_sweep("p=0:1:0.5,q=0.5");
  REQUIRE(axes.size() == 2);
  CHECK(axes[0].variable == 'p');
  CHECK(axes[0].values == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(axes[1].values == std::vector<double>{0.5});

  auto tenths = parse_sweep("q=0:1:0.1")[0].values;
  CHECK(tenths.size() == 11);
  CHECK(tenths[3] == 0.3);
  CHECK(tenths.back() == 1.0);

  CHECK(parse_sweep("p=1:0:0.5")[0].values.empty());
  CHECK_THROWS_AS(parse_sweep("p=0:1:0"), ValidationError);
  CHECK_THROWS_AS(parse_sweep("p=0:2:1"), ValidationError);
  CHECK_THROWS_AS(parse_sweep("x=0.5"), ValidationError);
  CHECK_THROWS_AS(parse_sweep("p=0.5,p=0.2"), ValidationError);
  CHECK_THROWS_AS(parse_sweep("p=abc"), ValidationError);
  CHECK_THROWS_AS(parse_sweep("p=0:1"), ValidationError);
}

TEST_CASE("build_grid orders scenarios lexicographically") {
  auto grid = build_grid({std::nullopt, std::nullopt, std::nullopt, "q=0:1:1,p=0:1:1,r=0.5:1:0.5"});
  REQUIRE(grid.size() == 8);
  CHECK(grid[0].reliability == 0.5);
  CHECK(grid[0].prior == 0.0);
  CHECK(grid[0].careless_accuracy == 0.0);
  CHECK(grid[1].careless_accuracy == 1.0);
  CHECK(grid[2].prior == 1.0);
  CHECK(grid[4].reliability == 1.0);

  CHECK(build_grid({std::nullopt, 0.5, 0.5, std::nullopt})[0].reliability == 0.8);
  CHECK_THROWS_AS(build_grid({0.8, 0.5, std::nullopt, std::nullopt}), ValidationError);
  CHECK_THROWS_AS(build_grid({0.8, 0.5, 0.5, "p=0.1"}), ValidationError);
  CHECK_THROWS_AS(build_grid({1.5, 0.5, 0.5, std::nullopt}), ValidationError);
}

TEST_CASE("bayes: single scenario") {
  auto r = bayes({0.8, 0.5, 0.5, std::nullopt});
  CHECK(r.code == 0);
  CHECK(r.out == "0.9000\n");
  CHECK(bayes({0.8, 1.0, 0.0, std::nullopt}).out == "1.0000\n");

  auto impossible = bayes({0.8, 0.0, 1.0, std::nullopt});
  CHECK(impossible.code == kExitValidation);
  CHECK(impossible.out.empty());
  CHECK(bayes({0.8, 2.0, 0.5, std::nullopt}).code == kExitValidation);
}

TEST_CASE("bayes: sweep") {
  auto r = bayes({0.8, std::nullopt, std::nullopt, "p=0:1:0.5,q=0.5"});
  CHECK(r.code == 0);
  CHECK(r.out == "r,p,q,posterior\n0.8,0,0.5,0.0000\n0.8,0.5,0.5,0.9000\n0.8,1,0.5,1.0000\n");

  auto undefined = bayes({0.8, 0.0, std::nullopt, "q=0:1:1"});
  CHECK(undefined.code == 0);
  CHECK(undefined.out == "r,p,q,posterior\n0.8,0,0,0.0000\n0.8,0,1,undefined\n");

  CHECK(bayes({0.8, 0.5, std::nullopt, "q=1:0:0.5"}).out == "r,p,q,posterior\n");
}

TEST_CASE("compare") {
  auto r = compare("fred.json", {"yes"}, {0.8, 0.5, 0.5, std::nullopt});
  CHECK(r.code == 0);
  CHECK(r.out == "r,p,q,bayes,bel,pl\n0.8,0.5,0.5,0.9000,0.8000,1.0000\n");

  auto divergent = compare("fred.json", {"yes"}, {std::nullopt, 0.0, 0.0, std::nullopt});
  CHECK(divergent.out == "r,p,q,bayes,bel,pl\n0.8,0,0,0.0000,0.8000,1.0000\n");

  auto empty = compare("fred.json", {"yes"}, {std::nullopt, 0.5, std::nullopt, "q=1:0:0.1"});
  CHECK(empty.code == 0);
  CHECK(empty.out == "r,p,q,bayes,bel,pl\n");

  CHECK(compare("fred.json", {}, {0.8, 0.5, 0.5, std::nullopt}).code == kExitValidation);
  CHECK(compare("fred.json", {"maybe"}, {0.8, 0.5, 0.5, std::nullopt}).code == kExitValidation);
  CHECK(compare("missing.json", {"yes"}, {0.8, 0.5, 0.5, std::nullopt}).code == kExitOther);
}

TEST_CASE("format_degree never prints negative zero") {
  CHECK(format_degree(-0.0) == "0.0000");
  CHECK(format_degree(0.04999) == "0.0500");
}
