#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "test_helpers.hpp"
#include "topoplan/errors.hpp"
#include "topoplan/scene_io.hpp"

using namespace topo;
using nlohmann::json;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "io_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

int cli(std::vector<std::string> args) {
  std::vector<const char*> argv = {"hplan"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("planar scene round trip") {
  json j = {
      {"format", 1},
      {"type", "planar"},
      {"bounds", {{"xmin", 0}, {"ymin", 0}, {"xmax", 10}, {"ymax", 10}}},
      {"obstacles", {{{4, 4}, {6, 4}, {6, 6}, {4, 6}}}},
      {"start", {1, 5}},
      {"goal", {9, 5}},
  };
  auto p = load_planar_problem(j);
  CHECK(p.scene.obstacles.size() == 1);
  CHECK(p.scene.bounds.xmax == 10);
  CHECK(p.start == Vec2{1, 5});
  CHECK(p.goal == Vec2{9, 5});
}

TEST_CASE("format and type are enforced") {
  json j = {{"type", "planar"}};
  CHECK_THROWS_AS(load_planar_problem(j), InvalidSceneError);
  json j2 = {{"format", 1}, {"type", "link"}};
  CHECK_THROWS_AS(load_planar_problem(j2), InvalidSceneError);
  json j3 = {{"format", 1}, {"type", "coordination"}, {"width", 3}, {"height", 3},
             {"robots", 2}, {"start", {{0, 0}}}, {"goal", {{1, 1}, {2, 2}}}};
  CHECK_THROWS_AS(load_coord_problem(j3), InvalidSceneError);
}

TEST_CASE("result serialization shape") {
  PlanResult r;
  r.complete = true;
  PlannedPath p;
  p.cost = 2.5;
  p.word = Word::parse("r1 r2^-1");
  r.classes.push_back(p);
  auto j = result_json(r, {{json::array({0.0, 0.0}), json::array({1.0, 1.0})}});
  CHECK(j["format"] == 1);
  CHECK(j["complete"] == true);
  REQUIRE(j["classes"].size() == 1);
  CHECK(j["classes"][0]["cost"] == 2.5);
  CHECK(j["classes"][0]["word"] == "r1 r2^-1");
  CHECK(j["classes"][0]["path"].size() == 2);
}

TEST_CASE("obj export lists meshes and polylines") {
  auto link = helpers::make_hopf();
  auto diagram = project_diagram(link);
  auto faces = extract_regions(diagram);
  auto surfaces = lift_surfaces(diagram, faces, link.tube_radius);
  std::string path = "io_test_surfaces.obj";
  write_obj(path, surfaces, link, {{{0, 0, 1}, {0, 0, -1}}});
  std::ifstream in(path);
  REQUIRE(in.good());
  int v = 0, f = 0, l = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("v ", 0) == 0) ++v;
    if (line.rfind("f ", 0) == 0) ++f;
    if (line.rfind("l ", 0) == 0) ++l;
  }
  CHECK(v > 0);
  CHECK(f > 0);
  CHECK(l == 3);  // two link components + one path
  std::remove(path.c_str());
}

TEST_CASE("cli: bad input exits 2") {
  CHECK(cli({"plan2d", "--scene", "does_not_exist.json"}) == 2);
  auto bad = write_temp("bad.json", "{ not json");
  CHECK(cli({"plan2d", "--scene", bad}) == 2);
  std::remove(bad.c_str());
}

TEST_CASE("cli: planar end to end") {
  json scene = {
      {"format", 1},
      {"type", "planar"},
      {"bounds", {{"xmin", 0}, {"ymin", 0}, {"xmax", 10}, {"ymax", 10}}},
      {"obstacles", {{{4.6, 4.6}, {5.4, 4.6}, {5.4, 5.4}, {4.6, 5.4}}}},
      {"start", {1, 5}},
      {"goal", {9, 5}},
  };
  auto sp = write_temp("planar.json", scene.dump());
  std::string out = "io_test_planar_out.json";
  int code = cli({"plan2d", "--scene", sp, "--k", "2", "--res", "21", "--out", out,
                  "--shorten"});
  CHECK(code == 0);
  auto j = load_json_file(out);
  CHECK(j["complete"] == true);
  REQUIRE(j["classes"].size() == 2);
  for (const auto& c : j["classes"]) {
    CHECK(c["path"].size() >= 2);
    CHECK(c["cost"].get<double>() > 0);
  }
  // the two words differ
  CHECK(j["classes"][0]["word"] != j["classes"][1]["word"]);
  std::remove(sp.c_str());
  std::remove(out.c_str());
}

TEST_CASE("cli: coordination end to end") {
  json scene = {
      {"format", 1},          {"type", "coordination"},
      {"robots", 2},          {"width", 4},
      {"height", 4},          {"start", {{0, 0}, {3, 0}}},
      {"goal", {{3, 0}, {0, 0}}},
  };
  auto sp = write_temp("coord.json", scene.dump());
  std::string out = "io_test_coord_out.json";
  CHECK(cli({"coord", "--scene", sp, "--k", "2", "--out", out}) == 0);
  auto j = load_json_file(out);
  REQUIRE(j["classes"].size() == 2);
  // each path step lists one cell per robot
  for (const auto& step : j["classes"][0]["path"]) {
    CHECK(step.size() == 2);
  }
  std::remove(sp.c_str());
  std::remove(out.c_str());
}
