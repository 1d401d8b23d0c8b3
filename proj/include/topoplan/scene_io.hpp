#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "topoplan/coord.hpp"
#include "topoplan/knot.hpp"
#include "topoplan/planar.hpp"
#include "topoplan/planner.hpp"

namespace topo {

// All scene files carry {"format":1,"type":...}; loaders throw
// InvalidSceneError on malformed input.

struct PlanarProblem {
  PlanarScene scene;
  Vec2 start, goal;
};

struct LinkProblem {
  PolygonalLink link;
  Vec3 bounds_min, bounds_max;
  Vec3 start, goal;
};

struct CoordProblem {
  int width = 0, height = 0, robots = 0;
  JointConfig start, goal;
};

PlanarProblem load_planar_problem(const nlohmann::json& j);
LinkProblem load_link_problem(const nlohmann::json& j);
CoordProblem load_coord_problem(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);

// {"format":1,"complete":...,"classes":[{"cost","word","path"}...]} where
// each path entry is a point: [x,y], [x,y,z], or a robot list [[x,y],...].
nlohmann::json result_json(const PlanResult& result,
                           const std::vector<std::vector<nlohmann::json>>& paths);

// Wavefront OBJ: the lifted surfaces as triangle meshes, the link as
// polylines, and each planned path as a polyline.
void write_obj(const std::string& path, const std::vector<DehnSurface>& surfaces,
               const PolygonalLink& link, const std::vector<std::vector<Vec3>>& paths);

// Full command-line driver (subcommands plan2d, plan3d, coord). Returns the
// process exit code: 0 success, 3 partial result, 2 invalid input.
int run_cli(int argc, const char* const* argv);

}  // namespace topo
