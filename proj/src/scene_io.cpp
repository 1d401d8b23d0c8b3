#include "topoplan/scene_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "topoplan/errors.hpp"
#include "topoplan/grids.hpp"

namespace topo {

namespace {

using nlohmann::json;

Vec2 to_vec2(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidSceneError("expected [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Vec3 to_vec3(const json& j) {
  if (!j.is_array() || j.size() != 3) throw InvalidSceneError("expected [x, y, z]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

void check_header(const json& j, const std::string& type) {
  if (!j.is_object() || j.value("format", 0) != 1) {
    throw InvalidSceneError("missing or unsupported \"format\" (expected 1)");
  }
  if (j.value("type", "") != type) {
    throw InvalidSceneError("scene type mismatch: expected \"" + type + "\"");
  }
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSceneError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidSceneError(std::string("bad JSON: ") + e.what());
  }
}

PlanarProblem load_planar_problem(const json& j) {
  check_header(j, "planar");
  try {
    PlanarProblem p;
    const auto& b = j.at("bounds");
    p.scene.bounds = {b.at("xmin").get<double>(), b.at("ymin").get<double>(),
                      b.at("xmax").get<double>(), b.at("ymax").get<double>()};
    for (const auto& poly : j.at("obstacles")) {
      Polygon2 pg;
      for (const auto& v : poly) pg.push_back(to_vec2(v));
      if (pg.size() < 3) throw InvalidSceneError("obstacle needs >= 3 vertices");
      p.scene.obstacles.push_back(std::move(pg));
    }
    p.start = to_vec2(j.at("start"));
    p.goal = to_vec2(j.at("goal"));
    return p;
  } catch (const json::exception& e) {
    throw InvalidSceneError(std::string("bad planar scene: ") + e.what());
  }
}

LinkProblem load_link_problem(const json& j) {
  check_header(j, "link");
  try {
    LinkProblem p;
    p.link.tube_radius = j.value("tube_radius", 0.1);
    if (p.link.tube_radius <= 0) throw InvalidSceneError("tube_radius must be positive");
    for (const auto& comp : j.at("components")) {
      std::vector<Vec3> poly;
      for (const auto& v : comp) poly.push_back(to_vec3(v));
      if (poly.size() < 3) throw InvalidSceneError("link component needs >= 3 vertices");
      p.link.components.push_back(std::move(poly));
    }
    const auto& b = j.at("bounds");
    p.bounds_min = to_vec3(b.at("min"));
    p.bounds_max = to_vec3(b.at("max"));
    p.start = to_vec3(j.at("start"));
    p.goal = to_vec3(j.at("goal"));
    return p;
  } catch (const json::exception& e) {
    throw InvalidSceneError(std::string("bad link scene: ") + e.what());
  }
}

CoordProblem load_coord_problem(const json& j) {
  check_header(j, "coordination");
  try {
    CoordProblem p;
    p.width = j.at("width").get<int>();
    p.height = j.at("height").get<int>();
    p.robots = j.at("robots").get<int>();
    for (const auto& v : j.at("start")) p.start.push_back(to_vec2(v));
    for (const auto& v : j.at("goal")) p.goal.push_back(to_vec2(v));
    if (static_cast<int>(p.start.size()) != p.robots ||
        static_cast<int>(p.goal.size()) != p.robots) {
      throw InvalidSceneError("start/goal must list one cell per robot");
    }
    return p;
  } catch (const json::exception& e) {
    throw InvalidSceneError(std::string("bad coordination scene: ") + e.what());
  }
}

json result_json(const PlanResult& result, const std::vector<std::vector<json>>& paths) {
  json out;
  out["format"] = 1;
  out["complete"] = result.complete;
  out["classes"] = json::array();
  for (std::size_t i = 0; i < result.classes.size(); ++i) {
    json c;
    c["cost"] = result.classes[i].cost;
    c["word"] = result.classes[i].word.str();
    c["path"] = json::array();
    for (const auto& p : paths[i]) c["path"].push_back(p);
    out["classes"].push_back(std::move(c));
  }
  return out;
}

void write_obj(const std::string& path, const std::vector<DehnSurface>& surfaces,
               const PolygonalLink& link, const std::vector<std::vector<Vec3>>& paths) {
  std::ofstream out(path);
  if (!out) throw PlanningError("cannot write " + path);
  int base = 1;
  for (const auto& s : surfaces) {
    out << "o surface_" << s.id << "\n";
    for (const auto& v : s.vertices) out << "v " << v.x << " " << v.y << " " << v.z << "\n";
    for (const auto& t : s.triangles) {
      out << "f " << base + t[0] << " " << base + t[1] << " " << base + t[2] << "\n";
    }
    base += static_cast<int>(s.vertices.size());
  }
  for (std::size_t c = 0; c < link.components.size(); ++c) {
    out << "o link_" << c + 1 << "\n";
    for (const auto& v : link.components[c]) {
      out << "v " << v.x << " " << v.y << " " << v.z << "\n";
    }
    out << "l";
    for (std::size_t i = 0; i < link.components[c].size(); ++i) out << " " << base + static_cast<int>(i);
    out << " " << base << "\n";
    base += static_cast<int>(link.components[c].size());
  }
  for (std::size_t p = 0; p < paths.size(); ++p) {
    out << "o path_" << p + 1 << "\n";
    for (const auto& v : paths[p]) out << "v " << v.x << " " << v.y << " " << v.z << "\n";
    out << "l";
    for (std::size_t i = 0; i < paths[p].size(); ++i) out << " " << base + static_cast<int>(i);
    out << "\n";
    base += static_cast<int>(paths[p].size());
  }
}

namespace {

struct CliCommon {
  std::string scene;
  std::string out = "result.json";
  int k = 4;
  int res = 50;  // grid samples along the longest axis
  unsigned seed = 0;
  std::size_t max_word = 12;
  std::size_t max_expansions = 10'000'000;
  bool do_shorten = false;
};

void add_common(CLI::App* cmd, CliCommon& c, bool geometric) {
  cmd->add_option("--scene", c.scene, "scene JSON file")->required();
  cmd->add_option("--k", c.k, "number of classes to find");
  cmd->add_option("--out", c.out, "output JSON file");
  cmd->add_option("--seed", c.seed, "random seed");
  cmd->add_option("--max-word", c.max_word, "reduced word length cap");
  cmd->add_option("--max-expansions", c.max_expansions, "search expansion budget");
  if (geometric) {
    cmd->add_option("--res", c.res, "grid samples along the longest axis")
        ->check(CLI::Range(2, 100000));
    cmd->add_flag("--shorten", c.do_shorten, "shortcut each path within its class");
  }
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw PlanningError("cannot write " + path);
  out << j.dump(2) << "\n";
}

int run_plan2d(const CliCommon& c) {
  auto prob = load_planar_problem(load_json_file(c.scene));
  auto [rays, pres] = build_rays(prob.scene);
  double extent = std::max(prob.scene.bounds.xmax - prob.scene.bounds.xmin,
                           prob.scene.bounds.ymax - prob.scene.bounds.ymin);
  auto grid = make_grid_2d(prob.scene.bounds, extent / (c.res - 1), true);
  auto space = grid_search_2d(grid, rays, prob.scene, prob.start, prob.goal);
  auto result = plan_k_classes(space, pres, {c.k, c.max_expansions, c.max_word});

  std::function<std::optional<Word>(const Vec2&, const Vec2&)> seg =
      [&](const Vec2& a, const Vec2& b) -> std::optional<Word> {
    try {
      return edge_signature_2d(a, b, rays, prob.scene);
    } catch (const CollisionError&) {
      return std::nullopt;
    }
  };

  std::vector<std::vector<json>> paths;
  for (const auto& cls : result.classes) {
    std::vector<Vec2> pts;
    for (int v : cls.vertices) pts.push_back(grid.point(v));
    if (c.do_shorten) pts = shorten_path<Vec2>(std::move(pts), seg, pres, c.seed);
    std::vector<json> jp;
    for (const auto& p : pts) jp.push_back(json::array({p.x, p.y}));
    paths.push_back(std::move(jp));
  }
  save_json(c.out, result_json(result, paths));
  return result.complete ? 0 : 3;
}

int run_plan3d(const CliCommon& c, const std::string& obj_path) {
  auto prob = load_link_problem(load_json_file(c.scene));
  // a degenerate projection is nudged by a tiny rotation of the link
  auto [link, diagram] = project_diagram_generic(prob.link, c.seed);
  auto faces = extract_regions(diagram);
  auto surfaces = lift_surfaces(diagram, faces, link.tube_radius);
  auto pres = crossing_relations(diagram, faces, surfaces);
  Vec3 ext = prob.bounds_max - prob.bounds_min;
  double extent = std::max({ext.x, ext.y, ext.z});
  auto grid = make_grid_3d(prob.bounds_min, prob.bounds_max, extent / (c.res - 1));
  auto space = grid_search_3d(grid, surfaces, link, prob.start, prob.goal);
  auto result = plan_k_classes(space, pres, {c.k, c.max_expansions, c.max_word});

  std::function<std::optional<Word>(const Vec3&, const Vec3&)> seg =
      [&](const Vec3& a, const Vec3& b) -> std::optional<Word> {
    try {
      return edge_signature_3d(a, b, surfaces, link);
    } catch (const CollisionError&) {
      return std::nullopt;
    }
  };

  std::vector<std::vector<json>> paths;
  std::vector<std::vector<Vec3>> paths3;
  for (const auto& cls : result.classes) {
    std::vector<Vec3> pts;
    for (int v : cls.vertices) pts.push_back(grid.point(v));
    if (c.do_shorten) pts = shorten_path<Vec3>(std::move(pts), seg, pres, c.seed);
    std::vector<json> jp;
    for (const auto& p : pts) jp.push_back(json::array({p.x, p.y, p.z}));
    paths.push_back(std::move(jp));
    paths3.push_back(std::move(pts));
  }
  save_json(c.out, result_json(result, paths));
  if (!obj_path.empty()) write_obj(obj_path, surfaces, link, paths3);
  return result.complete ? 0 : 3;
}

int run_coord(const CliCommon& c) {
  auto prob = load_coord_problem(load_json_file(c.scene));
  auto grid = make_coord_grid(prob.width, prob.height, prob.robots);
  auto pres = coordination_presentation(prob.robots);
  auto space = coord_search(grid, prob.start, prob.goal);
  auto result = plan_k_classes(space, pres, {c.k, c.max_expansions, c.max_word});

  std::vector<std::vector<json>> paths;
  for (const auto& cls : result.classes) {
    std::vector<json> jp;
    for (int v : cls.vertices) {
      json cfg = json::array();
      for (const auto& [x, y] : grid.cells(v)) cfg.push_back(json::array({x, y}));
      jp.push_back(std::move(cfg));
    }
    paths.push_back(std::move(jp));
  }
  save_json(c.out, result_json(result, paths));
  return result.complete ? 0 : 3;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"optimal trajectories in distinct path classes"};
  app.require_subcommand(1);

  CliCommon c2, c3, cc;
  std::string obj_path;
  auto* plan2d = app.add_subcommand("plan2d", "plan in a punctured plane");
  add_common(plan2d, c2, true);
  auto* plan3d = app.add_subcommand("plan3d", "plan in a link complement");
  add_common(plan3d, c3, true);
  plan3d->add_option("--obj", obj_path, "export surfaces, link and paths as OBJ");
  auto* coord = app.add_subcommand("coord", "plan a multi-robot coordination");
  add_common(coord, cc, false);

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (plan2d->parsed()) return run_plan2d(c2);
    if (plan3d->parsed()) return run_plan3d(c3, obj_path);
    return run_coord(cc);
  } catch (const PlanningError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace topo
