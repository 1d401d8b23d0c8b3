#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <optional>

#include "doctest.h"
#include "test_helpers.hpp"
#include "topoplan/errors.hpp"
#include "topoplan/grids.hpp"
#include "topoplan/planner.hpp"

using namespace topo;

namespace {

PlanarScene one_post() {
  PlanarScene scene;
  scene.bounds = {0, 0, 10, 10};
  scene.obstacles.push_back({{4.6, 4.6}, {5.4, 4.6}, {5.4, 5.4}, {4.6, 5.4}});
  return scene;
}

PlanarScene two_posts(double w, double h) {
  PlanarScene scene;
  scene.bounds = {0, 0, w, h};
  scene.obstacles.push_back({{w * 0.3 - 0.4, h * 0.5 - 0.4},
                             {w * 0.3 + 0.4, h * 0.5 - 0.4},
                             {w * 0.3 + 0.4, h * 0.5 + 0.4},
                             {w * 0.3 - 0.4, h * 0.5 + 0.4}});
  scene.obstacles.push_back({{w * 0.7 - 0.4, h * 0.5 - 0.4},
                             {w * 0.7 + 0.4, h * 0.5 - 0.4},
                             {w * 0.7 + 0.4, h * 0.5 + 0.4},
                             {w * 0.7 - 0.4, h * 0.5 + 0.4}});
  return scene;
}

}  // namespace

TEST_CASE("two classes around a single post, symmetric costs") {
  auto scene = one_post();
  auto [rays, pres] = build_rays(scene);
  auto grid = make_grid_2d(scene.bounds, 0.5, true);
  auto space = grid_search_2d(grid, rays, scene, {1, 5}, {9, 5});
  auto result = plan_k_classes(space, pres, {2, 1'000'000, 8});
  REQUIRE(result.complete);
  REQUIRE(result.classes.size() == 2);
  CHECK(result.classes[0].cost == doctest::Approx(result.classes[1].cost));
  // the classes differ by one loop around the post
  Word diff = cyclic_reduce(compose(result.classes[0].word,
                                    invert(result.classes[1].word)))
                  .core;
  REQUIRE(diff.size() == 1);
  CHECK(diff[0].gen == "r1");
  // each path starts and ends at the requested cells
  for (const auto& c : result.classes) {
    CHECK(c.vertices.front() == space.start);
    CHECK(c.vertices.back() == space.goal);
  }
}

TEST_CASE("augmented search matches the exhaustive oracle (planar)") {
  auto scene = two_posts(12, 12);
  auto [rays, pres] = build_rays(scene);
  auto grid = make_grid_2d(scene.bounds, 1.0, false);  // unit integer costs
  auto space = grid_search_2d(grid, rays, scene, {0, 6}, {12, 6});
  auto result = plan_k_classes(space, pres, {4, 5'000'000, 6});
  auto oracle = helpers::exhaustive_class_dijkstra(space, pres, 4, 6);
  REQUIRE(result.classes.size() == 4);
  REQUIRE(oracle.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(result.classes[static_cast<std::size_t>(i)].cost ==
          oracle[static_cast<std::size_t>(i)].cost);
  }
}

TEST_CASE("augmented search matches the exhaustive oracle (coordination)") {
  auto grid = make_coord_grid(4, 4, 2);
  auto pres = coordination_presentation(2);
  auto space = coord_search(grid, {{0, 0}, {3, 0}}, {{3, 0}, {0, 0}});
  auto result = plan_k_classes(space, pres, {2, 2'000'000, 6});
  auto oracle = helpers::exhaustive_class_dijkstra(space, pres, 2, 6);
  REQUIRE(result.classes.size() == 2);
  REQUIRE(oracle.size() == 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(result.classes[static_cast<std::size_t>(i)].cost ==
          oracle[static_cast<std::size_t>(i)].cost);
  }
  // the two swap classes differ by the pass side
  CHECK(equivalent(result.classes[0].word, result.classes[1].word, pres) ==
        Equivalence::not_proven);
}

TEST_CASE("budget exhaustion is reported as a partial result") {
  auto scene = one_post();
  auto [rays, pres] = build_rays(scene);
  auto grid = make_grid_2d(scene.bounds, 1.0, true);
  auto space = grid_search_2d(grid, rays, scene, {1, 5}, {9, 5});
  auto result = plan_k_classes(space, pres, {50, 1'000'000, 2});
  CHECK(!result.complete);
  CHECK(!result.classes.empty());
  CHECK(static_cast<int>(result.classes.size()) < 50);
}

TEST_CASE("class-preserving shortcutting") {
  auto scene = one_post();
  auto [rays, pres] = build_rays(scene);
  std::function<std::optional<Word>(const Vec2&, const Vec2&)> seg =
      [&scene, &rays](const Vec2& a, const Vec2& b) -> std::optional<Word> {
    try {
      return edge_signature_2d(a, b, rays, scene);
    } catch (const CollisionError&) {
      return std::nullopt;
    }
  };
  // wiggly path passing above the post
  std::vector<Vec2> path = {{1, 5}, {2, 6}, {3, 5.5}, {4, 7}, {5, 6.5},
                            {6, 7},  {7, 6}, {8, 6.5}, {9, 5}};
  Word before = path_signature_2d(path, rays, scene);
  auto shortened = shorten_path<Vec2>(path, seg, pres, 5);
  CHECK(shortened.size() < path.size());
  CHECK(shortened.front() == path.front());
  CHECK(shortened.back() == path.back());
  Word after = path_signature_2d(shortened, rays, scene);
  CHECK(equivalent(before, after, pres) == Equivalence::proven_equal);
}
