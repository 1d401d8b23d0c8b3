#include "topoplan/planar.hpp"

#include <algorithm>
#include <cmath>

#include "topoplan/errors.hpp"

namespace topo {

namespace {

// Kept well below any realistic grid resolution.
constexpr double kRayEps = 1e-7;

bool polygons_overlap(const Polygon2& a, const Polygon2& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    Vec2 p = a[i], q = a[(i + 1) % a.size()];
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (segment_intersect(p, q, b[j], b[(j + 1) % b.size()])) return true;
    }
  }
  return point_in_polygon(a[0], b) || point_in_polygon(b[0], a);
}

Vec2 representative_point(const Polygon2& poly) {
  Vec2 c = centroid(poly);
  if (point_in_polygon(c, poly)) return c;
  // Sample along the vertical line through the centroid x until a point
  // lands inside.
  double ymin = poly[0].y, ymax = poly[0].y;
  for (const auto& v : poly) {
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  for (int k = 1; k < 4096; ++k) {
    double y = ymin + (ymax - ymin) * (static_cast<double>(k) / 4096.0);
    Vec2 p{c.x, y};
    if (point_in_polygon(p, poly)) return p;
  }
  throw InvalidSceneError("no interior representative point found");
}

}  // namespace

std::pair<std::vector<Ray>, Presentation> build_rays(const PlanarScene& scene) {
  for (std::size_t i = 0; i < scene.obstacles.size(); ++i) {
    for (std::size_t j = i + 1; j < scene.obstacles.size(); ++j) {
      if (polygons_overlap(scene.obstacles[i], scene.obstacles[j])) {
        throw InvalidSceneError("obstacles " + std::to_string(i) + " and " +
                                std::to_string(j) + " overlap");
      }
    }
  }
  std::vector<Ray> rays;
  std::set<std::string> alphabet;
  for (std::size_t i = 0; i < scene.obstacles.size(); ++i) {
    Ray r;
    r.id = "r" + std::to_string(i + 1);
    r.origin = representative_point(scene.obstacles[i]);
    // symbolic perturbation: distinct tiny x offsets keep crossings generic
    r.origin.x += kRayEps * static_cast<double>(i + 1);
    rays.push_back(r);
    alphabet.insert(r.id);
  }
  return {std::move(rays), Presentation(std::move(alphabet), {})};
}

Word edge_signature_2d(Vec2 a, Vec2 b, const std::vector<Ray>& rays,
                       const PlanarScene& scene) {
  for (const auto& poly : scene.obstacles) {
    if (segment_hits_polygon(a, b, poly)) throw CollisionError("segment intersects obstacle");
  }
  std::vector<std::pair<double, Letter>> hits;
  for (const auto& ray : rays) {
    double dx = b.x - a.x;
    if (dx == 0) continue;  // parallel to the ray; origins are perturbed off the grid
    double t = (ray.origin.x - a.x) / dx;
    if (t <= 0 || t >= 1) continue;
    double y = a.y + t * (b.y - a.y);
    if (y <= ray.origin.y) continue;  // below the ray origin
    // Positive x-component crossing is left-to-right w.r.t. the +y ray.
    hits.push_back({t, Letter{ray.id, dx > 0 ? -1 : 1}});
  }
  std::sort(hits.begin(), hits.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  Word w;
  for (const auto& [t, letter] : hits) w.push(letter);
  return w;
}

Word path_signature_2d(const std::vector<Vec2>& path, const std::vector<Ray>& rays,
                       const PlanarScene& scene) {
  Word w;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    w = compose(w, edge_signature_2d(path[i], path[i + 1], rays, scene));
  }
  return w;
}

}  // namespace topo
