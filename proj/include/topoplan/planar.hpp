#pragma once

#include <vector>

#include "topoplan/geom.hpp"
#include "topoplan/presentation.hpp"
#include "topoplan/word.hpp"

namespace topo {

struct Rect {
  double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
  bool contains(Vec2 p) const {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }
};

// The plane punctured by polygonal obstacles.
struct PlanarScene {
  Rect bounds;
  std::vector<Polygon2> obstacles;  // simple, CCW, pairwise disjoint
};

// Vertical ray emanating upward from a representative point inside an
// obstacle. Crossing it left-to-right (positive x direction) reads as the
// inverse letter; right-to-left as the plain letter.
struct Ray {
  std::string id;
  Vec2 origin;  // perturbed representative point
  Vec2 direction{0, 1};
};

// One ray per obstacle, all parallel (+y). The returned presentation is the
// free group on the ray letters (empty relation set). Throws
// InvalidSceneError for overlapping obstacles.
std::pair<std::vector<Ray>, Presentation> build_rays(const PlanarScene& scene);

// Crossing word of the open segment ab, letters in crossing order, freely
// reduced. Throws CollisionError if ab hits an obstacle.
Word edge_signature_2d(Vec2 a, Vec2 b, const std::vector<Ray>& rays,
                       const PlanarScene& scene);

// Signature of a polyline, composed edge by edge.
Word path_signature_2d(const std::vector<Vec2>& path, const std::vector<Ray>& rays,
                       const PlanarScene& scene);

}  // namespace topo
