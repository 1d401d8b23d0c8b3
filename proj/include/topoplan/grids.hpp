#pragma once

#include <vector>

#include "topoplan/coord.hpp"
#include "topoplan/knot.hpp"
#include "topoplan/planar.hpp"
#include "topoplan/planner.hpp"

namespace topo {

// Regular point lattice over a rectangle. diagonal=true gives the
// 8-connected graph with step costs res and res*sqrt(2); diagonal=false the
// 4-connected unit-step graph (integer path costs in units of res).
struct Grid2D {
  Rect bounds;
  double res = 1.0;
  bool diagonal = true;
  int nx = 0, ny = 0;

  int size() const { return nx * ny; }
  int index(int ix, int iy) const { return iy * nx + ix; }
  Vec2 point(int v) const {
    return {bounds.xmin + res * (v % nx), bounds.ymin + res * (v / nx)};
  }
  int nearest(Vec2 p) const;
};

Grid2D make_grid_2d(const Rect& bounds, double res, bool diagonal = true);

// Search space over the grid with ray-crossing signatures; signatures are
// cached per directed edge, colliding edges are dropped.
SearchSpace grid_search_2d(const Grid2D& g, const std::vector<Ray>& rays,
                           const PlanarScene& scene, Vec2 start, Vec2 goal);

struct Grid3D {
  Vec3 min, max;
  double res = 1.0;
  int nx = 0, ny = 0, nz = 0;

  int size() const { return nx * ny * nz; }
  int index(int ix, int iy, int iz) const { return (iz * ny + iy) * nx + ix; }
  Vec3 point(int v) const {
    int ix = v % nx, iy = (v / nx) % ny, iz = v / (nx * ny);
    return {min.x + res * ix, min.y + res * iy, min.z + res * iz};
  }
  int nearest(Vec3 p) const;
};

// 6-connected, uniform step cost res.
Grid3D make_grid_3d(Vec3 min, Vec3 max, double res);

SearchSpace grid_search_3d(const Grid3D& g, const std::vector<DehnSurface>& surfaces,
                           const PolygonalLink& link, Vec3 start, Vec3 goal);

// Joint configuration lattice for robots on a width x height integer grid.
// Vertices enumerate robot cell tuples in mixed radix; a move lets every
// robot step one cell in an axis direction or stay (cost = number of robots
// that moved), and is valid when no robot pair meets or swaps.
struct CoordGrid {
  int width = 0, height = 0, robots = 0;

  long long size() const;
  int index(const std::vector<std::pair<int, int>>& cells) const;
  JointConfig config(int v) const;
  std::vector<std::pair<int, int>> cells(int v) const;
};

CoordGrid make_coord_grid(int width, int height, int robots);

SearchSpace coord_search(const CoordGrid& g, const JointConfig& start,
                         const JointConfig& goal);

}  // namespace topo
