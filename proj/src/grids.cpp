#include "topoplan/grids.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <unordered_map>

#include "topoplan/errors.hpp"

namespace topo {

namespace {

int clamp_int(int v, int lo, int hi) { return std::max(lo, std::min(hi, v)); }

int axis_count(double lo, double hi, double res) {
  return static_cast<int>(std::floor((hi - lo) / res + 1e-9)) + 1;
}

// per-directed-edge signature cache shared by the neighbor closure
using SigCache = std::unordered_map<long long, std::optional<Word>>;

}  // namespace

int Grid2D::nearest(Vec2 p) const {
  int ix = clamp_int(static_cast<int>(std::lround((p.x - bounds.xmin) / res)), 0, nx - 1);
  int iy = clamp_int(static_cast<int>(std::lround((p.y - bounds.ymin) / res)), 0, ny - 1);
  return index(ix, iy);
}

Grid2D make_grid_2d(const Rect& bounds, double res, bool diagonal) {
  if (res <= 0 || bounds.xmax <= bounds.xmin || bounds.ymax <= bounds.ymin) {
    throw InvalidSceneError("bad grid bounds or resolution");
  }
  Grid2D g;
  g.bounds = bounds;
  g.res = res;
  g.diagonal = diagonal;
  g.nx = axis_count(bounds.xmin, bounds.xmax, res);
  g.ny = axis_count(bounds.ymin, bounds.ymax, res);
  return g;
}

SearchSpace grid_search_2d(const Grid2D& g, const std::vector<Ray>& rays,
                           const PlanarScene& scene, Vec2 start, Vec2 goal) {
  auto cache = std::make_shared<SigCache>();
  SearchSpace s;
  s.start = g.nearest(start);
  s.goal = g.nearest(goal);
  Vec2 goal_pt = g.point(s.goal);

  s.neighbors = [g, rays, scene, cache](int v) {
    static const int dx8[] = {1, -1, 0, 0, 1, 1, -1, -1};
    static const int dy8[] = {0, 0, 1, -1, 1, -1, 1, -1};
    int count = g.diagonal ? 8 : 4;
    std::vector<GraphEdge> out;
    int ix = v % g.nx, iy = v / g.nx;
    for (int k = 0; k < count; ++k) {
      int jx = ix + dx8[k], jy = iy + dy8[k];
      if (jx < 0 || jx >= g.nx || jy < 0 || jy >= g.ny) continue;
      int u = g.index(jx, jy);
      long long key = static_cast<long long>(v) * g.size() + u;
      auto it = cache->find(key);
      if (it == cache->end()) {
        std::optional<Word> sig;
        try {
          sig = edge_signature_2d(g.point(v), g.point(u), rays, scene);
        } catch (const CollisionError&) {
        }
        it = cache->emplace(key, std::move(sig)).first;
      }
      if (!it->second) continue;
      double cost = g.res * (k < 4 ? 1.0 : std::sqrt(2.0));
      out.push_back({u, cost, *it->second});
    }
    return out;
  };

  if (g.diagonal) {
    s.heuristic = [g, goal_pt](int v) { return norm(g.point(v) - goal_pt); };
  } else {
    s.heuristic = [g, goal_pt](int v) {
      Vec2 p = g.point(v);
      return std::abs(p.x - goal_pt.x) + std::abs(p.y - goal_pt.y);
    };
  }
  return s;
}

int Grid3D::nearest(Vec3 p) const {
  int ix = clamp_int(static_cast<int>(std::lround((p.x - min.x) / res)), 0, nx - 1);
  int iy = clamp_int(static_cast<int>(std::lround((p.y - min.y) / res)), 0, ny - 1);
  int iz = clamp_int(static_cast<int>(std::lround((p.z - min.z) / res)), 0, nz - 1);
  return index(ix, iy, iz);
}

Grid3D make_grid_3d(Vec3 min, Vec3 max, double res) {
  if (res <= 0 || max.x <= min.x || max.y <= min.y || max.z <= min.z) {
    throw InvalidSceneError("bad grid bounds or resolution");
  }
  Grid3D g;
  g.min = min;
  g.max = max;
  g.res = res;
  g.nx = axis_count(min.x, max.x, res);
  g.ny = axis_count(min.y, max.y, res);
  g.nz = axis_count(min.z, max.z, res);
  return g;
}

SearchSpace grid_search_3d(const Grid3D& g, const std::vector<DehnSurface>& surfaces,
                           const PolygonalLink& link, Vec3 start, Vec3 goal) {
  auto cache = std::make_shared<SigCache>();
  SearchSpace s;
  s.start = g.nearest(start);
  s.goal = g.nearest(goal);
  Vec3 goal_pt = g.point(s.goal);

  s.neighbors = [g, surfaces, link, cache](int v) {
    static const int d[6][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    std::vector<GraphEdge> out;
    int ix = v % g.nx, iy = (v / g.nx) % g.ny, iz = v / (g.nx * g.ny);
    for (const auto& dd : d) {
      int jx = ix + dd[0], jy = iy + dd[1], jz = iz + dd[2];
      if (jx < 0 || jx >= g.nx || jy < 0 || jy >= g.ny || jz < 0 || jz >= g.nz) continue;
      int u = g.index(jx, jy, jz);
      long long key = static_cast<long long>(v) * g.size() + u;
      auto it = cache->find(key);
      if (it == cache->end()) {
        std::optional<Word> sig;
        try {
          sig = edge_signature_3d(g.point(v), g.point(u), surfaces, link);
        } catch (const CollisionError&) {
        }
        it = cache->emplace(key, std::move(sig)).first;
      }
      if (!it->second) continue;
      out.push_back({u, g.res, *it->second});
    }
    return out;
  };

  s.heuristic = [g, goal_pt](int v) {
    Vec3 p = g.point(v);
    return std::abs(p.x - goal_pt.x) + std::abs(p.y - goal_pt.y) + std::abs(p.z - goal_pt.z);
  };
  return s;
}

long long CoordGrid::size() const {
  long long cells = static_cast<long long>(width) * height;
  long long n = 1;
  for (int r = 0; r < robots; ++r) n *= cells;
  return n;
}

int CoordGrid::index(const std::vector<std::pair<int, int>>& cs) const {
  long long v = 0;
  long long cells = static_cast<long long>(width) * height;
  for (int r = robots - 1; r >= 0; --r) {
    v = v * cells + (static_cast<long long>(cs[static_cast<std::size_t>(r)].second) * width +
                     cs[static_cast<std::size_t>(r)].first);
  }
  return static_cast<int>(v);
}

std::vector<std::pair<int, int>> CoordGrid::cells(int v) const {
  std::vector<std::pair<int, int>> out;
  long long cells_n = static_cast<long long>(width) * height;
  long long rest = v;
  for (int r = 0; r < robots; ++r) {
    long long c = rest % cells_n;
    rest /= cells_n;
    out.push_back({static_cast<int>(c % width), static_cast<int>(c / width)});
  }
  return out;
}

JointConfig CoordGrid::config(int v) const {
  JointConfig q;
  for (const auto& [x, y] : cells(v)) q.push_back({static_cast<double>(x), static_cast<double>(y)});
  return q;
}

CoordGrid make_coord_grid(int width, int height, int robots) {
  CoordGrid g{width, height, robots};
  if (width < 1 || height < 1 || robots < 1 || g.size() > (1LL << 31) - 1) {
    throw InvalidSceneError("coordination grid too large or empty");
  }
  return g;
}

SearchSpace coord_search(const CoordGrid& g, const JointConfig& start,
                         const JointConfig& goal) {
  if (static_cast<int>(start.size()) != g.robots || static_cast<int>(goal.size()) != g.robots) {
    throw InvalidSceneError("start/goal robot count mismatch");
  }
  auto to_cells = [&](const JointConfig& q) {
    std::vector<std::pair<int, int>> cs;
    for (const auto& p : q) {
      int x = static_cast<int>(std::lround(p.x)), y = static_cast<int>(std::lround(p.y));
      if (x < 0 || x >= g.width || y < 0 || y >= g.height) {
        throw InvalidSceneError("robot outside the grid");
      }
      cs.push_back({x, y});
    }
    return cs;
  };

  SearchSpace s;
  s.start = g.index(to_cells(start));
  s.goal = g.index(to_cells(goal));
  auto goal_cells = to_cells(goal);

  s.neighbors = [g](int v) {
    static const int dx[] = {0, 1, -1, 0, 0};
    static const int dy[] = {0, 0, 0, 1, -1};
    auto cs = g.cells(v);
    JointConfig from = g.config(v);
    std::vector<GraphEdge> out;
    long long combos = 1;
    for (int r = 0; r < g.robots; ++r) combos *= 5;
    for (long long mask = 1; mask < combos; ++mask) {
      long long m = mask;
      auto nc = cs;
      int moved = 0;
      bool ok = true;
      for (int r = 0; r < g.robots && ok; ++r) {
        int mv = static_cast<int>(m % 5);
        m /= 5;
        if (mv == 0) continue;
        ++moved;
        auto& [x, y] = nc[static_cast<std::size_t>(r)];
        x += dx[mv];
        y += dy[mv];
        ok = x >= 0 && x < g.width && y >= 0 && y < g.height;
      }
      if (!ok) continue;
      JointConfig to;
      for (const auto& [x, y] : nc) to.push_back({static_cast<double>(x), static_cast<double>(y)});
      if (joint_move_collides(from, to)) continue;
      out.push_back({g.index(nc), static_cast<double>(moved), edge_signature_coord(from, to)});
    }
    return out;
  };

  s.heuristic = [g, goal_cells](int v) {
    auto cs = g.cells(v);
    double h = 0;
    for (std::size_t r = 0; r < cs.size(); ++r) {
      h += std::abs(cs[r].first - goal_cells[r].first) +
           std::abs(cs[r].second - goal_cells[r].second);
    }
    return h;
  };
  return s;
}

}  // namespace topo
