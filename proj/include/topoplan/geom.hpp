#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

namespace topo {

struct Vec2 {
  double x = 0, y = 0;
  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

struct Vec3 {
  double x = 0, y = 0, z = 0;
  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(Vec3 a, Vec3 b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

using Polygon2 = std::vector<Vec2>;  // closed, vertices in order, no repeat of first

double signed_area(const Polygon2& poly);
Vec2 centroid(const Polygon2& poly);
bool point_in_polygon(Vec2 p, const Polygon2& poly);

// Proper (interior) intersection of segments ab and cd.
struct SegHit {
  double t;  // parameter on ab
  double u;  // parameter on cd
  Vec2 point;
};
std::optional<SegHit> segment_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

bool segment_hits_polygon(Vec2 a, Vec2 b, const Polygon2& poly);

// Ear-clipping triangulation of a simple polygon (any orientation).
// Returns index triples into the input vertex list.
std::vector<std::array<int, 3>> triangulate(const Polygon2& poly);

// Distance helpers used for tube clearance checks.
double dist_point_segment(Vec3 p, Vec3 a, Vec3 b);
double dist_segment_segment(Vec3 a, Vec3 b, Vec3 c, Vec3 d);
double dist_triangle_segment(Vec3 t0, Vec3 t1, Vec3 t2, Vec3 a, Vec3 b);

// Transverse intersection of segment ab with triangle t0 t1 t2.
// sign = sign of (b-a) . normal. Returns nothing for misses; degenerate
// grazes (near-parallel, or hits within eps of the triangle boundary) are
// reported via the `degenerate` flag so callers can perturb and retry.
struct TriHit {
  double t;
  int sign;
  bool degenerate;
};
std::optional<TriHit> segment_triangle(Vec3 a, Vec3 b, Vec3 t0, Vec3 t1, Vec3 t2,
                                       double eps = 1e-9);

}  // namespace topo
