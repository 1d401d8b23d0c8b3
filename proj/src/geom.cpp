#include "topoplan/geom.hpp"

#include <algorithm>
#include <stdexcept>

namespace topo {

double signed_area(const Polygon2& poly) {
  double a = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % poly.size()];
    a += cross(p, q);
  }
  return a / 2;
}

Vec2 centroid(const Polygon2& poly) {
  double a = 0;
  Vec2 c{0, 0};
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % poly.size()];
    double w = cross(p, q);
    a += w;
    c.x += w * (p.x + q.x);
    c.y += w * (p.y + q.y);
  }
  if (a == 0) throw std::invalid_argument("degenerate polygon");
  return {c.x / (3 * a), c.y / (3 * a)};
}

bool point_in_polygon(Vec2 p, const Polygon2& poly) {
  bool inside = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    if ((poly[i].y > p.y) != (poly[j].y > p.y)) {
      double xc = poly[j].x + (p.y - poly[j].y) / (poly[i].y - poly[j].y) * (poly[i].x - poly[j].x);
      if (p.x < xc) inside = !inside;
    }
  }
  return inside;
}

std::optional<SegHit> segment_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  Vec2 r = b - a, s = d - c;
  double denom = cross(r, s);
  if (denom == 0) return std::nullopt;
  Vec2 ca = c - a;
  double t = cross(ca, s) / denom;
  double u = cross(ca, r) / denom;
  if (t <= 0 || t >= 1 || u <= 0 || u >= 1) return std::nullopt;
  return SegHit{t, u, a + t * r};
}

bool segment_hits_polygon(Vec2 a, Vec2 b, const Polygon2& poly) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (segment_intersect(a, b, poly[i], poly[(i + 1) % poly.size()])) return true;
  }
  // fully inside?
  return point_in_polygon(0.5 * (a + b), poly);
}

namespace {

bool point_in_triangle(Vec2 p, Vec2 a, Vec2 b, Vec2 c) {
  double d1 = cross(b - a, p - a);
  double d2 = cross(c - b, p - b);
  double d3 = cross(a - c, p - c);
  bool has_neg = (d1 < 0) || (d2 < 0) || (d3 < 0);
  bool has_pos = (d1 > 0) || (d2 > 0) || (d3 > 0);
  return !(has_neg && has_pos);
}

}  // namespace

std::vector<std::array<int, 3>> triangulate(const Polygon2& poly) {
  std::size_t n = poly.size();
  if (n < 3) throw std::invalid_argument("polygon needs >= 3 vertices");
  std::vector<int> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
  if (signed_area(poly) < 0) std::reverse(idx.begin(), idx.end());

  std::vector<std::array<int, 3>> tris;
  int guard = static_cast<int>(2 * n * n);
  std::size_t i = 0;
  while (idx.size() > 3 && guard-- > 0) {
    std::size_t m = idx.size();
    int ia = idx[(i + m - 1) % m], ib = idx[i % m], ic = idx[(i + 1) % m];
    Vec2 a = poly[ia], b = poly[ib], c = poly[ic];
    bool ear = cross(b - a, c - a) > 0;
    if (ear) {
      for (int j : idx) {
        if (j == ia || j == ib || j == ic) continue;
        if (point_in_triangle(poly[j], a, b, c)) {
          ear = false;
          break;
        }
      }
    }
    if (ear) {
      tris.push_back({ia, ib, ic});
      idx.erase(idx.begin() + static_cast<long>(i % m));
      i = 0;
    } else {
      i = (i + 1) % m;
    }
  }
  if (idx.size() != 3) throw std::runtime_error("ear clipping failed (non-simple polygon?)");
  tris.push_back({idx[0], idx[1], idx[2]});
  return tris;
}

double dist_point_segment(Vec3 p, Vec3 a, Vec3 b) {
  Vec3 ab = b - a;
  double len2 = dot(ab, ab);
  double t = len2 == 0 ? 0 : std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return norm(p - (a + t * ab));
}

double dist_segment_segment(Vec3 a, Vec3 b, Vec3 c, Vec3 d) {
  // standard closest-point computation with clamped parameters
  Vec3 u = b - a, v = d - c, w = a - c;
  double A = dot(u, u), B = dot(u, v), C = dot(v, v), D = dot(u, w), E = dot(v, w);
  double den = A * C - B * B;
  double s, t;
  if (den < 1e-14) {
    s = 0;
    t = C > 0 ? std::clamp(E / C, 0.0, 1.0) : 0;
  } else {
    s = std::clamp((B * E - C * D) / den, 0.0, 1.0);
    t = C > 0 ? std::clamp((E + B * s) / C, 0.0, 1.0) : 0;
    s = A > 0 ? std::clamp((B * t - D) / A, 0.0, 1.0) : 0;
  }
  return norm((a + s * u) - (c + t * v));
}

double dist_triangle_segment(Vec3 t0, Vec3 t1, Vec3 t2, Vec3 a, Vec3 b) {
  auto hit = segment_triangle(a, b, t0, t1, t2);
  if (hit && !hit->degenerate) return 0;
  double d = dist_segment_segment(t0, t1, a, b);
  d = std::min(d, dist_segment_segment(t1, t2, a, b));
  d = std::min(d, dist_segment_segment(t2, t0, a, b));
  return d;
}

std::optional<TriHit> segment_triangle(Vec3 a, Vec3 b, Vec3 t0, Vec3 t1, Vec3 t2, double eps) {
  Vec3 dir = b - a;
  Vec3 e1 = t1 - t0, e2 = t2 - t0;
  Vec3 n = cross(e1, e2);
  double denom = dot(dir, n);
  double scale = norm(dir) * norm(n);
  if (scale == 0) return std::nullopt;
  if (std::abs(denom) < eps * scale) {
    // near-parallel; only degenerate if the segment actually comes close
    double touch = 1e-7 * std::max(1.0, norm(dir));
    if (dist_segment_segment(t0, t1, a, b) < touch || dist_segment_segment(t1, t2, a, b) < touch ||
        dist_segment_segment(t2, t0, a, b) < touch) {
      return TriHit{0, 0, true};
    }
    return std::nullopt;
  }
  double t = dot(t0 - a, n) / denom;
  if (t < -eps || t > 1 + eps) return std::nullopt;
  Vec3 p = a + t * dir;
  // barycentric via projected areas
  double nn = dot(n, n);
  double u = dot(cross(t2 - t1, p - t1), n) / nn;  // weight of t0
  double v = dot(cross(t0 - t2, p - t2), n) / nn;  // weight of t1
  double w = 1 - u - v;
  double tol = 1e-7;
  if (u < -tol || v < -tol || w < -tol) return std::nullopt;
  bool degen = (t < eps || t > 1 - eps || u < tol || v < tol || w < tol);
  return TriHit{t, denom > 0 ? 1 : -1, degen};
}

}  // namespace topo
