#include "topoplan/knot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "topoplan/errors.hpp"

namespace topo {

namespace {

constexpr double kTol = 1e-6;

double seg_len2(const DiagramSegment& s) { return norm(s.b - s.a); }

}  // namespace

LinkDiagram project_diagram(const PolygonalLink& link) {
  LinkDiagram d;
  for (std::size_t c = 0; c < link.components.size(); ++c) {
    const auto& poly = link.components[c];
    if (poly.size() < 3) throw InvalidSceneError("link component needs >= 3 vertices");
    for (std::size_t i = 0; i < poly.size(); ++i) {
      Vec3 a = poly[i], b = poly[(i + 1) % poly.size()];
      DiagramSegment s{static_cast<int>(c), static_cast<int>(i), a, b, {a.x, a.y}, {b.x, b.y}};
      if (seg_len2(s) < kTol * std::max(1.0, norm(b - a))) {
        throw DegenerateDiagramError("segment projects to a point (component " +
                                     std::to_string(c) + ", index " + std::to_string(i) + ")");
      }
      d.segments.push_back(s);
    }
  }

  auto adjacent = [&](const DiagramSegment& p, const DiagramSegment& q) {
    if (p.component != q.component) return false;
    int n = 0;
    for (const auto& s : d.segments) {
      if (s.component == p.component) ++n;
    }
    int di = std::abs(p.index - q.index);
    return di == 1 || di == n - 1;
  };

  for (std::size_t i = 0; i < d.segments.size(); ++i) {
    for (std::size_t j = i + 1; j < d.segments.size(); ++j) {
      const auto& p = d.segments[i];
      const auto& q = d.segments[j];
      if (adjacent(p, q)) continue;
      Vec2 r = p.b - p.a, s = q.b - q.a;
      double denom = cross(r, s);
      double scale = norm(r) * norm(s);
      if (std::abs(denom) < kTol * scale) {
        // parallel: degenerate only if they nearly touch
        double dmin = std::min({dist_point_segment({q.a.x, q.a.y, 0}, {p.a.x, p.a.y, 0}, {p.b.x, p.b.y, 0}),
                                dist_point_segment({q.b.x, q.b.y, 0}, {p.a.x, p.a.y, 0}, {p.b.x, p.b.y, 0})});
        if (dmin < kTol * std::max(1.0, scale)) {
          throw DegenerateDiagramError("collinear overlap between segments " +
                                       std::to_string(i) + " and " + std::to_string(j));
        }
        continue;
      }
      Vec2 ca = q.a - p.a;
      double t = cross(ca, s) / denom;
      double u = cross(ca, r) / denom;
      if (t < -kTol || t > 1 + kTol || u < -kTol || u > 1 + kTol) continue;
      bool interior = t > kTol && t < 1 - kTol && u > kTol && u < 1 - kTol;
      if (!interior) {
        // graze of an endpoint; shared polyline vertices were excluded above
        throw DegenerateDiagramError("non-transverse intersection between segments " +
                                     std::to_string(i) + " and " + std::to_string(j));
      }
      double z1 = p.a3.z + t * (p.b3.z - p.a3.z);
      double z2 = q.a3.z + u * (q.b3.z - q.a3.z);
      if (std::abs(z1 - z2) < kTol) {
        throw DegenerateDiagramError("strands touch in 3-d at projected crossing of segments " +
                                     std::to_string(i) + " and " + std::to_string(j));
      }
      Crossing x;
      x.point = p.a + t * r;
      if (z1 > z2) {
        x.over_segment = static_cast<int>(i);
        x.under_segment = static_cast<int>(j);
        x.t_over = t;
        x.t_under = u;
        x.z_over = z1;
        x.z_under = z2;
      } else {
        x.over_segment = static_cast<int>(j);
        x.under_segment = static_cast<int>(i);
        x.t_over = u;
        x.t_under = t;
        x.z_over = z2;
        x.z_under = z1;
      }
      d.crossings.push_back(x);
    }
  }

  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    for (std::size_t j = i + 1; j < d.crossings.size(); ++j) {
      if (norm(d.crossings[i].point - d.crossings[j].point) < 10 * kTol) {
        throw DegenerateDiagramError("triple point near crossing " + std::to_string(i));
      }
    }
  }
  return d;
}

std::pair<PolygonalLink, LinkDiagram> project_diagram_generic(const PolygonalLink& link,
                                                              unsigned seed) {
  std::mt19937 rng(seed ^ 0x9e3779b9u);
  PolygonalLink cur = link;
  for (int attempt = 0; attempt < 24; ++attempt) {
    try {
      return {cur, project_diagram(cur)};
    } catch (const DegenerateDiagramError&) {
      if (attempt == 23) throw;
    }
    std::uniform_real_distribution<double> ang(-0.02 * (attempt + 1), 0.02 * (attempt + 1));
    double ax = ang(rng), ay = ang(rng);
    double ca = std::cos(ax), sa = std::sin(ax), cb = std::cos(ay), sb = std::sin(ay);
    cur = link;
    for (auto& comp : cur.components) {
      for (auto& v : comp) {
        // rotate about x then y
        Vec3 r1{v.x, ca * v.y - sa * v.z, sa * v.y + ca * v.z};
        v = {cb * r1.x + sb * r1.z, r1.y, -sb * r1.x + cb * r1.z};
      }
    }
  }
  throw DegenerateDiagramError("no generic projection found");
}

namespace {

// Planar arrangement of the projected segments, 4-valent at crossings.
struct Arrangement {
  struct Node {
    Vec2 p;
    int crossing = -1;           // crossing id, or -1 for a polyline vertex
    std::vector<int> out;        // directed edge ids, CCW by angle
  };
  struct SubEdge {
    int n0, n1;
    int seg;
    double t0, t1;  // parameter range on the diagram segment
  };
  std::vector<Node> nodes;
  std::vector<SubEdge> edges;  // directed ids: 2*e (n0->n1), 2*e+1 (n1->n0)

  int tail(int d) const { return d % 2 ? edges[d / 2].n1 : edges[d / 2].n0; }
  int head(int d) const { return d % 2 ? edges[d / 2].n0 : edges[d / 2].n1; }
  int twin(int d) const { return d ^ 1; }
  Vec2 dir(int d) const {
    Vec2 v = nodes[head(d)].p - nodes[tail(d)].p;
    return (1.0 / norm(v)) * v;
  }

  // z on the underlying 3-d segment at 2-d point q of directed edge d
  double z_at(const LinkDiagram& dg, int d, Vec2 q) const {
    const auto& e = edges[d / 2];
    const auto& s = dg.segments[e.seg];
    Vec2 r = s.b - s.a;
    double t = dot(q - s.a, r) / dot(r, r);
    return s.a3.z + t * (s.b3.z - s.a3.z);
  }
};

Arrangement build_arrangement(const LinkDiagram& d) {
  Arrangement ar;
  std::map<std::pair<int, int>, int> vertex_node;  // (component, index) -> node
  auto comp_size = [&](int c) {
    int n = 0;
    for (const auto& s : d.segments)
      if (s.component == c) ++n;
    return n;
  };
  for (const auto& s : d.segments) {
    auto key = std::make_pair(s.component, s.index);
    if (!vertex_node.count(key)) {
      vertex_node[key] = static_cast<int>(ar.nodes.size());
      ar.nodes.push_back({s.a, -1, {}});
    }
  }
  std::vector<int> crossing_node(d.crossings.size());
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    crossing_node[i] = static_cast<int>(ar.nodes.size());
    ar.nodes.push_back({d.crossings[i].point, static_cast<int>(i), {}});
  }

  for (std::size_t si = 0; si < d.segments.size(); ++si) {
    const auto& s = d.segments[si];
    std::vector<std::pair<double, int>> events;  // (t, node)
    events.push_back({0.0, vertex_node.at({s.component, s.index})});
    events.push_back({1.0, vertex_node.at({s.component, (s.index + 1) % comp_size(s.component)})});
    for (std::size_t ci = 0; ci < d.crossings.size(); ++ci) {
      const auto& x = d.crossings[ci];
      if (x.over_segment == static_cast<int>(si)) events.push_back({x.t_over, crossing_node[ci]});
      if (x.under_segment == static_cast<int>(si)) events.push_back({x.t_under, crossing_node[ci]});
    }
    std::sort(events.begin(), events.end());
    for (std::size_t k = 0; k + 1 < events.size(); ++k) {
      int e = static_cast<int>(ar.edges.size());
      ar.edges.push_back({events[k].second, events[k + 1].second, static_cast<int>(si),
                          events[k].first, events[k + 1].first});
      ar.nodes[events[k].second].out.push_back(2 * e);
      ar.nodes[events[k + 1].second].out.push_back(2 * e + 1);
    }
  }

  for (auto& node : ar.nodes) {
    std::sort(node.out.begin(), node.out.end(), [&](int a, int b) {
      Vec2 da = ar.dir(a), db = ar.dir(b);
      return std::atan2(da.y, da.x) < std::atan2(db.y, db.x);
    });
  }
  return ar;
}

// next directed edge of the face on the left: the clockwise neighbor of the
// twin at the head node
int face_next(const Arrangement& ar, int d) {
  const auto& out = ar.nodes[ar.head(d)].out;
  int tw = ar.twin(d);
  auto it = std::find(out.begin(), out.end(), tw);
  std::size_t i = static_cast<std::size_t>(it - out.begin());
  return out[(i + out.size() - 1) % out.size()];
}

struct FaceWalks {
  std::vector<std::vector<int>> walks;  // bounded faces only, directed edge loops
  std::vector<int> face_of_edge;        // directed edge -> bounded face id, or -1
};

FaceWalks trace_faces(const Arrangement& ar) {
  FaceWalks out;
  out.face_of_edge.assign(2 * ar.edges.size(), -2);
  for (std::size_t start = 0; start < 2 * ar.edges.size(); ++start) {
    if (out.face_of_edge[start] != -2) continue;
    std::vector<int> walk;
    int d = static_cast<int>(start);
    do {
      walk.push_back(d);
      out.face_of_edge[d] = -3;  // provisional
      d = face_next(ar, d);
    } while (d != static_cast<int>(start));
    double area = 0;
    for (int e : walk) {
      Vec2 p = ar.nodes[ar.tail(e)].p, q = ar.nodes[ar.head(e)].p;
      area += cross(p, q);
    }
    int id = area > 1e-12 ? static_cast<int>(out.walks.size()) : -1;
    for (int e : walk) out.face_of_edge[e] = id;
    if (id >= 0) out.walks.push_back(std::move(walk));
  }
  return out;
}

// Corner-cut offset shared by all faces at a crossing so the connector
// walls of adjacent faces share their strand-point edges exactly.
std::vector<double> corner_deltas(const Arrangement& ar, const LinkDiagram& d) {
  std::vector<double> delta(d.crossings.size(), 0.0);
  for (std::size_t n = 0; n < ar.nodes.size(); ++n) {
    int c = ar.nodes[n].crossing;
    if (c < 0) continue;
    double m = std::numeric_limits<double>::max();
    for (int e : ar.nodes[n].out) {
      m = std::min(m, norm(ar.nodes[ar.head(e)].p - ar.nodes[ar.tail(e)].p));
    }
    delta[c] = 0.3 * m;
  }
  return delta;
}

}  // namespace

std::vector<Face> extract_regions(const LinkDiagram& d) {
  Arrangement ar = build_arrangement(d);
  FaceWalks fw = trace_faces(ar);
  std::vector<double> delta = corner_deltas(ar, d);

  std::vector<Face> faces;
  for (const auto& walk : fw.walks) {
    Face f;
    std::set<int> segs;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      int d_in = walk[i];
      int d_out = walk[(i + 1) % walk.size()];
      int v = ar.head(d_in);
      segs.insert(ar.edges[d_in / 2].seg);
      int c = ar.nodes[v].crossing;
      Vec2 p = ar.nodes[v].p;
      if (c < 0) {
        f.boundary.push_back(p);
        // polyline vertex: both incident sub-edges carry the same z here
        f.lift_z.push_back(ar.z_at(d, d_in, p));
        f.corner_crossing.push_back(-1);
      } else {
        double dl = delta[c];
        Vec2 pre = p - dl * ar.dir(d_in);
        Vec2 post = p + dl * ar.dir(d_out);
        f.boundary.push_back(pre);
        f.lift_z.push_back(ar.z_at(d, d_in, pre));
        f.corner_crossing.push_back(c);
        f.boundary.push_back(post);
        f.lift_z.push_back(ar.z_at(d, d_out, post));
        f.corner_crossing.push_back(c);
      }
    }
    f.boundary_segments.assign(segs.begin(), segs.end());
    faces.push_back(std::move(f));
  }
  return faces;
}

std::vector<DehnSurface> lift_surfaces(const LinkDiagram& d, const std::vector<Face>& faces,
                                       double tube_radius) {
  std::vector<DehnSurface> out;
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    const Face& f = faces[fi];
    if (std::abs(signed_area(f.boundary)) < 1e-12) {
      throw SurfaceConstructionError("zero-area face " + std::to_string(fi));
    }
    DehnSurface s;
    s.id = "u" + std::to_string(fi + 1);
    s.region = f.boundary;
    for (std::size_t i = 0; i < f.boundary.size(); ++i) {
      s.vertices.push_back({f.boundary[i].x, f.boundary[i].y, f.lift_z[i]});
    }
    s.triangles = triangulate(f.boundary);

    // The boundary sits on the skeleton, so nearby strands are expected;
    // what must not happen is a strand that does not bound this face
    // piercing the lifted interior. Refine such triangles with a nudged
    // centroid split until clear.
    std::set<int> own(f.boundary_segments.begin(), f.boundary_segments.end());
    for (int round = 0; round < 500; ++round) {
      bool dirty = false;
      for (std::size_t ti = 0; ti < s.triangles.size() && !dirty; ++ti) {
        auto [i0, i1, i2] = s.triangles[ti];
        for (std::size_t si = 0; si < d.segments.size(); ++si) {
          if (own.count(static_cast<int>(si))) continue;
          const auto& seg = d.segments[si];
          auto hit = segment_triangle(seg.a3, seg.b3, s.vertices[i0], s.vertices[i1],
                                      s.vertices[i2]);
          if (hit) {
            // split at the centroid, pushed in z away from the strand
            Vec3 c = (1.0 / 3.0) * (s.vertices[i0] + s.vertices[i1] + s.vertices[i2]);
            Vec3 m = 0.5 * (seg.a3 + seg.b3);
            c.z += (c.z >= m.z ? 1 : -1) * tube_radius;
            int ic = static_cast<int>(s.vertices.size());
            s.vertices.push_back(c);
            s.triangles[ti] = {i0, i1, ic};
            s.triangles.push_back({i1, i2, ic});
            s.triangles.push_back({i2, i0, ic});
            dirty = true;
            break;
          }
        }
      }
      if (!dirty) {
        out.push_back(s);
        break;
      }
      if (round == 499) {
        throw SurfaceConstructionError("lift refinement failed for face " + std::to_string(fi));
      }
    }

    auto& built = out.back();
    built.bb_min = built.bb_max = built.vertices[0];
    for (const auto& v : built.vertices) {
      built.bb_min = {std::min(built.bb_min.x, v.x), std::min(built.bb_min.y, v.y),
                      std::min(built.bb_min.z, v.z)};
      built.bb_max = {std::max(built.bb_max.x, v.x), std::max(built.bb_max.y, v.y),
                      std::max(built.bb_max.z, v.z)};
    }
  }
  return out;
}

Presentation crossing_relations(const LinkDiagram& d, const std::vector<Face>& faces,
                                const std::vector<DehnSurface>& surfaces) {
  Arrangement ar = build_arrangement(d);
  FaceWalks fw = trace_faces(ar);

  std::set<std::string> alphabet;
  for (const auto& s : surfaces) alphabet.insert(s.id);

  std::vector<Word> relations;
  for (std::size_t n = 0; n < ar.nodes.size(); ++n) {
    int c = ar.nodes[n].crossing;
    if (c < 0) continue;
    const auto& out = ar.nodes[n].out;  // CCW sorted, size 4
    // wedge k lies CCW between out[k] and out[k+1] and belongs to the face
    // on the left of out[k]
    Vec2 over_dir{0, 0};
    {
      const auto& seg = d.segments[d.crossings[c].over_segment];
      Vec2 v = seg.b - seg.a;
      over_dir = (1.0 / norm(v)) * v;
    }
    // outgoing half-edge along the over strand's forward direction
    std::size_t start = 0;
    double best = -2;
    for (std::size_t k = 0; k < out.size(); ++k) {
      double al = dot(ar.dir(out[k]), over_dir);
      if (al > best) {
        best = al;
        start = k;
      }
    }
    Word rho;
    for (std::size_t k = 0; k < out.size(); ++k) {
      int e = out[(start + k) % out.size()];
      int face = fw.face_of_edge[e];
      if (face < 0) continue;  // unbounded wedge: letter absent
      rho.push(Letter{surfaces[static_cast<std::size_t>(face)].id, k % 2 == 0 ? 1 : -1});
    }
    if (!rho.empty()) relations.push_back(rho);
  }
  (void)faces;
  return Presentation(std::move(alphabet), std::move(relations));
}

bool segment_in_tube(Vec3 a, Vec3 b, const PolygonalLink& link) {
  for (const auto& comp : link.components) {
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (dist_segment_segment(a, b, comp[i], comp[(i + 1) % comp.size()]) < link.tube_radius) {
        return true;
      }
    }
  }
  return false;
}

Word edge_signature_3d(Vec3 a, Vec3 b, const std::vector<DehnSurface>& surfaces,
                       const PolygonalLink& link) {
  if (segment_in_tube(a, b, link)) throw CollisionError("segment enters the link tube");

  double scale = std::max(1.0, norm(b - a));
  for (int attempt = 0; attempt < 12; ++attempt) {
    Vec3 off{0, 0, 0};
    if (attempt > 0) {
      double e = attempt * 1e-6 * scale;
      off = {e * std::sin(attempt * 1.7 + 0.3), e * std::cos(attempt * 2.3 + 1.1),
             e * std::sin(attempt * 3.1 + 2.2)};
    }
    Vec3 pa = a + off, pb = b + off;
    Vec3 lo{std::min(pa.x, pb.x), std::min(pa.y, pb.y), std::min(pa.z, pb.z)};
    Vec3 hi{std::max(pa.x, pb.x), std::max(pa.y, pb.y), std::max(pa.z, pb.z)};

    bool degen = false;
    std::vector<std::pair<double, Letter>> hits;
    for (const auto& s : surfaces) {
      if (lo.x > s.bb_max.x || hi.x < s.bb_min.x || lo.y > s.bb_max.y || hi.y < s.bb_min.y ||
          lo.z > s.bb_max.z || hi.z < s.bb_min.z) {
        continue;
      }
      for (const auto& t : s.triangles) {
        auto hit = segment_triangle(pa, pb, s.vertices[t[0]], s.vertices[t[1]], s.vertices[t[2]]);
        if (!hit) continue;
        if (hit->degenerate) {
          degen = true;
          break;
        }
        hits.push_back({hit->t, Letter{s.id, hit->sign}});
      }
      if (degen) break;
    }
    if (degen) continue;
    std::sort(hits.begin(), hits.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    Word w;
    for (const auto& [t, letter] : hits) w.push(letter);
    return w;
  }
  throw PlanningError("could not resolve degenerate surface crossings by perturbation");
}

Word path_signature_3d(const std::vector<Vec3>& path, const std::vector<DehnSurface>& surfaces,
                       const PolygonalLink& link) {
  Word w;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    w = compose(w, edge_signature_3d(path[i], path[i + 1], surfaces, link));
  }
  return w;
}

}  // namespace topo
