#pragma once

#include <array>
#include <string>
#include <vector>

#include "topoplan/geom.hpp"
#include "topoplan/presentation.hpp"
#include "topoplan/word.hpp"

namespace topo {

// Link skeleton: closed 3-d polylines plus the tube radius that thickens
// them into the actual obstacle set.
struct PolygonalLink {
  std::vector<std::vector<Vec3>> components;
  double tube_radius = 0.1;
};

struct DiagramSegment {
  int component = 0;
  int index = 0;  // vertex index within the component polyline
  Vec3 a3, b3;
  Vec2 a, b;  // projections (drop-z)
};

struct Crossing {
  Vec2 point;
  int over_segment = -1;   // indices into LinkDiagram::segments
  int under_segment = -1;
  double t_over = 0, t_under = 0;  // parameters on the respective segments
  double z_over = 0, z_under = 0;
};

struct LinkDiagram {
  std::vector<DiagramSegment> segments;
  std::vector<Crossing> crossings;
};

// Orthographic drop-z projection with transversality checks. Throws
// DegenerateDiagramError naming the offending segment pair.
LinkDiagram project_diagram(const PolygonalLink& link);

// Retries project_diagram under small seeded rotations of the link when the
// straight projection is non-generic. Returns the (possibly rotated) link
// actually used together with its diagram.
std::pair<PolygonalLink, LinkDiagram> project_diagram_generic(const PolygonalLink& link,
                                                              unsigned seed = 0);

// A bounded face of the diagram's planar arrangement, with the lift data
// needed to build its surface. Crossing corners are split into a pre/post
// vertex pair a small step before and after the crossing so the boundary
// stays simple while the near-vertical connector wall at the crossing stays
// inside the tube.
struct Face {
  Polygon2 boundary;              // CCW, simple
  std::vector<double> lift_z;     // per boundary vertex
  std::vector<int> corner_crossing;  // crossing id at pre/post corner vertices, else -1
  std::vector<int> boundary_segments;  // diagram segment indices on the boundary
};

std::vector<Face> extract_regions(const LinkDiagram& d);

// Triangulated lift U_i of a face, oriented with +z normals.
struct DehnSurface {
  std::string id;
  Polygon2 region;  // the planar face
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;
  // cached bounds for fast rejection in signature queries
  Vec3 bb_min, bb_max;
};

std::vector<DehnSurface> lift_surfaces(const LinkDiagram& d, const std::vector<Face>& faces,
                                       double tube_radius);

// One relation per crossing: the (up to four) adjacent bounded faces read in
// CCW cyclic order starting left of the over-strand direction, with
// alternating signs. Letters of unbounded wedges are absent.
Presentation crossing_relations(const LinkDiagram& d, const std::vector<Face>& faces,
                                const std::vector<DehnSurface>& surfaces);

// Crossing word of segment ab against the lifted surfaces; letters ordered
// by intersection parameter, sign from direction . normal, freely reduced.
// Throws CollisionError if ab enters the link tube. Grazing hits are
// resolved by deterministically perturbing the query segment.
Word edge_signature_3d(Vec3 a, Vec3 b, const std::vector<DehnSurface>& surfaces,
                       const PolygonalLink& link);

Word path_signature_3d(const std::vector<Vec3>& path, const std::vector<DehnSurface>& surfaces,
                       const PolygonalLink& link);

bool segment_in_tube(Vec3 a, Vec3 b, const PolygonalLink& link);

}  // namespace topo
