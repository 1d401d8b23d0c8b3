#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "test_helpers.hpp"
#include "topoplan/errors.hpp"
#include "topoplan/knot.hpp"

using namespace topo;

namespace {

// independent projected-crossing oracle built on orientation predicates
int oracle_crossing_count(const PolygonalLink& link) {
  struct S {
    Vec2 a, b;
    int comp, idx;
  };
  std::vector<S> segs;
  for (std::size_t c = 0; c < link.components.size(); ++c) {
    const auto& poly = link.components[c];
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto& p = poly[i];
      const auto& q = poly[(i + 1) % poly.size()];
      segs.push_back({{p.x, p.y}, {q.x, q.y}, static_cast<int>(c), static_cast<int>(i)});
    }
  }
  auto orient = [](Vec2 a, Vec2 b, Vec2 c) {
    double v = cross(b - a, c - a);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  };
  int count = 0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (segs[i].comp == segs[j].comp) {
        int n = 0;
        for (const auto& s : segs)
          if (s.comp == segs[i].comp) ++n;
        int di = std::abs(segs[i].idx - segs[j].idx);
        if (di == 1 || di == n - 1) continue;
      }
      const auto& p = segs[i];
      const auto& q = segs[j];
      if (orient(p.a, p.b, q.a) * orient(p.a, p.b, q.b) < 0 &&
          orient(q.a, q.b, p.a) * orient(q.a, q.b, p.b) < 0) {
        ++count;
      }
    }
  }
  return count;
}

struct Pipeline {
  PolygonalLink link;
  LinkDiagram diagram;
  std::vector<Face> faces;
  std::vector<DehnSurface> surfaces;
  Presentation pres;
};

Pipeline build(const PolygonalLink& link) {
  Pipeline p;
  p.link = link;
  p.diagram = project_diagram(link);
  p.faces = extract_regions(p.diagram);
  p.surfaces = lift_surfaces(p.diagram, p.faces, link.tube_radius);
  p.pres = crossing_relations(p.diagram, p.faces, p.surfaces);
  return p;
}

void check_relations_vanish(const Presentation& pres) {
  std::vector<Word> conjugators = {Word{}};
  for (const auto& g : pres.alphabet()) {
    for (int s : {1, -1}) {
      conjugators.push_back(Word::single(g, s));
      for (const auto& h : pres.alphabet()) {
        for (int t : {1, -1}) {
          Word c = Word::single(g, s);
          c.push({h, t});
          if (c.size() == 2) conjugators.push_back(c);
        }
      }
    }
  }
  for (const auto& rel : pres.relations()) {
    for (std::size_t r = 0; r < rel.size(); ++r) {
      Word rot = rel.rotated(r);
      for (const Word& w : {rot, invert(rot)}) {
        for (const auto& g : conjugators) {
          Word conj = compose(compose(g, w), invert(g));
          CHECK(dehn_reduce(conj, pres).empty());
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("unknot: one region, one generator, no relations") {
  PolygonalLink circle;
  circle.tube_radius = 0.15;
  std::vector<Vec3> pts;
  for (int i = 0; i < 24; ++i) {
    double t = 2 * M_PI * i / 24;
    pts.push_back({std::cos(t), std::sin(t), 0.1 * std::sin(t)});
  }
  circle.components.push_back(pts);
  auto p = build(circle);
  CHECK(p.diagram.crossings.empty());
  CHECK(p.faces.size() == 1);
  CHECK(p.surfaces.size() == 1);
  CHECK(p.pres.relations().empty());
  // threading the circle once picks up the single letter
  Word w = edge_signature_3d({0, 0, 2}, {0, 0, -2}, p.surfaces, p.link);
  CHECK(w.size() == 1);
  CHECK(w[0].gen == "u1");
  // a faraway segment reads nothing
  CHECK(edge_signature_3d({3, 3, 2}, {3, 3, -2}, p.surfaces, p.link).empty());
  // entering the tube is a collision
  CHECK_THROWS_AS(edge_signature_3d({0, 0, 0}, {2, 0, 0}, p.surfaces, p.link), CollisionError);
}

TEST_CASE("trefoil: crossings, regions, relations") {
  auto link = helpers::make_trefoil();
  auto p = build(link);
  CHECK(p.diagram.crossings.size() == 3);
  CHECK(oracle_crossing_count(link) == 3);
  CHECK(p.faces.size() == 4);  // connected diagram: crossings + 1
  CHECK(p.surfaces.size() == 4);
  CHECK(p.pres.alphabet().size() == 4);
  REQUIRE(p.pres.relations().size() == 3);
  for (const auto& r : p.pres.relations()) {
    CHECK(r.size() >= 3);
    CHECK(r.size() <= 4);
  }
  check_relations_vanish(p.pres);
}

TEST_CASE("trefoil: faces triangulate to their own area") {
  auto p = build(helpers::make_trefoil());
  for (const auto& f : p.faces) {
    double area = std::abs(signed_area(f.boundary));
    double tri = 0;
    auto tris = triangulate(f.boundary);
    for (const auto& t : tris) {
      tri += 0.5 * std::abs(cross(f.boundary[static_cast<std::size_t>(t[1])] -
                                      f.boundary[static_cast<std::size_t>(t[0])],
                                  f.boundary[static_cast<std::size_t>(t[2])] -
                                      f.boundary[static_cast<std::size_t>(t[0])]));
    }
    CHECK(tri == doctest::Approx(area).epsilon(1e-9));
    CHECK(tris.size() == f.boundary.size() - 2);
  }
}

TEST_CASE("hopf link: crossings, regions, relations") {
  auto p = build(helpers::make_hopf());
  CHECK(p.diagram.crossings.size() == 2);
  CHECK(oracle_crossing_count(p.link) == 2);
  CHECK(p.faces.size() == 3);
  CHECK(p.pres.alphabet().size() == 3);
  CHECK(p.pres.relations().size() == 2);
  check_relations_vanish(p.pres);
}

TEST_CASE("reversed segments read inverse words") {
  auto p = build(helpers::make_trefoil());
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3.5, 3.5), uz(-1.8, 1.8);
  int done = 0;
  while (done < 10000) {
    Vec3 a{u(rng), u(rng), uz(rng)}, b{u(rng), u(rng), uz(rng)};
    try {
      Word f = edge_signature_3d(a, b, p.surfaces, p.link);
      Word r = edge_signature_3d(b, a, p.surfaces, p.link);
      CHECK(r == invert(f));
      ++done;
    } catch (const CollisionError&) {
    }
  }
}

TEST_CASE("faraway rectangular loops are trivial") {
  auto p = build(helpers::make_trefoil());
  std::vector<Vec3> loop = {{3.5, 3.5, 1}, {3.5, 3.5, -1}, {3.9, 3.9, -1},
                           {3.9, 3.9, 1},  {3.5, 3.5, 1}};
  CHECK(path_signature_3d(loop, p.surfaces, p.link).empty());
}

TEST_CASE("degenerate projection is rejected then rescued by rotation") {
  // rectangle in the xz plane projects to a collinear segment
  PolygonalLink flat;
  flat.tube_radius = 0.1;
  flat.components.push_back({{0, 0, 0}, {2, 0, 0}, {2, 0, 1}, {0, 0, 1}});
  CHECK_THROWS_AS(project_diagram(flat), DegenerateDiagramError);
  auto [rotated, diagram] = project_diagram_generic(flat, 3);
  CHECK(diagram.crossings.empty());
  CHECK(extract_regions(diagram).size() == 1);
}
