#include <map>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "latbool/decomposition.hpp"
#include "latbool/error.hpp"

using namespace latbool;
using namespace latbool::test;

namespace {

Region l_shape() { return region({ring({{0, 0}, {4, 0}, {4, 2}, {2, 2}, {2, 4}, {0, 4}})}); }

Rational cell_area(const Decomposition& d) {
  Rational s = 0;
  for (const auto& c : d.cells) s += signed_area2(c.boundary);
  return s / 2;
}

bool strictly_convex(const Ring& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (orientation_sign(r.prev(i), r[i], r.next(i)) <= 0) return false;
  }
  return true;
}

std::size_t find_vertex(const Ring& r, const RatPoint& p) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == p) return i;
  }
  FAIL("vertex not found");
  return 0;
}

void check_partition(const Region& p, const Decomposition& d, std::mt19937& rng) {
  CHECK(cell_area(d) == area(p));
  for (const auto& c : d.cells) CHECK(strictly_convex(c.boundary));
  // Interior points lie in exactly one cell interior, or on a wall.
  std::vector<RatPoint> vs;
  for (const auto& ring : p.rings) vs.insert(vs.end(), ring.vertices.begin(), ring.vertices.end());
  Rational x0 = vs[0].x, x1 = vs[0].x, y0 = vs[0].y, y1 = vs[0].y;
  for (const auto& v : vs) {
    x0 = std::min(x0, v.x), x1 = std::max(x1, v.x), y0 = std::min(y0, v.y), y1 = std::max(y1, v.y);
  }
  std::uniform_int_distribution<long> u(0, 1000);
  int done = 0;
  for (int tries = 0; done < 200 && tries < 20000; ++tries) {
    RatPoint q(x0 + (x1 - x0) * Rational(u(rng), 1000), y0 + (y1 - y0) * Rational(u(rng), 1000));
    if (point_in_region(q, p) != Location::interior) continue;
    int inside = 0, on = 0;
    for (const auto& c : d.cells) {
      Region cr = make_region({c.boundary});
      Location l = point_in_region(q, cr);
      inside += l == Location::interior;
      on += l == Location::boundary;
    }
    CHECK((inside == 1 || (inside == 0 && on >= 2)));
    ++done;
  }
}

}  // namespace

TEST_CASE("convex region is a single cell") {
  Region p = region({ring({{0, 0}, {5, 0}, {0, 5}})});
  Decomposition d = reflex_vertical_decomposition(p);
  CHECK(d.walls.empty());
  REQUIRE(d.cells.size() == 1);
  CHECK(make_region({d.cells[0].boundary}) == p);
  for (const auto& e : d.visible_reflex[0]) CHECK(e.empty());
  for (std::size_t i = 0; i < 3; ++i) CHECK(d.cell_of_vertex[0][i] == 0);
}

TEST_CASE("crossing vertex of the triangle intersection maps to its only cell") {
  Region p = make_region({Ring{{pt(0, 0), pt(5, 0), rpt("5/2", "5/2")}}});
  Decomposition d = reflex_vertical_decomposition(p);
  REQUIRE(d.cells.size() == 1);
  std::size_t i = find_vertex(p.rings[0], rpt("5/2", "5/2"));
  CHECK(nvlp_cell_of(d, {0, i}).boundary == p.rings[0]);
}

TEST_CASE("L shape has one downward wall and two cells") {
  Region p = l_shape();
  Decomposition d = reflex_vertical_decomposition(p);
  REQUIRE(d.walls.size() == 1);
  CHECK(d.walls[0].from == pt(2, 2));
  CHECK(d.walls[0].direction == WallDirection::down);
  CHECK(d.walls[0].hit == pt(2, 0));
  REQUIRE(d.walls[0].hit_edge.has_value());
  CHECK(p.rings[0][d.walls[0].hit_edge->index] == pt(0, 0));
  CHECK(d.cells.size() == 2);
  CHECK(cell_area(d) == 12);
  std::size_t i = find_vertex(p.rings[0], pt(4, 2));
  CHECK(nvlp_cell_of(d, {0, i}).boundary == box_ring(2, 0, 4, 2));
  // The bottom edge sees the reflex vertex.
  std::size_t e = find_vertex(p.rings[0], pt(0, 0));
  CHECK(d.visible_reflex[0][e].size() == 1);
  std::mt19937 rng(3);
  check_partition(p, d, rng);
}

TEST_CASE("square hole emits one wall per corner") {
  Region p = region({box_ring(0, 0, 10, 10), reversed(box_ring(3, 3, 6, 6))});
  Decomposition d = reflex_vertical_decomposition(p);
  CHECK(d.walls.size() == 4);
  CHECK(d.cells.size() == 4);
  CHECK(cell_area(d) == area(p));
  std::mt19937 rng(4);
  check_partition(p, d, rng);
}

TEST_CASE("stacked reflex vertices stop walls at each other") {
  // Two notches aligned on x = 2: the upper notch's wall lands on the lower
  // notch's reflex vertex.
  Region p = region({ring({{0, 0}, {6, 0}, {6, 6}, {0, 6}}),
                     reversed(ring({{2, 1}, {4, 1}, {4, 2}, {2, 2}})),
                     reversed(ring({{2, 4}, {4, 4}, {4, 5}, {2, 5}}))});
  Decomposition d = reflex_vertical_decomposition(p);
  int landed = 0;
  for (const auto& w : d.walls) landed += w.hit_vertex.has_value();
  CHECK(landed == 4);
  CHECK(cell_area(d) == area(p));
  std::mt19937 rng(5);
  check_partition(p, d, rng);
}

TEST_CASE("non-lattice reflex vertex is rejected") {
  Region p = make_region({Ring{{pt(0, 0), pt(5, 0), pt(5, 5), rpt("5/2", "5/2"), pt(0, 5)}}});
  CHECK_THROWS_AS(reflex_vertical_decomposition(p), PreconditionError);
}

TEST_CASE("random intersections partition exactly") {
  RegionGenerator gen(seed_from_env(77), 0, 40);
  std::mt19937 rng(8);
  for (int iter = 0; iter < 25; ++iter) {
    ExactRegion p = exact_intersection(gen.any(), gen.any());
    if (p.empty()) continue;
    CAPTURE(iter);
    Decomposition d = reflex_vertical_decomposition(p);
    check_partition(p.region, d, rng);
    // Each reflex occurrence reaches at most two edges.
    std::map<std::pair<std::size_t, std::size_t>, int> per_source;
    for (const auto& ring : d.visible_reflex) {
      for (const auto& list : ring) {
        for (int w : list) {
          CHECK(++per_source[{d.walls[w].source.ring, d.walls[w].source.index}] <= 2);
        }
      }
    }
    for (const auto& w : d.walls) {
      CHECK(is_visible(w.from, w.hit, p.region));
      CHECK(is_lattice(w.from));
    }
  }
}
