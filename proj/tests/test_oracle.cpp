#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "latbool/oracle.hpp"
#include "latbool/rounding.hpp"

using namespace latbool;
using namespace latbool::test;

namespace {

Region tri_a() { return region({ring({{0, 0}, {5, 0}, {0, 5}})}); }
Region tri_b() { return region({ring({{0, 0}, {5, 0}, {5, 5}})}); }

LatticePoint lp(long x, long y) { return LatticePoint{Integer(x), Integer(y)}; }

bool same_closure(const LatticeClosure& a, const LatticeClosure& b) {
  auto key = [](const LatticePoint& p) { return std::pair(p.x.get_si(), p.y.get_si()); };
  if (a.points.size() != b.points.size() || a.segments.size() != b.segments.size() ||
      a.squares.size() != b.squares.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    if (key(a.points[i]) != key(b.points[i])) return false;
  }
  for (std::size_t i = 0; i < a.squares.size(); ++i) {
    if (key(a.squares[i]) != key(b.squares[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("lattice closure counts") {
  LatticeClosure unit = lattice_closure(square(0, 0, 1, 1));
  CHECK(unit.points.size() == 4);
  CHECK(unit.segments.size() == 4);
  CHECK(unit.squares.size() == 1);
  LatticeClosure two = lattice_closure(square(0, 0, 2, 1));
  CHECK(two.points.size() == 6);
  CHECK(two.segments.size() == 7);
  CHECK(two.squares.size() == 2);
  Region sliver = make_region({Ring{{rpt("1/3", "1/3"), rpt("2/3", "1/3"), rpt("1/2", "2/3")}}});
  LatticeClosure none = lattice_closure(sliver);
  CHECK(none.points.empty());
  CHECK(none.segments.empty());
  CHECK(none.squares.empty());
  // A diagonal hole removes the square it cuts.
  Region cut = region({box_ring(0, 0, 3, 3), ring({{1, 1}, {1, 2}, {2, 1}})});
  CHECK(lattice_closure(cut).squares.size() == 8);
}

TEST_CASE("lattice closure survives a double complement") {
  RegionGenerator gen(seed_from_env(11), 0, 30);
  for (int i = 0; i < 10; ++i) {
    Region r = gen.any();
    UniverseBox box = UniverseBox::around(r, r);
    Region back = complement_in_universe(complement_in_universe(r, box), box);
    CHECK(same_closure(lattice_closure(r), lattice_closure(back)));
  }
}

TEST_CASE("brute nvlp") {
  ConvexCell sq{box_ring(0, 0, 4, 4)};
  CHECK(brute_nvlp(pt(3, 1), sq) == lp(3, 1));
  ConvexCell tri{make_region({Ring{{pt(0, 0), pt(5, 0), rpt("5/2", "5/2")}}}).rings[0]};
  CHECK(brute_nvlp(rpt("5/2", "5/2"), tri) == lp(2, 2));
  ConvexCell thin{make_region({Ring{{rpt("1/3", "1/3"), rpt("2/3", "1/3"), rpt("1/2", "2/3")}}}).rings[0]};
  CHECK_FALSE(brute_nvlp(rpt("1/3", "1/3"), thin).has_value());
  CHECK(brute_nvlp(rpt("5/2", "5/2"), tri) == brute_nvlp(rpt("5/2", "5/2"), tri));
  // Visibility matters globally: (2,2) of the U-shape notch cannot be seen.
  Region u = region({ring({{0, 0}, {6, 0}, {6, 6}, {4, 6}, {4, 2}, {2, 2}, {2, 6}, {0, 6}})});
  CHECK(brute_nvlp_global(pt(2, 2), u) == lp(2, 2));
}

TEST_CASE("inclusion checks") {
  Region sq = square(0, 0, 4, 4);
  CHECK_FALSE(check_inclusion(sq, sq).has_value());
  auto w = check_inclusion(square(0, 0, 1, 1), square(3, 3, 4, 4));
  REQUIRE(w.has_value());
  CHECK(w->context == "inner vertex outside");
  ExactRegion p = exact_intersection(tri_a(), tri_b());
  Region in = inner_round(p);
  CHECK_FALSE(check_inclusion(in, p.region).has_value());
  CHECK(check_inclusion(p.region, in).has_value());
  // Same vertices, but the hole of the outer region swallows part of inner.
  Region holed = region({box_ring(0, 0, 4, 4), reversed(box_ring(1, 1, 3, 3))});
  auto w2 = check_inclusion(sq, holed);
  REQUIRE(w2.has_value());
  CHECK(contains(sq, w2->point));
  CHECK_FALSE(contains(holed, w2->point));
}

TEST_CASE("hausdorff checks") {
  Region sq = square(5, 5, 9, 9);
  CHECK_FALSE(check_hausdorff(sq, sq, HausdorffReference::big_boundary).has_value());
  Region big = square(0, 0, 14, 14);
  auto w = check_hausdorff(sq, big, HausdorffReference::small_region);
  REQUIRE(w.has_value());
  CHECK((w->measure >= 2 || w->measure == -1));
  ExactRegion p = exact_intersection(tri_a(), tri_b());
  Region in = inner_round(p);
  CHECK_FALSE(check_hausdorff(in, p.region, HausdorffReference::big_boundary).has_value());
  // Side bands of width 1 are fine; the corners of a full band sit at
  // exactly sqrt(2), which fails the strict bound.
  CHECK_FALSE(check_hausdorff(sq, square(4, 5, 10, 9), HausdorffReference::small_region));
  CHECK(check_hausdorff(sq, square(4, 4, 10, 10), HausdorffReference::small_region));
}

TEST_CASE("brute boolean") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> u(-100, 700);
  std::vector<RatPoint> samples;
  for (int i = 0; i < 500; ++i) samples.push_back(RatPoint(Rational(u(rng), 97), Rational(u(rng), 97)));
  for (auto v : brute_boolean(square(0, 0, 1, 1), square(3, 3, 4, 4), BoolOp::intersection, samples)) {
    CHECK(v != std::optional<bool>(true));
  }
  Region a = square(0, 0, 4, 4);
  for (auto v : brute_boolean(a, a, BoolOp::difference, samples)) CHECK(v != std::optional<bool>(true));
  ExactRegion p = exact_intersection(tri_a(), tri_b());
  auto truth = brute_boolean(tri_a(), tri_b(), BoolOp::intersection, samples);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!truth[i]) continue;
    if (point_in_region(samples[i], p.region) == Location::boundary) continue;
    CHECK(contains(p.region, samples[i]) == *truth[i]);
  }
}

TEST_CASE("snap segments avoid the lattice closure interior") {
  ExactRegion p = exact_intersection(tri_a(), tri_b());
  LatticeClosure l = lattice_closure(p.region);
  CHECK_FALSE(check_snap_segment(rpt("5/2", "5/2"), lp(2, 2), l).has_value());
  LatticeClosure big = lattice_closure(square(0, 0, 6, 6));
  CHECK(check_snap_segment(rpt("1/2", "0"), lp(3, 3), big).has_value());
}

TEST_CASE("pixel contacts and crossings") {
  ExactRegion p = exact_intersection(tri_a(), tri_b());
  // Pixel [2,3]^2: y = x touches it at (2,2), x + y = 5 at (3,2), each
  // meeting two pixel edges there.
  CHECK(pixel_contacts(p.region) == 4);
  CHECK(brute_proper_crossings(tri_a(), tri_b()) == 1);
}
