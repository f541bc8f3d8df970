#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "latbool/exact.hpp"

using namespace latbool;
using latbool::test::pt;
using latbool::test::rpt;

TEST_CASE("orientation on the basis cases") {
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == Orientation::left);
  CHECK(orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == Orientation::collinear);
  CHECK(orientation(pt(0, 0), pt(0, 1), pt(1, 1)) == Orientation::right);
}

TEST_CASE("orientation is antisymmetric and translation invariant") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 9);
  auto rnd = [&] { return RatPoint(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))); };
  for (int i = 0; i < 500; ++i) {
    RatPoint a = rnd(), b = rnd(), c = rnd();
    int o = orientation_sign(a, b, c);
    if (o != 0) CHECK(orientation_sign(a, c, b) == -o);
    long tx = num(rng), ty = num(rng);
    auto shift = [&](const RatPoint& p) { return RatPoint(p.x + tx, p.y + ty); };
    CHECK(orientation_sign(shift(a), shift(b), shift(c)) == o);
  }
}

TEST_CASE("segment intersection cases") {
  auto r = segment_intersection({pt(0, 0), pt(5, 5)}, {pt(0, 5), pt(5, 0)});
  REQUIRE(std::holds_alternative<PointIntersection>(r));
  CHECK(std::get<PointIntersection>(r).point == rpt("5/2", "5/2"));

  CHECK(std::holds_alternative<NoIntersection>(
      segment_intersection({pt(0, 0), pt(1, 0)}, {pt(0, 2), pt(1, 2)})));

  auto o = segment_intersection({pt(0, 0), pt(4, 0)}, {pt(2, 0), pt(6, 0)});
  REQUIRE(std::holds_alternative<OverlapIntersection>(o));
  CHECK(std::get<OverlapIntersection>(o).overlap.a == pt(2, 0));
  CHECK(std::get<OverlapIntersection>(o).overlap.b == pt(4, 0));

  auto touch = segment_intersection({pt(0, 0), pt(2, 0)}, {pt(2, 0), pt(3, 3)});
  REQUIRE(std::holds_alternative<PointIntersection>(touch));
  CHECK(std::get<PointIntersection>(touch).point == pt(2, 0));

  auto t = segment_intersection({pt(0, 0), pt(2, 0)}, {pt(1, 0), pt(1, 5)});
  REQUIRE(std::holds_alternative<PointIntersection>(t));
  CHECK(std::get<PointIntersection>(t).point == pt(1, 0));
}

TEST_CASE("squared distance to a closed segment") {
  Segment e{pt(-1, 0), pt(1, 0)};
  CHECK(squared_distance(pt(0, 1), e) == 1);
  CHECK(squared_distance(pt(2, 0), e) == 1);
  CHECK(squared_distance(pt(1, 1), Segment{pt(0, 0), pt(2, 2)}) == 0);
  CHECK(squared_distance(pt(0, 2), Segment{pt(0, 0), pt(2, 2)}) == 2);
  CHECK(squared_distance(rpt("1/3", "1/2"), e) == Rational(1, 4));
}

TEST_CASE("exact angular order and wedges") {
  CHECK(compare_angle(1, 0, 0, 1) < 0);
  CHECK(compare_angle(0, -1, -1, 0) > 0);
  CHECK(compare_angle(2, 2, 1, 1) == 0);
  // reflex wedge of the L-shape corner (2,2): from up, ccw to right
  CHECK(strictly_inside_wedge(0, -1, 0, 1, 1, 0));
  CHECK_FALSE(strictly_inside_wedge(0, 1, 0, 1, 1, 0));
  CHECK_FALSE(strictly_inside_wedge(1, 0, 0, 1, 1, 0));
  // full turn minus the slit direction
  CHECK(strictly_inside_wedge(0, 1, 1, 0, 1, 0));
  CHECK_FALSE(strictly_inside_wedge(1, 0, 1, 0, 1, 0));
}

TEST_CASE("floor and ceil of rationals") {
  CHECK(floor_of(Rational(-5, 2)) == -3);
  CHECK(ceil_of(Rational(-5, 2)) == -2);
  CHECK(floor_of(Rational(7, 2)) == 3);
  CHECK(ceil_of(Rational(3)) == 3);
}
