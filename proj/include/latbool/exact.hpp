#pragma once

// Exact scalars, points and the predicates every other module is built on.
// Nothing in this library touches floating point.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <variant>

namespace latbool {

using Integer = mpz_class;
using Rational = mpq_class;

struct LatticePoint {
  Integer x;
  Integer y;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Always canonical: mpq_class keeps fractions reduced with positive
// denominators, so equality is structural.
struct RatPoint {
  Rational x;
  Rational y;

  RatPoint() = default;
  // Reduces both coordinates (mpq_class(a, b) does not).
  RatPoint(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {
    x.canonicalize();
    y.canonicalize();
  }
  RatPoint(long x_, long y_) : x(x_), y(y_) {}
  explicit RatPoint(const LatticePoint& p) : x(p.x), y(p.y) {}

  friend bool operator==(const RatPoint& a, const RatPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

// Lexicographic (x, then y).
bool lex_less(const RatPoint& a, const RatPoint& b);
int lex_cmp(const RatPoint& a, const RatPoint& b);
bool lex_less(const LatticePoint& a, const LatticePoint& b);

struct LexLess {
  bool operator()(const RatPoint& a, const RatPoint& b) const { return lex_less(a, b); }
  bool operator()(const LatticePoint& a, const LatticePoint& b) const {
    return lex_less(a, b);
  }
};

bool is_integer(const Rational& q);
bool is_lattice(const RatPoint& p);
// Precondition: is_lattice(p).
LatticePoint to_lattice(const RatPoint& p);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

std::string to_string(const Rational& q);
std::string to_string(const RatPoint& p);
std::ostream& operator<<(std::ostream& os, const RatPoint& p);
std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

enum class Orientation { right = -1, collinear = 0, left = 1 };

// Sign of det(b - a, c - a).
Orientation orientation(const RatPoint& a, const RatPoint& b, const RatPoint& c);
int orientation_sign(const RatPoint& a, const RatPoint& b, const RatPoint& c);
Rational cross(const RatPoint& a, const RatPoint& b, const RatPoint& c);
Rational cross(const Rational& ux, const Rational& uy, const Rational& vx, const Rational& vy);

struct Segment {
  RatPoint a;
  RatPoint b;
};

// True when p lies on the closed segment [a, b].
bool on_segment(const RatPoint& p, const RatPoint& a, const RatPoint& b);
// True when p lies on the segment strictly between its endpoints.
bool on_segment_interior(const RatPoint& p, const RatPoint& a, const RatPoint& b);

struct NoIntersection {};
struct PointIntersection {
  RatPoint point;
};
struct OverlapIntersection {
  Segment overlap;
};
using SegmentIntersection = std::variant<NoIntersection, PointIntersection, OverlapIntersection>;

// Precondition: both segments non-degenerate.
SegmentIntersection segment_intersection(const Segment& s, const Segment& t);

// Interiors cross at exactly one point that is interior to both segments.
bool properly_cross(const RatPoint& a, const RatPoint& b, const RatPoint& c, const RatPoint& d);

Rational squared_distance(const RatPoint& p, const RatPoint& q);
// Squared distance from p to the closed segment e. Precondition: e non-degenerate.
Rational squared_distance(const RatPoint& p, const Segment& e);

// Exact angular order of direction vectors, counter-clockwise starting at +x.
// Returns <0, 0, >0. Directions must be non-zero.
int compare_angle(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by);

// True when direction d lies strictly inside the wedge swept counter-clockwise
// from direction `from` to direction `to` (the wedge may exceed pi; when from and
// to coincide the wedge is the full turn minus that ray).
bool strictly_inside_wedge(const Rational& dx, const Rational& dy, const Rational& fx,
                           const Rational& fy, const Rational& tx, const Rational& ty);

}  // namespace latbool
