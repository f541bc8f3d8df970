#include "latbool/exact.hpp"

#include <sstream>

namespace latbool {

int lex_cmp(const RatPoint& a, const RatPoint& b) {
  int c = cmp(a.x, b.x);
  if (c != 0) return c < 0 ? -1 : 1;
  c = cmp(a.y, b.y);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

bool lex_less(const RatPoint& a, const RatPoint& b) { return lex_cmp(a, b) < 0; }

bool lex_less(const LatticePoint& a, const LatticePoint& b) {
  int c = cmp(a.x, b.x);
  if (c != 0) return c < 0;
  return cmp(a.y, b.y) < 0;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_lattice(const RatPoint& p) { return is_integer(p.x) && is_integer(p.y); }

LatticePoint to_lattice(const RatPoint& p) { return {p.x.get_num(), p.y.get_num()}; }

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const RatPoint& p) {
  return "(" + p.x.get_str() + ", " + p.y.get_str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatPoint& p) { return os << to_string(p); }

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  return os << "(" << p.x.get_str() << ", " << p.y.get_str() << ")";
}

Rational cross(const Rational& ux, const Rational& uy, const Rational& vx, const Rational& vy) {
  return ux * vy - uy * vx;
}

Rational cross(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int orientation_sign(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
  return sgn(cross(a, b, c));
}

Orientation orientation(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
  return static_cast<Orientation>(orientation_sign(a, b, c));
}

bool on_segment(const RatPoint& p, const RatPoint& a, const RatPoint& b) {
  if (orientation_sign(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool on_segment_interior(const RatPoint& p, const RatPoint& a, const RatPoint& b) {
  return on_segment(p, a, b) && !(p == a) && !(p == b);
}

bool properly_cross(const RatPoint& a, const RatPoint& b, const RatPoint& c, const RatPoint& d) {
  int o1 = orientation_sign(a, b, c);
  int o2 = orientation_sign(a, b, d);
  int o3 = orientation_sign(c, d, a);
  int o4 = orientation_sign(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

SegmentIntersection segment_intersection(const Segment& s, const Segment& t) {
  const RatPoint& a = s.a;
  const RatPoint& b = s.b;
  const RatPoint& c = t.a;
  const RatPoint& d = t.b;
  int o1 = orientation_sign(a, b, c);
  int o2 = orientation_sign(a, b, d);
  if (o1 == 0 && o2 == 0) {
    // Collinear: order the four points along the common line.
    RatPoint lo1 = lex_less(a, b) ? a : b;
    RatPoint hi1 = lex_less(a, b) ? b : a;
    RatPoint lo2 = lex_less(c, d) ? c : d;
    RatPoint hi2 = lex_less(c, d) ? d : c;
    const RatPoint& lo = lex_less(lo1, lo2) ? lo2 : lo1;
    const RatPoint& hi = lex_less(hi1, hi2) ? hi1 : hi2;
    int k = lex_cmp(lo, hi);
    if (k > 0) return NoIntersection{};
    if (k == 0) return PointIntersection{lo};
    return OverlapIntersection{Segment{lo, hi}};
  }
  int o3 = orientation_sign(c, d, a);
  int o4 = orientation_sign(c, d, b);
  if (o1 * o2 > 0 || o3 * o4 > 0) return NoIntersection{};
  if (o1 == 0) return PointIntersection{c};
  if (o2 == 0) return PointIntersection{d};
  if (o3 == 0) return PointIntersection{a};
  if (o4 == 0) return PointIntersection{b};
  // Proper crossing: a + t (b - a) with t = cross(c - a, d - c) / cross(b - a, d - c).
  Rational rx = b.x - a.x, ry = b.y - a.y;
  Rational sx = d.x - c.x, sy = d.y - c.y;
  Rational t_param = cross(c.x - a.x, c.y - a.y, sx, sy) / cross(rx, ry, sx, sy);
  return PointIntersection{RatPoint(a.x + t_param * rx, a.y + t_param * ry)};
}

Rational squared_distance(const RatPoint& p, const RatPoint& q) {
  Rational dx = p.x - q.x, dy = p.y - q.y;
  return dx * dx + dy * dy;
}

Rational squared_distance(const RatPoint& p, const Segment& e) {
  Rational vx = e.b.x - e.a.x, vy = e.b.y - e.a.y;
  Rational wx = p.x - e.a.x, wy = p.y - e.a.y;
  Rational dot = vx * wx + vy * wy;
  if (sgn(dot) <= 0) return wx * wx + wy * wy;
  Rational len2 = vx * vx + vy * vy;
  if (dot >= len2) return squared_distance(p, e.b);
  Rational c = vx * wy - vy * wx;
  return c * c / len2;
}

namespace {

int half_plane(const Rational& x, const Rational& y) {
  int sy = sgn(y);
  if (sy > 0 || (sy == 0 && sgn(x) > 0)) return 0;
  return 1;
}

// Half relative to a base direction: 0 when the angle from base is in [0, pi).
int relative_half(const Rational& bx, const Rational& by, const Rational& vx, const Rational& vy) {
  int c = sgn(cross(bx, by, vx, vy));
  if (c > 0) return 0;
  if (c == 0 && sgn(bx * vx + by * vy) > 0) return 0;
  return 1;
}

// Compare CCW angles of u and v measured from base, both in [0, 2pi).
int relative_compare(const Rational& bx, const Rational& by, const Rational& ux,
                     const Rational& uy, const Rational& vx, const Rational& vy) {
  int hu = relative_half(bx, by, ux, uy);
  int hv = relative_half(bx, by, vx, vy);
  if (hu != hv) return hu < hv ? -1 : 1;
  int c = sgn(cross(ux, uy, vx, vy));
  return -c;
}

}  // namespace

int compare_angle(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  int ha = half_plane(ax, ay);
  int hb = half_plane(bx, by);
  if (ha != hb) return ha < hb ? -1 : 1;
  return -sgn(cross(ax, ay, bx, by));
}

bool strictly_inside_wedge(const Rational& dx, const Rational& dy, const Rational& fx,
                           const Rational& fy, const Rational& tx, const Rational& ty) {
  // rel(d) must be strictly positive and strictly below rel(to); rel(to) == 0
  // means a full turn.
  bool d_on_from = sgn(cross(fx, fy, dx, dy)) == 0 && sgn(fx * dx + fy * dy) > 0;
  if (d_on_from) return false;
  bool to_on_from = sgn(cross(fx, fy, tx, ty)) == 0 && sgn(fx * tx + fy * ty) > 0;
  if (to_on_from) return true;
  return relative_compare(fx, fy, dx, dy, tx, ty) < 0;
}

}  // namespace latbool
