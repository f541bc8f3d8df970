#include "latbool/arrangement.hpp"

#include <set>

#include "latbool/error.hpp"

namespace latbool {

namespace {

std::set<RatPoint, LexLess> vertex_set(const Region& r) {
  std::set<RatPoint, LexLess> s;
  for (const auto& ring : r.rings) s.insert(ring.vertices.begin(), ring.vertices.end());
  return s;
}

std::vector<detail::DirectedEdge> edges_of(const Region& r) {
  std::vector<detail::DirectedEdge> out;
  for (const auto& ring : r.rings) {
    for (std::size_t i = 0; i < ring.size(); ++i) out.push_back({ring[i], ring.next(i)});
  }
  return out;
}

}  // namespace

Convexity vertex_convexity(const Region& r, std::size_t ring_index, std::size_t i) {
  const Ring& ring = r.rings[ring_index];
  const RatPoint& a = ring.prev(i);
  const RatPoint& v = ring[i];
  const RatPoint& b = ring.next(i);
  int o = orientation_sign(a, v, b);
  if (o > 0) return Convexity::convex;
  if (o < 0) return Convexity::reflex;
  Rational dot = (v.x - a.x) * (b.x - v.x) + (v.y - a.y) * (b.y - v.y);
  if (sgn(dot) > 0) return Convexity::flat;
  // Turn-back: a slit tip has region on the far side, a hair tip does not.
  Rational dx = v.x - a.x, dy = v.y - a.y;
  Rational len2 = dx * dx + dy * dy;
  bool have_min = false;
  Rational dmin;
  for (const auto& other : r.rings) {
    for (std::size_t k = 0; k < other.size(); ++k) {
      const RatPoint& p = other[k];
      const RatPoint& q = other.next(k);
      if (p == q || on_segment(v, p, q)) continue;
      Rational d = squared_distance(v, Segment{p, q});
      if (!have_min || d < dmin) dmin = d, have_min = true;
    }
  }
  Rational t(1, 2);
  if (have_min) {
    while (t * t * len2 * 4 >= dmin) t /= 2;
  }
  RatPoint probe(v.x + t * dx, v.y + t * dy);
  return point_in_region(probe, r) == Location::interior ? Convexity::reflex : Convexity::convex;
}

ExactRegion annotate(Region r, const Region& a, const Region& b, ExactStats stats) {
  ExactRegion out;
  auto va = vertex_set(a);
  auto vb = vertex_set(b);
  std::set<RatPoint, LexLess> non_lattice;
  out.vertices.resize(r.rings.size());
  for (std::size_t ri = 0; ri < r.rings.size(); ++ri) {
    const Ring& ring = r.rings[ri];
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const RatPoint& p = ring[i];
      VertexKind kind = va.count(p)   ? VertexKind::original_a
                        : vb.count(p) ? VertexKind::original_b
                                      : VertexKind::crossing;
      out.vertices[ri].push_back({p, kind, vertex_convexity(r, ri, i)});
      if (!is_lattice(p)) non_lattice.insert(p);
    }
  }
  stats.k = non_lattice.size();
  out.region = std::move(r);
  out.stats = stats;
  return out;
}

std::size_t count_proper_crossings(const Region& a, const Region& b) {
  auto ea = edges_of(a);
  auto eb = edges_of(b);
  std::vector<detail::DirectedEdge> all = ea;
  all.insert(all.end(), eb.begin(), eb.end());
  const int na = static_cast<int>(ea.size());
  std::size_t h = 0;
  for (auto [i, j] : detail::bbox_pairs(all)) {
    if ((i < na) == (j < na)) continue;
    if (properly_cross(all[i].a, all[i].b, all[j].a, all[j].b)) ++h;
  }
  return h;
}

ExactRegion exact_intersection(const Region& a, const Region& b) {
  require_valid(a, "operand A");
  require_valid(b, "operand B");
  detail::OverlayInput in;
  in.layers = {a.rings, b.rings};
  in.inside = [](std::span<const int> w) { return w[0] > 0 && w[1] > 0; };
  Region r = make_region(detail::overlay(in));
  ExactStats stats;
  stats.n = edge_count(a) + edge_count(b);
  stats.h = count_proper_crossings(a, b);
  return annotate(std::move(r), a, b, stats);
}

ExactRegion exact_boolean(const Region& a, const Region& b, BoolOp op, const UniverseBox& box) {
  require_valid(a, "operand A");
  require_valid(b, "operand B");
  if (!box.admits(a) || !box.admits(b)) {
    throw PreconditionError("exact_boolean: operands violate the universe margin");
  }
  switch (op) {
    case BoolOp::intersection:
      return exact_intersection(a, b);
    case BoolOp::union_: {
      ExactRegion q = exact_intersection(complement_in_universe(a, box),
                                         complement_in_universe(b, box));
      ExactStats stats;
      stats.n = edge_count(a) + edge_count(b);
      stats.h = count_proper_crossings(a, b);
      return annotate(complement_in_universe(q.region, box), a, b, stats);
    }
    case BoolOp::difference: {
      ExactRegion d = exact_intersection(a, complement_in_universe(b, box));
      ExactStats stats;
      stats.n = edge_count(a) + edge_count(b);
      stats.h = count_proper_crossings(a, b);
      return annotate(std::move(d.region), a, b, stats);
    }
  }
  throw InvariantError("unknown Boolean operation");
}

}  // namespace latbool
