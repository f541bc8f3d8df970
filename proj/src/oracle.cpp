#include "latbool/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "latbool/error.hpp"

namespace latbool {

namespace {

struct Box {
  Rational x0, y0, x1, y1;
};

Box bbox(const Region& r) {
  Box b;
  bool any = false;
  for (const auto& ring : r.rings) {
    for (const auto& v : ring.vertices) {
      if (!any) {
        b = {v.x, v.y, v.x, v.y};
        any = true;
      }
      b.x0 = std::min(b.x0, v.x);
      b.y0 = std::min(b.y0, v.y);
      b.x1 = std::max(b.x1, v.x);
      b.y1 = std::max(b.y1, v.y);
    }
  }
  return b;
}

std::vector<Segment> edges_of(const Region& r) {
  std::vector<Segment> out;
  for (const auto& ring : r.rings) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (ring[i] != ring.next(i)) out.push_back({ring[i], ring.next(i)});
    }
  }
  return out;
}

bool boxes_meet(const Segment& s, const Segment& t) {
  return std::max(std::min(s.a.x, s.b.x), std::min(t.a.x, t.b.x)) <=
             std::min(std::max(s.a.x, s.b.x), std::max(t.a.x, t.b.x)) &&
         std::max(std::min(s.a.y, s.b.y), std::min(t.a.y, t.b.y)) <=
             std::min(std::max(s.a.y, s.b.y), std::max(t.a.y, t.b.y));
}

// Liang-Barsky clip against an axis-aligned closed box.
bool clip_to_box(const Segment& s, const Box& b, Rational& t0, Rational& t1) {
  t0 = 0;
  t1 = 1;
  Rational dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
  const Rational p[4] = {-dx, dx, -dy, dy};
  const Rational q[4] = {s.a.x - b.x0, b.x1 - s.a.x, s.a.y - b.y0, b.y1 - s.a.y};
  for (int k = 0; k < 4; ++k) {
    if (sgn(p[k]) == 0) {
      if (sgn(q[k]) < 0) return false;
      continue;
    }
    Rational r = q[k] / p[k];
    if (sgn(p[k]) < 0) {
      t0 = std::max(t0, r);
    } else {
      t1 = std::min(t1, r);
    }
  }
  return t0 <= t1;
}

RatPoint lerp(const Segment& s, const Rational& t) {
  return RatPoint(s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y));
}

// One horizontal line of samples x = origin + i * step, i in [0, n).
// Closed membership of every sample.
std::vector<char> row_membership(const std::vector<Segment>& edges, const Rational& y,
                                 const Rational& origin, const Rational& step, long n) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<long, int>> events;  // first index to the right, winding delta
  int w = 0;
  auto mark = [&](const Rational& lo, const Rational& hi) {
    Rational a = (lo - origin) / step, b = (hi - origin) / step;
    Integer first = ceil_of(a), last = floor_of(b);
    if (first < 0) first = 0;
    if (last >= n) last = n - 1;
    for (long i = first.get_si(); i <= last.get_si(); ++i) in[static_cast<std::size_t>(i)] = 1;
  };
  for (const auto& e : edges) {
    const Rational& ylo = std::min(e.a.y, e.b.y);
    const Rational& yhi = std::max(e.a.y, e.b.y);
    if (y < ylo || y > yhi) continue;
    if (e.a.y == e.b.y) {
      mark(std::min(e.a.x, e.b.x), std::max(e.a.x, e.b.x));
      continue;
    }
    Rational x = e.a.x + (y - e.a.y) * (e.b.x - e.a.x) / (e.b.y - e.a.y);
    mark(x, x);
    if (y == yhi) continue;  // half-open rule for the winding count
    int delta = e.a.y < e.b.y ? 1 : -1;
    Integer right = floor_of((x - origin) / step) + 1;
    long r = right < 0 ? 0 : (right > n ? n : right.get_si());
    events.emplace_back(r, delta);
    w += delta;
  }
  std::sort(events.begin(), events.end());
  std::size_t k = 0;
  for (long i = 0; i < n; ++i) {
    while (k < events.size() && events[k].first <= i) w -= events[k++].second;
    if (w > 0) in[static_cast<std::size_t>(i)] = 1;
  }
  return in;
}

// Edges bucketed on a coarse grid for near-neighbour distance queries.
class EdgeGrid {
 public:
  explicit EdgeGrid(std::vector<Segment> edges) : edges_(std::move(edges)) {
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
      const auto& e = edges_[id];
      long cx0 = cell(std::min(e.a.x, e.b.x) - 2), cx1 = cell(std::max(e.a.x, e.b.x) + 2);
      long cy0 = cell(std::min(e.a.y, e.b.y) - 2), cy1 = cell(std::max(e.a.y, e.b.y) + 2);
      for (long cx = cx0; cx <= cx1; ++cx) {
        for (long cy = cy0; cy <= cy1; ++cy) cells_[{cx, cy}].push_back(id);
      }
    }
  }

  // Smallest squared distance to an edge within reach, or nullopt.
  std::optional<Rational> near(const RatPoint& q) const {
    auto it = cells_.find({cell(q.x), cell(q.y)});
    if (it == cells_.end()) return std::nullopt;
    std::optional<Rational> best;
    for (int id : it->second) {
      Rational d = squared_distance(q, edges_[id]);
      if (!best || d < *best) best = d;
    }
    return best;
  }

 private:
  static long cell(const Rational& v) { return floor_of(v / 2).get_si(); }
  std::vector<Segment> edges_;
  std::map<std::pair<long, long>, std::vector<int>> cells_;
};

}  // namespace

bool LatticeClosure::has_square(const Integer& x, const Integer& y) const {
  return std::binary_search(squares.begin(), squares.end(), LatticePoint{x, y},
                            [](const LatticePoint& a, const LatticePoint& b) {
                              return a.x != b.x ? a.x < b.x : a.y < b.y;
                            });
}

std::string to_string(const Witness& w) {
  std::ostringstream os;
  os << w.context << " at " << to_string(w.point);
  if (w.edge) os << " edge " << to_string(w.edge->a) << "-" << to_string(w.edge->b);
  if (w.measure != 0) os << " value " << w.measure.get_str();
  return os.str();
}

LatticeClosure lattice_closure(const Region& r) {
  LatticeClosure out;
  if (r.empty()) return out;
  Box b = bbox(r);
  auto edges = edges_of(r);
  Integer x0 = ceil_of(b.x0), x1 = floor_of(b.x1), y0 = ceil_of(b.y0), y1 = floor_of(b.y1);
  for (Integer x = x0; x <= x1; ++x) {
    for (Integer y = y0; y <= y1; ++y) {
      RatPoint p{Rational(x), Rational(y)};
      if (!contains(r, p)) continue;
      out.points.push_back({x, y});
      for (int k = 0; k < 2; ++k) {
        RatPoint q = k == 0 ? RatPoint(Rational(x + 1), Rational(y)) : RatPoint(Rational(x), Rational(y + 1));
        if (contains(r, q) && is_visible(p, q, r)) out.segments.push_back({{x, y}, to_lattice(q)});
      }
      RatPoint center(Rational(x) + Rational(1, 2), Rational(y) + Rational(1, 2));
      if (!contains(r, center)) continue;
      Box sq{Rational(x), Rational(y), Rational(x + 1), Rational(y + 1)};
      bool blocked = false;
      for (const auto& e : edges) {
        Rational t0, t1;
        if (!clip_to_box(e, sq, t0, t1) || t0 == t1) continue;
        RatPoint m = lerp(e, (t0 + t1) / 2);
        if (sq.x0 < m.x && m.x < sq.x1 && sq.y0 < m.y && m.y < sq.y1) {
          blocked = true;
          break;
        }
      }
      if (!blocked) out.squares.push_back({x, y});
    }
  }
  return out;
}

std::optional<LatticePoint> brute_nvlp(const RatPoint& p, const ConvexCell& cell) {
  Ring ring = cell.boundary;
  if (sgn(signed_area2(ring)) < 0) ring = reversed(ring);
  Region c;
  c.rings = {ring};
  c.parent = {-1};
  Box b = bbox(c);
  std::optional<LatticePoint> best;
  Rational best_d;
  for (Integer x = ceil_of(b.x0); x <= floor_of(b.x1); ++x) {
    for (Integer y = ceil_of(b.y0); y <= floor_of(b.y1); ++y) {
      RatPoint q{Rational(x), Rational(y)};
      if (!contains(c, q)) continue;
      Rational d = squared_distance(p, q);
      if (!best || d < best_d || (d == best_d && lex_less(q, RatPoint(*best)))) {
        best = LatticePoint{x, y};
        best_d = d;
      }
    }
  }
  return best;
}

std::optional<LatticePoint> brute_nvlp_global(const RatPoint& p, const Region& r) {
  if (!contains(r, p)) throw PreconditionError("brute_nvlp_global: point outside region");
  Box b = bbox(r);
  std::vector<std::pair<Rational, RatPoint>> cands;
  for (Integer x = ceil_of(b.x0); x <= floor_of(b.x1); ++x) {
    for (Integer y = ceil_of(b.y0); y <= floor_of(b.y1); ++y) {
      RatPoint q{Rational(x), Rational(y)};
      cands.emplace_back(squared_distance(p, q), q);
    }
  }
  std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return lex_less(a.second, b.second);
  });
  for (const auto& [d, q] : cands) {
    if (contains(r, q) && is_visible(p, q, r)) return to_lattice(q);
  }
  return std::nullopt;
}

std::optional<Witness> check_inclusion(const Region& inner, const Region& outer) {
  auto ein = edges_of(inner);
  auto eout = edges_of(outer);
  for (const auto& s : ein) {
    for (const auto& t : eout) {
      if (boxes_meet(s, t) && properly_cross(s.a, s.b, t.a, t.b)) {
        auto r = segment_intersection(s, t);
        return Witness{std::get<PointIntersection>(r).point, t, 0, "boundary crossing"};
      }
    }
  }
  for (const auto& ring : inner.rings) {
    for (const auto& v : ring.vertices) {
      if (!contains(outer, v)) return Witness{v, std::nullopt, 0, "inner vertex outside"};
    }
  }
  // Without crossings, every horizontal strip between consecutive vertex
  // heights has a fixed combinatorial structure; one mid-line per strip.
  std::set<Rational> ys;
  for (const Region* r : {&inner, &outer}) {
    for (const auto& ring : r->rings) {
      for (const auto& v : ring.vertices) ys.insert(v.y);
    }
  }
  std::vector<Rational> yv(ys.begin(), ys.end());
  for (std::size_t k = 0; k + 1 < yv.size(); ++k) {
    Rational y = (yv[k] + yv[k + 1]) / 2;
    std::vector<std::tuple<Rational, int, int>> events;  // x, which, delta
    int w[2] = {0, 0};
    for (int which = 0; which < 2; ++which) {
      for (const auto& e : which == 0 ? ein : eout) {
        if (e.a.y == e.b.y || y < std::min(e.a.y, e.b.y) || y > std::max(e.a.y, e.b.y)) continue;
        Rational x = e.a.x + (y - e.a.y) * (e.b.x - e.a.x) / (e.b.y - e.a.y);
        int delta = e.a.y < e.b.y ? 1 : -1;
        events.emplace_back(x, which, delta);
        w[which] += delta;
      }
    }
    std::sort(events.begin(), events.end(),
              [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
    for (std::size_t i = 0; i < events.size();) {
      std::size_t j = i;
      while (j < events.size() && std::get<0>(events[j]) == std::get<0>(events[i])) {
        w[std::get<1>(events[j])] -= std::get<2>(events[j]);
        ++j;
      }
      if (j < events.size() && w[0] > 0 && w[1] <= 0) {
        RatPoint m((std::get<0>(events[i]) + std::get<0>(events[j])) / 2, y);
        return Witness{m, std::nullopt, 0, "inner interior point outside"};
      }
      i = j;
    }
  }
  return std::nullopt;
}

std::optional<Witness> check_hausdorff(const Region& small, const Region& big,
                                       HausdorffReference ref, const Rational& spacing) {
  if (auto w = check_inclusion(small, big)) {
    w->context = "not nested: " + w->context;
    return w;
  }
  if (big.empty()) return std::nullopt;
  Box b = bbox(big);
  Rational x0(floor_of(b.x0)), y0(floor_of(b.y0));
  long nx = ceil_of((b.x1 - x0) / spacing).get_si() + 1;
  long ny = ceil_of((b.y1 - y0) / spacing).get_si() + 1;
  auto ebig = edges_of(big);
  auto esmall = edges_of(small);
  EdgeGrid grid(ref == HausdorffReference::big_boundary ? ebig : esmall);
  for (long j = 0; j < ny; ++j) {
    Rational y = y0 + spacing * j;
    auto in_big = row_membership(ebig, y, x0, spacing, nx);
    auto in_small = row_membership(esmall, y, x0, spacing, nx);
    for (long i = 0; i < nx; ++i) {
      if (!in_big[static_cast<std::size_t>(i)] || in_small[static_cast<std::size_t>(i)]) continue;
      RatPoint q(x0 + spacing * i, y);
      auto d = grid.near(q);
      if (!d || *d >= 2) {
        return Witness{q, std::nullopt, d ? *d : Rational(-1), "sample too far from reference"};
      }
    }
  }
  return std::nullopt;
}

std::vector<std::optional<bool>> brute_boolean(const Region& a, const Region& b, BoolOp op,
                                               const std::vector<RatPoint>& samples) {
  std::vector<std::optional<bool>> out;
  out.reserve(samples.size());
  for (const auto& p : samples) {
    Location la = point_in_region(p, a), lb = point_in_region(p, b);
    if (la == Location::boundary || lb == Location::boundary) {
      out.push_back(std::nullopt);
      continue;
    }
    bool ia = la == Location::interior, ib = lb == Location::interior;
    switch (op) {
      case BoolOp::intersection: out.push_back(ia && ib); break;
      case BoolOp::union_: out.push_back(ia || ib); break;
      case BoolOp::difference: out.push_back(ia && !ib); break;
    }
  }
  return out;
}

std::optional<Witness> check_snap_segment(const RatPoint& p, const LatticePoint& v,
                                          const LatticeClosure& closure) {
  Segment s{p, RatPoint(v)};
  std::set<Rational> ts{Rational(0), Rational(1)};
  Rational dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
  if (sgn(dx) != 0) {
    for (Integer x = ceil_of(std::min(s.a.x, s.b.x)); x <= floor_of(std::max(s.a.x, s.b.x)); ++x) {
      ts.insert((Rational(x) - s.a.x) / dx);
    }
  }
  if (sgn(dy) != 0) {
    for (Integer y = ceil_of(std::min(s.a.y, s.b.y)); y <= floor_of(std::max(s.a.y, s.b.y)); ++y) {
      ts.insert((Rational(y) - s.a.y) / dy);
    }
  }
  auto interior = [&](const RatPoint& q) {
    Integer fx = floor_of(q.x), fy = floor_of(q.y);
    bool ix = is_integer(q.x), iy = is_integer(q.y);
    std::vector<Integer> xs = ix ? std::vector<Integer>{fx - 1, fx} : std::vector<Integer>{fx};
    std::vector<Integer> ys = iy ? std::vector<Integer>{fy - 1, fy} : std::vector<Integer>{fy};
    for (const auto& x : xs) {
      for (const auto& y : ys) {
        if (!closure.has_square(x, y)) return false;
      }
    }
    return true;
  };
  std::vector<Rational> tv(ts.begin(), ts.end());
  for (std::size_t k = 0; k < tv.size(); ++k) {
    RatPoint q = lerp(s, tv[k]);
    if (interior(q)) return Witness{q, s, 0, "snap segment enters lattice closure"};
    if (k + 1 < tv.size()) {
      RatPoint m = lerp(s, (tv[k] + tv[k + 1]) / 2);
      if (interior(m)) return Witness{m, s, 0, "snap segment enters lattice closure"};
    }
  }
  return std::nullopt;
}

std::size_t pixel_contacts(const Region& p) {
  std::set<std::pair<RatPoint, RatPoint>, bool (*)(const std::pair<RatPoint, RatPoint>&,
                                                   const std::pair<RatPoint, RatPoint>&)>
      unit([](const auto& a, const auto& b) {
        int c = lex_cmp(a.first, b.first);
        return c != 0 ? c < 0 : lex_less(a.second, b.second);
      });
  for (const auto& ring : p.rings) {
    for (const auto& v : ring.vertices) {
      if (is_lattice(v)) continue;
      Rational x0(floor_of(v.x)), y0(floor_of(v.y)), x1(ceil_of(v.x)), y1(ceil_of(v.y));
      RatPoint c[4] = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
      for (int k = 0; k < 4; ++k) {
        const RatPoint& a = c[k];
        const RatPoint& b = c[(k + 1) % 4];
        if (a == b) continue;
        unit.insert(lex_less(a, b) ? std::pair(a, b) : std::pair(b, a));
      }
    }
  }
  std::size_t h = 0;
  for (const auto& e : edges_of(p)) {
    for (const auto& [a, b] : unit) {
      Segment t{a, b};
      if (!boxes_meet(e, t)) continue;
      if (!std::holds_alternative<NoIntersection>(segment_intersection(e, t))) ++h;
    }
  }
  return h;
}

std::size_t brute_proper_crossings(const Region& a, const Region& b) {
  std::size_t h = 0;
  for (const auto& s : edges_of(a)) {
    for (const auto& t : edges_of(b)) {
      if (properly_cross(s.a, s.b, t.a, t.b)) ++h;
    }
  }
  return h;
}

}  // namespace latbool
