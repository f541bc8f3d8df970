#include "latbool/region.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "latbool/error.hpp"
#include "latbool/overlay.hpp"

namespace latbool {

Rational signed_area2(const Ring& ring) {
  Rational s = 0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RatPoint& a = ring[i];
    const RatPoint& b = ring.next(i);
    s += a.x * b.y - a.y * b.x;
  }
  return s;
}

bool is_hole(const Ring& ring) { return sgn(signed_area2(ring)) < 0; }

Ring reversed(const Ring& ring) {
  Ring r = ring;
  std::reverse(r.vertices.begin(), r.vertices.end());
  return r;
}

Ring collapse_collinear(const Ring& ring, bool keep_spikes) {
  const int n = static_cast<int>(ring.size());
  if (n == 0) return ring;
  std::vector<int> prev(n), next(n);
  std::vector<char> alive(n, 1);
  for (int i = 0; i < n; ++i) {
    prev[i] = (i + n - 1) % n;
    next[i] = (i + 1) % n;
  }
  int count = n;
  std::deque<int> work;
  for (int i = 0; i < n; ++i) work.push_back(i);
  auto removable = [&](int i) {
    const RatPoint& a = ring[prev[i]];
    const RatPoint& b = ring[i];
    const RatPoint& c = ring[next[i]];
    if (a == b) return true;
    if (orientation_sign(a, b, c) != 0) return false;
    if (!keep_spikes) return true;
    Rational dot = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y);
    return sgn(dot) > 0 || b == c;
  };
  while (!work.empty() && count > 2) {
    int i = work.front();
    work.pop_front();
    if (!alive[i] || !removable(i)) continue;
    alive[i] = 0;
    --count;
    next[prev[i]] = next[i];
    prev[next[i]] = prev[i];
    work.push_back(prev[i]);
    work.push_back(next[i]);
  }
  Ring out;
  int start = 0;
  while (!alive[start]) ++start;
  int i = start;
  do {
    out.vertices.push_back(ring[i]);
    i = next[i];
  } while (i != start);
  if (count == 2 && out.vertices[0] == out.vertices[1]) out.vertices.pop_back();
  return out;
}

Ring canonical_ring(const Ring& ring, bool keep_spikes) {
  Ring r = collapse_collinear(ring, keep_spikes);
  const std::size_t n = r.size();
  if (n == 0) return r;
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    int c = lex_cmp(r[i], r[best]);
    if (c < 0) {
      best = i;
    } else if (c == 0) {
      // Repeated position (slit base): pick the smaller rotation.
      for (std::size_t k = 1; k < n; ++k) {
        int d = lex_cmp(r[(i + k) % n], r[(best + k) % n]);
        if (d != 0) {
          if (d < 0) best = i;
          break;
        }
      }
    }
  }
  std::rotate(r.vertices.begin(), r.vertices.begin() + static_cast<long>(best), r.vertices.end());
  return r;
}

namespace {

int ring_compare(const Ring& a, const Ring& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = lex_cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

// Winding of a single ring around p (p not on the ring).
int ring_winding(const RatPoint& p, const Ring& ring) {
  int w = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const RatPoint& a = ring[i];
    const RatPoint& b = ring.next(i);
    if (a.x == b.x) continue;
    const RatPoint& lo = a.x < b.x ? a : b;
    const RatPoint& hi = a.x < b.x ? b : a;
    if (!(lo.x <= p.x && p.x < hi.x)) continue;
    if (orientation_sign(lo, hi, p) < 0) w += a.x > b.x ? 1 : -1;
  }
  return w;
}

bool on_ring(const RatPoint& p, const Ring& ring) {
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (on_segment(p, ring[i], ring.next(i))) return true;
  }
  return false;
}

}  // namespace

std::vector<int> compute_nesting(const std::vector<Ring>& rings) {
  const std::size_t n = rings.size();
  std::vector<Rational> abs_area(n);
  for (std::size_t i = 0; i < n; ++i) abs_area[i] = abs(signed_area2(rings[i]));
  std::vector<int> parent(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || abs_area[j] <= abs_area[i]) continue;
      bool inside = false;
      for (std::size_t k = 0; k < rings[i].size(); ++k) {
        const RatPoint& a = rings[i][k];
        const RatPoint& b = rings[i].next(k);
        RatPoint m((a.x + b.x) / 2, (a.y + b.y) / 2);
        if (on_ring(m, rings[j])) continue;
        inside = ring_winding(m, rings[j]) != 0;
        break;
      }
      if (!inside) continue;
      if (parent[i] < 0 || abs_area[j] < abs_area[static_cast<std::size_t>(parent[i])]) {
        parent[i] = static_cast<int>(j);
      }
    }
  }
  return parent;
}

Region make_region(std::vector<Ring> rings, bool keep_spikes) {
  Region r;
  for (auto& ring : rings) {
    Ring c = canonical_ring(ring, keep_spikes);
    if (c.size() >= 3) r.rings.push_back(std::move(c));
  }
  std::sort(r.rings.begin(), r.rings.end(),
            [](const Ring& a, const Ring& b) { return ring_compare(a, b) < 0; });
  r.parent = compute_nesting(r.rings);
  return r;
}

Region canonical(const Region& r) { return make_region(r.rings); }

Rational area(const Region& r) {
  Rational s = 0;
  for (const auto& ring : r.rings) s += signed_area2(ring);
  return s / 2;
}

std::size_t edge_count(const Region& r) {
  std::size_t n = 0;
  for (const auto& ring : r.rings) n += ring.size();
  return n;
}

std::size_t vertex_count(const Region& r) {
  std::set<RatPoint, LexLess> s;
  for (const auto& ring : r.rings) s.insert(ring.vertices.begin(), ring.vertices.end());
  return s.size();
}

bool all_lattice(const Region& r) {
  for (const auto& ring : r.rings) {
    for (const auto& p : ring.vertices) {
      if (!is_lattice(p)) return false;
    }
  }
  return true;
}

int winding_number(const RatPoint& p, const std::vector<Ring>& rings) {
  int w = 0;
  for (const auto& ring : rings) w += ring_winding(p, ring);
  return w;
}

Location point_in_region(const RatPoint& p, const Region& r) {
  for (const auto& ring : r.rings) {
    if (on_ring(p, ring)) return Location::boundary;
  }
  return winding_number(p, r.rings) > 0 ? Location::interior : Location::exterior;
}

bool is_visible(const RatPoint& p, const RatPoint& q, const Region& r) {
  if (!contains(r, p) || !contains(r, q)) {
    throw PreconditionError("is_visible: endpoint " + to_string(contains(r, p) ? q : p) +
                            " is outside the region");
  }
  if (p == q) return true;
  std::vector<RatPoint> pts{p, q};
  Segment pq{p, q};
  for (const auto& ring : r.rings) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (ring[i] == ring.next(i)) continue;
      auto hit = segment_intersection(pq, {ring[i], ring.next(i)});
      if (auto* pt = std::get_if<PointIntersection>(&hit)) {
        pts.push_back(pt->point);
      } else if (auto* ov = std::get_if<OverlapIntersection>(&hit)) {
        pts.push_back(ov->overlap.a);
        pts.push_back(ov->overlap.b);
      }
    }
  }
  std::sort(pts.begin(), pts.end(), LexLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    RatPoint m((pts[k].x + pts[k + 1].x) / 2, (pts[k].y + pts[k + 1].y) / 2);
    if (!contains(r, m)) return false;
  }
  return true;
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::repeated_vertex: return "repeated_vertex";
    case Violation::Kind::collinear_vertex: return "collinear_vertex";
    case Violation::Kind::degenerate_ring: return "degenerate";
    case Violation::Kind::proper_crossing: return "proper_crossing";
    case Violation::Kind::edge_overlap: return "edge_overlap";
    case Violation::Kind::nesting: return "nesting";
    case Violation::Kind::interior_overlap: return "interior_overlap";
  }
  return "unknown";
}

std::vector<Violation> validate_region(const Region& r) {
  using Kind = Violation::Kind;
  std::vector<Violation> out;
  struct EdgeRef {
    int ring;
    int index;
  };
  std::vector<detail::DirectedEdge> edges;
  std::vector<EdgeRef> refs;
  for (int ri = 0; ri < static_cast<int>(r.rings.size()); ++ri) {
    const Ring& ring = r.rings[ri];
    const int n = static_cast<int>(ring.size());
    if (n < 3 || sgn(signed_area2(ring)) == 0) {
      out.push_back({Kind::degenerate_ring, Severity::degenerate, ri, -1, -1, -1,
                     "ring " + std::to_string(ri) + " has no interior"});
    }
    for (int i = 0; i < n; ++i) {
      const RatPoint& a = ring.prev(static_cast<std::size_t>(i));
      const RatPoint& b = ring[static_cast<std::size_t>(i)];
      const RatPoint& c = ring.next(static_cast<std::size_t>(i));
      if (a == b) {
        out.push_back({Kind::repeated_vertex, Severity::error, ri, i, -1, -1,
                       "repeated vertex " + to_string(b)});
        continue;
      }
      if (n >= 3 && orientation_sign(a, b, c) == 0) {
        out.push_back({Kind::collinear_vertex, Severity::degenerate, ri, i, -1, -1,
                       "collinear vertex " + to_string(b)});
      }
      if (!(b == c)) {
        edges.push_back({b, c});
        refs.push_back({ri, i});
      }
    }
  }
  for (auto [i, j] : detail::bbox_pairs(edges)) {
    const auto& e = edges[i];
    const auto& f = edges[j];
    auto hit = segment_intersection({e.a, e.b}, {f.a, f.b});
    if (std::holds_alternative<OverlapIntersection>(hit)) {
      out.push_back({Kind::edge_overlap, Severity::degenerate, refs[i].ring, refs[i].index,
                     refs[j].ring, refs[j].index, "collinear overlapping edges"});
    } else if (properly_cross(e.a, e.b, f.a, f.b)) {
      out.push_back({Kind::proper_crossing, Severity::error, refs[i].ring, refs[i].index,
                     refs[j].ring, refs[j].index,
                     "edges cross at " + to_string(std::get<PointIntersection>(hit).point)});
    }
  }
  // Winding must be 0 or 1 between consecutive vertex heights.
  std::vector<Rational> ys;
  for (const auto& e : edges) ys.push_back(e.a.y);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::set<std::pair<int, int>> reported;
  for (std::size_t k = 0; k + 1 < ys.size(); ++k) {
    Rational ym = (ys[k] + ys[k + 1]) / 2;
    std::vector<std::pair<Rational, int>> xs;  // crossing x, edge id
    int total = 0;
    for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
      const auto& e = edges[id];
      const Rational& lo = std::min(e.a.y, e.b.y);
      const Rational& hi = std::max(e.a.y, e.b.y);
      if (!(lo < ym && ym < hi)) continue;
      Rational x = e.a.x + (e.b.x - e.a.x) * (ym - e.a.y) / (e.b.y - e.a.y);
      xs.emplace_back(x, id);
      total += e.a.y < e.b.y ? 1 : -1;
    }
    std::sort(xs.begin(), xs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    int w = total;
    for (auto& [x, id] : xs) {
      const auto& e = edges[id];
      w -= e.a.y < e.b.y ? 1 : -1;
      if (w == 0 || w == 1) continue;
      auto key = std::make_pair(refs[id].ring, w);
      if (!reported.insert(key).second) continue;
      out.push_back({w < 0 ? Kind::nesting : Kind::interior_overlap, Severity::error, refs[id].ring,
                     refs[id].index, -1, -1,
                     "winding number " + std::to_string(w) + " right of ring " +
                         std::to_string(refs[id].ring)});
    }
  }
  return out;
}

bool is_valid(const std::vector<Violation>& violations) {
  return std::none_of(violations.begin(), violations.end(),
                      [](const Violation& v) { return v.severity == Severity::error; });
}

void require_valid(const Region& r, const std::string& what) {
  for (const auto& v : validate_region(r)) {
    if (v.severity == Severity::error) {
      throw ValidationError(what + ": " + to_string(v.kind) + ": " + v.message);
    }
  }
}

UniverseBox UniverseBox::around(const Region& a, const Region& b) {
  bool any = false;
  Integer x0, y0, x1, y1;
  for (const Region* r : {&a, &b}) {
    for (const auto& ring : r->rings) {
      for (const auto& p : ring.vertices) {
        Integer fx = floor_of(p.x), fy = floor_of(p.y), cx = ceil_of(p.x), cy = ceil_of(p.y);
        if (!any) {
          x0 = fx, y0 = fy, x1 = cx, y1 = cy;
          any = true;
        } else {
          if (fx < x0) x0 = fx;
          if (fy < y0) y0 = fy;
          if (cx > x1) x1 = cx;
          if (cy > y1) y1 = cy;
        }
      }
    }
  }
  if (!any) x0 = y0 = x1 = y1 = 0;
  return UniverseBox{{x0 - kMargin, y0 - kMargin}, {x1 + kMargin, y1 + kMargin}};
}

Ring UniverseBox::ring() const {
  return Ring{{RatPoint(Rational(min.x), Rational(min.y)), RatPoint(Rational(max.x), Rational(min.y)),
               RatPoint(Rational(max.x), Rational(max.y)), RatPoint(Rational(min.x), Rational(max.y))}};
}

Region UniverseBox::region() const { return make_region({ring()}); }

bool UniverseBox::admits(const Region& r) const {
  Rational x0(min.x), y0(min.y), x1(max.x), y1(max.y);
  for (const auto& ring : r.rings) {
    for (const auto& p : ring.vertices) {
      bool inside = x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1;
      if (!inside) return false;
      bool on_boundary = p.x == x0 || p.x == x1 || p.y == y0 || p.y == y1;
      bool deep = x0 + kMargin <= p.x && p.x <= x1 - kMargin && y0 + kMargin <= p.y &&
                  p.y <= y1 - kMargin;
      if (!on_boundary && !deep) return false;
    }
  }
  return true;
}

Region complement_in_universe(const Region& r, const UniverseBox& box) {
  if (!box.admits(r)) {
    throw PreconditionError("complement_in_universe: region violates the universe margin");
  }
  return box_complement(r, box);
}

Region box_complement(const Region& r, const UniverseBox& box) {
  std::vector<Ring> rings{box.ring()};
  for (const auto& ring : r.rings) rings.push_back(reversed(ring));
  return detail::normalize(rings);
}

}  // namespace latbool
