#include "latbool/overlay.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "latbool/error.hpp"

namespace latbool::detail {

namespace {

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw PreconditionError("coordinate out of supported range");
  return z.get_si();
}

struct PairLess {
  bool operator()(const std::pair<RatPoint, RatPoint>& a,
                  const std::pair<RatPoint, RatPoint>& b) const {
    int c = lex_cmp(a.first, b.first);
    if (c != 0) return c < 0;
    return lex_cmp(a.second, b.second) < 0;
  }
};

}  // namespace

IntervalIndex::IntervalIndex(const std::vector<std::pair<Rational, Rational>>& intervals) {
  if (intervals.empty()) return;
  long lo = to_long(floor_of(intervals[0].first));
  long hi = to_long(floor_of(intervals[0].second));
  for (const auto& [a, b] : intervals) {
    lo = std::min(lo, to_long(floor_of(a)));
    hi = std::max(hi, to_long(floor_of(b)));
  }
  origin_ = lo;
  long span = hi - lo + 1;
  long target = std::max<long>(1, static_cast<long>(std::sqrt(static_cast<double>(intervals.size()))) * 2);
  width_ = std::max<long>(1, (span + target - 1) / target);
  buckets_.assign(static_cast<std::size_t>((span + width_ - 1) / width_), {});
  for (int i = 0; i < static_cast<int>(intervals.size()); ++i) {
    long b0 = bucket_of(intervals[i].first);
    long b1 = bucket_of(intervals[i].second);
    for (long b = b0; b <= b1; ++b) buckets_[static_cast<std::size_t>(b)].push_back(i);
  }
}

long IntervalIndex::bucket_of(const Rational& v) const {
  long f = to_long(floor_of(v)) - origin_;
  if (f < 0) return -1;
  return f / width_;
}

std::span<const int> IntervalIndex::candidates(const Rational& v) const {
  long b = bucket_of(v);
  if (b < 0 || b >= static_cast<long>(buckets_.size())) return {};
  return buckets_[static_cast<std::size_t>(b)];
}

std::vector<std::pair<int, int>> bbox_pairs(const std::vector<DirectedEdge>& edges) {
  const int n = static_cast<int>(edges.size());
  struct Box {
    Rational x0, x1, y0, y1;
  };
  std::vector<Box> boxes;
  boxes.reserve(edges.size());
  for (const auto& e : edges) {
    boxes.push_back({std::min(e.a.x, e.b.x), std::max(e.a.x, e.b.x), std::min(e.a.y, e.b.y),
                     std::max(e.a.y, e.b.y)});
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return boxes[i].x0 < boxes[j].x0; });
  std::vector<std::pair<int, int>> out;
  for (int oi = 0; oi < n; ++oi) {
    const Box& bi = boxes[order[oi]];
    for (int oj = oi + 1; oj < n; ++oj) {
      const Box& bj = boxes[order[oj]];
      if (bj.x0 > bi.x1) break;
      if (bj.y0 > bi.y1 || bi.y0 > bj.y1) continue;
      int i = order[oi], j = order[oj];
      out.emplace_back(std::min(i, j), std::max(i, j));
    }
  }
  return out;
}

std::vector<RatPoint> FaceGraph::face_ring(int f) const {
  std::vector<RatPoint> ring;
  ring.reserve(faces[f].size());
  for (int h : faces[f]) ring.push_back(vertices[half_edges[h].from]);
  return ring;
}

FaceGraph trace_faces(const std::vector<DirectedEdge>& edges, const std::vector<int>& tags) {
  FaceGraph g;
  std::map<RatPoint, int, LexLess> ids;
  auto id_of = [&](const RatPoint& p) {
    auto [it, inserted] = ids.try_emplace(p, static_cast<int>(g.vertices.size()));
    if (inserted) g.vertices.push_back(p);
    return it->second;
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int a = id_of(edges[i].a);
    int b = id_of(edges[i].b);
    if (a == b) continue;
    g.half_edges.push_back({a, b, tags.empty() ? static_cast<int>(i) : tags[i]});
  }
  g.outgoing.assign(g.vertices.size(), {});
  for (int h = 0; h < static_cast<int>(g.half_edges.size()); ++h) {
    g.outgoing[g.half_edges[h].from].push_back(h);
  }
  auto dir = [&](int h, Rational& dx, Rational& dy) {
    const RatPoint& p = g.vertices[g.half_edges[h].from];
    const RatPoint& q = g.vertices[g.half_edges[h].to];
    dx = q.x - p.x;
    dy = q.y - p.y;
  };
  for (auto& out : g.outgoing) {
    std::sort(out.begin(), out.end(), [&](int h1, int h2) {
      Rational ax, ay, bx, by;
      dir(h1, ax, ay);
      dir(h2, bx, by);
      return compare_angle(ax, ay, bx, by) < 0;
    });
  }
  for (auto& h : g.half_edges) {
    const auto& out = g.outgoing[h.to];
    const RatPoint& v = g.vertices[h.to];
    const RatPoint& u = g.vertices[h.from];
    Rational rx = u.x - v.x, ry = u.y - v.y;
    // Largest angle strictly below the reversed direction, wrapping around.
    int pick = -1;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      Rational dx, dy;
      dir(*it, dx, dy);
      if (compare_angle(dx, dy, rx, ry) < 0) {
        pick = *it;
        break;
      }
    }
    if (pick < 0) pick = out.back();
    h.next = pick;
  }
  for (int h = 0; h < static_cast<int>(g.half_edges.size()); ++h) {
    if (g.half_edges[h].face >= 0) continue;
    int f = static_cast<int>(g.faces.size());
    g.faces.emplace_back();
    int cur = h;
    while (g.half_edges[cur].face < 0) {
      g.half_edges[cur].face = f;
      g.faces[f].push_back(cur);
      cur = g.half_edges[cur].next;
    }
    if (cur != h) throw InvariantError("face tracing did not close a cycle");
  }
  return g;
}

std::vector<Ring> overlay(const OverlayInput& in) {
  const int layers = static_cast<int>(in.layers.size());
  std::vector<DirectedEdge> edges;
  std::vector<int> layer_of;
  for (int l = 0; l < layers; ++l) {
    for (const Ring& ring : in.layers[l]) {
      for (std::size_t i = 0; i < ring.size(); ++i) {
        if (ring[i] == ring.next(i)) continue;
        edges.push_back({ring[i], ring.next(i)});
        layer_of.push_back(l);
      }
    }
  }
  for (const auto& c : in.cuts) {
    if (c.a == c.b) continue;
    edges.push_back(c);
    layer_of.push_back(-1);
  }

  // Split every edge at every point it shares with another edge.
  std::vector<std::vector<RatPoint>> splits(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) splits[i] = {edges[i].a, edges[i].b};
  for (auto [i, j] : bbox_pairs(edges)) {
    auto r = segment_intersection({edges[i].a, edges[i].b}, {edges[j].a, edges[j].b});
    if (auto* p = std::get_if<PointIntersection>(&r)) {
      splits[i].push_back(p->point);
      splits[j].push_back(p->point);
    } else if (auto* o = std::get_if<OverlapIntersection>(&r)) {
      for (const RatPoint* q : {&o->overlap.a, &o->overlap.b}) {
        splits[i].push_back(*q);
        splits[j].push_back(*q);
      }
    }
  }

  struct Fragment {
    std::vector<int> net;
    bool cut = false;
  };
  std::map<std::pair<RatPoint, RatPoint>, Fragment, PairLess> fragments;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& pts = splits[i];
    std::sort(pts.begin(), pts.end(), LexLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    int sign = lex_less(edges[i].a, edges[i].b) ? 1 : -1;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      auto& frag = fragments[{pts[k], pts[k + 1]}];
      if (frag.net.empty()) frag.net.assign(static_cast<std::size_t>(layers), 0);
      if (layer_of[i] < 0) {
        frag.cut = true;
      } else {
        frag.net[static_cast<std::size_t>(layer_of[i])] += sign;
      }
    }
  }

  std::vector<std::pair<Rational, Rational>> xr, yr;
  for (const auto& e : edges) {
    xr.emplace_back(std::min(e.a.x, e.b.x), std::max(e.a.x, e.b.x));
    yr.emplace_back(std::min(e.a.y, e.b.y), std::max(e.a.y, e.b.y));
  }
  IntervalIndex xindex(xr), yindex(yr);

  std::vector<DirectedEdge> result;
  std::vector<int> plus(static_cast<std::size_t>(layers)), minus(static_cast<std::size_t>(layers));
  for (const auto& [key, frag] : fragments) {
    const RatPoint& lo = key.first;
    const RatPoint& hi = key.second;
    RatPoint m((lo.x + hi.x) / 2, (lo.y + hi.y) / 2);
    std::fill(plus.begin(), plus.end(), 0);
    bool vertical = lo.x == hi.x;
    if (!vertical) {
      // Upward ray from just above m; `plus` is the side above the fragment.
      for (int id : xindex.candidates(m.x)) {
        int l = layer_of[id];
        if (l < 0) continue;
        const auto& e = edges[id];
        if (e.a.x == e.b.x) continue;
        const RatPoint& p = e.a.x < e.b.x ? e.a : e.b;
        const RatPoint& q = e.a.x < e.b.x ? e.b : e.a;
        if (!(p.x <= m.x && m.x < q.x)) continue;
        if (orientation_sign(p, q, m) < 0) plus[l] += e.a.x > e.b.x ? 1 : -1;
      }
      for (int l = 0; l < layers; ++l) minus[l] = plus[l] - frag.net[l];
    } else {
      // Rightward ray from just right of m; `plus` is the left side.
      for (int id : yindex.candidates(m.y)) {
        int l = layer_of[id];
        if (l < 0) continue;
        const auto& e = edges[id];
        if (e.a.y == e.b.y) continue;
        const RatPoint& p = e.a.y < e.b.y ? e.a : e.b;
        const RatPoint& q = e.a.y < e.b.y ? e.b : e.a;
        if (!(p.y <= m.y && m.y < q.y)) continue;
        if (orientation_sign(p, q, m) > 0) plus[l] += e.a.y < e.b.y ? 1 : -1;
      }
      // plus currently holds the right-side winding.
      for (int l = 0; l < layers; ++l) {
        minus[l] = plus[l];
        plus[l] = minus[l] + frag.net[l];
      }
    }
    bool in_plus = in.inside(plus);
    bool in_minus = in.inside(minus);
    // Left of lo->hi is the plus side in both cases.
    if (in_plus && !in_minus) {
      result.push_back({lo, hi});
    } else if (!in_plus && in_minus) {
      result.push_back({hi, lo});
    } else if (in_plus && in_minus && frag.cut) {
      result.push_back({lo, hi});
      result.push_back({hi, lo});
    }
  }

  FaceGraph g = trace_faces(result, {});
  std::vector<Ring> rings;
  for (int f = 0; f < static_cast<int>(g.faces.size()); ++f) {
    Ring r = collapse_collinear(Ring{g.face_ring(f)}, true);
    if (r.size() >= 3) rings.push_back(std::move(r));
  }
  return rings;
}

Region normalize(const std::vector<Ring>& rings) {
  OverlayInput in;
  in.layers.push_back(rings);
  in.inside = [](std::span<const int> w) { return w[0] > 0; };
  return make_region(overlay(in));
}

}  // namespace latbool::detail
