#include "latbool/rounding.hpp"

#include <algorithm>
#include <set>

#include "latbool/error.hpp"
#include "latbool/overlay.hpp"

namespace latbool {

namespace {

bool strictly_opposite(const Rational& a, const Rational& m, const Rational& b) {
  return (a < m && b > m) || (a > m && b < m);
}

RatPoint as_rat(const LatticePoint& p) { return RatPoint(p); }

bool in_convex(const RatPoint& q, const Ring& cell, bool ccw) {
  for (std::size_t i = 0; i < cell.size(); ++i) {
    int o = orientation_sign(cell[i], cell.next(i), q);
    if (ccw ? o < 0 : o > 0) return false;
  }
  return true;
}

std::vector<detail::DirectedEdge> ring_edges(const std::vector<Ring>& rings) {
  std::vector<detail::DirectedEdge> out;
  for (const auto& ring : rings) {
    for (std::size_t i = 0; i < ring.size(); ++i) out.push_back({ring[i], ring.next(i)});
  }
  return out;
}

// Parameter range of uv inside the closed ccw triangle t, if any.
bool clip_to_triangle(const RatPoint& u, const RatPoint& v, const RatPoint (&t)[3], Rational& t0,
                      Rational& t1) {
  t0 = 0;
  t1 = 1;
  for (int k = 0; k < 3; ++k) {
    const RatPoint& a = t[k];
    const RatPoint& b = t[(k + 1) % 3];
    Rational fu = cross(b.x - a.x, b.y - a.y, u.x - a.x, u.y - a.y);
    Rational fv = cross(b.x - a.x, b.y - a.y, v.x - a.x, v.y - a.y);
    if (sgn(fu) < 0 && sgn(fv) < 0) return false;
    if (sgn(fu) >= 0 && sgn(fv) >= 0) continue;
    Rational s = fu / (fu - fv);
    if (sgn(fu) < 0) {
      t0 = std::max(t0, s);
    } else {
      t1 = std::min(t1, s);
    }
  }
  return t0 <= t1;
}

}  // namespace

Pixel pixel_of(const RatPoint& v) {
  if (is_lattice(v)) throw PreconditionError("lattice point " + to_string(v) + " has no pixel");
  Integer x0 = floor_of(v.x), y0 = floor_of(v.y), x1 = ceil_of(v.x), y1 = ceil_of(v.y);
  Pixel px;
  px.anchor = v;
  px.degenerate = x0 == x1 || y0 == y1;
  RatPoint a{Rational(x0), Rational(y0)}, c{Rational(x1), Rational(y1)};
  if (px.degenerate) {
    px.square.vertices = {a, c};
  } else {
    px.square.vertices = {a, RatPoint(Rational(x1), Rational(y0)), c, RatPoint(Rational(x0), Rational(y1))};
  }
  return px;
}

std::vector<Pixel> pixels_of(const Region& p) {
  std::set<RatPoint, LexLess> anchors;
  for (const auto& ring : p.rings) {
    for (const auto& v : ring.vertices) {
      if (!is_lattice(v)) anchors.insert(v);
    }
  }
  std::vector<Pixel> out;
  for (const auto& v : anchors) out.push_back(pixel_of(v));
  return out;
}

Region pixel_set(const Region& p) {
  std::vector<Ring> squares;
  std::vector<Ring> segments;
  for (const auto& px : pixels_of(p)) (px.degenerate ? segments : squares).push_back(px.square);
  Region out = squares.empty() ? Region{} : detail::normalize(squares);
  std::set<std::pair<RatPoint, RatPoint>, bool (*)(const std::pair<RatPoint, RatPoint>&,
                                                   const std::pair<RatPoint, RatPoint>&)>
      seen([](const auto& a, const auto& b) {
        int c = lex_cmp(a.first, b.first);
        return c != 0 ? c < 0 : lex_less(a.second, b.second);
      });
  Region covered = out;
  for (const auto& s : segments) {
    RatPoint mid((s[0].x + s[1].x) / 2, (s[0].y + s[1].y) / 2);
    if (!covered.empty() && contains(covered, mid)) continue;
    if (!seen.insert({s[0], s[1]}).second) continue;
    out.rings.push_back(s);
    out.parent.push_back(-1);
  }
  return out;
}

bool has_lattice_point(const ConvexCell& cell) {
  const Ring& r = cell.boundary;
  if (r.size() == 0) return false;
  Rational xmin = r[0].x, xmax = r[0].x;
  for (const auto& v : r.vertices) xmin = std::min(xmin, v.x), xmax = std::max(xmax, v.x);
  for (Integer x = ceil_of(xmin); x <= floor_of(xmax); ++x) {
    Rational X(x);
    bool any = false;
    Rational lo, hi;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const RatPoint& a = r[i];
      const RatPoint& b = r.next(i);
      std::vector<Rational> ys;
      if (a.x == b.x) {
        if (a.x == X) ys = {a.y, b.y};
      } else if (std::min(a.x, b.x) <= X && X <= std::max(a.x, b.x)) {
        ys = {a.y + (X - a.x) * (b.y - a.y) / (b.x - a.x)};
      }
      for (const auto& y : ys) {
        if (!any) lo = hi = y, any = true;
        lo = std::min(lo, y);
        hi = std::max(hi, y);
      }
    }
    if (any && ceil_of(lo) <= floor_of(hi)) return true;
  }
  return false;
}

std::optional<LatticePoint> nvlp(const RatPoint& p, const ConvexCell& cell) {
  const Ring& r = cell.boundary;
  bool on = false;
  for (std::size_t i = 0; i < r.size() && !on; ++i) on = on_segment(p, r[i], r.next(i));
  if (!on) throw PreconditionError("nvlp: " + to_string(p) + " is not on the cell boundary");
  if (is_lattice(p)) return to_lattice(p);
  if (!has_lattice_point(cell)) return std::nullopt;

  const bool ccw = sgn(signed_area2(r)) >= 0;
  Integer x0 = floor_of(r[0].x), x1 = ceil_of(r[0].x), y0 = floor_of(r[0].y), y1 = ceil_of(r[0].y);
  for (const auto& v : r.vertices) {
    x0 = std::min<Integer>(x0, floor_of(v.x));
    x1 = std::max<Integer>(x1, ceil_of(v.x));
    y0 = std::min<Integer>(y0, floor_of(v.y));
    y1 = std::max<Integer>(y1, ceil_of(v.y));
  }
  const Integer fx = floor_of(p.x), fy = floor_of(p.y);
  Integer reach = std::max({fx - x0, x1 - fx, fy - y0, y1 - fy});

  std::optional<LatticePoint> best;
  Rational best_d;
  auto consider = [&](const Integer& x, const Integer& y) {
    if (x < x0 || x > x1 || y < y0 || y > y1) return;
    RatPoint q{Rational(x), Rational(y)};
    if (!in_convex(q, r, ccw)) return;
    Rational d = squared_distance(p, q);
    if (!best || d < best_d || (d == best_d && lex_less(q, as_rat(*best)))) {
      best = LatticePoint{x, y};
      best_d = d;
    }
  };
  // Chebyshev rings around floor(p); points of ring R are at least R - 1 away.
  for (Integer rad = 0; rad <= reach; ++rad) {
    if (rad == 0) {
      consider(fx, fy);
    } else {
      for (Integer k = -rad; k <= rad; ++k) {
        consider(fx + k, fy - rad);
        consider(fx + k, fy + rad);
        if (k != -rad && k != rad) {
          consider(fx - rad, fy + k);
          consider(fx + rad, fy + k);
        }
      }
    }
    if (best && Rational(Integer(rad * rad)) > best_d) break;
  }
  return best;
}

std::optional<Chain> build_chain(const Region& p, const Decomposition& d, VertexRef edge,
                                 const std::optional<LatticePoint>& vp,
                                 const std::optional<LatticePoint>& vq) {
  if (!vp || !vq) return std::nullopt;
  const Ring& ring = p.rings[edge.ring];
  const std::size_t i = edge.index;
  const std::size_t j = (i + 1) % ring.size();
  const RatPoint& a = ring[i];
  const RatPoint& b = ring[j];
  Chain c{edge, {*vp}};
  // A wall ending on an endpoint matters only once the snapped endpoint has
  // moved across it.
  for (int w : d.vertex_landings[edge.ring][i]) {
    const RatPoint& r = d.walls[w].from;
    if (strictly_opposite(as_rat(*vp).x, r.x, b.x)) c.vertices.push_back(to_lattice(r));
  }
  for (int w : d.visible_reflex[edge.ring][i]) c.vertices.push_back(to_lattice(d.walls[w].from));
  for (int w : d.vertex_landings[edge.ring][j]) {
    const RatPoint& r = d.walls[w].from;
    if (strictly_opposite(as_rat(*vq).x, r.x, a.x)) c.vertices.push_back(to_lattice(r));
  }
  c.vertices.push_back(*vq);
  return c;
}

Ring convexify_cleanup(const Ring& ring, const std::vector<bool>& protect_in) {
  const std::size_t n = ring.size();
  std::vector<bool> protect = protect_in;
  protect.resize(n, false);
  std::vector<std::size_t> next(n), prev(n);
  std::vector<bool> alive(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    next[i] = (i + 1) % n;
    prev[i] = (i + n - 1) % n;
  }
  std::size_t count = n;
  std::vector<std::size_t> work(n);
  for (std::size_t i = 0; i < n; ++i) work[i] = n - 1 - i;
  auto remove = [&](std::size_t i) {
    alive[i] = false;
    next[prev[i]] = next[i];
    prev[next[i]] = prev[i];
    --count;
    work.push_back(prev[i]);
    work.push_back(next[i]);
  };
  // Flat and turn-back vertices wait until no strictly reflex vertex is
  // left: dropping a visited reflex vertex first often straightens the spike
  // away, where dropping the spike tip would cut off a whole cell.
  std::vector<std::size_t> flat;
  while (count >= 3) {
    bool deferred = false;
    if (work.empty()) {
      if (flat.empty()) break;
      work.push_back(flat.back());
      flat.pop_back();
      deferred = true;
    }
    std::size_t i = work.back();
    work.pop_back();
    if (!alive[i]) continue;
    std::size_t pi = prev[i], ni = next[i];
    if (ring[i] == ring[pi]) {
      if (protect[i] && !protect[pi]) {
        remove(pi);
      } else {
        protect[pi] = protect[pi] || protect[i];
        remove(i);
      }
      continue;
    }
    if (protect[i]) continue;
    int o = orientation_sign(ring[pi], ring[i], ring[ni]);
    if (o < 0 || (o == 0 && deferred)) {
      remove(i);
    } else if (o == 0) {
      flat.push_back(i);
    }
  }
  if (count < 3) return {};
  Ring out;
  std::size_t start = 0;
  while (!alive[start]) ++start;
  std::size_t i = start;
  do {
    out.vertices.push_back(ring[i]);
    i = next[i];
  } while (i != start);
  return out;
}

Region inner_round(const Region& p, RoundingStats* stats) {
  RoundingStats local;
  RoundingStats& st = stats ? *stats : local;
  Decomposition d = reflex_vertical_decomposition(p);
  const std::size_t nr = p.rings.size();
  std::vector<std::vector<std::optional<LatticePoint>>> snapped(nr);
  std::vector<bool> dropped(nr, false);
  for (std::size_t ri = 0; ri < nr; ++ri) {
    const Ring& ring = p.rings[ri];
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (is_lattice(ring[i])) {
        snapped[ri].push_back(to_lattice(ring[i]));
      } else {
        snapped[ri].push_back(nvlp(ring[i], nvlp_cell_of(d, {ri, i})));
        if (!snapped[ri].back()) dropped[ri] = true;
      }
    }
  }
  std::vector<Ring> rounded;
  for (std::size_t ri = 0; ri < nr; ++ri) {
    if (dropped[ri]) {
      ++st.dropped_components;
      continue;
    }
    const Ring& ring = p.rings[ri];
    Ring seq;
    std::vector<bool> protect;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      std::size_t j = (i + 1) % ring.size();
      auto chain = build_chain(p, d, {ri, i}, snapped[ri][i], snapped[ri][j]);
      for (std::size_t k = 0; k + 1 < chain->vertices.size(); ++k) {
        seq.vertices.push_back(as_rat(chain->vertices[k]));
        protect.push_back(k == 0 && d.convexity[ri][i] == Convexity::reflex);
      }
    }
    Ring cleaned = convexify_cleanup(seq, protect);
    if (cleaned.size() >= 3) {
      rounded.push_back(std::move(cleaned));
    } else {
      ++st.dropped_components;
    }
  }
  auto edges = ring_edges(rounded);
  for (auto [i, j] : detail::bbox_pairs(edges)) {
    if (properly_cross(edges[i].a, edges[i].b, edges[j].a, edges[j].b)) ++st.raw_crossings;
  }
  if (rounded.empty()) return {};
  return detail::normalize(rounded);
}

Region outer_complement(const Region& p, const UniverseBox& box) {
  std::vector<Ring> squares;
  std::vector<detail::DirectedEdge> cuts;
  for (const auto& px : pixels_of(p)) {
    if (px.degenerate) {
      cuts.push_back({px.square[0], px.square[1]});
    } else {
      squares.push_back(px.square);
    }
  }
  Region q = complement_in_universe(p, box);
  detail::OverlayInput in;
  in.layers = {q.rings, squares};
  in.cuts = std::move(cuts);
  in.inside = [](std::span<const int> w) { return w[0] > 0 && w[1] <= 0; };
  return make_region(detail::overlay(in), true);
}

Region outer_round(const Region& p, const UniverseBox& box, RoundingStats* stats) {
  Region pi = outer_complement(p, box);
  Region rin = inner_round(pi, stats);
  Region outer = box_complement(rin, box);
  return remove_zero_area(simplify_reflex(outer, p));
}

Region simplify_reflex(const Region& pbar, const Region& p) {
  std::set<RatPoint, LexLess> originals;
  for (const auto& ring : p.rings) originals.insert(ring.vertices.begin(), ring.vertices.end());
  std::vector<Segment> pedges;
  for (const auto& ring : p.rings) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (ring[i] != ring.next(i)) pedges.push_back({ring[i], ring.next(i)});
    }
  }
  auto near_one_edge = [&](const RatPoint& a, const RatPoint& r, const RatPoint& b) {
    for (const auto& e : pedges) {
      // Cheap rejection: distance < sqrt(2) keeps r within 2 of the edge's box.
      if (r.x + 2 < std::min(e.a.x, e.b.x) || r.x - 2 > std::max(e.a.x, e.b.x) ||
          r.y + 2 < std::min(e.a.y, e.b.y) || r.y - 2 > std::max(e.a.y, e.b.y)) {
        continue;
      }
      if (squared_distance(r, e) < 2 && squared_distance(a, e) < 2 && squared_distance(b, e) < 2) {
        return true;
      }
    }
    return false;
  };
  std::vector<Ring> rings = pbar.rings;
  auto corner_is_free = [&](std::size_t ri, std::size_t i) {
    const Ring& ring = rings[ri];
    const RatPoint& a = ring.prev(i);
    const RatPoint& b = ring.next(i);
    const RatPoint t[3] = {a, b, ring[i]};
    std::size_t ip = (i + ring.size() - 1) % ring.size();
    const Rational x0 = std::min({a.x, b.x, ring[i].x}), x1 = std::max({a.x, b.x, ring[i].x});
    const Rational y0 = std::min({a.y, b.y, ring[i].y}), y1 = std::max({a.y, b.y, ring[i].y});
    for (std::size_t rj = 0; rj < rings.size(); ++rj) {
      const Ring& other = rings[rj];
      for (std::size_t k = 0; k < other.size(); ++k) {
        if (rj == ri && (k == i || k == ip)) continue;
        const RatPoint& u = other[k];
        const RatPoint& v = other.next(k);
        if ((u.x < x0 && v.x < x0) || (u.x > x1 && v.x > x1) || (u.y < y0 && v.y < y0) ||
            (u.y > y1 && v.y > y1)) {
          continue;
        }
        Rational t0, t1;
        if (!clip_to_triangle(u, v, t, t0, t1)) continue;
        RatPoint s0(u.x + t0 * (v.x - u.x), u.y + t0 * (v.y - u.y));
        RatPoint s1(u.x + t1 * (v.x - u.x), u.y + t1 * (v.y - u.y));
        if (s0 != s1 || (s0 != a && s0 != b)) return false;
      }
    }
    return true;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t ri = 0; ri < rings.size(); ++ri) {
      std::size_t i = 0;
      while (i < rings[ri].size() && rings[ri].size() > 3) {
        const Ring& ring = rings[ri];
        const RatPoint& r = ring[i];
        if (orientation_sign(ring.prev(i), r, ring.next(i)) < 0 && !originals.count(r) &&
            near_one_edge(ring.prev(i), r, ring.next(i)) && corner_is_free(ri, i)) {
          rings[ri].vertices.erase(rings[ri].vertices.begin() + static_cast<long>(i));
          changed = true;
          continue;
        }
        ++i;
      }
    }
  }
  return make_region(std::move(rings));
}

Region remove_zero_area(const Region& r) {
  std::vector<Ring> kept;
  for (const auto& ring : r.rings) {
    if (sgn(signed_area2(ring)) != 0) kept.push_back(ring);
  }
  return make_region(std::move(kept));
}

}  // namespace latbool
