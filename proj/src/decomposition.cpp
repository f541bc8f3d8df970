#include "latbool/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "latbool/error.hpp"
#include "latbool/overlay.hpp"

namespace latbool {

namespace {

struct PairLess {
  bool operator()(const std::pair<RatPoint, RatPoint>& a,
                  const std::pair<RatPoint, RatPoint>& b) const {
    int c = lex_cmp(a.first, b.first);
    if (c != 0) return c < 0;
    return lex_cmp(a.second, b.second) < 0;
  }
};

// Direction d inside the interior wedge of an occurrence, measured from the
// outgoing edge counter-clockwise to the incoming one.
bool in_wedge(const Ring& ring, std::size_t i, const Rational& dx, const Rational& dy) {
  const RatPoint& v = ring[i];
  const RatPoint& n = ring.next(i);
  const RatPoint& p = ring.prev(i);
  return strictly_inside_wedge(dx, dy, n.x - v.x, n.y - v.y, p.x - v.x, p.y - v.y);
}

// Half-open variant [outgoing, incoming).
bool in_wedge_from(const Ring& ring, std::size_t i, const Rational& dx, const Rational& dy) {
  const RatPoint& v = ring[i];
  const RatPoint& n = ring.next(i);
  if (compare_angle(dx, dy, n.x - v.x, n.y - v.y) == 0) return true;
  return in_wedge(ring, i, dx, dy);
}

// Edges of p indexed by x-extent, for ray shooting.
struct EdgeIndex {
  std::vector<VertexRef> refs;
  detail::IntervalIndex by_x;

  explicit EdgeIndex(const Region& p) {
    std::vector<std::pair<Rational, Rational>> xs;
    for (std::size_t ri = 0; ri < p.rings.size(); ++ri) {
      const Ring& ring = p.rings[ri];
      for (std::size_t i = 0; i < ring.size(); ++i) {
        refs.push_back({ri, i});
        xs.emplace_back(std::min(ring[i].x, ring.next(i).x), std::max(ring[i].x, ring.next(i).x));
      }
    }
    by_x = detail::IntervalIndex(xs);
  }
};

Wall shoot(const Region& p, const EdgeIndex& index, VertexRef src, WallDirection dir) {
  const RatPoint& r = p.rings[src.ring][src.index];
  const bool up = dir == WallDirection::up;
  bool found = false;
  Rational best;
  auto near = index.by_x.candidates(r.x);
  for (int id : near) {
    const Ring& ring = p.rings[index.refs[id].ring];
    const std::size_t i = index.refs[id].index;
    const RatPoint& a = ring[i];
    const RatPoint& b = ring.next(i);
    if (a == b) continue;
    Rational y;
    if (a.x == b.x) {
      if (a.x != r.x) continue;
      y = up ? std::min(a.y, b.y) : std::max(a.y, b.y);
    } else {
      if (r.x < std::min(a.x, b.x) || r.x > std::max(a.x, b.x)) continue;
      y = a.y + (r.x - a.x) * (b.y - a.y) / (b.x - a.x);
    }
    if (up ? y <= r.y : y >= r.y) continue;
    if (!found || (up ? y < best : y > best)) best = y, found = true;
  }
  if (!found) throw InvariantError("wall from " + to_string(r) + " escapes the region");
  Wall w{src, r, dir, RatPoint(r.x, best), std::nullopt, std::nullopt};
  Rational back_dy = up ? Rational(-1) : Rational(1);
  // Every occurrence at the hit point starts an edge whose x-extent holds r.x.
  for (int id : near) {
    const VertexRef& v = index.refs[id];
    const Ring& ring = p.rings[v.ring];
    if (ring[v.index] == w.hit && in_wedge(ring, v.index, Rational(0), back_dy)) {
      w.hit_vertex = v;
      return w;
    }
  }
  for (int id : near) {
    const VertexRef& v = index.refs[id];
    const Ring& ring = p.rings[v.ring];
    const RatPoint& a = ring[v.index];
    const RatPoint& b = ring.next(v.index);
    // The edge facing the ray has the wall side on its left.
    bool facing = up ? a.x > b.x : a.x < b.x;
    if (facing && on_segment_interior(w.hit, a, b)) {
      w.hit_edge = v;
      return w;
    }
  }
  throw InvariantError("wall from " + to_string(r) + " has no landing");
}

bool cell_less(const Ring& a, const Ring& b) {
  // Canonical rings start at their lexicographically smallest vertex.
  return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                                      b.vertices.end(), LexLess{});
}

}  // namespace

Decomposition reflex_vertical_decomposition(const Region& p) {
  Decomposition d;
  const std::size_t nr = p.rings.size();
  EdgeIndex index(p);
  d.convexity.resize(nr);
  d.visible_reflex.resize(nr);
  d.vertex_landings.resize(nr);
  d.cell_of_vertex.resize(nr);
  for (std::size_t ri = 0; ri < nr; ++ri) {
    const Ring& ring = p.rings[ri];
    d.visible_reflex[ri].resize(ring.size());
    d.vertex_landings[ri].resize(ring.size());
    d.cell_of_vertex[ri].assign(ring.size(), -1);
    for (std::size_t i = 0; i < ring.size(); ++i) {
      Convexity c = vertex_convexity(p, ri, i);
      d.convexity[ri].push_back(c);
      if (c != Convexity::reflex) continue;
      if (!is_lattice(ring[i])) {
        throw PreconditionError("reflex vertex " + to_string(ring[i]) + " is not a lattice point");
      }
      for (WallDirection dir : {WallDirection::up, WallDirection::down}) {
        Rational dy = dir == WallDirection::up ? Rational(1) : Rational(-1);
        if (in_wedge(ring, i, Rational(0), dy)) d.walls.push_back(shoot(p, index, {ri, i}, dir));
      }
    }
  }

  for (int w = 0; w < static_cast<int>(d.walls.size()); ++w) {
    const Wall& wall = d.walls[w];
    if (wall.hit_edge) {
      d.visible_reflex[wall.hit_edge->ring][wall.hit_edge->index].push_back(w);
    } else {
      d.vertex_landings[wall.hit_vertex->ring][wall.hit_vertex->index].push_back(w);
    }
  }
  for (std::size_t ri = 0; ri < nr; ++ri) {
    const Ring& ring = p.rings[ri];
    for (std::size_t i = 0; i < ring.size(); ++i) {
      bool forward = ring[i].x < ring.next(i).x;
      auto& list = d.visible_reflex[ri][i];
      std::sort(list.begin(), list.end(), [&](int a, int b) {
        return forward ? d.walls[a].hit.x < d.walls[b].hit.x : d.walls[a].hit.x > d.walls[b].hit.x;
      });
    }
  }

  // Cell graph: region edges split at wall landings, walls in both directions.
  std::vector<detail::DirectedEdge> edges;
  for (std::size_t ri = 0; ri < nr; ++ri) {
    const Ring& ring = p.rings[ri];
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const RatPoint& a = ring[i];
      const RatPoint& b = ring.next(i);
      std::vector<RatPoint> pts;
      for (int w : d.visible_reflex[ri][i]) pts.push_back(d.walls[w].hit);
      bool forward = lex_less(a, b);
      std::sort(pts.begin(), pts.end(), [&](const RatPoint& u, const RatPoint& v) {
        return forward ? lex_less(u, v) : lex_less(v, u);
      });
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      RatPoint prev = a;
      for (const auto& q : pts) {
        edges.push_back({prev, q});
        prev = q;
      }
      edges.push_back({prev, b});
    }
  }
  std::set<std::pair<RatPoint, RatPoint>, PairLess> seen;
  for (const auto& wall : d.walls) {
    auto key = lex_less(wall.from, wall.hit) ? std::pair(wall.from, wall.hit)
                                             : std::pair(wall.hit, wall.from);
    if (!seen.insert(key).second) continue;
    edges.push_back({wall.from, wall.hit});
    edges.push_back({wall.hit, wall.from});
  }
  detail::FaceGraph g = detail::trace_faces(edges, {});
  for (int f = 0; f < static_cast<int>(g.faces.size()); ++f) {
    Ring cell = canonical_ring(Ring{g.face_ring(f)});
    if (cell.size() < 3 || sgn(signed_area2(cell)) <= 0) {
      throw InvariantError("decomposition produced a degenerate cell");
    }
    d.cells.push_back({std::move(cell)});
  }

  std::map<RatPoint, int, LexLess> vid;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) vid[g.vertices[v]] = v;
  for (std::size_t ri = 0; ri < nr; ++ri) {
    const Ring& ring = p.rings[ri];
    for (std::size_t i = 0; i < ring.size(); ++i) {
      int best = -1;
      for (int h : g.outgoing[vid.at(ring[i])]) {
        const RatPoint& to = g.vertices[g.half_edges[h].to];
        if (!in_wedge_from(ring, i, to.x - ring[i].x, to.y - ring[i].y)) continue;
        int f = g.half_edges[h].face;
        if (best < 0 || cell_less(d.cells[f].boundary, d.cells[best].boundary)) best = f;
      }
      if (best < 0) throw InvariantError("vertex " + to_string(ring[i]) + " has no incident cell");
      d.cell_of_vertex[ri][i] = best;
    }
  }
  return d;
}

const ConvexCell& nvlp_cell_of(const Decomposition& d, VertexRef v) {
  if (v.ring >= d.cell_of_vertex.size() || v.index >= d.cell_of_vertex[v.ring].size()) {
    throw PreconditionError("vertex is not part of the decomposition");
  }
  return d.cells[static_cast<std::size_t>(d.cell_of_vertex[v.ring][v.index])];
}

}  // namespace latbool
