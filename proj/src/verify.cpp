#include "latbool/verify.hpp"

#include <set>
#include <sstream>

#include "latbool/decomposition.hpp"
#include "latbool/error.hpp"
#include "latbool/oracle.hpp"

namespace latbool {

namespace {

using PointSet = std::set<RatPoint, LexLess>;

std::string show(const std::optional<LatticePoint>& p) {
  if (!p) return "none";
  std::ostringstream os;
  os << *p;
  return os.str();
}

// Positions where some occurrence has the given convexity.
PointSet positions(const Region& r, Convexity c) {
  PointSet out;
  for (std::size_t i = 0; i < r.rings.size(); ++i) {
    for (std::size_t j = 0; j < r.rings[i].size(); ++j) {
      if (vertex_convexity(r, i, j) == c) out.insert(r.rings[i][j]);
    }
  }
  return out;
}

// First vertex of `r` with convexity c that is not in `allowed`.
std::optional<RatPoint> stray_vertex(const Region& r, Convexity c, const PointSet& allowed) {
  for (std::size_t i = 0; i < r.rings.size(); ++i) {
    for (std::size_t j = 0; j < r.rings[i].size(); ++j) {
      if (vertex_convexity(r, i, j) == c && !allowed.count(r.rings[i][j])) return r.rings[i][j];
    }
  }
  return std::nullopt;
}

bool ring_is_convex(const Region& r, std::size_t i) {
  for (std::size_t j = 0; j < r.rings[i].size(); ++j) {
    if (vertex_convexity(r, i, j) == Convexity::reflex) return false;
  }
  return true;
}

bool ring_inside(const Ring& ring, const Region& container) {
  for (const auto& v : ring.vertices) {
    if (!contains(container, v)) return false;
  }
  return true;
}

// Components of p without holes whose boundary is convex must have convex
// images in pin.
std::optional<std::string> convex_components_kept(const Region& p, const Region& pin) {
  std::vector<bool> has_hole(p.rings.size(), false);
  for (int par : p.parent) {
    if (par >= 0) has_hole[par] = true;
  }
  for (std::size_t i = 0; i < p.rings.size(); ++i) {
    if (p.parent[i] >= 0 || has_hole[i] || !ring_is_convex(p, i)) continue;
    Region component = make_region({p.rings[i]});
    for (std::size_t j = 0; j < pin.rings.size(); ++j) {
      if (!ring_inside(pin.rings[j], component)) continue;
      if (!ring_is_convex(pin, j)) {
        return "image of the convex component at " + to_string(p.rings[i][0]) +
               " has a reflex vertex";
      }
    }
  }
  return std::nullopt;
}

class Recorder {
 public:
  explicit Recorder(VerifyReport& r) : report_(r) {}

  void add(CheckKind kind, std::string name, bool passed, std::string detail = {}) {
    report_.checks.push_back(Check{kind, std::move(name), passed, std::move(detail)});
  }

  void add(CheckKind kind, std::string name, const std::optional<Witness>& w) {
    add(kind, std::move(name), !w.has_value(), w ? to_string(*w) : std::string());
  }

  void bound(std::string name, std::size_t lhs, const char* rel, std::size_t rhs, bool holds) {
    std::ostringstream os;
    os << lhs << ' ' << rel << ' ' << rhs;
    add(CheckKind::vertex_bound, std::move(name), holds, os.str());
  }

 private:
  VerifyReport& report_;
};

void lattice_check(Recorder& rec, const std::string& which, const Region& r) {
  auto violations = validate_region(r);
  bool lattice = all_lattice(r);
  std::string detail;
  if (!lattice) {
    detail = "non-lattice vertex";
  } else if (!is_valid(violations)) {
    for (const auto& v : violations) {
      if (v.severity == Severity::error) {
        detail = v.message;
        break;
      }
    }
  }
  rec.add(CheckKind::lattice, which + " is a valid lattice region", lattice && is_valid(violations),
          detail);
}

// Per-vertex oracle checks on the region that actually gets rounded.
void vertex_checks(Recorder& rec, const Region& p) {
  std::size_t cases = 0, snaps = 0, chains = 0;
  std::string nvlp_fail, local_fail, snap_fail, chain_fail;
  if (!p.empty()) {
    Decomposition d = reflex_vertical_decomposition(p);
    LatticeClosure closure = lattice_closure(p);
    PointSet reflex = positions(p, Convexity::reflex);
    std::vector<std::vector<std::optional<LatticePoint>>> snapped(p.rings.size());
    for (std::size_t ri = 0; ri < p.rings.size(); ++ri) {
      const Ring& ring = p.rings[ri];
      for (std::size_t i = 0; i < ring.size(); ++i) {
        const RatPoint& v = ring[i];
        if (is_lattice(v)) {
          snapped[ri].push_back(to_lattice(v));
          continue;
        }
        const ConvexCell& cell = nvlp_cell_of(d, {ri, i});
        auto fast = nvlp(v, cell);
        auto brute = brute_nvlp(v, cell);
        auto global = brute_nvlp_global(v, p);
        ++cases;
        if (fast != brute && nvlp_fail.empty()) {
          nvlp_fail = "vertex " + to_string(v) + ": ring search " + show(fast) + ", brute " +
                      show(brute);
        }
        if (fast != global && local_fail.empty()) {
          local_fail = "vertex " + to_string(v) + ": cell " + show(fast) + ", whole region " +
                       show(global);
        }
        snapped[ri].push_back(fast);
        if (fast) {
          ++snaps;
          auto w = check_snap_segment(v, *fast, closure);
          if (w && snap_fail.empty()) snap_fail = to_string(*w);
        }
      }
    }
    for (std::size_t ri = 0; ri < p.rings.size(); ++ri) {
      const Ring& ring = p.rings[ri];
      for (std::size_t i = 0; i < ring.size(); ++i) {
        std::size_t j = (i + 1) % ring.size();
        auto chain = build_chain(p, d, {ri, i}, snapped[ri][i], snapped[ri][j]);
        if (!chain) continue;
        const RatPoint& a = ring[i];
        const RatPoint& b = ring[j];
        for (std::size_t c = 1; c + 1 < chain->vertices.size(); ++c) {
          ++chains;
          RatPoint r(chain->vertices[c]);
          bool ok = reflex.count(r) > 0 && a.x != b.x;
          if (ok) {
            Rational y = a.y + (b.y - a.y) * (r.x - a.x) / (b.x - a.x);
            RatPoint foot(r.x, y);
            ok = on_segment(foot, a, b) && is_visible(r, foot, p);
          }
          if (!ok && chain_fail.empty()) {
            chain_fail = "chain vertex " + to_string(r) + " on edge " + to_string(a) + " -> " +
                         to_string(b);
          }
        }
      }
    }
  }
  rec.add(CheckKind::nvlp, "nvlp matches brute force (" + std::to_string(cases) + " vertices)",
          nvlp_fail.empty(), nvlp_fail);
  rec.add(CheckKind::nvlp_locality, "cell nvlp is the nearest visible lattice point of P",
          local_fail.empty(), local_fail);
  rec.add(CheckKind::chain_visibility,
          "chain vertices are vertically visible reflex vertices (" + std::to_string(chains) + ")",
          chain_fail.empty(), chain_fail);
  rec.add(CheckKind::snap_segment,
          "snap segments avoid the lattice closure interior (" + std::to_string(snaps) + ")",
          snap_fail.empty(), snap_fail);
}

}  // namespace

std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::lattice:
      return "lattice";
    case CheckKind::inclusion:
      return "inclusion";
    case CheckKind::hausdorff:
      return "hausdorff";
    case CheckKind::vertex_bound:
      return "vertex-bound";
    case CheckKind::convexity:
      return "convexity";
    case CheckKind::nvlp:
      return "nvlp";
    case CheckKind::nvlp_locality:
      return "nvlp-locality";
    case CheckKind::chain_visibility:
      return "chain-visibility";
    case CheckKind::snap_segment:
      return "snap-segment";
  }
  return "?";
}

bool VerifyReport::ok() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

BoundCounts bound_counts(const Region& p) {
  BoundCounts out;
  out.vertices = vertex_count(p);
  PointSet fractional;
  for (const auto& ring : p.rings) {
    for (const auto& v : ring.vertices) {
      if (!is_lattice(v)) fractional.insert(v);
    }
  }
  out.k = fractional.size();
  out.h = pixel_contacts(p);
  return out;
}

VerifyReport verify_case(const Region& a, const Region& b, BoolOp op,
                         const std::optional<Substitute>& against) {
  for (const auto* r : {&a, &b}) {
    require_valid(*r, r == &a ? "operand A" : "operand B");
    if (!all_lattice(*r)) throw ValidationError("operands must have lattice vertices");
  }
  VerifyReport report;
  report.op = op;
  Recorder rec(report);
  UniverseBox box = UniverseBox::around(a, b);
  ExactRegion exact = exact_boolean(a, b, op, box);
  Reduction red = reduce(a, b, op, box);
  Region inner = round_reduced(red, Mode::inner, box);
  Region outer = round_reduced(red, Mode::outer, box);
  if (against) {
    if (against->mode == Mode::inner) inner = against->region;
    if (against->mode == Mode::outer) outer = against->region;
    if (against->mode == Mode::exact) exact.region = against->region;
  }
  const Region& u = exact.region;
  report.inner_equals_exact = canonical(inner) == canonical(u);
  report.outer_equals_exact = canonical(outer) == canonical(u);

  lattice_check(rec, "inner", inner);
  lattice_check(rec, "outer", outer);

  rec.add(CheckKind::inclusion, "inner within exact", check_inclusion(inner, u));
  rec.add(CheckKind::inclusion, "exact within outer", check_inclusion(u, outer));

  rec.add(CheckKind::hausdorff, "inner within sqrt(2) of the exact boundary",
          check_hausdorff(inner, u, HausdorffReference::big_boundary));
  rec.add(CheckKind::hausdorff, "outer within sqrt(2) of the exact region",
          check_hausdorff(u, outer, HausdorffReference::small_region));

  const Region& p = red.base.region;
  BoundCounts pc = bound_counts(p);
  std::size_t n_in = vertex_count(inner), n_out = vertex_count(outer);
  if (!red.complemented) {
    rec.bound("|inner| <= |P|", n_in, "<=", pc.vertices, n_in <= pc.vertices);
    // With k = 0 nothing is rounded and the strict form cannot hold; the
    // bound then reads |outer| <= |P|.
    if (pc.k > 0) {
      rec.bound("|outer| < |P| + 3k + h", n_out, "<", pc.vertices + 3 * pc.k + pc.h,
                n_out < pc.vertices + 3 * pc.k + pc.h);
    } else {
      rec.bound("|outer| <= |P| (k = 0)", n_out, "<=", pc.vertices, n_out <= pc.vertices);
    }
    rec.bound("|outer| <= 2|P| + 3k", n_out, "<=", 2 * pc.vertices + 3 * pc.k,
              n_out <= 2 * pc.vertices + 3 * pc.k);
    PointSet reflex_lattice;
    for (const auto& v : positions(p, Convexity::reflex)) {
      if (is_lattice(v)) reflex_lattice.insert(v);
    }
    auto stray = stray_vertex(inner, Convexity::reflex, reflex_lattice);
    rec.add(CheckKind::convexity, "inner reflex vertices are reflex lattice vertices of P",
            !stray, stray ? "reflex vertex " + to_string(*stray) : std::string());
    auto broken = convex_components_kept(p, inner);
    rec.add(CheckKind::convexity, "convex components stay convex", !broken,
            broken.value_or(std::string()));
  } else {
    std::size_t nu = vertex_count(u);
    rec.bound("|outer union| <= |U|", n_out, "<=", nu, n_out <= nu);
    rec.bound("|inner union| <= |U| + k + h", n_in, "<=", nu + pc.k + pc.h,
              n_in <= nu + pc.k + pc.h);
    auto stray = stray_vertex(outer, Convexity::convex, positions(u, Convexity::convex));
    rec.add(CheckKind::convexity, "outer union convex vertices are convex vertices of U", !stray,
            stray ? "convex vertex " + to_string(*stray) : std::string());
  }

  vertex_checks(rec, p);
  return report;
}

}  // namespace latbool
