// Acceptance run: one PASS/FAIL line per criterion over the seeded random
// corpus plus the hand fixtures in tests/data.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "helpers.hpp"
#include "latbool/io.hpp"
#include "latbool/oracle.hpp"
#include "latbool/rounding.hpp"
#include "latbool/setops.hpp"
#include "latbool/verify.hpp"

using namespace latbool;
using namespace latbool::test;

namespace {

constexpr int kRandomPairs = 200;
constexpr long kCoordMax = 64;
constexpr int kRandomCells = 200;
constexpr double kMaxScaling = 4.5;
constexpr int kTimingRuns = 3;
constexpr std::size_t kMaxWitnesses = 3;

struct Case {
  std::string name;
  Region a;
  Region b;
};

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;

  void record(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(what);
  }
};

int criterion_of(CheckKind k) {
  switch (k) {
    case CheckKind::inclusion:
      return 1;
    case CheckKind::hausdorff:
      return 2;
    case CheckKind::lattice:
      return 3;
    case CheckKind::vertex_bound:
      return 4;
    case CheckKind::convexity:
      return 5;
    case CheckKind::nvlp:
      return 6;
    case CheckKind::nvlp_locality:
    case CheckKind::chain_visibility:
    case CheckKind::snap_segment:
      return 7;
  }
  return 0;
}

std::vector<Case> corpus() {
  std::vector<Case> out;
  RegionGenerator gen(seed_from_env(20261018), 0, kCoordMax);
  for (int i = 0; i < kRandomPairs; ++i) {
    Region a = gen.any();
    Region b = gen.any();
    out.push_back({"random-" + std::to_string(i), a, b});
  }
  std::vector<std::string> names;
  for (const auto& e : std::filesystem::directory_iterator(LATBOOL_TEST_DATA)) {
    std::string f = e.path().filename().string();
    if (f.size() > 6 && f.substr(f.size() - 6) == ".a.lpr") names.push_back(f.substr(0, f.size() - 6));
  }
  std::sort(names.begin(), names.end());
  for (const auto& n : names) {
    std::string base = std::string(LATBOOL_TEST_DATA) + "/" + n;
    out.push_back({n, read_region_file(base + ".a.lpr"), read_region_file(base + ".b.lpr")});
  }
  return out;
}

// Random convex cell with rational vertices, strict hull.
Ring random_cell(std::mt19937& rng, bool with_half_point, RatPoint& half) {
  std::uniform_int_distribution<long> coord(0, 60), den(1, 6), count(3, 8);
  std::vector<RatPoint> pts;
  long n = count(rng);
  for (long i = 0; i < n; ++i) {
    long d = den(rng);
    pts.emplace_back(Rational(coord(rng), 5 * d), Rational(coord(rng), 5 * d));
  }
  if (with_half_point) {
    std::uniform_int_distribution<long> cell(1, 10);
    half = RatPoint(Rational(2 * cell(rng) + 1, 2), Rational(2 * cell(rng) + 1, 2));
    pts.push_back(half);
  }
  std::sort(pts.begin(), pts.end(), LexLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return {};
  std::vector<RatPoint> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orientation_sign(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && orientation_sign(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  if (h.size() < 3) return {};
  return canonical_ring(Ring{h});
}

// Lattice points of the cell at minimum distance from p.
std::size_t nearest_multiplicity(const RatPoint& p, const Ring& cell) {
  Region r = make_region({cell});
  Rational x0 = cell[0].x, x1 = x0, y0 = cell[0].y, y1 = y0;
  for (const auto& v : cell.vertices) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  bool any = false;
  Rational best;
  std::size_t mult = 0;
  for (Integer x = ceil_of(x0); x <= floor_of(x1); ++x) {
    for (Integer y = ceil_of(y0); y <= floor_of(y1); ++y) {
      RatPoint q{Rational(x), Rational(y)};
      if (!contains(r, q)) continue;
      Rational d = squared_distance(p, q);
      if (!any || d < best) {
        best = d;
        mult = 1;
        any = true;
      } else if (d == best) {
        ++mult;
      }
    }
  }
  return mult;
}

// Boundary point of the cell: a vertex or a rational point on an edge.
RatPoint boundary_point(std::mt19937& rng, const Ring& cell) {
  std::uniform_int_distribution<std::size_t> pick(0, cell.size() - 1);
  std::size_t i = pick(rng);
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) return cell[i];
  const RatPoint& a = cell[i];
  const RatPoint& b = cell.next(i);
  std::uniform_int_distribution<long> den(2, 9);
  long d = den(rng);
  Rational t(std::uniform_int_distribution<long>(1, d - 1)(rng), d);
  return RatPoint(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
}

// Star-like polygon with vertices in an annulus, sorted by angle.
Region annulus_polygon(std::mt19937& rng, long center, long radius, int n) {
  std::uniform_int_distribution<long> u(-radius, radius);
  std::vector<std::pair<long, long>> d;
  while (static_cast<int>(d.size()) < n) {
    long x = u(rng), y = u(rng);
    long r2 = x * x + y * y;
    if (r2 * 100 < 81 * radius * radius || r2 > radius * radius) continue;
    d.emplace_back(x, y);
  }
  std::sort(d.begin(), d.end(), [](auto p, auto q) {
    return compare_angle(Rational(p.first), Rational(p.second), Rational(q.first),
                         Rational(q.second)) < 0;
  });
  d.erase(std::unique(d.begin(), d.end(),
                      [](auto p, auto q) {
                        return compare_angle(Rational(p.first), Rational(p.second),
                                             Rational(q.first), Rational(q.second)) == 0;
                      }),
          d.end());
  Ring r;
  for (auto [x, y] : d) r.vertices.push_back(RatPoint(center + x, center + y));
  return make_region({r});
}

double time_pipeline(int edges, unsigned seed) {
  std::mt19937 rng(seed);
  Region a = annulus_polygon(rng, 50000, 40000, edges / 2);
  Region b = annulus_polygon(rng, 50000, 40000, edges / 2);
  UniverseBox box = UniverseBox::around(a, b);
  auto t0 = std::chrono::steady_clock::now();
  ExactRegion p = exact_intersection(a, b);
  Region in = inner_round(p);
  Region out = outer_round(p, box);
  auto t1 = std::chrono::steady_clock::now();
  if (in.empty() || out.empty()) std::cerr << "timing input degenerated\n";
  return std::chrono::duration<double>(t1 - t0).count();
}

void line(int id, const std::string& title, bool ok, const std::string& detail) {
  std::cout << "criterion " << id << " [" << (ok ? "PASS" : "FAIL") << "] " << title << ": "
            << detail << '\n';
}

}  // namespace

int main() {
  auto started = std::chrono::steady_clock::now();
  std::map<int, Tally> tally;
  std::size_t exceptions = 0, runs = 0;
  std::vector<Case> cases = corpus();
  for (const auto& c : cases) {
    for (BoolOp op : {BoolOp::intersection, BoolOp::union_, BoolOp::difference}) {
      ++runs;
      std::string label = c.name + "/" + to_string(op);
      try {
        VerifyReport rep = verify_case(c.a, c.b, op);
        for (const auto& chk : rep.checks) {
          tally[criterion_of(chk.kind)].record(chk.passed, label + ": " + chk.name + ": " + chk.detail);
        }
      } catch (const std::exception& e) {
        ++exceptions;
        for (int k = 1; k <= 7; ++k) tally[k].record(false, label + ": exception: " + e.what());
      }
    }
  }

  // NVLP against the exhaustive scan on random convex cells.
  std::mt19937 rng(seed_from_env(20261018) + 1);
  std::size_t cell_cases = 0, ties = 0;
  while (cell_cases < static_cast<std::size_t>(kRandomCells)) {
    bool tie_case = cell_cases % 4 == 0;
    RatPoint half;
    Ring cell = random_cell(rng, tie_case, half);
    if (cell.size() < 3) continue;
    RatPoint p = boundary_point(rng, cell);
    if (tie_case && std::find(cell.vertices.begin(), cell.vertices.end(), half) != cell.vertices.end()) {
      p = half;
    }
    ConvexCell cc{cell};
    auto fast = nvlp(p, cc);
    auto brute = brute_nvlp(p, cc);
    if (fast && nearest_multiplicity(p, cell) > 1) ++ties;
    ++cell_cases;
    tally[6].record(fast == brute, "random cell case " + std::to_string(cell_cases) + " at " +
                                       to_string(p));
  }

  const std::size_t fixtures = cases.size() - kRandomPairs;
  std::ostringstream scope;
  scope << kRandomPairs << " random pairs in [0," << kCoordMax << "]^2 + " << fixtures
        << " hand fixtures, 3 ops";
  std::cout << "corpus: " << scope.str() << " (" << runs << " runs, " << exceptions
            << " exceptions)\n";

  const std::map<int, std::string> titles{
      {1, "inclusion chain inner <= exact <= outer (exact test)"},
      {2, "Hausdorff distance < sqrt(2), samples at spacing 1/8"},
      {3, "rounded outputs are valid lattice regions, no exceptions"},
      {4, "vertex count bounds"},
      {5, "reflex/convex vertex correspondences and convex components"},
      {6, "nvlp equals brute force (fixture vertices + random cells)"},
      {7, "cell nvlp locality, chain visibility, snap segments"},
  };
  bool all_ok = true;
  for (int k = 1; k <= 7; ++k) {
    Tally& t = tally[k];
    bool ok = t.failures == 0 && t.checks > 0;
    if (k == 3) ok = ok && exceptions == 0;
    if (k == 6) ok = ok && ties > 0;
    std::ostringstream d;
    d << t.checks << " checks, " << t.failures << " failures";
    if (k == 6) d << ", " << cell_cases << " random cells with " << ties << " ties";
    line(k, titles.at(k), ok, d.str());
    for (const auto& w : t.witnesses) std::cout << "    " << w << '\n';
    all_ok = all_ok && ok;
  }

  double corpus_secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  // Informational: does not affect the exit status.
  std::vector<double> small, large;
  for (int r = 0; r < kTimingRuns; ++r) {
    small.push_back(time_pipeline(1000, 100 + r));
    large.push_back(time_pipeline(2000, 200 + r));
  }
  std::sort(small.begin(), small.end());
  std::sort(large.begin(), large.end());
  double ratio = large[kTimingRuns / 2] / small[kTimingRuns / 2];
  std::ostringstream d;
  d << std::fixed << std::setprecision(3) << "median " << small[kTimingRuns / 2] << "s at 1000 edges, "
    << large[kTimingRuns / 2] << "s at 2000 edges, ratio " << std::setprecision(2) << ratio
    << " (limit " << kMaxScaling << ", informational)";
  line(8, "scaling of the intersection pipeline", ratio < kMaxScaling, d.str());

  std::cout << std::fixed << std::setprecision(1) << "corpus time " << corpus_secs << "s\n";
  std::cout << (all_ok ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << '\n';
  return all_ok ? 0 : 1;
}
