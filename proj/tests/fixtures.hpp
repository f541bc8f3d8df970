#pragma once

// Random lattice regions for property tests and the acceptance corpus.

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "latbool/overlay.hpp"
#include "latbool/region.hpp"

namespace latbool::test {

inline unsigned seed_from_env(unsigned fallback) {
  if (const char* s = std::getenv("LATBOOL_SEED")) return static_cast<unsigned>(std::stoul(s));
  return fallback;
}

class RegionGenerator {
 public:
  // Coordinates stay inside [lo, hi]^2.
  RegionGenerator(unsigned seed, long lo = 0, long hi = 64) : rng_(seed), lo_(lo), hi_(hi) {}

  long uniform(long a, long b) { return std::uniform_int_distribution<long>(a, b)(rng_); }

  // Star-shaped polygon around an integer center.
  Ring star(long cx, long cy, long radius, int count) {
    std::vector<std::pair<long, long>> dirs;
    for (int i = 0; i < count * 4 && static_cast<int>(dirs.size()) < count; ++i) {
      long dx = uniform(-radius, radius), dy = uniform(-radius, radius);
      if (dx == 0 && dy == 0) continue;
      if (cx + dx < lo_ || cx + dx > hi_ || cy + dy < lo_ || cy + dy > hi_) continue;
      dirs.emplace_back(dx, dy);
    }
    std::sort(dirs.begin(), dirs.end(), [](auto a, auto b) {
      int c = compare_angle(Rational(a.first), Rational(a.second), Rational(b.first),
                            Rational(b.second));
      if (c != 0) return c < 0;
      return a.first * a.first + a.second * a.second < b.first * b.first + b.second * b.second;
    });
    // One vertex per direction.
    std::vector<std::pair<long, long>> kept;
    for (auto d : dirs) {
      if (!kept.empty() && compare_angle(Rational(kept.back().first), Rational(kept.back().second),
                                         Rational(d.first), Rational(d.second)) == 0) {
        continue;
      }
      kept.push_back(d);
    }
    Ring r;
    for (auto [dx, dy] : kept) r.vertices.push_back(RatPoint(cx + dx, cy + dy));
    return r;
  }

  // Union of a few axis-aligned rectangles.
  Region orthogonal(int count) {
    std::vector<Ring> rings;
    for (int i = 0; i < count; ++i) {
      long x0 = uniform(lo_, hi_ - 2), y0 = uniform(lo_, hi_ - 2);
      long x1 = uniform(x0 + 1, std::min(hi_, x0 + 30)), y1 = uniform(y0 + 1, std::min(hi_, y0 + 30));
      rings.push_back(box_ring(x0, y0, x1, y1));
    }
    return detail::normalize(rings);
  }

  // A valid region of one of several shapes; retries until valid.
  Region any() {
    for (;;) {
      Region r;
      switch (uniform(0, 3)) {
        case 0:
        case 1: {
          long cx = uniform(lo_ + 8, hi_ - 8), cy = uniform(lo_ + 8, hi_ - 8);
          r = region({star(cx, cy, uniform(4, 30), static_cast<int>(uniform(3, 12)))});
          break;
        }
        case 2: {
          long cx = uniform(lo_ + 12, hi_ - 12), cy = uniform(lo_ + 12, hi_ - 12);
          Ring outer = star(cx, cy, uniform(10, 30), static_cast<int>(uniform(6, 12)));
          long s = uniform(1, 3);
          r = region({outer, reversed(box_ring(cx - s, cy - s, cx + s, cy + s))});
          break;
        }
        default:
          r = orthogonal(static_cast<int>(uniform(1, 4)));
      }
      if (!r.empty() && is_valid(validate_region(r)) && area(r) > 0) return r;
    }
  }

 private:
  std::mt19937 rng_;
  long lo_, hi_;
};

}  // namespace latbool::test
