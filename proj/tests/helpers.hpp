#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "latbool/region.hpp"

namespace latbool::test {

inline RatPoint pt(long x, long y) { return RatPoint(x, y); }
inline RatPoint rpt(const char* x, const char* y) { return RatPoint(Rational(x), Rational(y)); }

inline Ring ring(std::initializer_list<std::pair<long, long>> pts) {
  Ring r;
  for (auto [x, y] : pts) r.vertices.push_back(RatPoint(x, y));
  return r;
}

inline Region region(std::vector<Ring> rings) { return make_region(std::move(rings)); }

inline Ring box_ring(long x0, long y0, long x1, long y1) {
  return ring({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

inline Region square(long x0, long y0, long x1, long y1) { return region({box_ring(x0, y0, x1, y1)}); }

}  // namespace latbool::test
