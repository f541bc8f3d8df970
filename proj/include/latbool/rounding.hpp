#pragma once

// Inner and outer lattice roundings of an exact region.

#include <cstddef>
#include <optional>
#include <vector>

#include "latbool/arrangement.hpp"
#include "latbool/decomposition.hpp"
#include "latbool/region.hpp"

namespace latbool {

// Unit grid square with corners floor(v) and ceil(v). When exactly one
// coordinate of v is an integer the square is a unit segment.
struct Pixel {
  RatPoint anchor;
  Ring square;  // 4 corners ccw, or the 2 segment endpoints
  bool degenerate = false;
};

// Precondition: v is not a lattice point.
Pixel pixel_of(const RatPoint& v);
// One pixel per distinct non-lattice vertex, in lexicographic anchor order.
std::vector<Pixel> pixels_of(const Region& p);
// Union of the pixels. Full squares are merged into regular rings; unit
// segments not covered by a square follow as two-vertex rings.
Region pixel_set(const Region& p);
inline Region pixel_set(const ExactRegion& p) { return pixel_set(p.region); }

// Nearest lattice point of the convex cell, lexicographic tie-break; nullopt
// when the cell holds no lattice point. Throws PreconditionError when p is
// not on the cell boundary.
std::optional<LatticePoint> nvlp(const RatPoint& p, const ConvexCell& cell);
// Exhaustive column scan.
bool has_lattice_point(const ConvexCell& cell);

struct Chain {
  VertexRef edge;
  std::vector<LatticePoint> vertices;
};

// Snapped endpoints joined through the reflex vertices whose walls reach the
// edge, in order along the edge.
std::optional<Chain> build_chain(const Region& p, const Decomposition& d, VertexRef edge,
                                 const std::optional<LatticePoint>& vp,
                                 const std::optional<LatticePoint>& vq);

// Repeatedly drops unprotected vertices that are reflex, flat or turn back.
// Returns an empty ring when fewer than three vertices survive.
Ring convexify_cleanup(const Ring& ring, const std::vector<bool>& protect);

struct RoundingStats {
  std::size_t dropped_components = 0;
  // Proper crossings between rounded rings before normalization.
  std::size_t raw_crossings = 0;
};

Region inner_round(const Region& p, RoundingStats* stats = nullptr);
inline Region inner_round(const ExactRegion& p, RoundingStats* stats = nullptr) {
  return inner_round(p.region, stats);
}

// The region obtained by removing P and its pixels from the box, with
// degenerate pixels left in as slits.
Region outer_complement(const Region& p, const UniverseBox& box);

Region outer_round(const Region& p, const UniverseBox& box, RoundingStats* stats = nullptr);
inline Region outer_round(const ExactRegion& p, const UniverseBox& box,
                          RoundingStats* stats = nullptr) {
  return outer_round(p.region, box, stats);
}

// Drops reflex vertices of pbar that have no counterpart in p when the vertex
// and both neighbours are closer than sqrt(2) to one edge of p and cutting
// the corner touches nothing else.
Region simplify_reflex(const Region& pbar, const Region& p);

Region remove_zero_area(const Region& r);

}  // namespace latbool
