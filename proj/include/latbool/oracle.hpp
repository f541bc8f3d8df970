#pragma once

// Brute-force ground truth. Everything here is deliberately exhaustive and
// independent of the overlay, decomposition and rounding code; it is meant
// for coordinates up to a few hundred.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latbool/arrangement.hpp"
#include "latbool/decomposition.hpp"
#include "latbool/region.hpp"

namespace latbool {

struct LatticeClosure {
  std::vector<LatticePoint> points;
  std::vector<std::pair<LatticePoint, LatticePoint>> segments;  // unit, lexicographic endpoints
  std::vector<LatticePoint> squares;                            // lower-left corners

  bool has_square(const Integer& x, const Integer& y) const;
};

LatticeClosure lattice_closure(const Region& r);

// Failure report. Re-running the check on the same inputs reproduces it.
struct Witness {
  RatPoint point;
  std::optional<Segment> edge;
  Rational measure;  // squared distance or similar, when meaningful
  std::string context;
};

std::string to_string(const Witness& w);

// Every lattice point of the (convex) cell's bounding box, closed membership,
// smallest squared distance, lexicographic tie-break.
std::optional<LatticePoint> brute_nvlp(const RatPoint& p, const ConvexCell& cell);
// Nearest lattice point of r visible from p (p must belong to r).
std::optional<LatticePoint> brute_nvlp_global(const RatPoint& p, const Region& r);

// Exact test of inner ⊆ outer.
std::optional<Witness> check_inclusion(const Region& inner, const Region& outer);

enum class HausdorffReference {
  big_boundary,  // inner rounding: samples of big \ small must be near ∂big
  small_region,  // outer rounding: samples of big \ small must be near small
};

// Grid samples q of big \ small at the given spacing must lie at squared
// distance < 2 from the reference. Fails early when small ⊄ big.
std::optional<Witness> check_hausdorff(const Region& small, const Region& big,
                                       HausdorffReference ref,
                                       const Rational& spacing = Rational(1, 8));

// Per-sample truth of the Boolean operation; nullopt for samples on the
// boundary of A or B, where the regularized result is not decided pointwise.
std::vector<std::optional<bool>> brute_boolean(const Region& a, const Region& b, BoolOp op,
                                               const std::vector<RatPoint>& samples);

// Segment p -> v must avoid the interior of the lattice closure.
std::optional<Witness> check_snap_segment(const RatPoint& p, const LatticePoint& v,
                                          const LatticeClosure& closure);

// Pairs (edge of p, pixel edge) that meet at all, pixels taken around every
// non-lattice vertex of p.
std::size_t pixel_contacts(const Region& p);

// Proper crossings between edges of a and edges of b, by brute force.
std::size_t brute_proper_crossings(const Region& a, const Region& b);

}  // namespace latbool
