#pragma once

#include <cstddef>
#include <vector>

#include "latbool/overlay.hpp"
#include "latbool/region.hpp"

namespace latbool {

enum class VertexKind { original_a, original_b, crossing };
enum class Convexity { convex, reflex, flat };

struct ExactVertex {
  RatPoint position;
  VertexKind kind;
  Convexity convexity;
};

struct ExactStats {
  std::size_t n = 0;  // total input edges
  std::size_t k = 0;  // distinct non-lattice vertices of the result
  std::size_t h = 0;  // properly crossing (A edge, B edge) pairs
};

// Result of an exact Boolean operation. vertices[i][j] annotates
// region.rings[i][j].
struct ExactRegion {
  Region region;
  std::vector<std::vector<ExactVertex>> vertices;
  ExactStats stats;

  bool empty() const { return region.empty(); }
};

enum class BoolOp { intersection, union_, difference };

// Interior angle class of ring vertex i, interior on the left. Zero-width
// turn-backs are classified by probing the region just beyond the tip.
Convexity vertex_convexity(const Region& r, std::size_t ring, std::size_t i);

// Wraps a region with provenance against the operands it was computed from.
ExactRegion annotate(Region r, const Region& a, const Region& b, ExactStats stats);

// Regularized closure(A° ∩ B°).
ExactRegion exact_intersection(const Region& a, const Region& b);

// Union and difference through complements inside `box`:
//   A ∪ B = (A^C ∩ B^C)^C,   A \ B = A ∩ B^C.
ExactRegion exact_boolean(const Region& a, const Region& b, BoolOp op, const UniverseBox& box);

// Brute-force count of properly crossing pairs between the two edge sets.
std::size_t count_proper_crossings(const Region& a, const Region& b);

}  // namespace latbool
