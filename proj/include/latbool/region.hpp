#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latbool/exact.hpp"

namespace latbool {

// A closed boundary cycle. Interior is always on the left: filled rings run
// counter-clockwise, holes clockwise.
struct Ring {
  std::vector<RatPoint> vertices;

  std::size_t size() const { return vertices.size(); }
  const RatPoint& operator[](std::size_t i) const { return vertices[i]; }
  const RatPoint& next(std::size_t i) const { return vertices[(i + 1) % vertices.size()]; }
  const RatPoint& prev(std::size_t i) const {
    return vertices[(i + vertices.size() - 1) % vertices.size()];
  }

  friend bool operator==(const Ring&, const Ring&) = default;
};

// Twice the signed area (positive for counter-clockwise).
Rational signed_area2(const Ring& ring);
bool is_hole(const Ring& ring);
Ring reversed(const Ring& ring);

// Drops repeated vertices and straight-through collinear vertices. With
// keep_spikes == false, zero-width turn-backs are collapsed as well.
Ring collapse_collinear(const Ring& ring, bool keep_spikes = false);
// collapse_collinear + rotation to the lexicographically smallest vertex.
Ring canonical_ring(const Ring& ring, bool keep_spikes = false);

// A collection of rings with nested holes at any depth. parent[i] is the ring
// immediately enclosing ring i, or -1.
struct Region {
  std::vector<Ring> rings;
  std::vector<int> parent;

  bool empty() const { return rings.empty(); }
  friend bool operator==(const Region&, const Region&) = default;
};

// Canonical form: canonical rings, degenerate rings (< 3 vertices) dropped,
// rings sorted by their vertex sequence, nesting recomputed.
Region make_region(std::vector<Ring> rings, bool keep_spikes = false);
Region canonical(const Region& r);

std::vector<int> compute_nesting(const std::vector<Ring>& rings);

Rational area(const Region& r);
std::size_t edge_count(const Region& r);
// Number of distinct vertex positions.
std::size_t vertex_count(const Region& r);
bool all_lattice(const Region& r);

enum class Location { interior, boundary, exterior };

// Closed-set membership: interior or boundary means p belongs to R.
Location point_in_region(const RatPoint& p, const Region& r);
inline bool contains(const Region& r, const RatPoint& p) {
  return point_in_region(p, r) != Location::exterior;
}
// Winding number of all rings around p. Precondition: p not on the boundary.
int winding_number(const RatPoint& p, const std::vector<Ring>& rings);

// True iff segment pq lies in R. Throws PreconditionError when p or q is
// outside R.
bool is_visible(const RatPoint& p, const RatPoint& q, const Region& r);

enum class Severity { error, degenerate };

struct Violation {
  enum class Kind {
    repeated_vertex,
    collinear_vertex,
    degenerate_ring,
    proper_crossing,
    edge_overlap,
    nesting,
    interior_overlap,
  };
  Kind kind;
  Severity severity;
  int ring_a = -1;
  int edge_a = -1;
  int ring_b = -1;
  int edge_b = -1;
  std::string message;
};

std::string to_string(Violation::Kind kind);

// Never throws; an empty list (or only degenerate-severity entries) is ok.
std::vector<Violation> validate_region(const Region& r);
bool is_valid(const std::vector<Violation>& violations);
// Throws ValidationError listing the first error-severity violation.
void require_valid(const Region& r, const std::string& what);

// Finite stand-in for the plane so complements stay representable.
struct UniverseBox {
  LatticePoint min;
  LatticePoint max;

  static constexpr long kMargin = 3;

  // Joint bounding box of a and b grown by kMargin on every side.
  static UniverseBox around(const Region& a, const Region& b);
  Ring ring() const;
  Region region() const;
  // Every vertex of r is on the box boundary or at least kMargin inside it.
  bool admits(const Region& r) const;
};

// closure(box \ R). Throws PreconditionError when R violates the margin.
Region complement_in_universe(const Region& r, const UniverseBox& box);
// Same without the margin check; r only has to lie inside the box.
Region box_complement(const Region& r, const UniverseBox& box);

}  // namespace latbool
