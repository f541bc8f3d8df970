#pragma once

// Reflex vertical decomposition: vertical walls shot up and down from every
// reflex vertex split a region into convex cells.

#include <cstddef>
#include <optional>
#include <vector>

#include "latbool/arrangement.hpp"
#include "latbool/region.hpp"

namespace latbool {

// One occurrence of a vertex (a pinch point shared by two boundary passes has
// two occurrences). For edges, (ring, index) names the edge starting there.
struct VertexRef {
  std::size_t ring = 0;
  std::size_t index = 0;

  friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

enum class WallDirection { up, down };

struct Wall {
  VertexRef source;
  RatPoint from;
  WallDirection direction;
  RatPoint hit;
  // Exactly one of these is set.
  std::optional<VertexRef> hit_edge;    // edge whose relative interior contains hit
  std::optional<VertexRef> hit_vertex;  // vertex occurrence the wall ends on
};

struct ConvexCell {
  Ring boundary;  // counter-clockwise, collinear vertices removed
};

struct Decomposition {
  std::vector<Wall> walls;
  std::vector<ConvexCell> cells;
  // Per ring, per vertex: index into cells.
  std::vector<std::vector<int>> cell_of_vertex;
  // Per ring, per edge: walls ending in the edge interior, ordered along the
  // edge direction.
  std::vector<std::vector<std::vector<int>>> visible_reflex;
  // Per ring, per vertex: walls ending exactly on that occurrence.
  std::vector<std::vector<std::vector<int>>> vertex_landings;
  // Per ring, per vertex.
  std::vector<std::vector<Convexity>> convexity;
};

// Throws PreconditionError when a reflex vertex is not a lattice point.
Decomposition reflex_vertical_decomposition(const Region& p);
inline Decomposition reflex_vertical_decomposition(const ExactRegion& p) {
  return reflex_vertical_decomposition(p.region);
}

// Throws PreconditionError for an unknown occurrence.
const ConvexCell& nvlp_cell_of(const Decomposition& d, VertexRef v);

}  // namespace latbool
