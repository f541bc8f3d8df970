#pragma once

// Boundary overlay machinery shared by the arrangement, decomposition and
// rounding modules: edge splitting, winding classification of fragments and
// face tracing.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "latbool/exact.hpp"
#include "latbool/region.hpp"

namespace latbool::detail {

struct DirectedEdge {
  RatPoint a;
  RatPoint b;
};

// Bucketed index over closed coordinate intervals [lo, hi]; used to find
// segments stabbed by a vertical or horizontal line.
class IntervalIndex {
 public:
  IntervalIndex() = default;
  IntervalIndex(const std::vector<std::pair<Rational, Rational>>& intervals);

  // Candidate ids whose interval may contain v (superset; filter exactly).
  std::span<const int> candidates(const Rational& v) const;

 private:
  long origin_ = 0;
  long width_ = 1;
  std::vector<std::vector<int>> buckets_;
  std::vector<int> all_;
  long bucket_of(const Rational& v) const;
};

// All pairs (i, j), i < j, whose bounding boxes intersect.
std::vector<std::pair<int, int>> bbox_pairs(const std::vector<DirectedEdge>& edges);

struct HalfEdge {
  int from;
  int to;
  int tag;   // caller-supplied identity
  int face = -1;
  int next = -1;
};

struct FaceGraph {
  std::vector<RatPoint> vertices;
  std::vector<HalfEdge> half_edges;
  std::vector<std::vector<int>> outgoing;  // per vertex, sorted by angle ccw
  std::vector<std::vector<int>> faces;     // half-edge cycles

  std::vector<RatPoint> face_ring(int f) const;
};

// Links half-edges into cycles keeping the face on the left: at each vertex
// the walk continues along the first outgoing edge clockwise from the
// reversed incoming direction.
FaceGraph trace_faces(const std::vector<DirectedEdge>& edges, const std::vector<int>& tags);

struct OverlayInput {
  // Each layer is a set of rings with winding semantics.
  std::vector<std::vector<Ring>> layers;
  // Segments cut out of the result as zero-width slits.
  std::vector<DirectedEdge> cuts;
  // Decides membership from one winding number per layer.
  std::function<bool(std::span<const int>)> inside;
};

// Boundary of the closure of {inside} (plus slits where cuts pass through the
// interior), traced into rings. Straight-through vertices are dropped; slit
// turn-backs are kept.
std::vector<Ring> overlay(const OverlayInput& in);

// closure of {winding > 0}; resolves touching, overlapping and nested rings.
Region normalize(const std::vector<Ring>& rings);

}  // namespace latbool::detail
