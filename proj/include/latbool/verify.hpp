#pragma once

// Runs every guarantee of the three modes against the brute-force oracles
// and reports each property separately.

#include <optional>
#include <string>
#include <vector>

#include "latbool/setops.hpp"

namespace latbool {

enum class CheckKind {
  lattice,           // rounded outputs have lattice vertices and validate
  inclusion,         // inner ⊆ exact ⊆ outer
  hausdorff,         // sampled distance bound
  vertex_bound,      // vertex count inequalities
  convexity,         // reflex / convex vertex correspondences
  nvlp,              // cell NVLP against a brute-force scan of the cell
  nvlp_locality,     // cell NVLP equals the nearest visible point in all of P
  chain_visibility,  // chain vertices are vertically visible reflex vertices
  snap_segment,      // snap segments avoid the lattice closure interior
};

std::string to_string(CheckKind kind);

struct Check {
  CheckKind kind;
  std::string name;
  bool passed = true;
  std::string detail;  // witness or counts
};

struct VerifyReport {
  BoolOp op = BoolOp::intersection;
  std::vector<Check> checks;
  bool inner_equals_exact = false;
  bool outer_equals_exact = false;

  bool ok() const;
};

// When `against` is set, that region stands in for the computed result of
// the given mode (used to audit files produced elsewhere).
struct Substitute {
  Mode mode;
  Region region;
};

VerifyReport verify_case(const Region& a, const Region& b, BoolOp op,
                         const std::optional<Substitute>& against = std::nullopt);

// The counts the vertex bounds are stated in, for the exact region p.
struct BoundCounts {
  std::size_t vertices = 0;  // distinct vertices of p
  std::size_t k = 0;         // non-lattice vertices of p
  std::size_t h = 0;         // contacts between edges of p and pixel edges
};

BoundCounts bound_counts(const Region& p);

}  // namespace latbool
