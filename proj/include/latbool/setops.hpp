#pragma once

// The public surface: exact, inner and outer versions of intersection, union
// and difference.
//
// Compositions, with ⊓ / ⊔ the inner / outer rounding of an intersection and
// complements taken in the universe box around A and B:
//   inner  A ∩ B = ⊓(A ∩ B)            outer  A ∩ B = ⊔(A ∩ B)
//   inner  A ∪ B = (⊔(A^C ∩ B^C))^C    outer  A ∪ B = (⊓(A^C ∩ B^C))^C
//   inner  A \ B = ⊓(A ∩ B^C)          outer  A \ B = ⊔(A ∩ B^C)
// For unions, k and h refer to the complement-side intersection A^C ∩ B^C;
// its crossings and non-lattice vertices are those of A and B.

#include <string>

#include "latbool/arrangement.hpp"
#include "latbool/region.hpp"
#include "latbool/rounding.hpp"

namespace latbool {

enum class Mode { exact, inner, outer };

std::string to_string(BoolOp op);
std::string to_string(Mode mode);

struct OpRequest {
  BoolOp op = BoolOp::intersection;
  Mode mode = Mode::exact;
  Region a;
  Region b;
};

struct OpResult {
  // The exact region the rounding brackets (equal to `result` in exact mode).
  ExactRegion exact;
  Region result;
  RoundingStats rounding;
  UniverseBox box;
};

// Throws ValidationError for invalid operands.
OpResult apply(const OpRequest& req);

// The intersection whose rounding yields op's rounded results: A ∩ B,
// A^C ∩ B^C (complemented afterwards) or A ∩ B^C.
struct Reduction {
  ExactRegion base;
  bool complemented = false;
};

Reduction reduce(const Region& a, const Region& b, BoolOp op, const UniverseBox& box);
// Precondition: mode is inner or outer.
Region round_reduced(const Reduction& red, Mode mode, const UniverseBox& box,
                     RoundingStats* stats = nullptr);

struct Sandwich {
  Region inner;
  ExactRegion exact;
  Region outer;
  UniverseBox box;
};

// All three modes, with inner ⊆ exact ⊆ outer checked before returning.
// A failed check throws InvariantError.
Sandwich sandwich(const Region& a, const Region& b, BoolOp op);

}  // namespace latbool
