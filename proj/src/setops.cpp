#include "latbool/setops.hpp"

#include "latbool/error.hpp"
#include "latbool/oracle.hpp"

namespace latbool {

namespace {

void require_operand(const Region& r, const std::string& what) {
  require_valid(r, what);
  if (!all_lattice(r)) throw ValidationError(what + ": vertices must be lattice points");
}

}  // namespace

std::string to_string(BoolOp op) {
  switch (op) {
    case BoolOp::intersection:
      return "intersection";
    case BoolOp::union_:
      return "union";
    case BoolOp::difference:
      return "difference";
  }
  return "?";
}

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::exact:
      return "exact";
    case Mode::inner:
      return "inner";
    case Mode::outer:
      return "outer";
  }
  return "?";
}

Reduction reduce(const Region& a, const Region& b, BoolOp op, const UniverseBox& box) {
  switch (op) {
    case BoolOp::intersection:
      return {exact_intersection(a, b), false};
    case BoolOp::union_:
      return {exact_intersection(complement_in_universe(a, box), complement_in_universe(b, box)),
              true};
    case BoolOp::difference:
      return {exact_intersection(a, complement_in_universe(b, box)), false};
  }
  throw InvariantError("unknown Boolean operation");
}

Region round_reduced(const Reduction& red, Mode mode, const UniverseBox& box,
                     RoundingStats* stats) {
  if (mode == Mode::exact) throw PreconditionError("round_reduced: mode must be inner or outer");
  // A complemented result swaps sides: the inner union is the complement of
  // the outer rounding, and vice versa.
  bool inner = mode == Mode::inner;
  bool inner_of_base = red.complemented ? !inner : inner;
  Region r = inner_of_base ? inner_round(red.base, stats) : outer_round(red.base, box, stats);
  return red.complemented ? box_complement(r, box) : r;
}

OpResult apply(const OpRequest& req) {
  require_operand(req.a, "operand A");
  require_operand(req.b, "operand B");
  OpResult out;
  out.box = UniverseBox::around(req.a, req.b);
  out.exact = exact_boolean(req.a, req.b, req.op, out.box);
  if (req.mode == Mode::exact) {
    out.result = out.exact.region;
    return out;
  }
  Reduction red = reduce(req.a, req.b, req.op, out.box);
  out.result = round_reduced(red, req.mode, out.box, &out.rounding);
  return out;
}

Sandwich sandwich(const Region& a, const Region& b, BoolOp op) {
  require_operand(a, "operand A");
  require_operand(b, "operand B");
  Sandwich s;
  s.box = UniverseBox::around(a, b);
  s.exact = exact_boolean(a, b, op, s.box);
  Reduction red = reduce(a, b, op, s.box);
  s.inner = round_reduced(red, Mode::inner, s.box);
  s.outer = round_reduced(red, Mode::outer, s.box);
  if (auto w = check_inclusion(s.inner, s.exact.region)) {
    throw InvariantError("sandwich: inner result escapes the exact " + to_string(op) + ": " +
                         to_string(*w));
  }
  if (auto w = check_inclusion(s.exact.region, s.outer)) {
    throw InvariantError("sandwich: exact " + to_string(op) + " escapes the outer result: " +
                         to_string(*w));
  }
  return s;
}

}  // namespace latbool
