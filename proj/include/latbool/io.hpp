#pragma once

// The .lpr region format and SVG export.
//
//   # comment
//   region
//   poly 4 0 0 4 0 4 4 0 4       counter-clockwise filled ring
//   hole 4 1 1 1 3 3 3 3 1       clockwise hole; nesting is computed
//   end
//
// Coordinates are integers, or a/b rationals where allowed.

#include <string>
#include <vector>

#include "latbool/region.hpp"

namespace latbool {

enum class Coordinates { integer, rational };

// Throws ParseError (with line and column) on malformed text and
// ValidationError when the rings do not form a valid region.
Region parse_region(const std::string& text, Coordinates coords = Coordinates::integer);
Region read_region_file(const std::string& path, Coordinates coords = Coordinates::integer);

// Rings in lexicographic order of their smallest vertex, each starting there.
std::string write_region(const Region& r);
void write_region_file(const std::string& path, const Region& r);

struct SvgLayer {
  std::string name;
  Region region;
};

// Lattice grid over the joint bounding box plus one layer group per region.
// Layer styles cycle through exact, inner and outer looks in that order.
std::string render_svg(const std::vector<SvgLayer>& layers);

}  // namespace latbool
