#pragma once

#include <string>
#include <string_view>

#include "almostcover/linalg.hpp"

namespace almostcover {

// Point-set text format:
//
//   # optional comments
//   field rational        (or: field gf:<p>)
//   dim <n>
//   point <c1> ... <cn>   (one line per point; a or a/b)
//
// Throws ParseError carrying the offending line number. Duplicate points are
// rejected.
PointSet parse_point_set(std::string_view text);
PointSet read_point_set_file(const std::string& path);

// Canonical rendering; parse_point_set(write_point_set(s)) reproduces s.
std::string write_point_set(const PointSet& set);

}  // namespace almostcover
