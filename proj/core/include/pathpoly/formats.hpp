#pragma once

#include <string>
#include <vector>

#include "pathpoly/path_polytope.hpp"
#include "pathpoly/polytope.hpp"

namespace pathpoly {

// The text formats below follow the exact-rational polyhedron file layout
// of the classic enumeration tools: optional '*' comment lines, a header
// naming the representation, "begin", "<rows> <cols> rational", the matrix,
// "end". Entries are integers or "p/q".

/** V-representation. Rows are "1 v1 .. vn". The comment block records the
    coordinate order; when pairs is nonempty it must run parallel to the
    vertex list and each row gets a leaf-pair comment. */
std::string write_ext(const VRep& v,
                      const std::vector<LeafPair>& pairs = {});

/** Reads the layout produced by write_ext. Coordinate names are recovered
    from the "* coordinate order:" comment when present, else c1..cn.
    Rows must be vertices (leading entry 1). Throws
    error(errc::bad_parameters) on malformed input. */
VRep parse_ext(const std::string& text);

/** H-representation. Rows are "b a1 .. an" meaning b + a.x >= 0; equality
    rows come first and are announced by a "linearity" line. */
std::string write_ine(const HRep& h);

}  // namespace pathpoly
