#pragma once

#include <cstddef>
#include <vector>

#include "pathpoly/tree.hpp"

namespace pathpoly {

/** Every tree shape with 1 through max_edges edges, one representative per
    isomorphism class. Nodes are labeled "1".."n" along a canonical traversal
    from the tree's center, so equal shapes always serialize identically.
    Ordered by node count, then by canonical certificate.
    Throws error(errc::bad_parameters) when max_edges is 0. */
std::vector<Tree> all_tree_shapes(std::size_t max_edges);

/** Count of shapes with exactly edge_count edges inside all_tree_shapes
    output; exposed for cross-checks against the known sequence
    1, 1, 2, 3, 6, 11, 23, 47 for 1..8 edges. */
std::size_t count_tree_shapes(std::size_t edge_count);

}  // namespace pathpoly
