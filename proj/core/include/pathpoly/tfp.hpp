#pragma once

#include <utility>
#include <vector>

#include "pathpoly/affine.hpp"
#include "pathpoly/polytope.hpp"
#include "pathpoly/tree.hpp"

namespace pathpoly {

// A pair of trees with one marked leaf edge each, the data needed to glue
// them. Factor node labels must be disjoint.
struct GluingSpec {
  Tree t1;
  Edge e1;
  Tree t2;
  Edge e2;

  static GluingSpec make(Tree t1, Edge e1, Tree t2, Edge e2);
};

/** Appends the origin as an extra vertex. The input must not contain the
    origin in its affine hull (path polytopes never do: their leaf-edge
    coordinates sum to 2); the affine dimension grows by exactly one. */
VRep free_join_with_origin(const VRep& v);

// Affine projection of one glued factor onto the coordinate simplex with
// basis q1,q2,q3. Every factor vertex lands on a simplex vertex: q2 for
// paths through the glued edge, q1 (left side) or q3 (right side) split
// between paths missing it and the adjoined origin.
struct GluingProjection {
  Side side;
  AffineMap map;
};

/** The pair of simplex projections attached to a gluing. Both factors need
    at least two edges so that every leaf path crosses exactly two
    leaf edges. */
std::pair<GluingProjection, GluingProjection> gluing_projections(
    const GluingSpec& spec);

struct MatchedPair {
  std::size_t i;  // index into the left vertex list
  std::size_t j;  // index into the right vertex list
};

/** Index pairs whose projections agree, in lexicographic (i, j) order.
    Every projected point must be a simplex vertex and each of the three
    simplex vertices must be hit on both sides. */
std::vector<MatchedPair> matched_pairs(const VRep& v1, const VRep& v2,
                                       const GluingProjection& p1,
                                       const GluingProjection& p2);

/** Vertices (x, y) of the fiber product: one concatenated vector per
    matched pair, over the concatenated bases. */
VRep toric_fiber_product(const VRep& v1, const VRep& v2,
                         const GluingProjection& p1,
                         const GluingProjection& p2);

/** Linear bijection from fiber-product coordinates onto the glued tree's
    edge space: both glued-edge coordinates map to half of the merged-edge
    coordinate, all others to themselves. */
AffineMap tfp_isomorphism(const GluingSpec& spec);

}  // namespace pathpoly
