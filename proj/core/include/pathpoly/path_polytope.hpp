#pragma once

#include <utility>
#include <vector>

#include "pathpoly/polytope.hpp"
#include "pathpoly/tree.hpp"

namespace pathpoly {

/** 0/1 indicator of the edges of the leaf-to-leaf path between i and j,
    over the tree's edge coordinate order. */
QVec path_vertex(const Tree& tree, const NodeId& i, const NodeId& j);

/** All path indicators, one per unordered leaf pair, in lexicographic
    leaf-pair order. */
VRep vrep(const Tree& tree);

using LeafPair = std::pair<NodeId, NodeId>;

/** Leaf pairs in the order used by vrep. */
std::vector<LeafPair> leaf_pairs(const Tree& tree);

/** Minimal halfspace description of the path polytope for trees with more
    than three nodes and no internal degree-2 node: nonnegativity for every
    edge whose endpoints both avoid degree 3, one dominance inequality per
    internal node and incident edge, and the leaf-edge sum pinned to 2. */
HRep hrep_minimal(const Tree& tree);

/** Halfspace description valid for every tree: the same constraint
    families plus one equality per internal degree-2 node identifying its
    two edge coordinates. Not minimal when such nodes exist. The
    single-edge tree yields the point description x = 1. */
HRep hrep_general(const Tree& tree);

struct FacetDescriptor {
  enum class Kind {
    nonnegativity,  // x_e >= 0
    dominance,      // edge {center,neighbor} dominated by the others at center
  };

  Kind kind;
  Edge edge;        // the named edge ({center,neighbor} for dominance)
  NodeId center;    // dominance only
  NodeId neighbor;  // dominance only
  LinearConstraint constraint;
  std::vector<LeafPair> incident_pairs;  // lexicographic
};

/** One descriptor per facet, each carrying the combinatorially determined
    list of incident leaf pairs: paths avoiding the edge for nonnegativity,
    paths through {center,neighbor} or avoiding the center entirely for
    dominance. Requires more than three nodes and no degree-2 internals. */
std::vector<FacetDescriptor> facet_descriptors(const Tree& tree);

/** Vertices of the (n,k) hypersimplex: all 0/1 vectors with k ones, in
    lexicographic order of their support sets. Basis names x1..xn. */
VRep hypersimplex_vrep(std::size_t n, std::size_t k);

/** 0 <= x_i <= 1 with the coordinate sum pinned to k. */
HRep hypersimplex_hrep(std::size_t n, std::size_t k);

}  // namespace pathpoly
