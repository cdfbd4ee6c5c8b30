#include "pathpoly/errors.hpp"

namespace pathpoly {

const char* errc_name(errc c) {
  switch (c) {
    case errc::malformed_edge_list: return "MalformedEdgeList";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::self_loop: return "SelfLoop";
    case errc::disconnected: return "Disconnected";
    case errc::has_cycle: return "HasCycle";
    case errc::too_few_nodes: return "TooFewNodes";
    case errc::malformed_newick: return "MalformedNewick";
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::unknown_node: return "UnknownNode";
    case errc::equal_endpoints: return "EqualEndpoints";
    case errc::not_a_leaf: return "NotALeaf";
    case errc::not_leaf_edge: return "NotLeafEdge";
    case errc::label_collision: return "LabelCollision";
    case errc::has_degree_two_internal: return "HasDegreeTwoInternal";
    case errc::no_internal_node: return "NoInternalNode";
    case errc::too_small: return "TooSmall";
    case errc::empty_vrep: return "EmptyVRep";
    case errc::basis_mismatch: return "BasisMismatch";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_valid_inequality: return "NotValidInequality";
    case errc::zero_constraint: return "ZeroConstraint";
    case errc::bad_parameters: return "BadParameters";
    case errc::invalid_spec: return "InvalidSpec";
    case errc::origin_in_affine_hull: return "OriginInAffineHull";
    case errc::projection_image_mismatch: return "ProjectionImageMismatch";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace pathpoly
