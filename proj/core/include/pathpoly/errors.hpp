#pragma once

#include <stdexcept>
#include <string>

namespace pathpoly {

// Failure conditions raised by the library. Each maps to one named
// precondition or format rule so callers can react programmatically.
enum class errc {
  // input parsing
  malformed_edge_list,
  duplicate_edge,
  self_loop,
  disconnected,
  has_cycle,
  too_few_nodes,
  malformed_newick,
  duplicate_label,
  // tree operations
  unknown_node,
  equal_endpoints,
  not_a_leaf,
  not_leaf_edge,
  label_collision,
  has_degree_two_internal,
  no_internal_node,
  too_small,
  // polytope operations
  empty_vrep,
  basis_mismatch,
  dimension_mismatch,
  not_valid_inequality,
  zero_constraint,
  bad_parameters,
  // gluing / fiber products
  invalid_spec,
  origin_in_affine_hull,
  projection_image_mismatch,
  // oracle
  cap_exceeded,
  internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace pathpoly
