#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "pathpoly/polytope.hpp"

namespace pathpoly {

// Desk-scale refusal thresholds for the enumeration-based routines; they
// protect against accidental exponential blowups, not against adversaries.
struct OracleCaps {
  std::size_t max_coordinates = 12;
  std::size_t max_vertices = 100;
};

struct OracleReport {
  Basis basis;
  std::size_t input_vertex_count = 0;
  std::size_t affine_dim = 0;
  // facets as canonical representatives modulo the equality span, sorted
  std::vector<LinearConstraint> facet_constraints;
  // canonical basis of all equalities valid on the input, sorted
  std::vector<LinearConstraint> equality_constraints;
  std::chrono::microseconds elapsed{0};

  HRep to_hrep() const;
};

/** Exact minimal halfspace description of conv(vertices), computed from
    scratch by double description over the lifted cone. Shares nothing with
    the closed-form constructions beyond basic linear algebra. */
OracleReport minimal_hrep(const VRep& v, const OracleCaps& caps = {});

/** All vertices of the polyhedron h describes, sorted lexicographically.
    h must describe a bounded set. */
VRep enumerate_vertices(const HRep& h, const OracleCaps& caps = {});

/** True iff no listed point is a convex combination of the others. */
bool all_vertices_extremal(const VRep& v, const OracleCaps& caps = {});

enum class Verdict {
  equal,       // same constraint sets modulo the equality span
  equivalent,  // same polytope through different constraints
  different,
};

struct ComparisonResult {
  Verdict verdict;
  // a point satisfying one description and violating the other
  std::optional<QVec> witness;
};

/** Compares two descriptions over the same basis. Constraint-level
    equality is decided in the quotient modulo each side's equality span;
    otherwise the vertex sets decide whether the polytopes coincide. */
ComparisonResult compare_hreps(const HRep& a, const HRep& b,
                               const OracleCaps& caps = {});

}  // namespace pathpoly
