#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathpoly/basis.hpp"
#include "pathpoly/linalg.hpp"
#include "pathpoly/numeric.hpp"

namespace pathpoly {

enum class ConstraintKind { inequality, equality };

// One exact constraint "a . x >= rhs" or "a . x = rhs" over a basis that is
// tracked by the enclosing representation. Stored primitive: integer
// entries, gcd(coeffs, rhs) = 1, and equalities oriented so the first
// nonzero coefficient is positive. The zero coefficient vector is rejected.
class LinearConstraint {
 public:
  static LinearConstraint inequality(const QVec& coeffs, const Rat& rhs);
  static LinearConstraint equality(const QVec& coeffs, const Rat& rhs);

  const IVec& coeffs() const { return coeffs_; }
  const Int& rhs() const { return rhs_; }
  ConstraintKind kind() const { return kind_; }
  std::size_t size() const { return coeffs_.size(); }

  /** a . x - rhs */
  Rat evaluate(const QVec& x) const;
  bool satisfied_by(const QVec& x) const;
  bool tight_at(const QVec& x) const { return evaluate(x) == 0; }

  /** Readable form such as "x{1,2} + x{1,3} - x{1,5} >= 0". */
  std::string render(const Basis& basis) const;

  bool operator==(const LinearConstraint& o) const;
  bool operator<(const LinearConstraint& o) const;

 private:
  LinearConstraint(IVec coeffs, Int rhs, ConstraintKind kind);
  static LinearConstraint build(const QVec& coeffs, const Rat& rhs,
                                ConstraintKind kind);

  IVec coeffs_;
  Int rhs_;
  ConstraintKind kind_;
};

// Vertex list. Constructors deduplicate; extremality of every listed point
// is a promise of the producing operation, not of this container.
struct VRep {
  Basis basis;
  std::vector<QVec> vertices;

  static VRep make(Basis basis, std::vector<QVec> points);
};

struct HRep {
  Basis basis;
  std::vector<LinearConstraint> inequalities;
  std::vector<LinearConstraint> equalities;
};

/** Sorts both constraint lists and removes duplicates. Idempotent; two
    representations listing the same constraint sets compare equal after
    this. Constraint scaling is already canonical by construction. */
HRep canonicalize(HRep h);

/** Dimension of the affine hull of the vertices; 0 for a single point. */
std::size_t affine_dimension(const VRep& v);

/** Exact membership in every constraint of h. */
bool contains(const HRep& h, const QVec& x);

/** Subset of vertices on the hyperplane of c, in input order. c must be
    valid on every vertex. */
VRep vertices_on_hyperplane(const VRep& v, const LinearConstraint& c);

/** True iff the tight set of c spans a hyperplane inside the hull: its
    affine dimension is exactly affine_dimension(v) - 1. */
bool is_facet(const VRep& v, const LinearConstraint& c);

QVec barycenter(const VRep& v);

// Canonical representation of the affine span of an equality system, used
// to compare constraints modulo that span.
struct EqualitySpan {
  Rref reduced;      // rref of the (coeffs | rhs) rows
  std::size_t dim;   // number of coordinates
  bool consistent;   // false when the system forces 0 = nonzero
};

EqualitySpan equality_span(const std::vector<LinearConstraint>& equalities,
                           std::size_t dim);

/** Eliminates the span's pivot coordinates from c. Returns nullopt when c
    reduces to the vacuous "0 >= nonpositive"; throws when it reduces to an
    unsatisfiable "0 >= positive", which well-formed inputs never produce. */
std::optional<LinearConstraint> reduce_modulo(const LinearConstraint& c,
                                              const EqualitySpan& span);

enum class Membership { outside, boundary, relative_interior };

struct MembershipResult {
  Membership status;
  // first violated constraint in canonical order, for outside verdicts
  std::optional<LinearConstraint> violated;
};

/** Exact classification of x against h. Inequalities that reduce to
    nothing modulo the equalities hold with equality everywhere, so they do
    not demote an interior point to the boundary. */
MembershipResult classify_membership(const HRep& h, const QVec& x);

}  // namespace pathpoly
