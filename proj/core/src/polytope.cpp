#include "pathpoly/polytope.hpp"

#include <algorithm>
#include <utility>

#include "pathpoly/errors.hpp"

namespace pathpoly {

LinearConstraint::LinearConstraint(IVec coeffs, Int rhs, ConstraintKind kind)
    : coeffs_(std::move(coeffs)), rhs_(std::move(rhs)), kind_(kind) {}

LinearConstraint LinearConstraint::build(const QVec& coeffs, const Rat& rhs,
                                         ConstraintKind kind) {
  if (is_zero(coeffs))
    fail(errc::zero_constraint, "all coefficients vanish");
  QVec full = coeffs;
  full.push_back(rhs);
  IVec prim = primitive(full);
  Int prhs = prim.back();
  prim.pop_back();
  if (kind == ConstraintKind::equality) {
    auto lead = std::find_if(prim.begin(), prim.end(),
                             [](const Int& x) { return x != 0; });
    if (lead != prim.end() && *lead < 0) {
      for (Int& x : prim) x = -x;
      prhs = -prhs;
    }
  }
  return LinearConstraint(std::move(prim), std::move(prhs), kind);
}

LinearConstraint LinearConstraint::inequality(const QVec& coeffs,
                                              const Rat& rhs) {
  return build(coeffs, rhs, ConstraintKind::inequality);
}

LinearConstraint LinearConstraint::equality(const QVec& coeffs,
                                            const Rat& rhs) {
  return build(coeffs, rhs, ConstraintKind::equality);
}

Rat LinearConstraint::evaluate(const QVec& x) const {
  if (x.size() != coeffs_.size())
    fail(errc::basis_mismatch, "point has " + std::to_string(x.size()) +
                                   " coordinates, constraint has " +
                                   std::to_string(coeffs_.size()));
  Rat s = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) s += Rat(coeffs_[i]) * x[i];
  return s - Rat(rhs_);
}

bool LinearConstraint::satisfied_by(const QVec& x) const {
  Rat v = evaluate(x);
  return kind_ == ConstraintKind::equality ? v == 0 : v >= 0;
}

std::string LinearConstraint::render(const Basis& basis) const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Int mag = boost::multiprecision::abs(coeffs_[i]);
    if (out.empty())
      out += (coeffs_[i] < 0) ? "-" : "";
    else
      out += (coeffs_[i] < 0) ? " - " : " + ";
    if (mag != 1) out += mag.str() + "*";
    out += "x" + basis.names[i];
  }
  out += (kind_ == ConstraintKind::equality) ? " = " : " >= ";
  out += rhs_.str();
  return out;
}

bool LinearConstraint::operator==(const LinearConstraint& o) const {
  return kind_ == o.kind_ && rhs_ == o.rhs_ && coeffs_ == o.coeffs_;
}

bool LinearConstraint::operator<(const LinearConstraint& o) const {
  for (std::size_t i = 0; i < std::min(coeffs_.size(), o.coeffs_.size());
       ++i) {
    if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
  }
  if (coeffs_.size() != o.coeffs_.size())
    return coeffs_.size() < o.coeffs_.size();
  if (rhs_ != o.rhs_) return rhs_ < o.rhs_;
  return kind_ < o.kind_;
}

VRep VRep::make(Basis basis, std::vector<QVec> points) {
  VRep v;
  v.basis = std::move(basis);
  for (QVec& p : points) {
    if (p.size() != v.basis.size())
      fail(errc::basis_mismatch,
           "point has " + std::to_string(p.size()) + " coordinates, basis " +
               std::to_string(v.basis.size()));
    if (std::find(v.vertices.begin(), v.vertices.end(), p) ==
        v.vertices.end())
      v.vertices.push_back(std::move(p));
  }
  return v;
}

HRep canonicalize(HRep h) {
  for (const LinearConstraint& c : h.inequalities)
    if (c.size() != h.basis.size())
      fail(errc::basis_mismatch, "constraint length mismatch");
  for (const LinearConstraint& c : h.equalities)
    if (c.size() != h.basis.size())
      fail(errc::basis_mismatch, "constraint length mismatch");
  auto tidy = [](std::vector<LinearConstraint>& list) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  };
  tidy(h.inequalities);
  tidy(h.equalities);
  return h;
}

std::size_t affine_dimension(const VRep& v) {
  if (v.vertices.empty())
    fail(errc::empty_vrep, "affine dimension of an empty vertex set");
  std::vector<QVec> diffs;
  for (std::size_t i = 1; i < v.vertices.size(); ++i)
    diffs.push_back(sub(v.vertices[i], v.vertices[0]));
  if (diffs.empty()) return 0;
  return rank_exact(std::move(diffs));
}

bool contains(const HRep& h, const QVec& x) {
  if (x.size() != h.basis.size())
    fail(errc::basis_mismatch, "point has " + std::to_string(x.size()) +
                                   " coordinates, representation has " +
                                   std::to_string(h.basis.size()));
  for (const LinearConstraint& c : h.equalities)
    if (!c.satisfied_by(x)) return false;
  for (const LinearConstraint& c : h.inequalities)
    if (!c.satisfied_by(x)) return false;
  return true;
}

VRep vertices_on_hyperplane(const VRep& v, const LinearConstraint& c) {
  VRep tight;
  tight.basis = v.basis;
  for (const QVec& p : v.vertices) {
    Rat val = c.evaluate(p);
    bool ok = (c.kind() == ConstraintKind::equality) ? val == 0 : val >= 0;
    if (!ok)
      fail(errc::not_valid_inequality,
           "constraint is violated by a listed vertex");
    if (val == 0) tight.vertices.push_back(p);
  }
  return tight;
}

bool is_facet(const VRep& v, const LinearConstraint& c) {
  VRep tight = vertices_on_hyperplane(v, c);
  if (tight.vertices.empty()) return false;
  std::size_t dim = affine_dimension(v);
  if (dim == 0) return false;
  return affine_dimension(tight) == dim - 1;
}

QVec barycenter(const VRep& v) {
  if (v.vertices.empty())
    fail(errc::empty_vrep, "barycenter of an empty vertex set");
  QVec sum(v.basis.size(), Rat(0));
  for (const QVec& p : v.vertices) sum = add(sum, p);
  return scale(sum, Rat(Int(1), Int(v.vertices.size())));
}

EqualitySpan equality_span(const std::vector<LinearConstraint>& equalities,
                           std::size_t dim) {
  std::vector<QVec> rows;
  for (const LinearConstraint& e : equalities) {
    QVec row = to_rational(e.coeffs());
    row.push_back(Rat(e.rhs()));
    rows.push_back(std::move(row));
  }
  EqualitySpan span;
  span.reduced = rref(std::move(rows));
  span.dim = dim;
  span.consistent = true;
  for (std::size_t p : span.reduced.pivot_cols)
    if (p == dim) span.consistent = false;
  return span;
}

std::optional<LinearConstraint> reduce_modulo(const LinearConstraint& c,
                                              const EqualitySpan& span) {
  if (!span.consistent)
    fail(errc::internal, "reduction modulo an inconsistent system");
  QVec v = to_rational(c.coeffs());
  v.push_back(Rat(c.rhs()));
  for (std::size_t r = 0; r < span.reduced.rows.size(); ++r) {
    Rat f = v[span.reduced.pivot_cols[r]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] -= f * span.reduced.rows[r][j];
  }
  Rat rhs = v.back();
  v.pop_back();
  if (is_zero(v)) {
    bool impossible = (c.kind() == ConstraintKind::equality) ? rhs != 0
                                                             : rhs > 0;
    if (impossible)
      fail(errc::internal, "constraint reduces to an unsatisfiable bound");
    return std::nullopt;
  }
  return c.kind() == ConstraintKind::equality
             ? LinearConstraint::equality(v, rhs)
             : LinearConstraint::inequality(v, rhs);
}

MembershipResult classify_membership(const HRep& h, const QVec& x) {
  if (x.size() != h.basis.size())
    fail(errc::basis_mismatch, "point has " + std::to_string(x.size()) +
                                   " coordinates, representation has " +
                                   std::to_string(h.basis.size()));
  HRep canon = canonicalize(h);
  for (const LinearConstraint& c : canon.equalities)
    if (!c.satisfied_by(x)) return {Membership::outside, c};
  for (const LinearConstraint& c : canon.inequalities)
    if (!c.satisfied_by(x)) return {Membership::outside, c};

  EqualitySpan span = equality_span(canon.equalities, h.basis.size());
  for (const LinearConstraint& c : canon.inequalities) {
    if (!c.tight_at(x)) continue;
    if (reduce_modulo(c, span).has_value())
      return {Membership::boundary, std::nullopt};
  }
  return {Membership::relative_interior, std::nullopt};
}

}  // namespace pathpoly
