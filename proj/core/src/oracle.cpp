#include "pathpoly/oracle.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "pathpoly/errors.hpp"

namespace pathpoly {

namespace {

Int idot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IVec iprimitive(IVec v) {
  Int g = ivec_gcd(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

// Extreme rays of the pointed cone {y : row . y >= 0 for every row},
// Motzkin-style: start from a simplicial subcone, insert the remaining
// inequalities one at a time. Rays come back primitive and sorted.
std::vector<IVec> dd_extreme_rays(const std::vector<IVec>& rows) {
  if (rows.empty()) fail(errc::internal, "cone without constraints");
  std::size_t n = rows[0].size();

  // greedy independent subset for the simplicial start
  std::vector<std::size_t> chosen;
  std::vector<QVec> picked;
  for (std::size_t i = 0; i < rows.size() && chosen.size() < n; ++i) {
    picked.push_back(to_rational(rows[i]));
    if (rank_exact(picked) == picked.size())
      chosen.push_back(i);
    else
      picked.pop_back();
  }
  if (chosen.size() < n)
    fail(errc::internal, "cone is not pointed; rays are not well defined");

  std::vector<QVec> basis_matrix;
  for (std::size_t i : chosen) basis_matrix.push_back(to_rational(rows[i]));
  auto inv = inverse(std::move(basis_matrix));
  if (!inv) fail(errc::internal, "independent rows failed to invert");

  std::vector<IVec> rays;
  for (std::size_t j = 0; j < n; ++j) {
    QVec column(n);
    for (std::size_t i = 0; i < n; ++i) column[i] = (*inv)[i][j];
    rays.push_back(primitive(column));
  }

  std::vector<std::size_t> processed = chosen;
  std::set<std::size_t> in_start(chosen.begin(), chosen.end());

  auto adjacent = [&](const IVec& p, const IVec& q) {
    std::vector<QVec> tight;
    for (std::size_t r : processed)
      if (idot(rows[r], p) == 0 && idot(rows[r], q) == 0)
        tight.push_back(to_rational(rows[r]));
    return rank_exact(std::move(tight)) == n - 2;
  };

  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (in_start.count(r)) continue;
    std::vector<IVec> pos, zero, neg;
    for (const IVec& ray : rays) {
      Int s = idot(rows[r], ray);
      (s > 0 ? pos : s == 0 ? zero : neg).push_back(ray);
    }
    if (!neg.empty()) {
      std::set<IVec> next(pos.begin(), pos.end());
      next.insert(zero.begin(), zero.end());
      for (const IVec& p : pos) {
        for (const IVec& q : neg) {
          if (!adjacent(p, q)) continue;
          Int sp = idot(rows[r], p);
          Int sq = idot(rows[r], q);
          IVec w(n);
          for (std::size_t i = 0; i < n; ++i) w[i] = sp * q[i] - sq * p[i];
          next.insert(iprimitive(std::move(w)));
        }
      }
      rays.assign(next.begin(), next.end());
    }
    processed.push_back(r);
  }

  std::sort(rays.begin(), rays.end());
  return rays;
}

std::vector<LinearConstraint> affine_hull_equalities(const VRep& v) {
  std::vector<QVec> diffs;
  for (std::size_t i = 1; i < v.vertices.size(); ++i)
    diffs.push_back(sub(v.vertices[i], v.vertices[0]));
  std::vector<QVec> normals = nullspace_basis(diffs, v.basis.size());

  std::vector<LinearConstraint> eqs;
  for (const QVec& a : normals)
    eqs.push_back(LinearConstraint::equality(a, dot(a, v.vertices[0])));
  std::sort(eqs.begin(), eqs.end());
  return eqs;
}

std::vector<std::size_t> free_columns(const EqualitySpan& span) {
  std::vector<bool> pivot(span.dim, false);
  for (std::size_t p : span.reduced.pivot_cols)
    if (p < span.dim) pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < span.dim; ++c)
    if (!pivot[c]) free.push_back(c);
  return free;
}

}  // namespace

HRep OracleReport::to_hrep() const {
  return HRep{basis, facet_constraints, equality_constraints};
}

OracleReport minimal_hrep(const VRep& v, const OracleCaps& caps) {
  if (v.vertices.empty())
    fail(errc::empty_vrep, "no vertices to describe");
  if (v.basis.size() > caps.max_coordinates ||
      v.vertices.size() > caps.max_vertices)
    fail(errc::cap_exceeded,
         std::to_string(v.vertices.size()) + " vertices in " +
             std::to_string(v.basis.size()) +
             " coordinates exceeds the cap (" +
             std::to_string(caps.max_vertices) + " vertices, " +
             std::to_string(caps.max_coordinates) + " coordinates)");

  auto t0 = std::chrono::steady_clock::now();

  OracleReport report;
  report.basis = v.basis;
  report.input_vertex_count = v.vertices.size();
  report.equality_constraints = affine_hull_equalities(v);
  report.affine_dim = v.basis.size() - report.equality_constraints.size();

  if (report.affine_dim > 0) {
    EqualitySpan span =
        equality_span(report.equality_constraints, v.basis.size());
    std::vector<std::size_t> free = free_columns(span);

    // lifted points (1, t) over the free coordinates
    std::vector<IVec> rows;
    for (const QVec& x : v.vertices) {
      QVec lifted{Rat(1)};
      for (std::size_t c : free) lifted.push_back(x[c]);
      rows.push_back(primitive(lifted));
    }

    for (const IVec& ray : dd_extreme_rays(rows)) {
      QVec coeffs(v.basis.size(), Rat(0));
      for (std::size_t k = 0; k < free.size(); ++k)
        coeffs[free[k]] = Rat(ray[k + 1]);
      report.facet_constraints.push_back(
          LinearConstraint::inequality(coeffs, -Rat(ray[0])));
    }
    std::sort(report.facet_constraints.begin(),
              report.facet_constraints.end());
  }

  report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - t0);
  return report;
}

VRep enumerate_vertices(const HRep& h, const OracleCaps& caps) {
  if (h.basis.size() > caps.max_coordinates)
    fail(errc::cap_exceeded, std::to_string(h.basis.size()) +
                                 " coordinates exceeds the cap (" +
                                 std::to_string(caps.max_coordinates) + ")");
  HRep canon = canonicalize(h);
  EqualitySpan span = equality_span(canon.equalities, h.basis.size());
  if (!span.consistent) return VRep::make(h.basis, {});

  std::vector<LinearConstraint> reduced;
  for (const LinearConstraint& c : canon.inequalities) {
    auto rc = reduce_modulo(c, span);
    if (rc) reduced.push_back(std::move(*rc));
  }

  std::vector<std::size_t> free = free_columns(span);
  std::size_t r = free.size();

  auto unproject = [&](const QVec& t) {
    QVec x(h.basis.size(), Rat(0));
    for (std::size_t k = 0; k < r; ++k) x[free[k]] = t[k];
    for (std::size_t row = 0; row < span.reduced.rows.size(); ++row) {
      std::size_t p = span.reduced.pivot_cols[row];
      Rat value = span.reduced.rows[row].back();  // rhs column
      for (std::size_t k = 0; k < r; ++k)
        value -= span.reduced.rows[row][free[k]] * t[k];
      x[p] = value;
    }
    return x;
  };

  std::vector<QVec> points;
  if (r == 0) {
    points.push_back(unproject({}));
  } else {
    // homogenized cone over (t, tau); tau > 0 rays are the vertices
    std::vector<IVec> rows;
    for (const LinearConstraint& c : reduced) {
      QVec row;
      for (std::size_t cidx : free) row.push_back(Rat(c.coeffs()[cidx]));
      row.push_back(-Rat(c.rhs()));
      rows.push_back(primitive(row));
    }
    QVec tau_row(r + 1, Rat(0));
    tau_row.back() = 1;
    rows.push_back(primitive(tau_row));

    for (const IVec& ray : dd_extreme_rays(rows)) {
      if (ray.back() == 0)
        fail(errc::internal, "unbounded direction during vertex enumeration");
      QVec t(r);
      for (std::size_t k = 0; k < r; ++k)
        t[k] = Rat(ray[k], ray.back());
      points.push_back(unproject(t));
    }
  }
  std::sort(points.begin(), points.end());
  return VRep::make(h.basis, std::move(points));
}

bool all_vertices_extremal(const VRep& v, const OracleCaps& caps) {
  OracleReport report = minimal_hrep(v, caps);
  if (report.affine_dim == 0) return v.vertices.size() <= 1;

  // a point of the polytope is extreme iff its tight facet normals have
  // full rank in the quotient coordinates
  EqualitySpan span =
      equality_span(report.equality_constraints, v.basis.size());
  std::vector<std::size_t> free = free_columns(span);
  for (const QVec& x : v.vertices) {
    std::vector<QVec> tight;
    for (const LinearConstraint& c : report.facet_constraints) {
      if (c.evaluate(x) != 0) continue;
      QVec reduced_row;
      for (std::size_t cidx : free) reduced_row.push_back(Rat(c.coeffs()[cidx]));
      tight.push_back(std::move(reduced_row));
    }
    if (rank_exact(std::move(tight)) != report.affine_dim) return false;
  }
  return true;
}

ComparisonResult compare_hreps(const HRep& a, const HRep& b,
                               const OracleCaps& caps) {
  if (a.basis != b.basis)
    fail(errc::basis_mismatch, "descriptions use different coordinates");

  HRep ca = canonicalize(a);
  HRep cb = canonicalize(b);
  EqualitySpan sa = equality_span(ca.equalities, ca.basis.size());
  EqualitySpan sb = equality_span(cb.equalities, cb.basis.size());

  auto reduced_set = [](const HRep& h, const EqualitySpan& span) {
    std::set<LinearConstraint> out;
    for (const LinearConstraint& c : h.inequalities) {
      auto rc = reduce_modulo(c, span);
      if (rc) out.insert(std::move(*rc));
    }
    return out;
  };

  if (sa.consistent && sb.consistent &&
      sa.reduced.rows == sb.reduced.rows &&
      reduced_set(ca, sa) == reduced_set(cb, sb))
    return {Verdict::equal, std::nullopt};

  VRep va = enumerate_vertices(ca, caps);
  VRep vb = enumerate_vertices(cb, caps);
  for (const QVec& x : vb.vertices)
    if (!contains(ca, x)) return {Verdict::different, x};
  for (const QVec& x : va.vertices)
    if (!contains(cb, x)) return {Verdict::different, x};
  if (va.vertices.empty() != vb.vertices.empty()) {
    const VRep& nonempty = va.vertices.empty() ? vb : va;
    return {Verdict::different, nonempty.vertices.front()};
  }
  return {Verdict::equivalent, std::nullopt};
}

}  // namespace pathpoly
