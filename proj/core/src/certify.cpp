#include "pathpoly/certify.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "pathpoly/enumerate.hpp"
#include "pathpoly/errors.hpp"
#include "pathpoly/path_polytope.hpp"
#include "pathpoly/tfp.hpp"

namespace pathpoly {

namespace {

std::string point_text(const QVec& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(x[i]);
  }
  return out + ")";
}

std::string descriptor_name(const FacetDescriptor& d) {
  if (d.kind == FacetDescriptor::Kind::nonnegativity)
    return "nonnegativity at " + d.edge.name();
  return "dominance at node " + d.center + " toward " + d.neighbor;
}

LinearConstraint nonnegativity_of(const Tree& tree, const Edge& e) {
  QVec coeffs(tree.edges().size(), Rat(0));
  coeffs[tree.edge_index(e)] = 1;
  return LinearConstraint::inequality(coeffs, Rat(0));
}

LinearConstraint bump_rhs(const LinearConstraint& c) {
  QVec coeffs = to_rational(c.coeffs());
  Rat rhs = Rat(c.rhs()) + 1;
  return c.kind() == ConstraintKind::inequality
             ? LinearConstraint::inequality(coeffs, rhs)
             : LinearConstraint::equality(coeffs, rhs);
}

std::size_t internal_degree2_count(const Tree& tree) {
  std::size_t count = 0;
  for (const NodeId& v : tree.internal_nodes())
    if (tree.degree(v) == 2) ++count;
  return count;
}

}  // namespace

TreeReport certify_tree(const Tree& tree, const CertifyOptions& options) {
  TreeReport report;
  for (const Edge& e : tree.edges()) {
    if (!report.label.empty()) report.label += " ";
    report.label += e.name();
  }
  report.node_count = tree.nodes().size();
  report.edge_count = tree.edges().size();

  auto note = [&](const std::string& line) {
    report.failures.push_back(line);
  };
  auto guard = [&](const std::string& what, auto&& check) {
    try {
      check();
    } catch (const error& e) {
      if (e.code() == errc::cap_exceeded) throw;
      note(what + ": " + e.what());
    }
  };

  VRep v = vrep(tree);
  OracleReport oracle = minimal_hrep(v, options.caps);
  report.dim = oracle.affine_dim;
  report.facet_count = oracle.facet_constraints.size();

  guard("extremality", [&] {
    if (!all_vertices_extremal(v, options.caps))
      note("extremality: a listed path vector is not an extreme point");
  });

  guard("dimension law", [&] {
    std::size_t expected =
        tree.edges().size() - internal_degree2_count(tree) - 1;
    std::size_t actual = affine_dimension(v);
    if (actual != expected)
      note("dimension law: affine dimension is " + std::to_string(actual) +
           ", edge and degree-2 counts predict " + std::to_string(expected));
  });

  bool closed_form_is_minimal =
      !tree.has_degree_two_internal() && tree.nodes().size() > 3;

  guard("closed form", [&] {
    HRep closed =
        closed_form_is_minimal ? hrep_minimal(tree) : hrep_general(tree);

    for (const QVec& x : v.vertices)
      if (!contains(closed, x)) {
        note("closed form: path vector " + point_text(x) +
             " violates a closed-form constraint");
        return;
      }

    if (options.inject_defect && !closed.inequalities.empty())
      closed.inequalities.front() = bump_rhs(closed.inequalities.front());
    else if (options.inject_defect)
      closed.equalities.front() = bump_rhs(closed.equalities.front());

    ComparisonResult cmp =
        compare_hreps(closed, oracle.to_hrep(), options.caps);
    if (cmp.verdict == Verdict::different)
      note("closed form: describes a different polytope than the oracle; "
           "witness point " + point_text(*cmp.witness));
    else if (cmp.verdict == Verdict::equivalent && closed_form_is_minimal)
      note("closed form: same polytope but the constraint classes differ "
           "from the oracle's minimal description");
  });

  if (closed_form_is_minimal) {
    guard("descriptors", [&] {
      for (const FacetDescriptor& d : facet_descriptors(tree)) {
        std::set<QVec> expected;
        for (const auto& [i, j] : d.incident_pairs)
          expected.insert(path_vertex(tree, i, j));
        VRep tight = vertices_on_hyperplane(v, d.constraint);
        std::set<QVec> actual(tight.vertices.begin(), tight.vertices.end());
        if (expected != actual)
          note("descriptors: combinatorial incidence of " +
               descriptor_name(d) + " disagrees with the tight vertex set");
        if (!is_facet(v, d.constraint))
          note("descriptors: " + descriptor_name(d) + " is not a facet");
      }
    });
  }

  guard("degree-3 exclusion", [&] {
    for (const Edge& e : tree.edges()) {
      if (tree.degree(e.a()) != 3 && tree.degree(e.b()) != 3) continue;
      LinearConstraint c = nonnegativity_of(tree, e);
      for (const QVec& x : v.vertices)
        if (!c.satisfied_by(x))
          note("degree-3 exclusion: nonnegativity at " + e.name() +
               " fails on " + point_text(x));
      if (is_facet(v, c))
        note("degree-3 exclusion: nonnegativity at " + e.name() +
             " is a facet despite the degree-3 endpoint");
    }
  });

  for (const Edge& cut : tree.edges()) {
    if (tree.is_leaf(cut.a()) || tree.is_leaf(cut.b())) continue;
    guard("fiber product at " + cut.name(), [&] {
      SplitResult s = split_at_edge(tree, cut);
      // The projections only cover the simplex when each factor keeps at
      // least two leaves besides its cap, so narrower cuts are not checked.
      if (s.t1.leaves().size() < 3 || s.t2.leaves().size() < 3) return;
      GluingSpec spec = GluingSpec::make(s.t1, s.e1, s.t2, s.e2);

      GlueResult glued = glue(spec.t1, spec.e1, spec.t2, spec.e2);
      if (glued.tree.edges() != tree.edges()) {
        note("fiber product at " + cut.name() +
             ": severing and regluing does not rebuild the tree");
        return;
      }

      VRep v1 = vrep(spec.t1);
      VRep v2 = vrep(spec.t2);
      auto [p1, p2] = gluing_projections(spec);
      VRep join1 = free_join_with_origin(v1);
      VRep join2 = free_join_with_origin(v2);
      VRep product = toric_fiber_product(join1, join2, p1, p2);

      std::size_t product_dim = affine_dimension(product);
      std::size_t factor_dims = affine_dimension(v1) + affine_dimension(v2);
      if (product_dim != factor_dims)
        note("fiber product at " + cut.name() + ": dimension " +
             std::to_string(product_dim) + " does not add up from factors (" +
             std::to_string(factor_dims) + ")");

      AffineMap iso = tfp_isomorphism(spec);
      std::set<QVec> image;
      for (const QVec& x : product.vertices) image.insert(iso.apply(x));
      std::set<QVec> target(v.vertices.begin(), v.vertices.end());
      if (image != target)
        note("fiber product at " + cut.name() +
             ": mapped vertices differ from the path vectors");
    });
  }

  return report;
}

std::vector<TreeReport> certify_all(std::size_t max_edges,
                                    const CertifyOptions& options) {
  std::vector<TreeReport> reports;
  for (const Tree& tree : all_tree_shapes(max_edges))
    reports.push_back(certify_tree(tree, options));
  return reports;
}

bool all_ok(const std::vector<TreeReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const TreeReport& r) { return r.ok(); });
}

std::string render_reports(const std::vector<TreeReport>& reports) {
  std::ostringstream out;
  out << " nodes  edges  dim  facets  status  tree\n";
  for (const TreeReport& r : reports) {
    out << std::setw(6) << r.node_count << std::setw(7) << r.edge_count
        << std::setw(5) << r.dim << std::setw(8) << r.facet_count << "  "
        << (r.ok() ? "pass    " : "MISMATCH") << "  " << r.label << "\n";
  }

  std::size_t bad = 0;
  for (const TreeReport& r : reports) {
    if (r.ok()) continue;
    ++bad;
    out << "\nmismatch on " << r.label << "\n";
    for (const std::string& f : r.failures) out << "  - " << f << "\n";
  }

  out << "\n";
  if (bad == 0)
    out << "all " << reports.size() << " trees certified\n";
  else
    out << bad << " of " << reports.size() << " trees mismatched\n";
  return out.str();
}

}  // namespace pathpoly
