#include "pathpoly/path_polytope.hpp"

#include <algorithm>
#include <string>

#include "pathpoly/errors.hpp"

namespace pathpoly {

namespace {

QVec edge_indicator(const Tree& tree, const std::vector<Edge>& edges) {
  QVec v(tree.edges().size(), Rat(0));
  for (const Edge& e : edges) v[tree.edge_index(e)] = 1;
  return v;
}

LinearConstraint nonnegativity(const Tree& tree, const Edge& e) {
  QVec coeffs(tree.edges().size(), Rat(0));
  coeffs[tree.edge_index(e)] = 1;
  return LinearConstraint::inequality(coeffs, 0);
}

// at center u, edge {u,v} is bounded by the sum of the other edges at u
LinearConstraint dominance(const Tree& tree, const NodeId& u,
                           const NodeId& v) {
  QVec coeffs(tree.edges().size(), Rat(0));
  for (const NodeId& w : tree.neighbors(u))
    coeffs[tree.edge_index(Edge(u, w))] = (w == v) ? -1 : 1;
  return LinearConstraint::inequality(coeffs, 0);
}

LinearConstraint leaf_edge_sum(const Tree& tree) {
  QVec coeffs(tree.edges().size(), Rat(0));
  for (const Edge& e : tree.leaf_edges()) coeffs[tree.edge_index(e)] = 1;
  return LinearConstraint::equality(coeffs, 2);
}

bool away_from_degree_three(const Tree& tree, const Edge& e) {
  return tree.degree(e.a()) != 3 && tree.degree(e.b()) != 3;
}

}  // namespace

QVec path_vertex(const Tree& tree, const NodeId& i, const NodeId& j) {
  if (!tree.has_node(i) || !tree.is_leaf(i))
    fail(errc::not_a_leaf, "'" + i + "' is not a leaf");
  if (!tree.has_node(j) || !tree.is_leaf(j))
    fail(errc::not_a_leaf, "'" + j + "' is not a leaf");
  if (i == j) fail(errc::equal_endpoints, "leaf pair needs two leaves");
  return edge_indicator(tree, tree.path_edges(i, j));
}

std::vector<LeafPair> leaf_pairs(const Tree& tree) {
  const std::vector<NodeId>& ls = tree.leaves();
  std::vector<LeafPair> pairs;
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j)
      pairs.emplace_back(ls[i], ls[j]);
  return pairs;
}

VRep vrep(const Tree& tree) {
  std::vector<QVec> points;
  for (const LeafPair& p : leaf_pairs(tree))
    points.push_back(path_vertex(tree, p.first, p.second));
  return VRep::make(tree.edge_basis(), std::move(points));
}

HRep hrep_minimal(const Tree& tree) {
  if (tree.nodes().size() <= 3)
    fail(errc::too_small,
         "trees on at most three nodes carry no facet inequalities; "
         "use the general description");
  if (tree.has_degree_two_internal())
    fail(errc::has_degree_two_internal,
         "degree-2 internal nodes need the general description");

  HRep h;
  h.basis = tree.edge_basis();
  for (const Edge& e : tree.edges())
    if (away_from_degree_three(tree, e))
      h.inequalities.push_back(nonnegativity(tree, e));
  for (const NodeId& u : tree.internal_nodes())
    for (const NodeId& v : tree.neighbors(u))
      h.inequalities.push_back(dominance(tree, u, v));
  h.equalities.push_back(leaf_edge_sum(tree));
  return canonicalize(std::move(h));
}

HRep hrep_general(const Tree& tree) {
  HRep h;
  h.basis = tree.edge_basis();
  if (tree.edges().size() == 1) {
    h.equalities.push_back(LinearConstraint::equality({Rat(1)}, 1));
    return h;
  }
  for (const Edge& e : tree.edges())
    if (away_from_degree_three(tree, e))
      h.inequalities.push_back(nonnegativity(tree, e));
  for (const NodeId& u : tree.internal_nodes())
    for (const NodeId& v : tree.neighbors(u))
      h.inequalities.push_back(dominance(tree, u, v));
  h.equalities.push_back(leaf_edge_sum(tree));
  for (const NodeId& u : tree.internal_nodes()) {
    if (tree.degree(u) != 2) continue;
    QVec coeffs(tree.edges().size(), Rat(0));
    coeffs[tree.edge_index(Edge(u, tree.neighbors(u)[0]))] = 1;
    coeffs[tree.edge_index(Edge(u, tree.neighbors(u)[1]))] = -1;
    h.equalities.push_back(LinearConstraint::equality(coeffs, 0));
  }
  return canonicalize(std::move(h));
}

std::vector<FacetDescriptor> facet_descriptors(const Tree& tree) {
  if (tree.nodes().size() <= 3)
    fail(errc::too_small, "trees on at most three nodes have no facets");
  if (tree.has_degree_two_internal())
    fail(errc::has_degree_two_internal,
         "facet structure requires no degree-2 internal nodes");

  // path edge sets per leaf pair, reused by every descriptor
  std::vector<LeafPair> pairs = leaf_pairs(tree);
  std::vector<std::vector<Edge>> paths;
  paths.reserve(pairs.size());
  for (const LeafPair& p : pairs)
    paths.push_back(tree.path_edges(p.first, p.second));

  auto uses = [](const std::vector<Edge>& path, const Edge& e) {
    return std::binary_search(path.begin(), path.end(), e);
  };

  std::vector<FacetDescriptor> out;
  for (const Edge& e : tree.edges()) {
    if (!away_from_degree_three(tree, e)) continue;
    FacetDescriptor d{FacetDescriptor::Kind::nonnegativity, e,
                      {},       {},
                      nonnegativity(tree, e), {}};
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (!uses(paths[k], e)) d.incident_pairs.push_back(pairs[k]);
    out.push_back(std::move(d));
  }
  for (const NodeId& u : tree.internal_nodes()) {
    for (const NodeId& v : tree.neighbors(u)) {
      FacetDescriptor d{FacetDescriptor::Kind::dominance, Edge(u, v),
                        u,       v,
                        dominance(tree, u, v), {}};
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        bool through = uses(paths[k], d.edge);
        bool avoids_center = true;
        for (const NodeId& w : tree.neighbors(u))
          if (uses(paths[k], Edge(u, w))) avoids_center = false;
        if (through || avoids_center) d.incident_pairs.push_back(pairs[k]);
      }
      out.push_back(std::move(d));
    }
  }
  return out;
}

VRep hypersimplex_vrep(std::size_t n, std::size_t k) {
  if (k < 1 || k >= n)
    fail(errc::bad_parameters, "need 1 <= k < n, got k=" + std::to_string(k) +
                                   " n=" + std::to_string(n));
  Basis basis;
  for (std::size_t i = 1; i <= n; ++i)
    basis.names.push_back("x" + std::to_string(i));

  std::vector<QVec> points;
  std::vector<std::size_t> support(k);
  for (std::size_t i = 0; i < k; ++i) support[i] = i;
  for (;;) {
    QVec v(n, Rat(0));
    for (std::size_t i : support) v[i] = 1;
    points.push_back(std::move(v));
    // next k-subset in lexicographic order
    std::size_t i = k;
    while (i > 0 && support[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++support[i - 1];
    for (std::size_t j = i; j < k; ++j) support[j] = support[j - 1] + 1;
  }
  return VRep::make(std::move(basis), std::move(points));
}

HRep hypersimplex_hrep(std::size_t n, std::size_t k) {
  if (k < 1 || k >= n)
    fail(errc::bad_parameters, "need 1 <= k < n, got k=" + std::to_string(k) +
                                   " n=" + std::to_string(n));
  HRep h;
  for (std::size_t i = 1; i <= n; ++i)
    h.basis.names.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    QVec lower(n, Rat(0)), upper(n, Rat(0));
    lower[i] = 1;
    upper[i] = -1;
    h.inequalities.push_back(LinearConstraint::inequality(lower, 0));
    h.inequalities.push_back(LinearConstraint::inequality(upper, -1));
  }
  h.equalities.push_back(
      LinearConstraint::equality(QVec(n, Rat(1)), Rat(Int(k))));
  return canonicalize(std::move(h));
}

}  // namespace pathpoly
