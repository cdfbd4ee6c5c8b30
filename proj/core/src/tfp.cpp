#include "pathpoly/tfp.hpp"

#include <algorithm>
#include <utility>

#include "pathpoly/errors.hpp"
#include "pathpoly/path_polytope.hpp"

namespace pathpoly {

namespace {

void require_leaf_edge(const Tree& t, const Edge& e, const char* tag) {
  if (!t.has_edge(e))
    fail(errc::not_leaf_edge,
         std::string(tag) + ": edge " + e.name() + " is not in the tree");
  if (!t.is_leaf(e.a()) && !t.is_leaf(e.b()))
    fail(errc::not_leaf_edge,
         std::string(tag) + ": edge " + e.name() + " has no leaf endpoint");
}

Basis simplex_basis() { return Basis{{"q1", "q2", "q3"}}; }

int simplex_vertex_index(const QVec& q) {
  for (int i = 0; i < 3; ++i) {
    bool unit = q[i] == 1;
    for (int j = 0; j < 3; ++j)
      if (j != i && q[j] != 0) unit = false;
    if (unit) return i;
  }
  return -1;
}

}  // namespace

GluingSpec GluingSpec::make(Tree t1, Edge e1, Tree t2, Edge e2) {
  require_leaf_edge(t1, e1, "first factor");
  require_leaf_edge(t2, e2, "second factor");
  for (const NodeId& v : t2.nodes())
    if (t1.has_node(v))
      fail(errc::label_collision, "label '" + v + "' occurs in both factors");
  return GluingSpec{std::move(t1), e1, std::move(t2), e2};
}

VRep free_join_with_origin(const VRep& v) {
  if (v.vertices.empty())
    fail(errc::empty_vrep, "free join needs at least one vertex");
  std::vector<QVec> diffs;
  for (std::size_t i = 1; i < v.vertices.size(); ++i)
    diffs.push_back(sub(v.vertices[i], v.vertices[0]));
  std::size_t dir_rank = diffs.empty() ? 0 : rank_exact(diffs);
  diffs.push_back(v.vertices[0]);
  if (rank_exact(diffs) == dir_rank)
    fail(errc::origin_in_affine_hull,
         "the origin already lies in the affine hull");

  VRep out = v;
  out.vertices.push_back(QVec(v.basis.size(), Rat(0)));
  return out;
}

std::pair<GluingProjection, GluingProjection> gluing_projections(
    const GluingSpec& spec) {
  if (spec.t1.edges().size() < 2 || spec.t2.edges().size() < 2)
    fail(errc::invalid_spec,
         "both factors need at least two edges; single-edge factors glue "
         "trivially");

  auto leafy = [](const Tree& t, const Edge& e) {
    return t.is_leaf(e.a()) || t.is_leaf(e.b());
  };

  AffineMap left;
  left.domain = spec.t1.edge_basis();
  left.codomain = simplex_basis();
  left.constant = {Rat(0), Rat(0), Rat(1)};
  for (const Edge& e : spec.t1.edges()) {
    Rat lf = leafy(spec.t1, e) ? Rat(1, 2) : Rat(0);
    Rat ge = (e == spec.e1) ? Rat(1) : Rat(0);
    left.columns.push_back({lf - ge, ge, -lf});
  }

  AffineMap right;
  right.domain = spec.t2.edge_basis();
  right.codomain = simplex_basis();
  right.constant = {Rat(1), Rat(0), Rat(0)};
  for (const Edge& e : spec.t2.edges()) {
    Rat lf = leafy(spec.t2, e) ? Rat(1, 2) : Rat(0);
    Rat ge = (e == spec.e2) ? Rat(1) : Rat(0);
    right.columns.push_back({-lf, ge, lf - ge});
  }

  // Every factor vertex must land where the case split says: q2 when the
  // path uses the glued edge, the side's own corner otherwise, and the
  // opposite corner for the adjoined origin.
  auto audit = [](const Tree& t, const Edge& glued, const AffineMap& map,
                  int through, int avoiding, int origin) {
    for (const LeafPair& p : leaf_pairs(t)) {
      QVec image = map.apply(path_vertex(t, p.first, p.second));
      std::vector<Edge> path = t.path_edges(p.first, p.second);
      bool uses = std::binary_search(path.begin(), path.end(), glued);
      if (simplex_vertex_index(image) != (uses ? through : avoiding))
        fail(errc::internal, "projection misclassifies a path vertex");
    }
    if (simplex_vertex_index(
            map.apply(QVec(t.edges().size(), Rat(0)))) != origin)
      fail(errc::internal, "projection misclassifies the origin");
  };
  audit(spec.t1, spec.e1, left, 1, 0, 2);
  audit(spec.t2, spec.e2, right, 1, 2, 0);

  return {GluingProjection{Side::left, std::move(left)},
          GluingProjection{Side::right, std::move(right)}};
}

std::vector<MatchedPair> matched_pairs(const VRep& v1, const VRep& v2,
                                       const GluingProjection& p1,
                                       const GluingProjection& p2) {
  auto classify = [](const VRep& v, const GluingProjection& p,
                     const char* tag) {
    std::vector<int> classes;
    bool hit[3] = {false, false, false};
    for (const QVec& x : v.vertices) {
      int idx = simplex_vertex_index(p.map.apply(x));
      if (idx < 0)
        fail(errc::projection_image_mismatch,
             std::string(tag) + ": a vertex projects off the simplex "
                                "vertices");
      hit[idx] = true;
      classes.push_back(idx);
    }
    for (int i = 0; i < 3; ++i)
      if (!hit[i])
        fail(errc::projection_image_mismatch,
             std::string(tag) + ": projected image misses simplex vertex q" +
                 std::to_string(i + 1));
    return classes;
  };

  std::vector<int> c1 = classify(v1, p1, "left factor");
  std::vector<int> c2 = classify(v2, p2, "right factor");

  std::vector<MatchedPair> pairs;
  for (std::size_t i = 0; i < c1.size(); ++i)
    for (std::size_t j = 0; j < c2.size(); ++j)
      if (c1[i] == c2[j]) pairs.push_back({i, j});
  return pairs;
}

VRep toric_fiber_product(const VRep& v1, const VRep& v2,
                         const GluingProjection& p1,
                         const GluingProjection& p2) {
  std::vector<MatchedPair> pairs = matched_pairs(v1, v2, p1, p2);

  Basis joint;
  joint.names = v1.basis.names;
  joint.names.insert(joint.names.end(), v2.basis.names.begin(),
                     v2.basis.names.end());

  std::vector<QVec> points;
  for (const MatchedPair& mp : pairs) {
    QVec xy = v1.vertices[mp.i];
    xy.insert(xy.end(), v2.vertices[mp.j].begin(), v2.vertices[mp.j].end());
    points.push_back(std::move(xy));
  }
  return VRep::make(std::move(joint), std::move(points));
}

AffineMap tfp_isomorphism(const GluingSpec& spec) {
  GlueResult glued = glue(spec.t1, spec.e1, spec.t2, spec.e2);

  Edge merged;
  for (const auto& [edge, origin] : glued.origins)
    if (origin.left && origin.right) merged = edge;

  AffineMap phi;
  phi.domain.names = spec.t1.edge_basis().names;
  {
    Basis b2 = spec.t2.edge_basis();
    phi.domain.names.insert(phi.domain.names.end(), b2.names.begin(),
                            b2.names.end());
  }
  phi.codomain = glued.tree.edge_basis();
  phi.constant.assign(glued.tree.edges().size(), Rat(0));

  auto column_for = [&](const Edge& e, const Edge& replaced) {
    QVec col(glued.tree.edges().size(), Rat(0));
    if (e == replaced)
      col[glued.tree.edge_index(merged)] = Rat(1, 2);
    else
      col[glued.tree.edge_index(e)] = 1;
    return col;
  };
  for (const Edge& e : spec.t1.edges())
    phi.columns.push_back(column_for(e, spec.e1));
  for (const Edge& e : spec.t2.edges())
    phi.columns.push_back(column_for(e, spec.e2));
  return phi;
}

}  // namespace pathpoly
