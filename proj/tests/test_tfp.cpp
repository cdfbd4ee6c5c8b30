#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>
#include <vector>

#include "pathpoly/errors.hpp"
#include "pathpoly/oracle.hpp"
#include "pathpoly/path_polytope.hpp"
#include "pathpoly/tfp.hpp"
#include "pathpoly/tree.hpp"

using namespace pathpoly;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  return errc::internal;
}

QVec qv(std::initializer_list<int> xs) {
  QVec v;
  for (int x : xs) v.push_back(Rat(x));
  return v;
}

GluingSpec star_pair() {
  return GluingSpec::make(parse_edge_list("1 2\n1 3\n1 4\n"), Edge("1", "4"),
                          parse_edge_list("5 6\n5 7\n5 8\n"), Edge("5", "8"));
}

}  // namespace

TEST_CASE("gluing data is validated") {
  Tree t1 = parse_edge_list("1 2\n1 3\n1 5\n5 6\n5 7\n");
  Tree t2 = parse_edge_list("a b\na c\na d\n");
  CHECK(code_of([&] {
          GluingSpec::make(t1, Edge("1", "5"), t2, Edge("a", "d"));
        }) == errc::not_leaf_edge);
  CHECK(code_of([&] {
          GluingSpec::make(t1, Edge("1", "2"), t1, Edge("1", "3"));
        }) == errc::label_collision);
}

TEST_CASE("joining with the origin raises the dimension by one") {
  VRep triangle = vrep(parse_edge_list("1 2\n1 3\n1 4\n"));
  CHECK(affine_dimension(triangle) == 2);
  VRep join = free_join_with_origin(triangle);
  CHECK(join.vertices.size() == 4);
  CHECK(join.vertices.back() == qv({0, 0, 0}));
  CHECK(affine_dimension(join) == 3);

  VRep point = vrep(parse_edge_list("1 2\n2 3\n"));
  CHECK(affine_dimension(free_join_with_origin(point)) == 1);

  // a segment through the origin cannot be joined with it
  VRep bad = VRep::make(Basis{{"a", "b"}}, {qv({0, 0}), qv({1, 0})});
  CHECK(code_of([&] { free_join_with_origin(bad); }) ==
        errc::origin_in_affine_hull);
}

TEST_CASE("projections sort the joined vertices onto the simplex") {
  GluingSpec spec = star_pair();
  auto [p1, p2] = gluing_projections(spec);
  CHECK(p1.side == Side::left);
  CHECK(p2.side == Side::right);

  VRep join1 = free_join_with_origin(vrep(spec.t1));
  VRep join2 = free_join_with_origin(vrep(spec.t2));

  // left: pairs (2,3), (2,4), (3,4), then the origin
  std::vector<QVec> left_classes = {qv({1, 0, 0}), qv({0, 1, 0}),
                                    qv({0, 1, 0}), qv({0, 0, 1})};
  for (std::size_t i = 0; i < join1.vertices.size(); ++i)
    CHECK(p1.map.apply(join1.vertices[i]) == left_classes[i]);

  // right: pairs (6,7), (6,8), (7,8), then the origin
  std::vector<QVec> right_classes = {qv({0, 0, 1}), qv({0, 1, 0}),
                                     qv({0, 1, 0}), qv({1, 0, 0})};
  for (std::size_t j = 0; j < join2.vertices.size(); ++j)
    CHECK(p2.map.apply(join2.vertices[j]) == right_classes[j]);

  Tree stick = parse_edge_list("x y\n");
  CHECK(code_of([&] {
          gluing_projections(GluingSpec::make(
              spec.t1, spec.e1, stick, Edge("x", "y")));
        }) == errc::invalid_spec);
}

TEST_CASE("matched pairs follow the simplex classes") {
  GluingSpec spec = star_pair();
  auto [p1, p2] = gluing_projections(spec);
  VRep join1 = free_join_with_origin(vrep(spec.t1));
  VRep join2 = free_join_with_origin(vrep(spec.t2));

  std::vector<MatchedPair> pairs = matched_pairs(join1, join2, p1, p2);
  REQUIRE(pairs.size() == 6);
  std::vector<std::pair<std::size_t, std::size_t>> expected = {
      {0, 3}, {1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 0}};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    CHECK(pairs[k].i == expected[k].first);
    CHECK(pairs[k].j == expected[k].second);
  }
}

TEST_CASE("matched pair count adds up from the classes") {
  // (a1-1)(a2-1) crossing pairs plus each factor's own pairs
  Tree t1 = parse_edge_list("1 2\n1 3\n1 4\n1 5\n");
  Tree t2 = parse_edge_list("6 7\n6 8\n6 9\n");
  GluingSpec spec =
      GluingSpec::make(t1, Edge("1", "5"), t2, Edge("6", "9"));
  auto [p1, p2] = gluing_projections(spec);
  VRep join1 = free_join_with_origin(vrep(t1));
  VRep join2 = free_join_with_origin(vrep(t2));
  std::vector<MatchedPair> pairs = matched_pairs(join1, join2, p1, p2);
  CHECK(pairs.size() == 3 * 2 + 3 + 1);

  VRep product = toric_fiber_product(join1, join2, p1, p2);
  CHECK(product.vertices.size() == pairs.size());
  CHECK(affine_dimension(product) ==
        affine_dimension(vrep(t1)) + affine_dimension(vrep(t2)));
}

TEST_CASE("fiber product reproduces the paired table") {
  GluingSpec spec = star_pair();
  auto [p1, p2] = gluing_projections(spec);
  VRep join1 = free_join_with_origin(vrep(spec.t1));
  VRep join2 = free_join_with_origin(vrep(spec.t2));
  VRep product = toric_fiber_product(join1, join2, p1, p2);

  std::vector<QVec> expected = {
      qv({1, 1, 0, 0, 0, 0}), qv({1, 0, 1, 1, 0, 1}), qv({1, 0, 1, 0, 1, 1}),
      qv({0, 1, 1, 1, 0, 1}), qv({0, 1, 1, 0, 1, 1}), qv({0, 0, 0, 1, 1, 0}),
  };
  CHECK(product.vertices == expected);
  CHECK(affine_dimension(product) == 4);
}

TEST_CASE("a path factor cannot cover the simplex") {
  Tree t1 = parse_edge_list("1 2\n1 3\n1 4\n");
  Tree t2 = parse_edge_list("5 6\n6 7\n");
  GluingSpec spec = GluingSpec::make(t1, Edge("1", "4"), t2, Edge("5", "6"));
  auto [p1, p2] = gluing_projections(spec);
  VRep join1 = free_join_with_origin(vrep(t1));
  VRep join2 = free_join_with_origin(vrep(t2));
  CHECK(code_of([&] { toric_fiber_product(join1, join2, p1, p2); }) ==
        errc::projection_image_mismatch);
}

TEST_CASE("the half-coordinate map lands on the glued tree") {
  GluingSpec spec = star_pair();
  auto [p1, p2] = gluing_projections(spec);
  VRep join1 = free_join_with_origin(vrep(spec.t1));
  VRep join2 = free_join_with_origin(vrep(spec.t2));
  VRep product = toric_fiber_product(join1, join2, p1, p2);

  AffineMap iso = tfp_isomorphism(spec);
  std::vector<QVec> expected = {
      qv({1, 1, 0, 0, 0}), qv({1, 0, 1, 1, 0}), qv({1, 0, 1, 0, 1}),
      qv({0, 1, 1, 1, 0}), qv({0, 1, 1, 0, 1}), qv({0, 0, 0, 1, 1}),
  };
  std::set<QVec> images;
  for (std::size_t k = 0; k < product.vertices.size(); ++k) {
    QVec image = iso.apply(product.vertices[k]);
    CHECK(image == expected[k]);
    images.insert(image);
  }
  CHECK(images.size() == product.vertices.size());  // injective

  GlueResult g = glue(spec.t1, spec.e1, spec.t2, spec.e2);
  std::set<QVec> target;
  for (const QVec& x : vrep(g.tree).vertices) target.insert(x);
  CHECK(images == target);
}

TEST_CASE("joining with the origin adds exactly one facet") {
  VRep triangle = vrep(parse_edge_list("1 2\n1 3\n1 4\n"));
  OracleReport before = minimal_hrep(triangle);
  OracleReport after = minimal_hrep(free_join_with_origin(triangle));
  CHECK(before.facet_constraints.size() == 3);
  CHECK(after.facet_constraints.size() == 4);
  CHECK(after.affine_dim == before.affine_dim + 1);
}

TEST_CASE("every facet of the product comes from one side") {
  GluingSpec spec = star_pair();
  auto [p1, p2] = gluing_projections(spec);
  VRep join1 = free_join_with_origin(vrep(spec.t1));
  VRep join2 = free_join_with_origin(vrep(spec.t2));
  std::vector<MatchedPair> pairs = matched_pairs(join1, join2, p1, p2);
  VRep product = toric_fiber_product(join1, join2, p1, p2);

  OracleReport left = minimal_hrep(join1);
  OracleReport right = minimal_hrep(join2);
  OracleReport prod = minimal_hrep(product);
  CHECK(prod.affine_dim == 4);

  auto tight_pairs = [&](const LinearConstraint& c, Side side) {
    std::set<std::size_t> s;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const QVec& v = side == Side::left ? join1.vertices[pairs[k].i]
                                         : join2.vertices[pairs[k].j];
      if (c.tight_at(v)) s.insert(k);
    }
    return s;
  };

  for (const LinearConstraint& c : prod.facet_constraints) {
    std::set<std::size_t> tight;
    for (std::size_t k = 0; k < product.vertices.size(); ++k)
      if (c.tight_at(product.vertices[k])) tight.insert(k);

    bool inherited = false;
    for (const LinearConstraint& f : left.facet_constraints)
      if (tight_pairs(f, Side::left) == tight) inherited = true;
    for (const LinearConstraint& f : right.facet_constraints)
      if (tight_pairs(f, Side::right) == tight) inherited = true;
    CHECK(inherited);
  }
}
