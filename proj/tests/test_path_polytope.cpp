#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "pathpoly/errors.hpp"
#include "pathpoly/oracle.hpp"
#include "pathpoly/path_polytope.hpp"
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

// two degree-3 nodes joined by an internal edge, four leaves
Tree central_example() {
  return parse_edge_list("1 2\n1 3\n1 5\n5 6\n5 7\n");
}

Tree star(std::size_t n) {
  std::string text;
  for (std::size_t i = 1; i <= n; ++i)
    text += "0 " + std::to_string(i) + "\n";
  return parse_edge_list(text);
}

std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace

TEST_CASE("indicator vector of one leaf pair") {
  Tree t = central_example();
  CHECK(path_vertex(t, "2", "6") == qv({1, 0, 1, 1, 0}));
  CHECK(path_vertex(t, "6", "2") == qv({1, 0, 1, 1, 0}));
  CHECK(path_vertex(t, "2", "3") == qv({1, 1, 0, 0, 0}));
  CHECK(code_of([&] { path_vertex(t, "1", "2"); }) == errc::not_a_leaf);
  CHECK(code_of([&] { path_vertex(t, "2", "2"); }) == errc::equal_endpoints);
}

TEST_CASE("vertex table of the central example") {
  Tree t = central_example();
  VRep v = vrep(t);
  std::vector<QVec> expected = {
      qv({1, 1, 0, 0, 0}), qv({1, 0, 1, 1, 0}), qv({1, 0, 1, 0, 1}),
      qv({0, 1, 1, 1, 0}), qv({0, 1, 1, 0, 1}), qv({0, 0, 0, 1, 1}),
  };
  CHECK(v.vertices == expected);
  CHECK(leaf_pairs(t) ==
        std::vector<LeafPair>{{"2", "3"}, {"2", "6"}, {"2", "7"},
                              {"3", "6"}, {"3", "7"}, {"6", "7"}});
}

TEST_CASE("vertex counts over stars and paths") {
  for (std::size_t n = 3; n <= 7; ++n)
    CHECK(vrep(star(n)).vertices.size() == choose2(n));
  CHECK(vrep(parse_edge_list("1 2\n2 3\n3 4\n")).vertices.size() == 1);
}

TEST_CASE("closed-form description of the central example") {
  Tree t = central_example();
  HRep h = canonicalize(hrep_minimal(t));
  REQUIRE(h.equalities.size() == 1);
  CHECK(h.equalities[0].render(h.basis) ==
        "x{1,2} + x{1,3} + x{5,6} + x{5,7} = 2");
  // every edge touches a degree-3 node, so only dominance rows remain
  CHECK(h.inequalities.size() == 6);
  VRep v = vrep(t);
  for (const LinearConstraint& c : h.inequalities) {
    for (const QVec& x : v.vertices) CHECK(c.satisfied_by(x));
    CHECK(is_facet(v, c));
  }
}

TEST_CASE("closed-form description of stars") {
  // one dominance row per leaf for n = 3; box rows appear from n = 4 on
  CHECK(canonicalize(hrep_minimal(star(3))).inequalities.size() == 3);
  for (std::size_t n = 4; n <= 7; ++n) {
    HRep h = canonicalize(hrep_minimal(star(n)));
    CHECK(h.inequalities.size() == 2 * n);
    CHECK(h.equalities.size() == 1);
  }
}

TEST_CASE("small or collapsing trees refuse the minimal description") {
  CHECK(code_of([] { hrep_minimal(parse_edge_list("1 2\n")); }) ==
        errc::too_small);
  CHECK(code_of([] { hrep_minimal(parse_edge_list("1 2\n1 3\n")); }) ==
        errc::too_small);
  CHECK(code_of([] { hrep_minimal(parse_edge_list("1 2\n2 3\n3 4\n")); }) ==
        errc::has_degree_two_internal);
}

TEST_CASE("general description covers degree-2 chains") {
  Tree t = parse_edge_list("1 2\n2 3\n3 4\n");
  HRep h = canonicalize(hrep_general(t));
  // chain coordinates are pinned equal and the leaf rows sum to 2
  CHECK(h.equalities.size() == 3);
  QVec point = qv({1, 1, 1});
  for (const LinearConstraint& c : h.equalities) CHECK(c.tight_at(point));
  for (const LinearConstraint& c : h.inequalities)
    CHECK(c.satisfied_by(point));
  CHECK(!h.inequalities.empty());

  // the single-edge tree pins its only coordinate
  HRep tiny = hrep_general(parse_edge_list("1 2\n"));
  CHECK(tiny.equalities.size() == 1);
  CHECK(tiny.inequalities.empty());
  CHECK(tiny.equalities[0].tight_at(qv({1})));
}

TEST_CASE("general description matches the minimal one out of the corner") {
  Tree t = central_example();
  CHECK(canonicalize(hrep_general(t)).inequalities ==
        canonicalize(hrep_minimal(t)).inequalities);
  CHECK(canonicalize(hrep_general(t)).equalities ==
        canonicalize(hrep_minimal(t)).equalities);
}

TEST_CASE("hypersimplex vertices and box description") {
  for (std::size_t n = 3; n <= 7; ++n) {
    VRep h = hypersimplex_vrep(n, 2);
    CHECK(h.vertices.size() == choose2(n));
    std::vector<QVec> star_vertices = vrep(star(n)).vertices;
    std::sort(star_vertices.begin(), star_vertices.end());
    std::vector<QVec> hyper_vertices = h.vertices;
    std::sort(hyper_vertices.begin(), hyper_vertices.end());
    CHECK(star_vertices == hyper_vertices);
  }

  HRep box = hypersimplex_hrep(4, 2);
  CHECK(box.inequalities.size() == 8);
  CHECK(box.equalities.size() == 1);
  for (const QVec& x : hypersimplex_vrep(4, 2).vertices)
    CHECK(contains(box, x));

  CHECK(code_of([] { hypersimplex_vrep(3, 3); }) == errc::bad_parameters);
  CHECK(code_of([] { hypersimplex_hrep(2, 0); }) == errc::bad_parameters);
}

TEST_CASE("facet descriptors carry their incident pairs") {
  Tree t = central_example();
  std::vector<FacetDescriptor> ds = facet_descriptors(t);
  CHECK(ds.size() == 6);
  VRep v = vrep(t);

  bool found_outward = false;
  for (const FacetDescriptor& d : ds) {
    CHECK(d.kind == FacetDescriptor::Kind::dominance);
    CHECK(is_facet(v, d.constraint));

    // recompute the tight pairs from scratch
    std::vector<LeafPair> tight;
    for (const LeafPair& p : leaf_pairs(t))
      if (d.constraint.tight_at(path_vertex(t, p.first, p.second)))
        tight.push_back(p);
    CHECK(tight == d.incident_pairs);

    if (d.center == "1" && d.neighbor == "5") {
      found_outward = true;
      CHECK(d.edge == Edge("1", "5"));
      CHECK(d.incident_pairs ==
            std::vector<LeafPair>{{"2", "6"}, {"2", "7"}, {"3", "6"},
                                  {"3", "7"}, {"6", "7"}});
    }
  }
  CHECK(found_outward);
}

TEST_CASE("descriptors include box rows exactly off degree-3 nodes") {
  // center of degree 4 with one long arm: {3,4} has endpoint degrees 1 and 4
  Tree t = parse_edge_list("1 2\n1 5\n1 6\n1 3\n3 4\n3 7\n3 8\n");
  std::vector<FacetDescriptor> ds = facet_descriptors(t);
  VRep v = vrep(t);
  std::size_t box_rows = 0;
  for (const FacetDescriptor& d : ds) {
    if (d.kind != FacetDescriptor::Kind::nonnegativity) continue;
    ++box_rows;
    CHECK(t.degree(d.edge.a()) != 3);
    CHECK(t.degree(d.edge.b()) != 3);
    CHECK(is_facet(v, d.constraint));
  }
  CHECK(box_rows == t.edges().size());

  CHECK(code_of([] { facet_descriptors(parse_edge_list("1 2\n1 3\n")); }) ==
        errc::too_small);
  CHECK(code_of([] {
          facet_descriptors(parse_edge_list("1 2\n2 3\n3 4\n"));
        }) == errc::has_degree_two_internal);
}

TEST_CASE("descriptors match the sorted minimal description") {
  Tree t = central_example();
  std::vector<FacetDescriptor> ds = facet_descriptors(t);
  std::set<LinearConstraint> from_descriptors;
  for (const FacetDescriptor& d : ds) from_descriptors.insert(d.constraint);
  HRep h = canonicalize(hrep_minimal(t));
  std::set<LinearConstraint> from_hrep(h.inequalities.begin(),
                                       h.inequalities.end());
  CHECK(from_descriptors == from_hrep);
}
