// End-to-end acceptance checks for the path polytope toolkit. Each
// criterion prints one line; any failure flips the exit code to 1.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "pathpoly/enumerate.hpp"
#include "pathpoly/errors.hpp"
#include "pathpoly/formats.hpp"
#include "pathpoly/oracle.hpp"
#include "pathpoly/path_polytope.hpp"
#include "pathpoly/polytope.hpp"
#include "pathpoly/tfp.hpp"
#include "pathpoly/tree.hpp"

using namespace pathpoly;

namespace {

int failures_total = 0;

class Criterion {
 public:
  Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)) {}

  void fail(const std::string& detail) {
    if (details_.size() < 5) details_.push_back(detail);
    ++fail_count_;
  }

  ~Criterion() {
    if (fail_count_ == 0) {
      std::cout << "[PASS] " << number_ << ". " << title_ << "\n";
    } else {
      ++failures_total;
      std::cout << "[FAIL] " << number_ << ". " << title_ << " ("
                << fail_count_ << " problem(s))\n";
      for (const std::string& d : details_) std::cout << "       " << d << "\n";
    }
  }

 private:
  int number_;
  std::string title_;
  std::vector<std::string> details_;
  int fail_count_ = 0;
};

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(PATHPOLY_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "popen failed"};
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string stage(const std::string& name, const std::string& content) {
  auto dir = std::filesystem::temp_directory_path() / "pathpoly_acceptance";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << content;
  return path.string();
}

const char* kCentralEdges = "1 2\n1 3\n1 5\n5 6\n5 7\n";

const char* kGoldenExt =
    "* coordinate order: {1,2} {1,3} {1,5} {5,6} {5,7}\n"
    "* row 1: leaf pair (2,3)\n"
    "* row 2: leaf pair (2,6)\n"
    "* row 3: leaf pair (2,7)\n"
    "* row 4: leaf pair (3,6)\n"
    "* row 5: leaf pair (3,7)\n"
    "* row 6: leaf pair (6,7)\n"
    "V-representation\n"
    "begin\n"
    "6 6 rational\n"
    "1 1 1 0 0 0\n"
    "1 1 0 1 1 0\n"
    "1 1 0 1 0 1\n"
    "1 0 1 1 1 0\n"
    "1 0 1 1 0 1\n"
    "1 0 0 0 1 1\n"
    "end\n";

const char* kGoldenTrace =
    "# gluing {1,4} of the left factor to {5,8} of the right factor; merged "
    "edge {1,5}\n"
    "# left coordinates: {1,2} {1,3} {1,4}\n"
    "# left vertices:\n"
    "#   L1 = (1, 1, 0)  leaf pair (2,3)  -> q1\n"
    "#   L2 = (1, 0, 1)  leaf pair (2,4)  -> q2\n"
    "#   L3 = (0, 1, 1)  leaf pair (3,4)  -> q2\n"
    "#   L4 = (0, 0, 0)  adjoined origin  -> q3\n"
    "# right coordinates: {5,6} {5,7} {5,8}\n"
    "# right vertices:\n"
    "#   R1 = (1, 1, 0)  leaf pair (6,7)  -> q3\n"
    "#   R2 = (1, 0, 1)  leaf pair (6,8)  -> q2\n"
    "#   R3 = (0, 1, 1)  leaf pair (7,8)  -> q2\n"
    "#   R4 = (0, 0, 0)  adjoined origin  -> q1\n"
    "# matched pairs over {1,2} {1,3} {1,4} {5,6} {5,7} {5,8}:\n"
    "#   L1 x R4 = (1, 1, 0, 0, 0, 0)  -> image (1, 1, 0, 0, 0)\n"
    "#   L2 x R2 = (1, 0, 1, 1, 0, 1)  -> image (1, 0, 1, 1, 0)\n"
    "#   L2 x R3 = (1, 0, 1, 0, 1, 1)  -> image (1, 0, 1, 0, 1)\n"
    "#   L3 x R2 = (0, 1, 1, 1, 0, 1)  -> image (0, 1, 1, 1, 0)\n"
    "#   L3 x R3 = (0, 1, 1, 0, 1, 1)  -> image (0, 1, 1, 0, 1)\n"
    "#   L4 x R1 = (0, 0, 0, 1, 1, 0)  -> image (0, 0, 0, 1, 1)\n"
    "1 2\n1 3\n1 5\n5 6\n5 7\n";

bool closed_form_applies(const Tree& t) {
  return !t.has_degree_two_internal() && t.nodes().size() > 3;
}

std::size_t degree2_internal_count(const Tree& t) {
  std::size_t n = 0;
  for (const NodeId& u : t.internal_nodes())
    if (t.degree(u) == 2) ++n;
  return n;
}

LinearConstraint leaf_edge_sum(const Tree& t) {
  QVec coeffs(t.edges().size(), Rat(0));
  for (const Edge& e : t.leaf_edges()) coeffs[t.edge_index(e)] = 1;
  return LinearConstraint::equality(coeffs, Rat(2));
}

std::string label_of(const Tree& t) {
  std::string s;
  for (const Edge& e : t.edges()) {
    if (!s.empty()) s += " ";
    s += e.name();
  }
  return s;
}

void criterion_1_published_tables() {
  Criterion c(1, "published vertex and pairing tables reproduced byte for byte");
  auto t0 = std::chrono::steady_clock::now();

  std::string tree = stage("central.txt", kCentralEdges);
  RunResult v = run_cli("vrep " + tree);
  if (v.exit_code != 0) c.fail("vrep exited with " + std::to_string(v.exit_code));
  if (v.output != kGoldenExt) c.fail("vertex table bytes differ");

  std::string s1 = stage("s1.txt", "1 2\n1 3\n1 4\n");
  std::string s2 = stage("s2.txt", "5 6\n5 7\n5 8\n");
  RunResult g = run_cli("glue " + s1 + " 1,4 " + s2 + " 5,8 --trace");
  if (g.exit_code != 0) c.fail("glue exited with " + std::to_string(g.exit_code));
  if (g.output != kGoldenTrace) c.fail("pairing trace bytes differ");

  auto elapsed = std::chrono::steady_clock::now() - t0;
  if (elapsed > std::chrono::seconds(1)) c.fail("slower than one second");
}

void criterion_2_closed_form_minimal(const std::vector<Tree>& corpus) {
  Criterion c(2,
              "closed-form description equals the enumerated minimal one on "
              "every branching corpus tree");
  for (const Tree& t : corpus) {
    if (!closed_form_applies(t)) continue;
    HRep closed = canonicalize(hrep_minimal(t));
    OracleReport oracle = minimal_hrep(vrep(t));
    if (closed.equalities.size() != 1 ||
        !(closed.equalities[0] == leaf_edge_sum(t))) {
      c.fail(label_of(t) + ": equality row is not the leaf edge sum");
      continue;
    }
    ComparisonResult cmp = compare_hreps(closed, oracle.to_hrep());
    if (cmp.verdict != Verdict::equal)
      c.fail(label_of(t) + ": descriptions differ");
    if (oracle.to_hrep().equalities != closed.equalities)
      c.fail(label_of(t) + ": equality rows differ");
  }
}

void criterion_3_second_hypersimplex() {
  Criterion c(3, "star polytopes are second hypersimplices with the right "
                 "facet counts");
  for (std::size_t n = 3; n <= 7; ++n) {
    std::string text;
    for (std::size_t i = 1; i <= n; ++i)
      text += "0 " + std::to_string(i) + "\n";
    Tree star = parse_edge_list(text);

    std::vector<QVec> a = vrep(star).vertices;
    std::vector<QVec> b = hypersimplex_vrep(n, 2).vertices;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) c.fail("n=" + std::to_string(n) + ": vertex sets differ");

    std::size_t facets = minimal_hrep(vrep(star)).facet_constraints.size();
    std::size_t expected = n == 3 ? 3 : 2 * n;
    if (facets != expected)
      c.fail("n=" + std::to_string(n) + ": " + std::to_string(facets) +
             " facets, expected " + std::to_string(expected));
  }
}

void criterion_4_dimension_law(const std::vector<Tree>& corpus) {
  Criterion c(4, "dimension is edge count minus chain nodes minus one");
  for (const Tree& t : corpus) {
    std::size_t expected =
        t.edges().size() - degree2_internal_count(t) - 1;
    if (affine_dimension(vrep(t)) != expected)
      c.fail(label_of(t) + ": dimension is off");
  }
}

void criterion_5_degree3_exclusion(const std::vector<Tree>& corpus) {
  Criterion c(5, "edge bounds are facets exactly away from degree-3 nodes");
  for (const Tree& t : corpus) {
    VRep v = vrep(t);
    for (const Edge& e : t.edges()) {
      QVec coeffs(t.edges().size(), Rat(0));
      coeffs[t.edge_index(e)] = 1;
      LinearConstraint bound = LinearConstraint::inequality(coeffs, Rat(0));

      bool touches3 = t.degree(e.a()) == 3 || t.degree(e.b()) == 3;
      if (touches3) {
        for (const QVec& x : v.vertices)
          if (!bound.satisfied_by(x))
            c.fail(label_of(t) + ": bound at " + e.name() + " is violated");
        if (is_facet(v, bound))
          c.fail(label_of(t) + ": bound at " + e.name() +
                 " is a facet beside a degree-3 node");
      } else if (closed_form_applies(t)) {
        if (!is_facet(v, bound))
          c.fail(label_of(t) + ": bound at " + e.name() + " is not a facet");
      }
    }
  }
}

void criterion_6_fiber_product_reconstruction(const std::vector<Tree>& corpus) {
  Criterion c(6, "severing any wide enough internal edge rebuilds the "
                 "polytope as a fiber product");
  for (const Tree& t : corpus) {
    std::set<QVec> target;
    for (const QVec& x : vrep(t).vertices) target.insert(x);
    for (const Edge& cut : t.edges()) {
      if (t.is_leaf(cut.a()) || t.is_leaf(cut.b())) continue;
      SplitResult s = split_at_edge(t, cut);
      if (s.t1.leaves().size() < 3 || s.t2.leaves().size() < 3) continue;
      GluingSpec spec = GluingSpec::make(s.t1, s.e1, s.t2, s.e2);

      if (glue(spec.t1, spec.e1, spec.t2, spec.e2).tree.edges() != t.edges()) {
        c.fail(label_of(t) + ": regluing at " + cut.name() +
               " changes the tree");
        continue;
      }

      VRep v1 = vrep(spec.t1);
      VRep v2 = vrep(spec.t2);
      auto [p1, p2] = gluing_projections(spec);
      VRep product = toric_fiber_product(free_join_with_origin(v1),
                                         free_join_with_origin(v2), p1, p2);

      if (affine_dimension(product) !=
          affine_dimension(v1) + affine_dimension(v2))
        c.fail(label_of(t) + ": dimensions do not add at " + cut.name());

      AffineMap iso = tfp_isomorphism(spec);
      std::set<QVec> image;
      for (const QVec& x : product.vertices) image.insert(iso.apply(x));
      if (image != target)
        c.fail(label_of(t) + ": image at " + cut.name() +
               " misses the path vectors");
    }
  }
}

void criterion_7_descriptor_incidence(const std::vector<Tree>& corpus) {
  Criterion c(7, "descriptor incidence lists equal the tight vertex sets and "
                 "describe facets");
  for (const Tree& t : corpus) {
    if (!closed_form_applies(t)) continue;
    VRep v = vrep(t);
    std::vector<FacetDescriptor> ds = facet_descriptors(t);

    std::set<LinearConstraint> listed;
    for (const FacetDescriptor& d : ds) {
      listed.insert(d.constraint);
      if (!is_facet(v, d.constraint))
        c.fail(label_of(t) + ": descriptor at " + d.edge.name() +
               " is not a facet");
      std::vector<LeafPair> tight;
      for (const LeafPair& p : leaf_pairs(t))
        if (d.constraint.tight_at(path_vertex(t, p.first, p.second)))
          tight.push_back(p);
      if (tight != d.incident_pairs)
        c.fail(label_of(t) + ": incidence list at " + d.edge.name() +
               " is wrong");
    }

    HRep closed = canonicalize(hrep_minimal(t));
    std::set<LinearConstraint> rows(closed.inequalities.begin(),
                                    closed.inequalities.end());
    if (listed != rows)
      c.fail(label_of(t) + ": descriptors and inequality rows disagree");
  }
}

void criterion_8_chain_redundancy(const std::vector<Tree>& corpus) {
  Criterion c(8, "chain trees keep a sound but redundant description");
  bool witnessed = false;
  for (const Tree& t : corpus) {
    if (!t.has_degree_two_internal()) continue;
    HRep general = canonicalize(hrep_general(t));
    VRep v = vrep(t);
    for (const LinearConstraint& eq : general.equalities)
      for (const QVec& x : v.vertices)
        if (!eq.tight_at(x))
          c.fail(label_of(t) + ": a pinned coordinate row fails on a vertex");

    OracleReport oracle = minimal_hrep(v);
    ComparisonResult cmp = compare_hreps(general, oracle.to_hrep());
    if (cmp.verdict == Verdict::different)
      c.fail(label_of(t) + ": described polytope differs");

    // redundancy seen somewhere: a listed inequality the minimal
    // description does not need
    std::set<LinearConstraint> minimal(oracle.facet_constraints.begin(),
                                       oracle.facet_constraints.end());
    EqualitySpan span = equality_span(general.equalities, general.basis.size());
    for (const LinearConstraint& q : general.inequalities) {
      auto reduced = reduce_modulo(q, span);
      if (!reduced || !minimal.count(*reduced)) witnessed = true;
    }
  }
  if (!witnessed) c.fail("no redundant row was ever seen");
}

void criterion_9_membership_semantics(const std::vector<Tree>& corpus) {
  Criterion c(9, "barycenter interior, vertices on the boundary, origin out");
  for (const Tree& t : corpus) {
    HRep general = canonicalize(hrep_general(t));
    QVec origin(t.edges().size(), Rat(0));
    if (classify_membership(general, origin).status != Membership::outside)
      c.fail(label_of(t) + ": origin is not outside");

    VRep v = vrep(t);
    OracleReport oracle = minimal_hrep(v);
    if (oracle.facet_constraints.size() < 2) continue;
    HRep h = oracle.to_hrep();

    if (classify_membership(h, barycenter(v)).status !=
        Membership::relative_interior)
      c.fail(label_of(t) + ": barycenter is not strictly inside");
    for (const QVec& x : v.vertices)
      if (classify_membership(h, x).status != Membership::boundary)
        c.fail(label_of(t) + ": a vertex is not on the boundary");
  }
}

}  // namespace

int main() {
  std::vector<Tree> corpus = all_tree_shapes(8);
  std::cout << "exercising " << corpus.size()
            << " tree shapes with up to 8 edges\n";

  criterion_1_published_tables();
  criterion_2_closed_form_minimal(corpus);
  criterion_3_second_hypersimplex();
  criterion_4_dimension_law(corpus);
  criterion_5_degree3_exclusion(corpus);
  criterion_6_fiber_product_reconstruction(corpus);
  criterion_7_descriptor_incidence(corpus);
  criterion_8_chain_redundancy(corpus);
  criterion_9_membership_semantics(corpus);

  if (failures_total == 0) {
    std::cout << "all 9 criteria hold\n";
    return 0;
  }
  std::cout << failures_total << " criteria failed\n";
  return 1;
}
