#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathpoly/certify.hpp"
#include "pathpoly/enumerate.hpp"
#include "pathpoly/errors.hpp"
#include "pathpoly/formats.hpp"
#include "pathpoly/oracle.hpp"
#include "pathpoly/path_polytope.hpp"
#include "pathpoly/tfp.hpp"
#include "pathpoly/tree.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pathpoly;

// 0 success, 1 usage or parse error, 2 mathematical precondition violation,
// 3 certification mismatch
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitMismatch = 3;

int exit_code_for(errc code) {
  switch (code) {
    case errc::malformed_edge_list:
    case errc::self_loop:
    case errc::duplicate_edge:
    case errc::disconnected:
    case errc::has_cycle:
    case errc::too_few_nodes:
    case errc::malformed_newick:
    case errc::duplicate_label:
    case errc::bad_parameters:
      return kExitUsage;
    default:
      return kExitPrecondition;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file '" + out_path + "'");
  out << content;
}

// Newick text opens with '('; everything else is an edge list
Tree read_tree(const std::string& path) {
  std::string text = read_file(path);
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '(' ? parse_newick(text) : parse_edge_list(text);
  }
  return parse_edge_list(text);  // empty: let the parser report it
}

Edge parse_edge_argument(const std::string& text) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == text.size())
    throw CLI::ValidationError("edge", "expected \"a,b\", got '" + text + "'");
  return Edge(text.substr(0, comma), text.substr(comma + 1));
}

QVec parse_point_file(const std::string& text) {
  QVec point;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      if (tok[0] == '#') break;
      point.push_back(parse_rational(tok));
    }
  }
  return point;
}

OracleCaps caps_from_environment() {
  OracleCaps caps;
  const char* raw = std::getenv("PATHPOLY_ORACLE_CAP");
  if (!raw) return caps;
  std::string text(raw);
  std::size_t comma = text.find(',');
  try {
    std::size_t end = 0;
    std::string first = text.substr(0, comma);
    caps.max_coordinates = std::stoul(first, &end);
    if (end != first.size()) throw std::invalid_argument(first);
    if (comma != std::string::npos) {
      std::string second = text.substr(comma + 1);
      caps.max_vertices = std::stoul(second, &end);
      if (end != second.size()) throw std::invalid_argument(second);
    }
  } catch (const std::exception&) {
    throw std::runtime_error(
        "PATHPOLY_ORACLE_CAP must be \"<coordinates>\" or "
        "\"<coordinates>,<vertices>\", got '" + text + "'");
  }
  return caps;
}

ordered_json json_point(const QVec& x) {
  ordered_json coords = ordered_json::array();
  for (const Rat& c : x) coords.push_back(format_rational(c));
  return coords;
}

ordered_json json_tree(const Tree& tree) {
  ordered_json edges = ordered_json::array();
  for (const Edge& e : tree.edges()) edges.push_back(e.name());
  ordered_json leaves = ordered_json::array();
  for (const NodeId& v : tree.leaves()) leaves.push_back(v);
  return ordered_json{{"edges", edges}, {"leaves", leaves}};
}

// ---- vrep ----------------------------------------------------------------

std::string vrep_json(const Tree& tree) {
  VRep v = vrep(tree);
  std::vector<LeafPair> pairs = leaf_pairs(tree);
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < v.vertices.size(); ++i)
    rows.push_back(ordered_json{
        {"leaf_pair", {pairs[i].first, pairs[i].second}},
        {"coords", json_point(v.vertices[i])},
    });
  ordered_json doc{{"tree", json_tree(tree)}, {"vertices", rows}};
  return doc.dump(2) + "\n";
}

int cmd_vrep(const std::string& tree_path, const std::string& format,
             const std::string& out_path) {
  Tree tree = read_tree(tree_path);
  std::string content = format == "json"
                            ? vrep_json(tree)
                            : write_ext(vrep(tree), leaf_pairs(tree));
  write_output(out_path, content);
  return 0;
}

// ---- hrep ----------------------------------------------------------------

// descriptor text per closed-form constraint, rebuilt family by family
std::map<LinearConstraint, std::string> constraint_labels(const Tree& tree) {
  std::map<LinearConstraint, std::string> labels;
  std::size_t n = tree.edges().size();
  auto claim = [&](const LinearConstraint& c, const std::string& text) {
    labels.emplace(c, text);
  };

  if (n == 1) {
    claim(LinearConstraint::equality({Rat(1)}, 1), "pinned single edge");
    return labels;
  }

  for (const Edge& e : tree.edges()) {
    if (tree.degree(e.a()) == 3 || tree.degree(e.b()) == 3) continue;
    QVec coeffs(n, Rat(0));
    coeffs[tree.edge_index(e)] = 1;
    claim(LinearConstraint::inequality(coeffs, 0),
          "nonnegativity at " + e.name());
  }
  for (const NodeId& u : tree.internal_nodes()) {
    for (const NodeId& v : tree.neighbors(u)) {
      QVec coeffs(n, Rat(0));
      for (const NodeId& w : tree.neighbors(u))
        coeffs[tree.edge_index(Edge(u, w))] = (w == v) ? -1 : 1;
      claim(LinearConstraint::inequality(coeffs, 0),
            "dominance at node " + u + " toward " + v);
    }
  }
  {
    QVec coeffs(n, Rat(0));
    for (const Edge& e : tree.leaf_edges()) coeffs[tree.edge_index(e)] = 1;
    claim(LinearConstraint::equality(coeffs, 2), "leaf edge sum");
  }
  for (const NodeId& u : tree.internal_nodes()) {
    if (tree.degree(u) != 2) continue;
    QVec coeffs(n, Rat(0));
    coeffs[tree.edge_index(Edge(u, tree.neighbors(u)[0]))] = 1;
    coeffs[tree.edge_index(Edge(u, tree.neighbors(u)[1]))] = -1;
    claim(LinearConstraint::equality(coeffs, 0),
          "equal coordinates at degree-2 node " + u);
  }
  return labels;
}

std::string hrep_json(const Tree& tree, const HRep& h) {
  std::map<LinearConstraint, std::string> labels = constraint_labels(tree);
  auto rows_for = [&](const std::vector<LinearConstraint>& cs) {
    ordered_json rows = ordered_json::array();
    for (const LinearConstraint& c : cs) {
      auto it = labels.find(c);
      ordered_json coeffs = ordered_json::array();
      for (const Int& a : c.coeffs()) coeffs.push_back(a.str());
      rows.push_back(ordered_json{
          {"label", it == labels.end() ? "constraint" : it->second},
          {"text", c.render(h.basis)},
          {"coeffs", coeffs},
          {"rhs", c.rhs().str()},
      });
    }
    return rows;
  };
  ordered_json doc{
      {"tree", json_tree(tree)},
      {"equalities", rows_for(h.equalities)},
      {"inequalities", rows_for(h.inequalities)},
  };
  return doc.dump(2) + "\n";
}

int cmd_hrep(const std::string& tree_path, bool general,
             const std::string& format, const std::string& out_path) {
  Tree tree = read_tree(tree_path);
  HRep h;
  try {
    h = general ? hrep_general(tree) : hrep_minimal(tree);
  } catch (const error& e) {
    if (e.code() == errc::too_small ||
        e.code() == errc::has_degree_two_internal) {
      std::cerr << e.what() << " (rerun with --general)\n";
      return kExitPrecondition;
    }
    throw;
  }
  std::string content =
      format == "json" ? hrep_json(tree, h) : write_ine(h);
  write_output(out_path, content);
  return 0;
}

// ---- member --------------------------------------------------------------

int cmd_member(const std::string& tree_path, const std::string& point_path) {
  Tree tree = read_tree(tree_path);
  QVec point = parse_point_file(read_file(point_path));
  if (point.size() != tree.edges().size())
    fail(errc::dimension_mismatch,
         "point has " + std::to_string(point.size()) + " coordinates, tree has " +
             std::to_string(tree.edges().size()) + " edges");

  HRep h = hrep_general(tree);
  MembershipResult result = classify_membership(h, point);
  switch (result.status) {
    case Membership::relative_interior:
      std::cout << "IN (relative interior)\n";
      break;
    case Membership::boundary:
      std::cout << "IN (boundary)\n";
      break;
    case Membership::outside:
      std::cout << "OUT: violates " << result.violated->render(h.basis)
                << "\n";
      break;
  }
  return 0;
}

// ---- certify -------------------------------------------------------------

int cmd_certify(const std::string& tree_path, unsigned all_up_to,
                bool inject_defect) {
  CertifyOptions options;
  options.caps = caps_from_environment();
  options.inject_defect = inject_defect;

  std::vector<TreeReport> reports;
  if (all_up_to > 0) {
    if (all_up_to > 8)
      fail(errc::cap_exceeded,
           "exhaustive certification is capped at 8 edges");
    reports = certify_all(all_up_to, options);
  } else {
    reports.push_back(certify_tree(read_tree(tree_path), options));
  }
  std::cout << render_reports(reports);
  return all_ok(reports) ? 0 : kExitMismatch;
}

// ---- glue ----------------------------------------------------------------

std::size_t simplex_class(const AffineMap& map, const QVec& x) {
  QVec image = map.apply(x);
  for (std::size_t k = 0; k < image.size(); ++k)
    if (image[k] == 1) return k + 1;
  fail(errc::internal, "projected point is not a simplex vertex");
}

std::string format_point(const QVec& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(x[i]);
  }
  return out + ")";
}

void trace_factor(std::ostream& out, const char* side, char mark,
                  const VRep& join, const std::vector<LeafPair>& pairs,
                  const AffineMap& projection) {
  out << "# " << side << " coordinates:";
  for (const std::string& name : join.basis.names) out << " " << name;
  out << "\n# " << side << " vertices:\n";
  for (std::size_t i = 0; i < join.vertices.size(); ++i) {
    out << "#   " << mark << i + 1 << " = "
        << format_point(join.vertices[i]) << "  ";
    if (i < pairs.size())
      out << "leaf pair (" << pairs[i].first << "," << pairs[i].second << ")";
    else
      out << "adjoined origin";
    out << "  -> q" << simplex_class(projection, join.vertices[i]) << "\n";
  }
}

int cmd_glue(const std::string& t1_path, const std::string& edge1,
             const std::string& t2_path, const std::string& edge2,
             bool trace, const std::string& out_path) {
  Tree t1 = read_tree(t1_path);
  Tree t2 = read_tree(t2_path);
  Edge e1 = parse_edge_argument(edge1);
  Edge e2 = parse_edge_argument(edge2);

  GlueResult glued = glue(t1, e1, t2, e2);

  std::ostringstream out;
  if (trace) {
    GluingSpec spec = GluingSpec::make(t1, e1, t2, e2);
    auto [p1, p2] = gluing_projections(spec);
    VRep join1 = free_join_with_origin(vrep(t1));
    VRep join2 = free_join_with_origin(vrep(t2));

    Edge merged;
    for (const auto& [e, origin] : glued.origins)
      if (origin.left && origin.right) merged = e;
    out << "# gluing " << e1.name() << " of the left factor to " << e2.name()
        << " of the right factor; merged edge " << merged.name() << "\n";
    trace_factor(out, "left", 'L', join1, leaf_pairs(t1), p1.map);
    trace_factor(out, "right", 'R', join2, leaf_pairs(t2), p2.map);

    AffineMap iso = tfp_isomorphism(spec);
    VRep product = toric_fiber_product(join1, join2, p1, p2);
    std::vector<MatchedPair> matches = matched_pairs(join1, join2, p1, p2);
    out << "# matched pairs over";
    for (const std::string& name : product.basis.names) out << " " << name;
    out << ":\n";
    for (std::size_t k = 0; k < matches.size(); ++k) {
      out << "#   L" << matches[k].i + 1 << " x R" << matches[k].j + 1
          << " = " << format_point(product.vertices[k]) << "  -> image "
          << format_point(iso.apply(product.vertices[k])) << "\n";
    }
  }
  out << format_edge_list(glued.tree);
  write_output(out_path, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact path polytopes of trees"};
  app.require_subcommand(1);

  std::string tree_path, point_path, t2_path, out_path;
  std::string format_ext = "ext", format_ine = "ine";
  std::string edge1, edge2;
  bool general = false, trace = false, inject_defect = false;
  unsigned all_up_to = 0;

  CLI::App* vrep_cmd =
      app.add_subcommand("vrep", "vertex description of the path polytope");
  vrep_cmd->add_option("tree", tree_path, "tree file (edge list or Newick)")
      ->required();
  vrep_cmd->add_option("--format", format_ext, "ext or json")
      ->check(CLI::IsMember({"ext", "json"}));
  vrep_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* hrep_cmd =
      app.add_subcommand("hrep", "halfspace description of the path polytope");
  hrep_cmd->add_option("tree", tree_path, "tree file (edge list or Newick)")
      ->required();
  hrep_cmd->add_flag("--general", general,
                     "allow degree-2 internal nodes and tiny trees");
  hrep_cmd->add_option("--format", format_ine, "ine or json")
      ->check(CLI::IsMember({"ine", "json"}));
  hrep_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* member_cmd =
      app.add_subcommand("member", "classify a point against the polytope");
  member_cmd->add_option("tree", tree_path, "tree file (edge list or Newick)")
      ->required();
  member_cmd->add_option("point", point_path,
                         "file of rationals in edge-coordinate order")
      ->required();

  CLI::App* certify_cmd = app.add_subcommand(
      "certify", "check closed-form descriptions against the oracle");
  CLI::Option* certify_tree_opt = certify_cmd->add_option(
      "tree", tree_path, "tree file (edge list or Newick)");
  CLI::Option* certify_all_opt = certify_cmd->add_option(
      "--all-trees-up-to", all_up_to,
      "certify every tree shape with up to E edges (E <= 8)");
  certify_tree_opt->excludes(certify_all_opt);
  certify_cmd->add_flag("--inject-defect", inject_defect,
                        "corrupt one constraint per tree to exercise reporting");

  CLI::App* glue_cmd =
      app.add_subcommand("glue", "identify a leaf edge of each factor");
  glue_cmd->add_option("tree1", tree_path, "left factor file")->required();
  glue_cmd->add_option("edge1", edge1, "leaf edge of the left factor, \"a,b\"")
      ->required();
  glue_cmd->add_option("tree2", t2_path, "right factor file")->required();
  glue_cmd->add_option("edge2", edge2, "leaf edge of the right factor, \"a,b\"")
      ->required();
  glue_cmd->add_flag("--trace", trace,
                     "prepend the fiber-product pair table as comments");
  glue_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (vrep_cmd->parsed()) return cmd_vrep(tree_path, format_ext, out_path);
    if (hrep_cmd->parsed())
      return cmd_hrep(tree_path, general, format_ine, out_path);
    if (member_cmd->parsed()) return cmd_member(tree_path, point_path);
    if (certify_cmd->parsed()) {
      if (all_up_to == 0 && tree_path.empty()) {
        std::cerr << "certify needs a tree file or --all-trees-up-to\n";
        return kExitUsage;
      }
      return cmd_certify(tree_path, all_up_to, inject_defect);
    }
    if (glue_cmd->parsed())
      return cmd_glue(tree_path, edge1, t2_path, edge2, trace, out_path);
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
