#include "pathpoly/tree.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <utility>

#include "pathpoly/errors.hpp"

namespace pathpoly {

Edge::Edge(NodeId x, NodeId y) {
  if (x == y) fail(errc::self_loop, "edge endpoints coincide: '" + x + "'");
  if (y < x) std::swap(x, y);
  a_ = std::move(x);
  b_ = std::move(y);
}

Tree Tree::from_edges(const std::vector<Edge>& edges) {
  if (edges.empty())
    fail(errc::too_few_nodes, "a tree needs at least one edge");

  Tree t;
  std::set<Edge> seen;
  for (const Edge& e : edges) {
    if (!seen.insert(e).second)
      fail(errc::duplicate_edge, "edge " + e.name() + " listed twice");
    t.adjacency_[e.a()].push_back(e.b());
    t.adjacency_[e.b()].push_back(e.a());
  }
  t.edges_.assign(seen.begin(), seen.end());

  for (auto& [node, nbrs] : t.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    t.nodes_.push_back(node);
  }

  // connectivity, then the edge-count criterion for acyclicity
  std::set<NodeId> visited;
  std::deque<NodeId> work{t.nodes_.front()};
  visited.insert(t.nodes_.front());
  while (!work.empty()) {
    NodeId v = work.front();
    work.pop_front();
    for (const NodeId& w : t.adjacency_.at(v))
      if (visited.insert(w).second) work.push_back(w);
  }
  if (visited.size() != t.nodes_.size())
    fail(errc::disconnected, "edge list spans " +
                                 std::to_string(t.nodes_.size()) +
                                 " nodes but only " +
                                 std::to_string(visited.size()) +
                                 " are reachable from '" + t.nodes_.front() +
                                 "'");
  if (t.edges_.size() != t.nodes_.size() - 1)
    fail(errc::has_cycle, "connected graph with " +
                              std::to_string(t.edges_.size()) + " edges on " +
                              std::to_string(t.nodes_.size()) + " nodes");

  for (const NodeId& v : t.nodes_) {
    if (t.adjacency_.at(v).size() == 1)
      t.leaves_.push_back(v);
    else
      t.internal_.push_back(v);
  }
  return t;
}

const std::vector<NodeId>& Tree::neighbors(const NodeId& v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end())
    fail(errc::unknown_node, "no node '" + v + "'");
  return it->second;
}

bool Tree::has_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t Tree::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e)
    fail(errc::unknown_node, "no edge " + e.name());
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<Edge> Tree::leaf_edges() const {
  std::vector<Edge> out;
  for (const Edge& e : edges_)
    if (is_leaf(e.a()) || is_leaf(e.b())) out.push_back(e);
  return out;
}

bool Tree::has_degree_two_internal() const {
  for (const NodeId& v : internal_)
    if (degree(v) == 2) return true;
  return false;
}

std::vector<Edge> Tree::path_edges(const NodeId& i, const NodeId& j) const {
  if (!has_node(i)) fail(errc::unknown_node, "no node '" + i + "'");
  if (!has_node(j)) fail(errc::unknown_node, "no node '" + j + "'");
  if (i == j) fail(errc::equal_endpoints, "path endpoints coincide: '" + i + "'");

  std::map<NodeId, NodeId> parent;
  std::deque<NodeId> work{i};
  parent[i] = i;
  while (!work.empty()) {
    NodeId v = work.front();
    work.pop_front();
    if (v == j) break;
    for (const NodeId& w : adjacency_.at(v)) {
      if (!parent.count(w)) {
        parent[w] = v;
        work.push_back(w);
      }
    }
  }

  std::vector<Edge> path;
  for (NodeId v = j; v != i; v = parent.at(v)) path.emplace_back(v, parent.at(v));
  std::sort(path.begin(), path.end());
  return path;
}

Basis Tree::edge_basis() const {
  Basis b;
  b.names.reserve(edges_.size());
  for (const Edge& e : edges_) b.names.push_back(e.name());
  return b;
}

Tree parse_edge_list(const std::string& text) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a) || a[0] == '#') continue;
    std::string where = "line " + std::to_string(lineno);
    if (!(ls >> b))
      fail(errc::malformed_edge_list, where + ": expected two labels");
    if (ls >> extra)
      fail(errc::malformed_edge_list, where + ": trailing token '" + extra + "'");
    if (a == b) fail(errc::self_loop, where + ": edge '" + a + " " + b + "'");
    Edge e(a, b);
    if (!seen.insert(e).second)
      fail(errc::duplicate_edge, where + ": edge " + e.name() + " repeated");
    edges.push_back(e);
  }
  return Tree::from_edges(edges);
}

std::string format_edge_list(const Tree& tree) {
  std::string out;
  for (const Edge& e : tree.edges()) out += e.a() + " " + e.b() + "\n";
  return out;
}

GlueResult glue(const Tree& t1, const Edge& e1, const Tree& t2,
                const Edge& e2) {
  auto leaf_endpoint = [](const Tree& t, const Edge& e, const char* tag) {
    if (!t.has_edge(e))
      fail(errc::not_leaf_edge, std::string(tag) + ": edge " + e.name() +
                                    " is not in the tree");
    bool la = t.is_leaf(e.a());
    bool lb = t.is_leaf(e.b());
    if (!la && !lb)
      fail(errc::not_leaf_edge, std::string(tag) + ": edge " + e.name() +
                                    " has no leaf endpoint");
    // single-edge trees have two leaf endpoints; drop the larger label
    return (la && lb) ? e.b() : (la ? e.a() : e.b());
  };

  NodeId k1 = leaf_endpoint(t1, e1, "first factor");
  NodeId k2 = leaf_endpoint(t2, e2, "second factor");
  NodeId u1 = (k1 == e1.a()) ? e1.b() : e1.a();
  NodeId u2 = (k2 == e2.a()) ? e2.b() : e2.a();

  for (const NodeId& v : t2.nodes())
    if (t1.has_node(v))
      fail(errc::label_collision, "label '" + v + "' occurs in both factors");

  std::vector<Edge> edges;
  EdgeOriginMap origins;
  for (const Edge& e : t1.edges()) {
    if (e == e1) continue;
    edges.push_back(e);
    origins[e].left = e;
  }
  for (const Edge& e : t2.edges()) {
    if (e == e2) continue;
    edges.push_back(e);
    origins[e].right = e;
  }
  Edge merged(u1, u2);
  edges.push_back(merged);
  origins[merged].left = e1;
  origins[merged].right = e2;

  return GlueResult{Tree::from_edges(edges), std::move(origins)};
}

ContractResult contract_degree2(const Tree& tree) {
  std::map<NodeId, std::set<NodeId>> adj;
  for (const NodeId& v : tree.nodes()) {
    const auto& nbrs = tree.neighbors(v);
    adj[v] = std::set<NodeId>(nbrs.begin(), nbrs.end());
  }
  std::map<Edge, std::vector<Edge>> cover;
  for (const Edge& e : tree.edges()) cover[e] = {e};

  for (;;) {
    NodeId found;
    bool any = false;
    for (const auto& [v, nbrs] : adj) {
      if (nbrs.size() == 2) {
        found = v;
        any = true;
        break;
      }
    }
    if (!any) break;
    auto it = adj[found].begin();
    NodeId p = *it++;
    NodeId q = *it;
    Edge ep(found, p), eq(found, q), merged(p, q);
    std::vector<Edge> joined = cover[ep];
    joined.insert(joined.end(), cover[eq].begin(), cover[eq].end());
    std::sort(joined.begin(), joined.end());
    cover.erase(ep);
    cover.erase(eq);
    cover[merged] = std::move(joined);
    adj[p].erase(found);
    adj[q].erase(found);
    adj[p].insert(q);
    adj[q].insert(p);
    adj.erase(found);
  }

  std::vector<Edge> kept;
  for (const auto& [e, _] : cover) kept.push_back(e);
  Tree reduced = Tree::from_edges(kept);

  AffineMap embedding;
  embedding.domain = reduced.edge_basis();
  embedding.codomain = tree.edge_basis();
  embedding.constant.assign(tree.edges().size(), Rat(0));
  for (const Edge& f : reduced.edges()) {
    QVec col(tree.edges().size(), Rat(0));
    for (const Edge& original : cover.at(f))
      col[tree.edge_index(original)] = 1;
    embedding.columns.push_back(std::move(col));
  }
  return ContractResult{std::move(reduced), std::move(embedding)};
}

namespace {

NodeId fresh_leaf(const NodeId& center, const NodeId& internal_neighbor) {
  return center + "#" + internal_neighbor;
}

Tree star_of(const Tree& tree, const NodeId& center) {
  std::vector<Edge> edges;
  for (const NodeId& w : tree.neighbors(center)) {
    NodeId leaf = tree.is_leaf(w) ? w : fresh_leaf(center, w);
    edges.emplace_back(center, leaf);
  }
  return Tree::from_edges(edges);
}

}  // namespace

SplitResult split_at_edge(const Tree& tree, const Edge& cut) {
  if (!tree.has_edge(cut)) fail(errc::unknown_node, "no edge " + cut.name());
  if (tree.is_leaf(cut.a()) || tree.is_leaf(cut.b()))
    fail(errc::bad_parameters,
         "edge " + cut.name() + " must join two internal nodes");

  auto side = [&](const NodeId& keep, const NodeId& drop) {
    std::set<NodeId> comp{keep};
    std::deque<NodeId> work{keep};
    while (!work.empty()) {
      NodeId v = work.front();
      work.pop_front();
      for (const NodeId& w : tree.neighbors(v)) {
        if (v == keep && w == drop) continue;
        if (comp.insert(w).second) work.push_back(w);
      }
    }
    std::vector<Edge> edges;
    for (const Edge& e : tree.edges())
      if (comp.count(e.a()) && comp.count(e.b())) edges.push_back(e);
    Edge cap(keep, fresh_leaf(keep, drop));
    edges.push_back(cap);
    return std::make_pair(Tree::from_edges(edges), cap);
  };

  auto [t1, e1] = side(cut.a(), cut.b());
  auto [t2, e2] = side(cut.b(), cut.a());
  return SplitResult{std::move(t1), e1, std::move(t2), e2};
}

std::vector<StarPiece> star_decomposition(const Tree& tree) {
  if (tree.has_degree_two_internal())
    fail(errc::has_degree_two_internal,
         "contract degree-2 nodes before decomposing");
  if (tree.internal_nodes().empty())
    fail(errc::no_internal_node, "single-edge trees have no star pieces");

  std::vector<Edge> internal_edges;
  for (const Edge& e : tree.edges())
    if (!tree.is_leaf(e.a()) && !tree.is_leaf(e.b()))
      internal_edges.push_back(e);

  std::vector<StarPiece> pieces;
  if (internal_edges.empty()) {
    pieces.push_back({star_of(tree, tree.internal_nodes().front()), {}});
    return pieces;
  }

  // Grow from the smallest internal edge; always consume the smallest
  // internal edge with exactly one endpoint already folded.
  std::set<NodeId> folded;
  std::set<Edge> remaining(internal_edges.begin(), internal_edges.end());
  const Edge& first = internal_edges.front();
  pieces.push_back({star_of(tree, first.a()), {}});
  folded.insert(first.a());

  while (!remaining.empty()) {
    Edge next;
    bool any = false;
    for (const Edge& e : remaining) {
      bool fa = folded.count(e.a()) != 0;
      bool fb = folded.count(e.b()) != 0;
      if (fa != fb) {
        next = e;
        any = true;
        break;
      }
    }
    if (!any) fail(errc::internal, "internal edges do not form a subtree");
    remaining.erase(next);
    NodeId inside = folded.count(next.a()) ? next.a() : next.b();
    NodeId outside = (inside == next.a()) ? next.b() : next.a();
    GluingInstruction ins{Edge(inside, fresh_leaf(inside, outside)),
                          Edge(outside, fresh_leaf(outside, inside))};
    pieces.push_back({star_of(tree, outside), ins});
    folded.insert(outside);
  }
  return pieces;
}

}  // namespace pathpoly
