#include "pathpoly/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "pathpoly/errors.hpp"

namespace pathpoly {

namespace {

// adjacency over dense ids; cheap to copy while growing
struct Shape {
  std::vector<std::vector<int>> adj;

  int size() const { return static_cast<int>(adj.size()); }

  Shape grown_at(int host) const {
    Shape s = *this;
    int fresh = s.size();
    s.adj.emplace_back();
    s.adj[host].push_back(fresh);
    s.adj[fresh].push_back(host);
    return s;
  }
};

// one or two middle nodes left by repeatedly stripping leaves
std::vector<int> centers(const Shape& t) {
  int n = t.size();
  if (n == 1) return {0};
  std::vector<int> degree(n);
  std::vector<int> frontier;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(t.adj[v].size());
    if (degree[v] == 1) frontier.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : frontier) {
      --remaining;
      for (int w : t.adj[v])
        if (--degree[w] == 1) next.push_back(w);
    }
    frontier = std::move(next);
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

// nested-parentheses code of the subtree at v; children sorted, so the code
// depends only on the rooted shape
std::string rooted_code(const Shape& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : t.adj[v])
    if (w != parent) kids.push_back(rooted_code(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string code = "(";
  for (const std::string& k : kids) code += k;
  code += ")";
  return code;
}

// isomorphism-invariant certificate: minimum of the codes rooted at a center
std::string certificate(const Shape& t) {
  std::vector<int> cs = centers(t);
  std::string best = rooted_code(t, cs[0], -1);
  if (cs.size() == 2) best = std::min(best, rooted_code(t, cs[1], -1));
  return best;
}

Tree to_canonical_tree(const Shape& t) {
  std::vector<int> cs = centers(t);
  int root = cs[0];
  if (cs.size() == 2 &&
      rooted_code(t, cs[1], -1) < rooted_code(t, cs[0], -1))
    root = cs[1];

  // preorder from the chosen root, children in code order; labels are the
  // visit ranks, so isomorphic shapes come out with identical edge lists
  std::vector<Edge> edges;
  int next_label = 0;
  auto visit = [&](auto&& self, int v, int parent,
                   const std::string& parent_label) -> void {
    std::string label = std::to_string(++next_label);
    if (!parent_label.empty()) edges.emplace_back(parent_label, label);
    std::vector<std::pair<std::string, int>> kids;
    for (int w : t.adj[v])
      if (w != parent) kids.emplace_back(rooted_code(t, w, v), w);
    std::sort(kids.begin(), kids.end());
    for (const auto& [code, w] : kids) self(self, w, v, label);
  };
  visit(visit, root, -1, "");
  return Tree::from_edges(edges);
}

std::vector<std::vector<Shape>> shape_layers(std::size_t max_edges) {
  // layer k holds one representative per shape with k+1 nodes; grown by
  // hanging a fresh leaf off every node of every smaller shape
  std::vector<std::vector<Shape>> layers;
  Shape pair;
  pair.adj = {{1}, {0}};
  layers.push_back({pair});
  for (std::size_t e = 2; e <= max_edges; ++e) {
    std::map<std::string, Shape> seen;
    for (const Shape& t : layers.back())
      for (int v = 0; v < t.size(); ++v) {
        Shape g = t.grown_at(v);
        seen.emplace(certificate(g), std::move(g));
      }
    std::vector<Shape> layer;
    for (auto& [code, shape] : seen) layer.push_back(std::move(shape));
    layers.push_back(std::move(layer));
  }
  return layers;
}

}  // namespace

std::vector<Tree> all_tree_shapes(std::size_t max_edges) {
  if (max_edges == 0)
    fail(errc::bad_parameters, "a tree has at least one edge");
  std::vector<Tree> out;
  for (const std::vector<Shape>& layer : shape_layers(max_edges))
    for (const Shape& t : layer) out.push_back(to_canonical_tree(t));
  return out;
}

std::size_t count_tree_shapes(std::size_t edge_count) {
  if (edge_count == 0)
    fail(errc::bad_parameters, "a tree has at least one edge");
  return shape_layers(edge_count).back().size();
}

}  // namespace pathpoly
