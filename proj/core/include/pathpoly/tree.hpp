#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pathpoly/affine.hpp"

namespace pathpoly {

// Node labels are nonempty, whitespace-free strings ordered bytewise.
using NodeId = std::string;

// Undirected edge stored with a < b. Endpoints must differ.
class Edge {
 public:
  Edge() = default;
  Edge(NodeId x, NodeId y);

  const NodeId& a() const { return a_; }
  const NodeId& b() const { return b_; }

  /** "{a,b}", the coordinate name used for this edge. */
  std::string name() const { return "{" + a_ + "," + b_ + "}"; }

  auto operator<=>(const Edge&) const = default;

 private:
  NodeId a_, b_;
};

// Finite unrooted tree on labeled nodes. The sorted edge list fixes the
// coordinate order used by every vector space built over the tree.
class Tree {
 public:
  /** Validates that the edges form a tree on at least two nodes. */
  static Tree from_edges(const std::vector<Edge>& edges);

  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<NodeId>& neighbors(const NodeId& v) const;
  std::size_t degree(const NodeId& v) const { return neighbors(v).size(); }

  bool has_node(const NodeId& v) const { return adjacency_.count(v) != 0; }
  bool has_edge(const Edge& e) const;
  std::size_t edge_index(const Edge& e) const;

  bool is_leaf(const NodeId& v) const { return degree(v) == 1; }
  const std::vector<NodeId>& leaves() const { return leaves_; }
  const std::vector<NodeId>& internal_nodes() const { return internal_; }
  /** Edges with at least one leaf endpoint, in coordinate order. */
  std::vector<Edge> leaf_edges() const;

  bool has_degree_two_internal() const;

  /** Edges of the unique i-j path, in coordinate order. */
  std::vector<Edge> path_edges(const NodeId& i, const NodeId& j) const;

  Basis edge_basis() const;

 private:
  Tree() = default;

  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
  std::vector<NodeId> leaves_;
  std::vector<NodeId> internal_;
  std::map<NodeId, std::vector<NodeId>> adjacency_;
};

/** Parses "a b" lines; '#' lines and blank lines are skipped.
    Errors carry 1-based line numbers. */
Tree parse_edge_list(const std::string& text);

std::string format_edge_list(const Tree& tree);

/** Parses a Newick string, keeping topology only. Branch lengths are read
    and discarded, unlabeled internal nodes become "_1", "_2", ... in
    preorder, and a root with exactly two children is suppressed. Groups
    with fewer than two children are rejected. */
Tree parse_newick(const std::string& text);

enum class Side { left, right };

struct EdgeOrigin {
  std::optional<Edge> left;   // source edge in the first factor
  std::optional<Edge> right;  // source edge in the second factor
};

using EdgeOriginMap = std::map<Edge, EdgeOrigin>;

struct GlueResult {
  Tree tree;
  EdgeOriginMap origins;  // the merged edge maps to both removed edges
};

/** Identifies leaf edge e1 of t1 with leaf edge e2 of t2: the two leaf
    endpoints disappear and the remaining endpoints become adjacent. Node
    labels of the factors must be disjoint. When an edge is a single-edge
    tree, the lexicographically larger endpoint is the one removed. */
GlueResult glue(const Tree& t1, const Edge& e1, const Tree& t2,
                const Edge& e2);

struct ContractResult {
  Tree tree;           // no internal node of degree 2 remains
  AffineMap embedding; // merged-edge coordinate spreads to the sum of its
                       // replaced original edges; untouched edges fix
};

/** Suppresses internal degree-2 nodes until none remain. Leaves are kept.
    Idempotent on trees that are already reduced. */
ContractResult contract_degree2(const Tree& tree);

struct SplitResult {
  Tree t1;   // component of the smaller endpoint, plus a fresh leaf edge
  Edge e1;
  Tree t2;
  Edge e2;
};

/** Severs an edge joining two internal nodes and caps both stumps with
    fresh leaves named as in star_decomposition; glue(t1, e1, t2, e2)
    rebuilds the tree exactly. Throws error(errc::bad_parameters) when an
    endpoint is a leaf. */
SplitResult split_at_edge(const Tree& tree, const Edge& cut);

struct GluingInstruction {
  Edge accumulated_edge;  // leaf edge of the tree folded so far
  Edge star_edge;         // leaf edge of the star being attached
};

struct StarPiece {
  Tree star;
  std::optional<GluingInstruction> attach;  // absent for the first star
};

/** Splits a tree without degree-2 internal nodes into one star per internal
    node. Fresh leaves are named "<center>#<internal neighbor>" (assumes '#'
    does not occur in node labels); left-folding glue over the list rebuilds
    the tree exactly. Internal edges are consumed smallest-first among those
    touching the part already folded. */
std::vector<StarPiece> star_decomposition(const Tree& tree);

}  // namespace pathpoly
