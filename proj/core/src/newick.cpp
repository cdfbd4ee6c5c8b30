#include <cctype>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "pathpoly/errors.hpp"
#include "pathpoly/tree.hpp"

namespace pathpoly {

namespace {

struct NewickNode {
  std::string label;
  std::vector<std::unique_ptr<NewickNode>> children;
};

class NewickParser {
 public:
  explicit NewickParser(const std::string& text) : text_(text) {}

  std::unique_ptr<NewickNode> parse() {
    auto root = subtree();
    skip_space();
    expect(';');
    skip_space();
    if (pos_ != text_.size())
      fail(errc::malformed_newick,
           at() + ": content after the closing ';'");
    return root;
  }

 private:
  std::unique_ptr<NewickNode> subtree() {
    skip_space();
    auto node = std::make_unique<NewickNode>();
    if (peek() == '(') {
      ++pos_;
      node->children.push_back(subtree());
      skip_space();
      while (peek() == ',') {
        ++pos_;
        node->children.push_back(subtree());
        skip_space();
      }
      expect(')');
      if (node->children.size() < 2)
        fail(errc::malformed_newick,
             at() + ": group with fewer than two children");
      skip_space();
      node->label = maybe_label();
    } else {
      node->label = maybe_label();
      if (node->label.empty())
        fail(errc::malformed_newick, at() + ": expected a label or '('");
    }
    skip_space();
    if (peek() == ':') {
      ++pos_;
      discard_branch_length();
    }
    return node;
  }

  std::string maybe_label() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_delimiter(text_[pos_]) &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void discard_branch_length() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_number_char(text_[pos_])) ++pos_;
    if (pos_ == start)
      fail(errc::malformed_newick, at() + ": expected a branch length");
  }

  static bool is_delimiter(char c) {
    return c == '(' || c == ')' || c == ',' || c == ':' || c == ';' ||
           c == '[' || c == ']';
  }

  static bool is_number_char(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' ||
           c == '-' || c == '+' || c == 'e' || c == 'E';
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c)
      fail(errc::malformed_newick,
           at() + ": expected '" + std::string(1, c) + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string at() const { return "offset " + std::to_string(pos_); }

  const std::string& text_;
  std::size_t pos_ = 0;
};

void autolabel_preorder(NewickNode* node, std::size_t& counter) {
  if (!node->children.empty() && node->label.empty())
    node->label = "_" + std::to_string(++counter);
  for (auto& child : node->children) autolabel_preorder(child.get(), counter);
}

void collect_labels(const NewickNode* node, std::set<std::string>& seen) {
  if (!seen.insert(node->label).second)
    fail(errc::duplicate_label, "label '" + node->label + "' occurs twice");
  for (const auto& child : node->children) collect_labels(child.get(), seen);
}

void collect_edges(const NewickNode* node, std::vector<Edge>& edges) {
  for (const auto& child : node->children) {
    edges.emplace_back(node->label, child->label);
    collect_edges(child.get(), edges);
  }
}

}  // namespace

Tree parse_newick(const std::string& text) {
  NewickParser parser(text);
  auto root = parser.parse();
  if (root->children.empty())
    fail(errc::malformed_newick, "a single label is not a tree");

  std::size_t counter = 0;
  autolabel_preorder(root.get(), counter);
  std::set<std::string> labels;
  collect_labels(root.get(), labels);

  std::vector<Edge> edges;
  if (root->children.size() == 2) {
    // suppress the artificial degree-2 root of a rooted string
    edges.emplace_back(root->children[0]->label, root->children[1]->label);
    for (const auto& child : root->children)
      collect_edges(child.get(), edges);
  } else {
    collect_edges(root.get(), edges);
  }
  return Tree::from_edges(edges);
}

}  // namespace pathpoly
