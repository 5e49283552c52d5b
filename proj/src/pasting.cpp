// SPDX-License-Identifier: Apache-2.0
#include "opslicer/pasting.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "opslicer/error.hpp"

namespace opslicer {

namespace {

std::size_t tree_height(const PdNode& node) {
  std::size_t h = 0;
  for (const auto& c : node.children) h = std::max(h, 1 + tree_height(c));
  return h;
}

std::size_t tree_size(const PdNode& node) {
  std::size_t s = 1;
  for (const auto& c : node.children) s += tree_size(c);
  return s;
}

void print_node(const PdNode& node, std::size_t depth, std::size_t dim, std::string& out) {
  if (depth == dim) {
    out += '.';
    return;
  }
  out += '[';
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i) out += ',';
    print_node(node.children[i], depth + 1, dim, out);
  }
  out += ']';
}

std::string literal(const PdNode& node, std::size_t dim) {
  std::string out;
  print_node(node, 0, dim, out);
  return out;
}

class LiteralParser {
 public:
  LiteralParser(std::string_view text, std::size_t dim) : text_(text), dim_(dim) {}

  PdNode run() {
    PdNode root = node(0);
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return root;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("pasting diagram literal: " + what, 1, pos_ + 1);
  }

  PdNode node(std::size_t depth) {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of literal");
    if (depth == dim_) {
      if (text_[pos_] != '.') fail("expected '.' at depth " + std::to_string(depth));
      ++pos_;
      return PdNode{};
    }
    if (text_[pos_] != '[') fail("expected '[' at depth " + std::to_string(depth));
    ++pos_;
    PdNode out;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ']') {
      ++pos_;
      return out;
    }
    while (true) {
      out.children.push_back(node(depth + 1));
      skip_ws();
      if (pos_ >= text_.size()) fail("unterminated '['");
      if (text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (text_[pos_] == ']') {
        ++pos_;
        return out;
      }
      fail("expected ',' or ']'");
    }
  }

  std::string_view text_;
  std::size_t dim_;
  std::size_t pos_ = 0;
};

// Tree whose leaves carry the argument leaves they were built from.
struct LNode {
  std::vector<LNode> children;
  std::vector<LeafOrigin> origin;
};

PdNode strip(const LNode& node) {
  PdNode out;
  out.children.reserve(node.children.size());
  for (const auto& c : node.children) out.children.push_back(strip(c));
  return out;
}

LNode label(const PdNode& node, std::size_t depth, std::size_t arg, std::size_t& next) {
  LNode out;
  if (node.children.empty()) {
    if (depth >= 1) out.origin.push_back({arg, next++});
    return out;
  }
  out.children.reserve(node.children.size());
  for (const auto& c : node.children) out.children.push_back(label(c, depth + 1, arg, next));
  return out;
}

std::string subtree_literal(const LNode& node, std::size_t levels) {
  return literal(strip(node), levels);
}

void merge_origins(std::vector<LeafOrigin>& into, const std::vector<LeafOrigin>& from) {
  into.insert(into.end(), from.begin(), from.end());
  std::sort(into.begin(), into.end());
  into.erase(std::unique(into.begin(), into.end()), into.end());
}

// Composes a and b along j relative to the current node. On mismatch the
// error carries both sides truncated to the j levels that must agree.
LNode compose_labeled(LNode a, LNode b, std::size_t j, std::vector<std::size_t>& path) {
  LNode out;
  if (j == 0) {
    if (a.children.empty() && b.children.empty()) {
      out.origin = std::move(a.origin);
      merge_origins(out.origin, b.origin);
      return out;
    }
    out.children = std::move(a.children);
    for (auto& c : b.children) out.children.push_back(std::move(c));
    return out;
  }
  if (a.children.size() != b.children.size()) {
    throw BoundaryError(path, subtree_literal(a, j), subtree_literal(b, j));
  }
  if (a.children.empty()) {
    out.origin = std::move(a.origin);
    merge_origins(out.origin, b.origin);
    return out;
  }
  out.children.reserve(a.children.size());
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    path.push_back(i);
    out.children.push_back(
        compose_labeled(std::move(a.children[i]), std::move(b.children[i]), j - 1, path));
    path.pop_back();
  }
  return out;
}

// Chain of `depth` single-child nodes ending in a node with the given children.
PdNode chain(std::size_t depth, std::vector<PdNode> children) {
  PdNode node;
  node.children = std::move(children);
  for (std::size_t i = 0; i < depth; ++i) {
    PdNode up;
    up.children.push_back(std::move(node));
    node = std::move(up);
  }
  return node;
}

struct Substituter {
  const std::vector<PastingDiagram>& sigma;
  SplitStrategy strategy;
  std::size_t next_leaf = 0;

  LNode run(const PdNode& root) {
    const PdNode* x = &root;
    std::size_t d = 0;
    while (x->children.size() == 1) {
      x = &x->children[0];
      ++d;
    }
    if (x->children.empty()) {
      if (d == 0) return LNode{};
      const std::size_t i = next_leaf++;
      std::size_t counter = 0;
      return label(sigma[i].root(), 0, i, counter);
    }
    const auto& kids = x->children;
    auto piece = [&](std::size_t from, std::size_t to) {
      return chain(d, std::vector<PdNode>(kids.begin() + static_cast<std::ptrdiff_t>(from),
                                          kids.begin() + static_cast<std::ptrdiff_t>(to)));
    };
    std::vector<std::size_t> path;
    const std::size_t c = kids.size();
    switch (strategy) {
      case SplitStrategy::kCanonical: {
        LNode acc = run(piece(0, 1));
        for (std::size_t i = 1; i < c; ++i) {
          LNode next = run(piece(i, i + 1));
          acc = compose_labeled(std::move(acc), std::move(next), d, path);
        }
        return acc;
      }
      case SplitStrategy::kFirstRest: {
        LNode first = run(piece(0, 1));
        LNode rest = run(piece(1, c));
        return compose_labeled(std::move(first), std::move(rest), d, path);
      }
      case SplitStrategy::kInitLast: {
        LNode init = run(piece(0, c - 1));
        LNode last = run(piece(c - 1, c));
        return compose_labeled(std::move(init), std::move(last), d, path);
      }
    }
    return LNode{};
  }
};

void collect_origins(const LNode& node, std::size_t depth,
                     std::vector<std::vector<LeafOrigin>>& out) {
  if (node.children.empty()) {
    if (depth >= 1) out.push_back(node.origin);
    return;
  }
  for (const auto& c : node.children) collect_origins(c, depth + 1, out);
}

void collect_leaves(const PdNode& node, std::size_t depth, std::vector<std::size_t>& path,
                    std::vector<LeafCell>& out) {
  if (node.children.empty()) {
    if (depth >= 1) out.push_back({depth, path});
    return;
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    path.push_back(i);
    collect_leaves(node.children[i], depth + 1, path, out);
    path.pop_back();
  }
}

std::size_t count_at_depth(const PdNode& node, std::size_t depth, std::size_t target) {
  if (depth == target) return 1;
  std::size_t s = 0;
  for (const auto& c : node.children) s += count_at_depth(c, depth + 1, target);
  return s;
}

PdNode cut(const PdNode& node, std::size_t remaining) {
  PdNode out;
  if (remaining == 0) return out;
  out.children.reserve(node.children.size());
  for (const auto& c : node.children) out.children.push_back(cut(c, remaining - 1));
  return out;
}

using Forests = std::vector<std::vector<PdNode>>;

struct TreeEnumerator {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<PdNode>> trees_memo;
  std::map<std::pair<std::size_t, std::size_t>, Forests> forests_memo;

  // Trees with exactly m nodes and height <= h.
  const std::vector<PdNode>& trees(std::size_t m, std::size_t h) {
    auto key = std::make_pair(m, h);
    if (auto it = trees_memo.find(key); it != trees_memo.end()) return it->second;
    std::vector<PdNode> out;
    if (m == 1) {
      out.push_back(PdNode{});
    } else if (m > 1 && h > 0) {
      for (const auto& f : forests(m - 1, h - 1)) out.push_back(PdNode{f});
    }
    return trees_memo.emplace(key, std::move(out)).first->second;
  }

  // Ordered forests with exactly m nodes in total, each tree of height <= h.
  const Forests& forests(std::size_t m, std::size_t h) {
    auto key = std::make_pair(m, h);
    if (auto it = forests_memo.find(key); it != forests_memo.end()) return it->second;
    Forests out;
    if (m == 0) {
      out.emplace_back();
    } else {
      for (std::size_t s = 1; s <= m; ++s) {
        const auto& firsts = trees(s, h);
        const auto& rests = forests(m - s, h);
        for (const auto& t : firsts) {
          for (const auto& r : rests) {
            std::vector<PdNode> f;
            f.reserve(r.size() + 1);
            f.push_back(t);
            f.insert(f.end(), r.begin(), r.end());
            out.push_back(std::move(f));
          }
        }
      }
    }
    return forests_memo.emplace(key, std::move(out)).first->second;
  }
};

}  // namespace

bool operator<(const PdNode& a, const PdNode& b) {
  return std::lexicographical_compare(a.children.begin(), a.children.end(), b.children.begin(),
                                      b.children.end());
}

bool operator<(const PastingDiagram& a, const PastingDiagram& b) {
  if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
  return a.root_ < b.root_;
}

PastingDiagram::PastingDiagram(std::size_t dim, PdNode root) : dim_(dim), root_(std::move(root)) {
  if (tree_height(root_) > dim_) {
    throw DomainError("pasting diagram of height " + std::to_string(tree_height(root_)) +
                      " does not fit in dimension " + std::to_string(dim_));
  }
}

PastingDiagram PastingDiagram::parse(std::string_view literal_text, std::size_t dim) {
  LiteralParser parser(literal_text, dim);
  return PastingDiagram(dim, parser.run());
}

std::size_t PastingDiagram::node_count() const { return tree_size(root_); }

std::size_t PastingDiagram::height() const { return tree_height(root_); }

std::string PastingDiagram::to_string() const { return literal(root_, dim_); }

PastingDiagram atom(std::size_t d, std::size_t n) {
  if (d > n) {
    throw DomainError("atom: depth " + std::to_string(d) + " exceeds dimension " +
                      std::to_string(n));
  }
  return PastingDiagram(n, chain(d, {}));
}

std::size_t cell_count(const PastingDiagram& pd) {
  return count_at_depth(pd.root(), 0, pd.dim());
}

bool is_degenerate(const PastingDiagram& pd) { return pd.height() < pd.dim(); }

PastingDiagram boundary(const PastingDiagram& pd) {
  if (pd.dim() == 0) throw DomainError("boundary of a 0-dimensional diagram");
  return truncate_pd(pd, pd.dim() - 1);
}

PastingDiagram truncate_pd(const PastingDiagram& pd, std::size_t k) {
  return PastingDiagram(k, cut(pd.root(), k));
}

PastingDiagram lift(const PastingDiagram& pd, std::size_t n) {
  if (n < pd.dim()) throw DomainError("lift: target dimension below source dimension");
  return PastingDiagram(n, pd.root());
}

PastingDiagram compose_along(const PastingDiagram& a, const PastingDiagram& b, std::size_t j) {
  if (a.dim() != b.dim()) throw DomainError("compose_along: dimensions differ");
  if (j >= a.dim()) throw DomainError("compose_along: j must be below the dimension");
  std::size_t ca = 0;
  std::size_t cb = 0;
  LNode la = label(a.root(), 0, 0, ca);
  LNode lb = label(b.root(), 0, 1, cb);
  std::vector<std::size_t> path;
  LNode out = compose_labeled(std::move(la), std::move(lb), j, path);
  return PastingDiagram(a.dim(), strip(out));
}

std::vector<LeafCell> leaf_cells(const PastingDiagram& pd) {
  std::vector<LeafCell> out;
  std::vector<std::size_t> path;
  collect_leaves(pd.root(), 0, path, out);
  return out;
}

std::vector<std::size_t> top_leaf_indices(const PastingDiagram& pd) {
  std::vector<std::size_t> out;
  const auto leaves = leaf_cells(pd);
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (leaves[i].depth == pd.dim()) out.push_back(i);
  }
  return out;
}

Substitution substitute_traced(const PastingDiagram& pd, const std::vector<PastingDiagram>& sigma,
                               SplitStrategy strategy) {
  const auto leaves = leaf_cells(pd);
  if (leaves.size() != sigma.size()) {
    throw DomainError("substitute: expected " + std::to_string(leaves.size()) +
                      " arguments, got " + std::to_string(sigma.size()));
  }
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (sigma[i].dim() != leaves[i].depth) {
      throw DomainError("substitute: argument " + std::to_string(i + 1) + " has dimension " +
                        std::to_string(sigma[i].dim()) + " but its leaf has depth " +
                        std::to_string(leaves[i].depth));
    }
  }
  Substituter sub{sigma, strategy};
  LNode tree = sub.run(pd.root());
  Substitution out;
  out.diagram = PastingDiagram(pd.dim(), strip(tree));
  collect_origins(tree, 0, out.origins);
  return out;
}

PastingDiagram substitute(const PastingDiagram& pd, const std::vector<PastingDiagram>& sigma) {
  return substitute_traced(pd, sigma).diagram;
}

std::vector<PastingDiagram> enumerate_pds(std::size_t n, std::size_t max_nodes) {
  TreeEnumerator gen;
  std::vector<PastingDiagram> out;
  const std::size_t bound = std::max<std::size_t>(max_nodes, 1);
  for (std::size_t m = 1; m <= bound; ++m) {
    for (const auto& t : gen.trees(m, n)) out.emplace_back(n, t);
  }
  return out;
}

}  // namespace opslicer
