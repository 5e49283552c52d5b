// SPDX-License-Identifier: Apache-2.0
#ifndef OPSLICER_PASTING_HPP
#define OPSLICER_PASTING_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace opslicer {

// Node of a planar rooted tree. Children are ordered.
struct PdNode {
  std::vector<PdNode> children;

  friend bool operator==(const PdNode& a, const PdNode& b) { return a.children == b.children; }
  friend bool operator!=(const PdNode& a, const PdNode& b) { return !(a == b); }
  friend bool operator<(const PdNode& a, const PdNode& b);
};

// An n-pasting diagram in the terminal globular set, stored as a tree of
// height at most n. Depth-1 children are columns read left to right; deeper
// children are stacked cells read top to bottom.
class PastingDiagram {
 public:
  // The 0-dimensional point.
  PastingDiagram() = default;
  // Throws DomainError when the tree is taller than dim.
  PastingDiagram(std::size_t dim, PdNode root);

  // Parses a literal such as "[[.,.],[]]" at the given dimension.
  static PastingDiagram parse(std::string_view literal, std::size_t dim);

  std::size_t dim() const { return dim_; }
  const PdNode& root() const { return root_; }
  std::size_t node_count() const;
  std::size_t height() const;
  std::string to_string() const;

  friend bool operator==(const PastingDiagram& a, const PastingDiagram& b) {
    return a.dim_ == b.dim_ && a.root_ == b.root_;
  }
  friend bool operator!=(const PastingDiagram& a, const PastingDiagram& b) { return !(a == b); }
  friend bool operator<(const PastingDiagram& a, const PastingDiagram& b);

 private:
  std::size_t dim_ = 0;
  PdNode root_;
};

// A childless node at depth >= 1, addressed by child indices from the root.
struct LeafCell {
  std::size_t depth = 0;
  std::vector<std::size_t> path;

  friend bool operator==(const LeafCell& a, const LeafCell& b) {
    return a.depth == b.depth && a.path == b.path;
  }
};

// Where a leaf of a substituted diagram came from: leaf `leaf` of argument `arg`.
struct LeafOrigin {
  std::size_t arg = 0;
  std::size_t leaf = 0;

  friend bool operator==(const LeafOrigin& a, const LeafOrigin& b) {
    return a.arg == b.arg && a.leaf == b.leaf;
  }
  friend bool operator<(const LeafOrigin& a, const LeafOrigin& b) {
    return a.arg != b.arg ? a.arg < b.arg : a.leaf < b.leaf;
  }
};

// Result of a substitution together with, for each leaf cell of the result in
// standard order, the argument leaves glued into it. Leaves of arguments that
// are absorbed into the boundary of a neighbouring cell appear nowhere.
struct Substitution {
  PastingDiagram diagram;
  std::vector<std::vector<LeafOrigin>> origins;
};

// Order in which a diagram is cut into single cells during substitution. All
// strategies must agree; the alternatives exist for differential testing.
enum class SplitStrategy { kCanonical, kFirstRest, kInitLast };

// Single chain of depth d viewed as an n-diagram.
PastingDiagram atom(std::size_t d, std::size_t n);

// Number of nodes at depth exactly dim.
std::size_t cell_count(const PastingDiagram& pd);

// True when the tree is shorter than the dimension.
bool is_degenerate(const PastingDiagram& pd);

// Deletes the nodes at depth dim. Requires dim >= 1.
PastingDiagram boundary(const PastingDiagram& pd);

// Keeps the nodes of depth <= k and reinterprets the result at dim k.
PastingDiagram truncate_pd(const PastingDiagram& pd, std::size_t k);

// Same tree viewed at a larger dimension.
PastingDiagram lift(const PastingDiagram& pd, std::size_t n);

// Glues b after a along their common j-dimensional boundary.
PastingDiagram compose_along(const PastingDiagram& a, const PastingDiagram& b, std::size_t j);

// Childless nodes of depth >= 1 in depth-first pre-order.
std::vector<LeafCell> leaf_cells(const PastingDiagram& pd);

// Positions in leaf_cells(pd) of the depth-dim leaves, in standard order.
std::vector<std::size_t> top_leaf_indices(const PastingDiagram& pd);

// Replaces the i-th leaf cell of pd by sigma[i].
PastingDiagram substitute(const PastingDiagram& pd, const std::vector<PastingDiagram>& sigma);
Substitution substitute_traced(const PastingDiagram& pd, const std::vector<PastingDiagram>& sigma,
                               SplitStrategy strategy = SplitStrategy::kCanonical);

// All n-diagrams with at most max_nodes tree nodes, ordered by node count and
// then by generation order. The point is always included.
std::vector<PastingDiagram> enumerate_pds(std::size_t n, std::size_t max_nodes);

}  // namespace opslicer

#endif  // OPSLICER_PASTING_HPP
