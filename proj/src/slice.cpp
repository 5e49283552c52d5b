// SPDX-License-Identifier: Apache-2.0
#include "opslicer/slice.hpp"

#include <algorithm>
#include <utility>

#include "opslicer/error.hpp"

namespace opslicer {

namespace {

void require_dim(const GTerm& t, const GlobPresentation& p, std::size_t k) {
  const std::size_t d = term_dim(t, p);
  if (d != k) {
    throw DomainError("term '" + t.to_string() + "' has dimension " + std::to_string(d) +
                      ", expected " + std::to_string(k));
  }
}

// Rank of each leaf among the top leaves of pd, or npos for lower leaves.
std::vector<std::size_t> top_rank(const PastingDiagram& pd) {
  const auto leaves = leaf_cells(pd);
  std::vector<std::size_t> rank(leaves.size(), static_cast<std::size_t>(-1));
  std::size_t next = 0;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (leaves[i].depth == pd.dim()) rank[i] = next++;
  }
  return rank;
}

SymElement f_rec(const GTerm& t, const GlobPresentation& p, std::size_t k) {
  switch (t.kind()) {
    case GTerm::Kind::kIdentity:
      return SymElement::plain(PlainTerm::input());
    case GTerm::Kind::kGenerator: {
      const GenDecl* g = p.find(t.name());
      if (!g) throw DomainError("undeclared generator '" + t.name() + "'");
      return SymElement::plain(PlainTerm::generator(g->name, cell_count(g->shape)));
    }
    case GTerm::Kind::kComposite:
      break;
  }
  const PastingDiagram head = shape_of(t.head(), p);
  const auto leaves = leaf_cells(head);
  std::vector<PastingDiagram> shapes;
  shapes.reserve(t.args().size());
  for (const auto& a : t.args()) shapes.push_back(shape_of(a, p));

  // Block index and offset of each argument sitting on a k-cell.
  std::vector<std::size_t> block(leaves.size(), static_cast<std::size_t>(-1));
  std::vector<std::size_t> offset(leaves.size(), 0);
  std::vector<SymElement> parts;
  std::size_t total = 0;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (leaves[i].depth != k) continue;
    block[i] = parts.size();
    offset[i] = total;
    parts.push_back(f_rec(t.args()[i], p, k));
    total += parts.back().degree();
  }
  const SymElement composed = sym_compose(f_rec(t.head(), p, k), parts);

  const Substitution sub = substitute_traced(head, shapes);
  const auto result_leaves = leaf_cells(sub.diagram);
  std::vector<std::vector<std::size_t>> ranks;
  ranks.reserve(shapes.size());
  for (const auto& s : shapes) ranks.push_back(top_rank(s));
  std::vector<std::uint32_t> images;
  images.reserve(total);
  for (std::size_t i = 0; i < result_leaves.size(); ++i) {
    if (result_leaves[i].depth != k) continue;
    const LeafOrigin* found = nullptr;
    for (const auto& o : sub.origins[i]) {
      if (block[o.arg] != static_cast<std::size_t>(-1)) {
        found = &o;
        break;
      }
    }
    if (!found) throw Error("f: a k-cell of '" + t.to_string() + "' has no source argument");
    images.push_back(static_cast<std::uint32_t>(offset[found->arg] + ranks[found->arg][found->leaf]));
  }
  return act(Perm::from_images(std::move(images)), composed);
}

}  // namespace

std::size_t k_arity(const GenDecl& g, std::size_t k) {
  if (g.dim != k) {
    throw DomainError("generator '" + g.name + "' has dimension " + std::to_string(g.dim) +
                      ", expected " + std::to_string(k));
  }
  return cell_count(g.shape);
}

std::size_t k_arity(const GTerm& t, const GlobPresentation& p, std::size_t k) {
  require_dim(t, p, k);
  return cell_count(shape_of(t, p));
}

std::vector<LeafCell> induced_order_layered(const GTerm& t, const GlobPresentation& p,
                                            std::size_t k) {
  require_dim(t, p, k);
  if (!is_layered(t)) throw DomainError("term '" + t.to_string() + "' is not layered");
  const PastingDiagram shape = shape_of(t, p);
  const auto leaves = leaf_cells(shape);
  if (t.is_atom()) {
    std::vector<LeafCell> out;
    for (const auto i : top_leaf_indices(shape)) out.push_back(leaves[i]);
    return out;
  }
  std::vector<PastingDiagram> shapes;
  for (const auto& a : t.args()) shapes.push_back(shape_of(a, p));
  const Substitution sub = substitute_traced(shape_of(t.head(), p), shapes);
  std::vector<std::pair<LeafOrigin, std::size_t>> keyed;
  for (const auto i : top_leaf_indices(shape)) {
    const auto& origins = sub.origins[i];
    const auto best = std::find_if(origins.begin(), origins.end(), [&](const LeafOrigin& o) {
      return shapes[o.arg].dim() == k;
    });
    if (best == origins.end()) throw Error("induced order: a k-cell has no source atom");
    keyed.emplace_back(*best, i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<LeafCell> out;
  out.reserve(keyed.size());
  for (const auto& [origin, i] : keyed) out.push_back(leaves[i]);
  return out;
}

Perm twist_from_order(const PastingDiagram& pd, const std::vector<LeafCell>& order) {
  const auto leaves = leaf_cells(pd);
  const auto tops = top_leaf_indices(pd);
  if (order.size() != tops.size()) {
    throw DomainError("order lists " + std::to_string(order.size()) + " cells, diagram has " +
                      std::to_string(tops.size()));
  }
  std::vector<std::uint32_t> images(tops.size());
  for (std::size_t s = 0; s < tops.size(); ++s) {
    const auto it = std::find(order.begin(), order.end(), leaves[tops[s]]);
    if (it == order.end()) throw DomainError("order is missing a cell");
    images[s] = static_cast<std::uint32_t>(it - order.begin());
  }
  return Perm::from_images(std::move(images));
}

SymElement f_map(const GTerm& t, const GlobPresentation& p, std::size_t k) {
  require_dim(t, p, k);
  shape_of(t, p);
  return f_rec(t, p, k);
}

SymElement f_map_literal(const GTerm& t, const GlobPresentation& p, std::size_t k) {
  require_dim(t, p, k);
  const GTerm l = layered_form(t, p);
  const Perm tx = twist_from_order(shape_of(l, p), induced_order_layered(l, p, k));
  if (l.is_atom()) return SymElement(tx, f_rec(l, p, k).tree);
  const PastingDiagram q = shape_of(l.head(), p);
  const auto leaves = leaf_cells(q);
  std::vector<PlainTerm> deltas;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (leaves[i].depth == k) deltas.push_back(f_rec(l.args()[i], p, k).tree);
  }
  return SymElement(tx, plain_compose(f_rec(l.head(), p, k).tree, deltas));
}

Perm twist(const GTerm& t, const GlobPresentation& p, std::size_t k) { return f_map(t, p, k).perm; }

SymPresentation slice(const GlobPresentation& p, std::size_t k) {
  if (k > p.max_dim) {
    throw DomainError("slice dimension " + std::to_string(k) + " exceeds " +
                      std::to_string(p.max_dim));
  }
  const ValidationReport report = validate(p);
  if (!report.ok()) {
    for (const auto& item : report.items) {
      if (!item.ok) {
        throw DomainError("invalid presentation: " + item.kind + " '" + item.name +
                          "': " + item.message);
      }
    }
  }
  SymPresentation out;
  out.name = p.name + ":" + std::to_string(k);
  if (k == 0) return out;
  for (const auto& g : p.generators) {
    if (g.dim == k) out.generators.push_back({g.name, cell_count(g.shape)});
  }
  for (const auto& r : p.relations) {
    if (r.dim != k) continue;
    out.relations.push_back({r.name + ":" + std::to_string(k), f_map(r.lhs, p, k),
                             f_map(r.rhs, p, k)});
  }
  return out;
}

}  // namespace opslicer
