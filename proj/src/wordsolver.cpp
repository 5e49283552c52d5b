// SPDX-License-Identifier: Apache-2.0
#include "opslicer/wordsolver.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <tuple>
#include <unordered_map>
#include <utility>

namespace opslicer {

namespace {

// Trees as prefix byte codes: 0 is an input, g + 1 is generator g.
using Code = std::string;

struct Alphabet {
  std::vector<std::string> names;
  std::vector<std::size_t> arity;

  explicit Alphabet(const SymPresentation& p) {
    if (p.generators.size() > 250) throw DomainError("too many generators");
    for (const auto& g : p.generators) {
      names.push_back(g.name);
      arity.push_back(g.arity);
    }
  }

  std::size_t arity_of(char c) const {
    return c == 0 ? 0 : arity[static_cast<unsigned char>(c) - 1];
  }

  void encode(const PlainTerm& t, Code& out) const {
    if (t.is_input()) {
      out += '\0';
      return;
    }
    const auto it = std::find(names.begin(), names.end(), t.gen());
    if (it == names.end()) throw DomainError("unknown generator '" + t.gen() + "'");
    out += static_cast<char>(it - names.begin() + 1);
    for (const auto& c : t.children()) encode(c, out);
  }

  Code encode(const PlainTerm& t) const {
    Code out;
    encode(t, out);
    return out;
  }

  PlainTerm decode(const Code& code, std::size_t& pos) const {
    const char c = code[pos++];
    if (c == 0) return PlainTerm::input();
    const std::size_t g = static_cast<unsigned char>(c) - 1;
    std::vector<PlainTerm> kids;
    kids.reserve(arity[g]);
    for (std::size_t i = 0; i < arity[g]; ++i) kids.push_back(decode(code, pos));
    return PlainTerm::apply(names[g], std::move(kids));
  }

  PlainTerm decode(const Code& code) const {
    std::size_t pos = 0;
    return decode(code, pos);
  }

  std::size_t subtree_end(const Code& code, std::size_t pos) const {
    std::size_t need = 1;
    while (need > 0) {
      need = need - 1 + arity_of(code[pos++]);
    }
    return pos;
  }
};

std::size_t count_inputs(const Code& code, std::size_t from, std::size_t to) {
  return static_cast<std::size_t>(std::count(code.begin() + static_cast<std::ptrdiff_t>(from),
                                             code.begin() + static_cast<std::ptrdiff_t>(to), '\0'));
}

std::size_t count_nodes(const Code& code) { return code.size() - count_inputs(code, 0, code.size()); }

// (0, L) = (tau, R), one orientation of a relation.
struct Rule {
  std::size_t relation;
  bool forward;
  Code lhs;
  Code rhs;
  Perm tau;
  Perm tau_inv;
};

std::vector<Rule> make_rules(const SymPresentation& p, const Alphabet& al) {
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const auto& r = p.relations[i];
    if (r.lhs.degree() != r.rhs.degree()) {
      throw DomainError("relation '" + r.name + "' has sides of different degrees");
    }
    const Perm fwd = r.lhs.perm.inverse() * r.rhs.perm;
    const Perm bwd = fwd.inverse();
    rules.push_back({i, true, al.encode(r.lhs.tree), al.encode(r.rhs.tree), fwd, bwd});
    rules.push_back({i, false, al.encode(r.rhs.tree), al.encode(r.lhs.tree), bwd, fwd});
  }
  return rules;
}

struct Step {
  std::size_t rule;
  std::size_t pos;
  Perm perm;
  Code result;
};

// Applies every rule at every position of x.
template <class F>
void for_each_rewrite(const Alphabet& al, const std::vector<Rule>& rules, const Code& x,
                      std::size_t max_nodes, F&& emit) {
  const std::size_t n = count_inputs(x, 0, x.size());
  const std::size_t nodes = count_nodes(x);
  std::vector<std::pair<std::size_t, std::size_t>> caps;
  for (std::size_t pos = 0; pos < x.size(); ++pos) {
    for (std::size_t ri = 0; ri < rules.size(); ++ri) {
      const Rule& rule = rules[ri];
      caps.clear();
      std::size_t i = pos;
      bool ok = true;
      for (const char c : rule.lhs) {
        if (c == 0) {
          const std::size_t e = al.subtree_end(x, i);
          caps.emplace_back(i, e);
          i = e;
        } else if (x[i] != c) {
          ok = false;
          break;
        } else {
          ++i;
        }
      }
      if (!ok) continue;
      const std::size_t grown = nodes + count_nodes(rule.rhs);
      if (grown < count_nodes(rule.lhs) || grown - count_nodes(rule.lhs) > max_nodes) continue;
      Code y = x.substr(0, pos);
      std::size_t j = 0;
      for (const char c : rule.rhs) {
        if (c == 0) {
          const auto& [s, e] = caps[rule.tau_inv(j++)];
          y.append(x, s, e - s);
        } else {
          y += c;
        }
      }
      y.append(x, i, std::string::npos);
      std::vector<std::size_t> sizes;
      sizes.reserve(caps.size());
      for (const auto& [s, e] : caps) sizes.push_back(count_inputs(x, s, e));
      const Perm inner = block_perm(rule.tau, sizes);
      const std::size_t a = count_inputs(x, 0, pos);
      std::vector<std::uint32_t> images(n);
      for (std::size_t k = 0; k < n; ++k) images[k] = static_cast<std::uint32_t>(k);
      for (std::size_t k = 0; k < inner.degree(); ++k) {
        images[a + k] = static_cast<std::uint32_t>(a + inner(k));
      }
      emit(Step{ri, pos, Perm::from_images(std::move(images)), std::move(y)});
    }
  }
}

std::vector<std::size_t> path_of(const Alphabet& al, const Code& x, std::size_t target) {
  std::vector<std::size_t> path;
  std::size_t pos = 0;
  while (pos != target) {
    const std::size_t m = al.arity_of(x[pos]);
    std::size_t child = pos + 1;
    std::size_t k = 0;
    for (; k < m; ++k) {
      const std::size_t end = al.subtree_end(x, child);
      if (target < end) break;
      child = end;
    }
    path.push_back(k);
    pos = child;
  }
  return path;
}

std::size_t pos_of(const Alphabet& al, const Code& x, const std::vector<std::size_t>& path) {
  std::size_t pos = 0;
  for (const std::size_t k : path) {
    if (pos >= x.size() || k >= al.arity_of(x[pos])) throw DomainError("path leaves the tree");
    std::size_t child = pos + 1;
    for (std::size_t i = 0; i < k; ++i) child = al.subtree_end(x, child);
    pos = child;
  }
  return pos;
}

// All trees with exactly `nodes` generators and `arity` inputs, sorted.
class TreeTable {
 public:
  explicit TreeTable(const Alphabet& al) : al_(al) {}

  const std::vector<Code>& trees(std::size_t nodes, std::size_t arity) {
    const auto key = std::make_pair(nodes, arity);
    auto it = trees_.find(key);
    if (it != trees_.end()) return it->second;
    std::vector<Code> out;
    if (nodes == 0) {
      if (arity == 1) out.push_back(Code(1, '\0'));
    } else {
      for (std::size_t g = 0; g < al_.arity.size(); ++g) {
        for (const auto& f : forests(al_.arity[g], nodes - 1, arity)) {
          out.push_back(static_cast<char>(g + 1) + f);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return trees_.emplace(key, std::move(out)).first->second;
  }

 private:
  const std::vector<Code>& forests(std::size_t width, std::size_t nodes, std::size_t arity) {
    const auto key = std::make_tuple(width, nodes, arity);
    auto it = forests_.find(key);
    if (it != forests_.end()) return it->second;
    std::vector<Code> out;
    if (width == 0) {
      if (nodes == 0 && arity == 0) out.emplace_back();
    } else {
      for (std::size_t n1 = 0; n1 <= nodes; ++n1) {
        for (std::size_t a1 = 0; a1 <= arity; ++a1) {
          const auto& heads = trees(n1, a1);
          if (heads.empty()) continue;
          const auto& tails = forests(width - 1, nodes - n1, arity - a1);
          for (const auto& h : heads) {
            for (const auto& t : tails) out.push_back(h + t);
          }
        }
      }
    }
    return forests_.emplace(key, std::move(out)).first->second;
  }

  const Alphabet& al_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Code>> trees_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<Code>> forests_;
};

std::vector<Code> trees_up_to(const Alphabet& al, std::size_t max_nodes, std::size_t arity) {
  TreeTable table(al);
  std::vector<Code> out;
  for (std::size_t n = 0; n <= max_nodes; ++n) {
    const auto& level = table.trees(n, arity);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string perm_key(const Perm& p) {
  std::string s;
  for (const auto v : p.images()) s += static_cast<char>(v);
  return s;
}

// Subgroup of S_n given by generators, kept closed.
struct Group {
  std::vector<Perm> gens;
  std::vector<Perm> elements;

  explicit Group(std::size_t n) : elements{Perm(n)} {}

  bool contains(const Perm& g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
  }

  void add(const Perm& g) {
    if (contains(g)) return;
    gens.push_back(g);
    std::vector<Perm> all = elements;
    std::vector<Perm> queue = elements;
    std::sort(all.begin(), all.end());
    while (!queue.empty()) {
      const Perm x = queue.back();
      queue.pop_back();
      for (const auto& s : gens) {
        Perm y = x * s;
        const auto it = std::lower_bound(all.begin(), all.end(), y);
        if (it != all.end() && *it == y) continue;
        all.insert(it, y);
        queue.push_back(std::move(y));
      }
    }
    elements = std::move(all);
  }
};

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Union-find over trees labelled by permutations: (0, x) = (label[x], parent[x]).
class LabelledUnionFind {
 public:
  LabelledUnionFind(std::size_t size, std::size_t degree)
      : parent_(size), label_(size, Perm(degree)), weight_(size, 1), groups_() {
    for (std::size_t i = 0; i < size; ++i) parent_[i] = i;
    degree_ = degree;
  }

  std::pair<std::size_t, Perm> find(std::size_t x) {
    if (parent_[x] == x) return {x, Perm(degree_)};
    auto [root, up] = find(parent_[x]);
    label_[x] = label_[x] * up;
    parent_[x] = root;
    return {root, label_[x]};
  }

  // Records (0, x) = (d, y).
  void unite(std::size_t x, std::size_t y, const Perm& d) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    Perm e = px.inverse() * d * py;  // (0, rx) = (e, ry)
    if (rx == ry) {
      group(rx).add(e);
      return;
    }
    if (weight_[rx] > weight_[ry]) {
      std::swap(rx, ry);
      e = e.inverse();
    }
    parent_[rx] = ry;
    label_[rx] = e;
    weight_[ry] += weight_[rx];
    auto moved = groups_.find(rx);
    if (moved != groups_.end()) {
      const std::vector<Perm> gens = moved->second.gens;
      groups_.erase(moved);
      const Perm e_inv = e.inverse();
      Group& target = group(ry);
      for (const auto& g : gens) target.add(e_inv * g * e);
    }
  }

  Group& group(std::size_t root) {
    auto it = groups_.find(root);
    if (it == groups_.end()) it = groups_.emplace(root, Group(degree_)).first;
    return it->second;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<Perm> label_;
  std::vector<std::size_t> weight_;
  std::unordered_map<std::size_t, Group> groups_;
  std::size_t degree_ = 0;
};

bool smaller(const SymElement& a, const SymElement& b) {
  const std::size_t na = a.tree.node_count();
  const std::size_t nb = b.tree.node_count();
  if (na != nb) return na < nb;
  const std::string ta = a.tree.to_string();
  const std::string tb = b.tree.to_string();
  if (ta != tb) return ta < tb;
  return a.perm < b.perm;
}

ProofStep to_step(const SymPresentation& p, const Alphabet& al, const std::vector<Rule>& rules,
                  const Code& before, const Perm& before_perm, const Step& s) {
  const Rule& r = rules[s.rule];
  return {p.relations[r.relation].name, r.forward, path_of(al, before, s.pos), s.perm,
          SymElement(before_perm * s.perm, al.decode(s.result))};
}

SymPresentation with_lemmas(const SymPresentation& p, const std::vector<Lemma>& lemmas) {
  if (lemmas.empty()) return p;
  SymPresentation out = p;
  for (const auto& l : lemmas) {
    for (const auto& r : out.relations) {
      if (r.name == l.name) throw DomainError("lemma name '" + l.name + "' is already in use");
    }
    out.relations.push_back({l.name, l.proof.lhs, l.proof.rhs});
  }
  return out;
}

}  // namespace

Budget parse_budget_override(const Budget& base, const std::string& text) {
  Budget b = base;
  std::vector<std::size_t> vals;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                           : comma - start);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw DomainError("malformed budget '" + text + "': expected nodes,depth,frontier");
    }
    vals.push_back(std::stoul(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (vals.size() != 3) throw DomainError("malformed budget '" + text + "': expected 3 numbers");
  b.max_tree_nodes = vals[0];
  b.max_rewrite_depth = vals[1];
  b.max_frontier = vals[2];
  return b;
}

Budget default_budget() {
  const char* env = std::getenv("OPERAD_SLICER_BUDGET");
  if (!env || !*env) return Budget{};
  return parse_budget_override(Budget{}, env);
}

std::vector<SymElement> enumerate(const SymPresentation& p, std::size_t arity, const Budget& b) {
  if (arity > b.max_arity) {
    throw DomainError("arity " + std::to_string(arity) + " exceeds the budget limit " +
                      std::to_string(b.max_arity));
  }
  const Alphabet al(p);
  const auto perms = all_perms(arity);
  std::vector<SymElement> out;
  for (const auto& code : trees_up_to(al, b.max_tree_nodes, arity)) {
    const PlainTerm t = al.decode(code);
    for (const auto& q : perms) out.emplace_back(q, t);
  }
  return out;
}

ClassReport classes(const SymPresentation& p, std::size_t arity, const Budget& b) {
  if (arity > b.max_arity) {
    throw DomainError("arity " + std::to_string(arity) + " exceeds the budget limit " +
                      std::to_string(b.max_arity));
  }
  const Alphabet al(p);
  const auto rules = make_rules(p, al);
  const std::size_t bound = b.max_tree_nodes + b.closure_slack;
  const auto universe = trees_up_to(al, bound, arity);
  if (universe.size() > b.max_frontier) {
    throw DomainError("closure needs " + std::to_string(universe.size()) +
                      " trees, above the frontier budget");
  }
  std::unordered_map<Code, std::size_t> index;
  index.reserve(universe.size() * 2);
  for (std::size_t i = 0; i < universe.size(); ++i) index.emplace(universe[i], i);

  LabelledUnionFind uf(universe.size(), arity);
  for (std::size_t i = 0; i < universe.size(); ++i) {
    for_each_rewrite(al, rules, universe[i], bound, [&](const Step& s) {
      const auto it = index.find(s.result);
      if (it != index.end()) uf.unite(i, it->second, s.perm);
    });
  }

  ClassReport report;
  report.arity = arity;
  report.complete = p.relations.empty();
  const auto perms = all_perms(arity);
  std::map<std::pair<std::size_t, Perm>, SymElement> best;
  std::map<std::size_t, std::size_t> roots;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (count_nodes(universe[i]) > b.max_tree_nodes) continue;
    const auto [root, label] = uf.find(i);
    const Group& g = uf.group(root);
    roots.emplace(root, g.elements.size());
    const PlainTerm tree = al.decode(universe[i]);
    for (const auto& q : perms) {
      ++report.elements;
      const Perm rep = q * label;
      Perm canon = rep;
      for (const auto& h : g.elements) canon = std::min(canon, rep * h);
      SymElement e(q, tree);
      auto [it, inserted] = best.emplace(std::make_pair(root, canon), e);
      if (!inserted && smaller(e, it->second)) it->second = std::move(e);
    }
  }
  const std::size_t nfact = factorial(arity);
  for (const auto& [root, order] : roots) report.classes += nfact / order;
  for (auto& [key, e] : best) report.representatives.push_back(std::move(e));
  std::sort(report.representatives.begin(), report.representatives.end(), smaller);
  return report;
}

std::vector<ProofStep> rewrites(const SymPresentation& p, const SymElement& e) {
  const Alphabet al(p);
  const auto rules = make_rules(p, al);
  const Code x = al.encode(e.tree);
  std::vector<ProofStep> out;
  for_each_rewrite(al, rules, x, static_cast<std::size_t>(-1) / 2, [&](const Step& s) {
    out.push_back(to_step(p, al, rules, x, e.perm, s));
  });
  return out;
}

ProofSearch prove_equal(const SymPresentation& base, const SymElement& a, const SymElement& b,
                        const Budget& budget, const std::vector<Lemma>& lemmas) {
  const SymPresentation p = with_lemmas(base, lemmas);
  if (a.degree() != b.degree()) {
    throw DomainError("prove: degrees " + std::to_string(a.degree()) + " and " +
                      std::to_string(b.degree()) + " differ");
  }
  p.check_element(a);
  p.check_element(b);
  const Alphabet al(p);
  const auto rules = make_rules(p, al);
  const std::size_t bound =
      std::max({budget.max_tree_nodes + budget.closure_slack, a.tree.node_count(),
                b.tree.node_count()});

  struct State {
    Perm perm;
    Code tree;
    std::size_t parent;
    std::size_t rule;
    std::size_t pos;
    Perm step_perm;
  };
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<State> states[2];
  std::unordered_map<std::string, std::size_t> seen[2];
  auto key = [](const Perm& q, const Code& t) { return perm_key(q) + '|' + t; };

  const Code ca = al.encode(a.tree);
  const Code cb = al.encode(b.tree);
  states[0].push_back({a.perm, ca, kNone, 0, 0, Perm()});
  states[1].push_back({b.perm, cb, kNone, 0, 0, Perm()});
  seen[0].emplace(key(a.perm, ca), 0);
  seen[1].emplace(key(b.perm, cb), 0);

  ProofSearch result;
  auto build = [&](std::size_t ia, std::size_t ib) {
    Proof proof{a, b, {}};
    std::vector<std::size_t> chain;
    for (std::size_t i = ia; i != kNone; i = states[0][i].parent) chain.push_back(i);
    std::reverse(chain.begin(), chain.end());
    for (std::size_t k = 1; k < chain.size(); ++k) {
      const State& prev = states[0][chain[k - 1]];
      const State& cur = states[0][chain[k]];
      proof.steps.push_back(to_step(p, al, rules, prev.tree, prev.perm,
                                    Step{cur.rule, cur.pos, cur.step_perm, cur.tree}));
    }
    // Steps on the b side are replayed backwards with the opposite orientation.
    for (std::size_t i = ib; states[1][i].parent != kNone; i = states[1][i].parent) {
      const State& cur = states[1][i];
      const State& prev = states[1][cur.parent];
      const Rule& r = rules[cur.rule];
      const std::size_t opposite = cur.rule ^ 1;
      const std::size_t pos = pos_of(al, cur.tree, path_of(al, prev.tree, cur.pos));
      bool found = false;
      for_each_rewrite(al, {rules[opposite]}, cur.tree, static_cast<std::size_t>(-1) / 2,
                       [&](const Step& s) {
                         if (found || s.pos != pos || s.result != prev.tree) return;
                         Step fixed = s;
                         fixed.rule = opposite;
                         proof.steps.push_back(to_step(p, al, rules, cur.tree, cur.perm, fixed));
                         found = true;
                       });
      if (!found) {
        throw Error("prove: cannot reverse a step of relation '" +
                    p.relations[r.relation].name + "'");
      }
    }
    return proof;
  };

  if (seen[1].count(key(a.perm, ca))) {
    result.proof = Proof{a, b, {}};
    result.states = 2;
    return result;
  }
  std::size_t depth[2] = {0, 0};
  std::size_t level_start[2] = {0, 0};
  while (depth[0] + depth[1] < budget.max_rewrite_depth) {
    const std::size_t side =
        (states[0].size() - level_start[0] <= states[1].size() - level_start[1]) ? 0 : 1;
    const std::size_t other = 1 - side;
    const std::size_t begin = level_start[side];
    const std::size_t end = states[side].size();
    if (begin == end) break;
    level_start[side] = end;
    ++depth[side];
    for (std::size_t i = begin; i < end; ++i) {
      const Perm base = states[side][i].perm;
      const Code tree = states[side][i].tree;
      std::optional<std::pair<std::size_t, std::size_t>> meet;
      for_each_rewrite(al, rules, tree, bound, [&](const Step& s) {
        if (meet) return;
        Perm q = base * s.perm;
        std::string k = key(q, s.result);
        if (seen[side].count(k)) return;
        const std::size_t id = states[side].size();
        states[side].push_back({std::move(q), s.result, i, s.rule, s.pos, s.perm});
        seen[side].emplace(k, id);
        const auto hit = seen[other].find(k);
        if (hit != seen[other].end()) {
          meet = side == 0 ? std::make_pair(id, hit->second) : std::make_pair(hit->second, id);
        }
      });
      result.states = states[0].size() + states[1].size();
      if (meet) {
        result.proof = build(meet->first, meet->second);
        return result;
      }
      if (result.states > budget.max_frontier) return result;
    }
  }
  result.states = states[0].size() + states[1].size();
  return result;
}

namespace {

// Replaces the subtree at `path` of e by `piece`, composing with sym_compose.
SymElement replace_at(const PlainTerm& tree, const std::vector<std::size_t>& path,
                      const SymElement& piece, std::size_t& hole_inputs) {
  if (path.empty()) {
    hole_inputs = tree.arity();
    return piece;
  }
  std::vector<SymElement> kids;
  const std::size_t k = path.front();
  if (tree.is_input() || k >= tree.children().size()) throw DomainError("path leaves the tree");
  const std::vector<std::size_t> rest(path.begin() + 1, path.end());
  for (std::size_t i = 0; i < tree.children().size(); ++i) {
    if (i == k) {
      kids.push_back(replace_at(tree.children()[i], rest, piece, hole_inputs));
    } else {
      kids.push_back(SymElement::plain(tree.children()[i]));
    }
  }
  return sym_compose(SymElement::plain(PlainTerm::generator(tree.gen(), kids.size())), kids);
}

const PlainTerm& subtree_at(const PlainTerm& t, const std::vector<std::size_t>& path) {
  const PlainTerm* cur = &t;
  for (const std::size_t k : path) {
    if (cur->is_input() || k >= cur->children().size()) throw DomainError("path leaves the tree");
    cur = &cur->children()[k];
  }
  return *cur;
}

// Matches pattern against t, collecting the subtrees at pattern inputs.
bool match(const PlainTerm& pattern, const PlainTerm& t, std::vector<PlainTerm>& caps) {
  if (pattern.is_input()) {
    caps.push_back(t);
    return true;
  }
  if (t.is_input() || t.gen() != pattern.gen() ||
      t.children().size() != pattern.children().size()) {
    return false;
  }
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (!match(pattern.children()[i], t.children()[i], caps)) return false;
  }
  return true;
}

}  // namespace

std::string check_proof(const SymPresentation& base, const Proof& proof,
                        const std::vector<Lemma>& lemmas) {
  const SymPresentation p = with_lemmas(base, lemmas);
  SymElement cur = proof.lhs;
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& s = proof.steps[i];
    const std::string where = "step " + std::to_string(i + 1) + ": ";
    const auto rel = std::find_if(p.relations.begin(), p.relations.end(),
                                  [&](const SymRelation& r) { return r.name == s.relation; });
    if (rel == p.relations.end()) return where + "unknown relation '" + s.relation + "'";
    const SymElement& from = s.forward ? rel->lhs : rel->rhs;
    const SymElement& to = s.forward ? rel->rhs : rel->lhs;
    std::vector<PlainTerm> caps;
    try {
      if (!match(from.tree, subtree_at(cur.tree, s.path), caps)) {
        return where + "relation side does not match at the given path";
      }
      std::vector<SymElement> args;
      for (auto& c : caps) args.push_back(SymElement::plain(std::move(c)));
      // (from.perm, from.tree) = (to.perm, to.tree), so the plain source
      // equals act(from.perm^-1, to).
      const SymElement target = act(from.perm.inverse(), to);
      const SymElement piece = sym_compose(target, args);
      std::size_t hole = 0;
      const SymElement whole = replace_at(cur.tree, s.path, piece, hole);
      const SymElement next = act(cur.perm, whole);
      if (next != s.result) {
        return where + "expected " + next.to_string() + ", trace has " + s.result.to_string();
      }
      if (cur.perm * s.perm != next.perm) return where + "recorded twist is inconsistent";
      cur = next;
    } catch (const Error& e) {
      return where + e.what();
    }
  }
  if (cur != proof.rhs) return "trace ends at " + cur.to_string() + ", not " + proof.rhs.to_string();
  return "";
}

namespace {

// The unique rewrite of `from` by the given relation side at `path`.
std::optional<ProofStep> find_step(const SymPresentation& p, const SymElement& from,
                                   const std::string& relation, bool forward,
                                   const std::vector<std::size_t>& path) {
  for (auto& s : rewrites(p, from)) {
    if (s.relation == relation && s.forward == forward && s.path == path) return s;
  }
  return std::nullopt;
}

// Fills input slot i of t with args[q^-1(i)].
PlainTerm fill(const PlainTerm& t, const Perm& q, const std::vector<PlainTerm>& args) {
  std::vector<PlainTerm> slots;
  const Perm inv = q.inverse();
  for (std::size_t i = 0; i < q.degree(); ++i) slots.push_back(args[inv(i)]);
  return plain_compose(t, slots);
}

PlainTerm replace_subtree(const PlainTerm& t, const std::vector<std::size_t>& path,
                          std::size_t depth, const PlainTerm& piece) {
  if (depth == path.size()) return piece;
  std::vector<PlainTerm> kids = t.children();
  kids[path[depth]] = replace_subtree(kids[path[depth]], path, depth + 1, piece);
  return PlainTerm::apply(t.gen(), std::move(kids));
}

}  // namespace

Proof reverse_proof(const SymPresentation& base, const Proof& proof,
                    const std::vector<Lemma>& lemmas) {
  const SymPresentation p = with_lemmas(base, lemmas);
  Proof out{proof.rhs, proof.lhs, {}};
  std::vector<SymElement> states{proof.lhs};
  for (const auto& s : proof.steps) states.push_back(s.result);
  for (std::size_t k = proof.steps.size(); k-- > 0;) {
    const ProofStep& s = proof.steps[k];
    auto back = find_step(p, states[k + 1], s.relation, !s.forward, s.path);
    if (!back || back->result != states[k]) {
      throw Error("cannot reverse step " + std::to_string(k + 1) + " of relation '" +
                  s.relation + "'");
    }
    out.steps.push_back(std::move(*back));
  }
  return out;
}

Proof expand_lemmas(const SymPresentation& p, const Proof& proof,
                    const std::vector<Lemma>& lemmas) {
  Proof out{proof.lhs, proof.rhs, {}};
  SymElement cur = proof.lhs;
  for (const auto& s : proof.steps) {
    const auto lemma = std::find_if(lemmas.begin(), lemmas.end(),
                                    [&](const Lemma& l) { return l.name == s.relation; });
    if (lemma == lemmas.end()) {
      out.steps.push_back(s);
      cur = s.result;
      continue;
    }
    // Lemmas may only use earlier lemmas.
    const std::vector<Lemma> earlier(lemmas.begin(), lemma);
    Proof inner = expand_lemmas(p, lemma->proof, earlier);
    if (!s.forward) inner = reverse_proof(p, inner);
    const PlainTerm& site = subtree_at(cur.tree, s.path);
    std::vector<PlainTerm> args;
    if (!match(inner.lhs.tree, site, args)) {
      throw Error("lemma '" + lemma->name + "' does not match its recorded position");
    }
    const Perm lift = inner.lhs.perm.inverse();
    for (const auto& step : inner.steps) {
      std::vector<std::size_t> path = s.path;
      path.insert(path.end(), step.path.begin(), step.path.end());
      auto next = find_step(p, cur, step.relation, step.forward, path);
      const PlainTerm expected =
          replace_subtree(cur.tree, s.path, 0, fill(step.result.tree, lift * step.result.perm, args));
      if (!next || next->result.tree != expected) {
        throw Error("cannot inline a step of lemma '" + lemma->name + "'");
      }
      cur = next->result;
      out.steps.push_back(std::move(*next));
    }
    if (cur != s.result) throw Error("inlined lemma '" + lemma->name + "' ends elsewhere");
  }
  return out;
}

}  // namespace opslicer
