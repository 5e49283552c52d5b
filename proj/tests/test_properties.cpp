// SPDX-License-Identifier: Apache-2.0
// Randomized laws checked against independent oracles.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>

#include "opslicer/catalog.hpp"
#include "opslicer/error.hpp"
#include "opslicer/models.hpp"
#include "opslicer/slice.hpp"
#include "opslicer/wordsolver.hpp"
#include "support.hpp"

using namespace opslicer;
using testing::glob;
using testing::sym;

namespace {

constexpr std::uint64_t kSeed = 20240917;

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[rng() % v.size()];
}

// Diagrams grouped by dimension, plus those bounded by a single cell.
struct DiagramPool {
  std::vector<std::vector<PastingDiagram>> all;
  std::vector<std::vector<PastingDiagram>> globes;

  DiagramPool(std::size_t max_dim, std::size_t max_nodes) : all(max_dim + 1), globes(max_dim + 1) {
    for (std::size_t d = 0; d <= max_dim; ++d) {
      all[d] = enumerate_pds(d, max_nodes);
      for (const auto& pd : all[d]) {
        if (d == 0 || boundary(pd) == boundary(atom(d, d))) globes[d].push_back(pd);
      }
    }
  }

  // A random argument list for pd; globe-bounded choices always glue.
  std::vector<PastingDiagram> arguments(const PastingDiagram& pd, std::mt19937_64& rng) const {
    std::vector<PastingDiagram> out;
    for (const auto& leaf : leaf_cells(pd)) {
      const bool globe = rng() % 4 != 0;
      out.push_back(pick(globe ? globes[leaf.depth] : all[leaf.depth], rng));
    }
    return out;
  }
};

// Random plain tree over the generators of p with at most `budget` nodes.
PlainTerm random_tree(const SymPresentation& p, std::size_t budget, std::mt19937_64& rng) {
  if (budget == 0 || p.generators.empty() || rng() % 3 == 0) return PlainTerm::input();
  const SymGenerator& g = pick(p.generators, rng);
  std::vector<PlainTerm> kids;
  std::size_t left = budget - 1;
  for (std::size_t i = 0; i < g.arity; ++i) {
    const std::size_t share = left == 0 ? 0 : rng() % (left + 1);
    kids.push_back(random_tree(p, share, rng));
    left -= share;
  }
  return PlainTerm::apply(g.name, std::move(kids));
}

Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm::from_images(std::move(img));
}

SymElement random_element(const SymPresentation& p, std::size_t budget, std::mt19937_64& rng) {
  PlainTerm t = random_tree(p, budget, rng);
  const std::size_t n = t.arity();
  return SymElement(random_perm(n, rng), std::move(t));
}

// Random well-formed term of dimension k, retried on boundary clashes.
std::optional<GTerm> random_gterm(const GlobPresentation& p, std::size_t k, std::size_t depth,
                                  std::mt19937_64& rng) {
  std::vector<GTerm> heads = {GTerm::identity(k)};
  for (const auto& g : p.generators) {
    if (g.dim == k) heads.push_back(GTerm::generator(g.name));
  }
  const GTerm head = pick(heads, rng);
  if (depth == 0 || rng() % 3 == 0) return head;
  const auto leaves = leaf_cells(shape_of(head, p));
  if (leaves.empty()) return head;
  std::vector<GTerm> args;
  for (const auto& leaf : leaves) {
    auto a = random_gterm(p, leaf.depth, depth - 1, rng);
    if (!a) return std::nullopt;
    args.push_back(*a);
  }
  GTerm t = GTerm::composite(head, std::move(args));
  try {
    shape_of(t, p);
  } catch (const BoundaryError&) {
    return std::nullopt;
  }
  return t;
}

}  // namespace

TEST_CASE("substitution laws on random compatible instances") {
  std::mt19937_64 rng(kSeed);
  const DiagramPool pool(3, 8);
  std::size_t instances = 0;
  std::size_t bijective = 0;
  std::size_t attempts = 0;
  while (instances < 12000) {
    REQUIRE(++attempts < 200000);
    const std::size_t n = 1 + rng() % 3;
    const PastingDiagram pi = pick(pool.all[n], rng);
    const auto sigma = pool.arguments(pi, rng);
    Substitution s;
    try {
      s = substitute_traced(pi, sigma);
    } catch (const BoundaryError&) {
      continue;
    }
    ++instances;

    // Unit laws.
    std::vector<PastingDiagram> atoms;
    for (const auto& leaf : leaf_cells(pi)) atoms.push_back(atom(leaf.depth, leaf.depth));
    CHECK(substitute(pi, atoms) == pi);
    CHECK(substitute(atom(n, n), {pi}) == pi);

    // Top cells add up.
    std::size_t cells = 0;
    const auto leaves = leaf_cells(pi);
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      if (leaves[i].depth == n) cells += cell_count(sigma[i]);
    }
    CHECK(cell_count(s.diagram) == cells);

    // Every way of cutting the diagram agrees.
    for (auto strategy : {SplitStrategy::kFirstRest, SplitStrategy::kInitLast}) {
      const Substitution other = substitute_traced(pi, sigma, strategy);
      CHECK(other.diagram == s.diagram);
      CHECK(other.origins == s.origins);
    }

    // Associativity, on instances where leaves correspond one to one.
    std::size_t total = 0;
    for (const auto& sg : sigma) total += leaf_cells(sg).size();
    bool one_to_one = s.origins.size() == total;
    for (const auto& o : s.origins) one_to_one = one_to_one && o.size() == 1;
    if (!one_to_one) continue;
    const auto tau = pool.arguments(s.diagram, rng);
    PastingDiagram outer;
    try {
      outer = substitute(s.diagram, tau);
    } catch (const BoundaryError&) {
      continue;
    }
    std::vector<std::vector<PastingDiagram>> blocks(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) blocks[i].resize(leaf_cells(sigma[i]).size());
    for (std::size_t j = 0; j < s.origins.size(); ++j) {
      const LeafOrigin& o = s.origins[j].front();
      blocks[o.arg][o.leaf] = tau[j];
    }
    std::vector<PastingDiagram> inner;
    for (std::size_t i = 0; i < sigma.size(); ++i) inner.push_back(substitute(sigma[i], blocks[i]));
    CHECK(substitute(pi, inner) == outer);
    ++bijective;
  }
  MESSAGE("instances: " << instances << ", associativity checks: " << bijective);
  CHECK(instances >= 10000);
  CHECK(bijective >= 1000);
}

TEST_CASE("erasure is invariant under layering on random terms") {
  std::mt19937_64 rng(kSeed + 1);
  const std::vector<std::pair<const char*, std::size_t>> cases = {{"T3", 2}, {"E3", 2}, {"H4", 3},
                                                                  {"W3", 2}};
  std::size_t checked = 0;
  for (const auto& [key, k] : cases) {
    const GlobPresentation& p = glob(key);
    for (int trial = 0; trial < 600; ++trial) {
      const auto t = random_gterm(p, k, 3, rng);
      if (!t) continue;
      INFO(key << " " << t->to_string());
      const GTerm l = layered_form(*t, p);
      CHECK(is_layered(l));
      CHECK(shape_of(l, p) == shape_of(*t, p));
      const SymElement f = f_map(*t, p, k);
      CHECK(f_map(l, p, k) == f);
      CHECK(f.degree() == k_arity(*t, p, k));
      ++checked;
    }
  }
  MESSAGE("terms checked: " << checked);
  CHECK(checked >= 500);
}

TEST_CASE("composition is a homomorphism into the sequence model") {
  std::mt19937_64 rng(kSeed + 2);
  for (const char* key : {"sym/magma", "sym/comm_monoid_EH", "sym/double_monoid"}) {
    const SymPresentation& p = sym(key);
    const Model<Word> m = free_sequence_model(p);
    for (int trial = 0; trial < 400; ++trial) {
      const SymElement e = random_element(p, 3, rng);
      std::vector<SymElement> args;
      std::size_t total = 0;
      for (std::size_t i = 0; i < e.degree(); ++i) {
        args.push_back(random_element(p, 2, rng));
        total += args.back().degree();
      }
      const SymElement c = sym_compose(e, args);
      REQUIRE(c.degree() == total);
      std::vector<Word> xs;
      for (std::size_t i = 0; i < total; ++i) xs.push_back({"x" + std::to_string(i + 1)});
      std::vector<Word> inner;
      std::size_t at = 0;
      for (const auto& a : args) {
        std::vector<Word> block(xs.begin() + at, xs.begin() + at + a.degree());
        inner.push_back(eval_in_model(a, m, block));
        at += a.degree();
      }
      INFO(e.to_string());
      CHECK(eval_in_model(c, m, xs) == eval_in_model(e, m, inner));
      // Text round-trips.
      CHECK(parse_sym_element(c.to_string(), p) == c);
    }
  }
}

TEST_CASE("composition is associative and equivariant") {
  std::mt19937_64 rng(kSeed + 3);
  const SymPresentation& p = sym("sym/comm_monoid_EH");
  for (int trial = 0; trial < 300; ++trial) {
    const SymElement e = random_element(p, 2, rng);
    std::vector<SymElement> a;
    std::vector<std::vector<SymElement>> b;
    std::vector<SymElement> flat_b;
    for (std::size_t i = 0; i < e.degree(); ++i) {
      a.push_back(random_element(p, 2, rng));
      b.emplace_back();
      for (std::size_t j = 0; j < a.back().degree(); ++j) {
        b.back().push_back(random_element(p, 1, rng));
        flat_b.push_back(b.back().back());
      }
    }
    std::vector<SymElement> ab;
    for (std::size_t i = 0; i < a.size(); ++i) ab.push_back(sym_compose(a[i], b[i]));
    CHECK(sym_compose(sym_compose(e, a), flat_b) == sym_compose(e, ab));

    // Acting first and composing afterwards permutes whole blocks.
    const Perm s = random_perm(e.degree(), rng);
    std::vector<SymElement> moved(a.size());
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < a.size(); ++i) {
      moved[i] = a[s(i)];
      sizes.push_back(moved[i].degree());
    }
    CHECK(sym_compose(act(s, e), moved) == act(block_perm(s, sizes), sym_compose(e, a)));
    const Perm t = random_perm(e.degree(), rng);
    CHECK(act(s, act(t, e)) == act(s * t, e));
  }
}

TEST_CASE("free class counts follow the closed form") {
  const Budget b = [] {
    Budget x;
    x.max_tree_nodes = 4;
    return x;
  }();
  const std::size_t fact[] = {1, 1, 2, 6, 24};
  for (std::size_t n = 0; n <= 3; ++n) {
    const ClassReport r = classes(sym("sym/magma"), n, b);
    CHECK(r.classes == r.elements);
    CHECK(r.complete);
    // Binary trees with n leaves number Catalan(n - 1); each carries n! twists.
    const std::size_t catalan[] = {0, 1, 1, 2};
    CHECK(r.elements == catalan[n] * fact[n]);
  }
  // Monoids: one plain class per arity, so n! symmetric classes.
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(classes(sym("sym/monoid"), n, Budget{}).classes == fact[n]);
  }
}

TEST_CASE("rewriting is sound in models of the relations") {
  std::mt19937_64 rng(kSeed + 4);
  struct Case {
    SymPresentation p;
    Model<Word> m;
  };
  const SymPresentation monoid = slice(glob("T3"), 1);
  const SymPresentation comm = sym("sym/comm_monoid");
  const SymPresentation h3 = slice(glob("H4"), 3);
  std::vector<Case> cases = {
      {monoid, free_sequence_model(monoid, {"i1"})},
      {comm, free_multiset_model(comm, {"i"})},
      {h3, reversed_sequence_model(h3, {"i3", "s3", "s3'"}, {"v3"})},
  };
  std::size_t steps = 0;
  for (const auto& c : cases) {
    for (int trial = 0; trial < 200; ++trial) {
      SymElement e = random_element(c.p, 4, rng);
      std::vector<Word> xs;
      for (std::size_t i = 0; i < e.degree(); ++i) xs.push_back({"x" + std::to_string(i + 1)});
      const Word value = eval_in_model(e, c.m, xs);
      Proof walk{e, e, {}};
      for (int k = 0; k < 4; ++k) {
        const auto next = rewrites(c.p, walk.rhs);
        if (next.empty()) break;
        const ProofStep& s = pick(next, rng);
        walk.steps.push_back(s);
        walk.rhs = s.result;
        CHECK(eval_in_model(s.result, c.m, xs) == value);
        ++steps;
      }
      CHECK(check_proof(c.p, walk).empty());
    }
  }
  CHECK(steps > 500);
}
