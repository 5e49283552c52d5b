// SPDX-License-Identifier: Apache-2.0
#ifndef OPSLICER_WORDSOLVER_HPP
#define OPSLICER_WORDSOLVER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "opslicer/error.hpp"
#include "opslicer/models.hpp"
#include "opslicer/symop.hpp"

namespace opslicer {

struct Budget {
  std::size_t max_arity = 6;
  std::size_t max_tree_nodes = 7;
  // Total number of rewrite steps in a proof.
  std::size_t max_rewrite_depth = 16;
  // Largest number of states a search or closure may hold.
  std::size_t max_frontier = 2000000;
  // Extra nodes allowed for intermediate trees beyond max_tree_nodes.
  std::size_t closure_slack = 0;
};

// Defaults overridden by OPERAD_SLICER_BUDGET="nodes,depth,frontier" when set.
// Throws DomainError on a malformed value.
Budget default_budget();
Budget parse_budget_override(const Budget& base, const std::string& text);

// Every canonical element of the given degree whose tree has at most
// max_tree_nodes generators, ordered by node count, tree and permutation.
std::vector<SymElement> enumerate(const SymPresentation& p, std::size_t arity, const Budget& b);

struct ClassReport {
  std::size_t arity = 0;
  std::size_t elements = 0;
  std::size_t classes = 0;
  // Smallest element of each class by node count, tree text, then permutation.
  std::vector<SymElement> representatives;
  // True only when no relation can merge elements.
  bool complete = false;
};

// Partitions enumerate(p, arity, b) by the congruence of the relations,
// restricted to rewrite paths through trees with at most
// max_tree_nodes + closure_slack nodes. The count is an upper bound.
ClassReport classes(const SymPresentation& p, std::size_t arity, const Budget& b);

struct ProofStep {
  std::string relation;
  bool forward = true;  // lhs to rhs
  std::vector<std::size_t> path;
  // Twist e with (0, before.tree) = (e, after.tree).
  Perm perm;
  SymElement result;
};

struct Proof {
  SymElement lhs;
  SymElement rhs;
  std::vector<ProofStep> steps;
};

struct ProofSearch {
  std::optional<Proof> proof;
  std::size_t states = 0;
};

// A proven equation usable as an extra relation under its own name.
struct Lemma {
  std::string name;
  Proof proof;
};

// Bidirectional breadth-first search over single rewrite steps. Lemmas act
// as additional relations; max_rewrite_depth bounds the steps of this search.
ProofSearch prove_equal(const SymPresentation& p, const SymElement& a, const SymElement& b,
                        const Budget& budget, const std::vector<Lemma>& lemmas = {});

// Recomputes every step independently; returns an empty string when the
// proof is valid and a description of the first failure otherwise.
std::string check_proof(const SymPresentation& p, const Proof& proof,
                        const std::vector<Lemma>& lemmas = {});

// The same equation proved backwards.
Proof reverse_proof(const SymPresentation& p, const Proof& proof,
                    const std::vector<Lemma>& lemmas = {});

// Replaces every lemma step by the lemma's own steps, recursively, giving a
// proof that uses the relations of p only.
Proof expand_lemmas(const SymPresentation& p, const Proof& proof, const std::vector<Lemma>& lemmas);

// All single rewrite steps from an element.
std::vector<ProofStep> rewrites(const SymPresentation& p, const SymElement& e);

template <class V>
struct Separation {
  bool separated = false;
  std::vector<V> witness;
};

// Checks that m satisfies every relation of p on `trials` random inputs,
// then looks for inputs on which a and b differ. Throws DomainError when the
// model violates a relation.
template <class V>
Separation<V> separate(const SymPresentation& p, const SymElement& a, const SymElement& b,
                       const Model<V>& m, std::size_t trials, std::uint64_t seed = 1) {
  if (a.degree() != b.degree()) throw DomainError("separate: degree mismatch");
  std::mt19937_64 rng(seed);
  auto draw = [&](std::size_t n) {
    std::vector<V> in;
    in.reserve(n);
    for (std::size_t i = 0; i < n; ++i) in.push_back(m.sample(rng, i));
    return in;
  };
  for (const auto& r : p.relations) {
    for (std::size_t t = 0; t < trials; ++t) {
      const auto in = draw(r.lhs.degree());
      if (eval_in_model(r.lhs, m, in) != eval_in_model(r.rhs, m, in)) {
        throw DomainError("model '" + m.name + "' violates relation '" + r.name + "'");
      }
    }
  }
  Separation<V> out;
  for (std::size_t t = 0; t < trials; ++t) {
    auto in = draw(a.degree());
    if (eval_in_model(a, m, in) != eval_in_model(b, m, in)) {
      out.separated = true;
      out.witness = std::move(in);
      return out;
    }
  }
  return out;
}

}  // namespace opslicer

#endif  // OPSLICER_WORDSOLVER_HPP
