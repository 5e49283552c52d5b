// SPDX-License-Identifier: Apache-2.0
#ifndef OPSLICER_MODELS_HPP
#define OPSLICER_MODELS_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "opslicer/error.hpp"
#include "opslicer/symop.hpp"

namespace opslicer {

// An algebra for a free symmetric operad: one function per generator on a
// common carrier, plus a sampler used for random testing.
template <class V>
struct Model {
  std::string name;
  std::map<std::string, std::function<V(const std::vector<V>&)>> ops;
  std::function<V(std::mt19937_64&, std::size_t)> sample;
};

namespace detail {

template <class V>
V eval_tree(const PlainTerm& t, const Model<V>& m, const std::vector<V>& inputs,
            std::size_t& next) {
  if (t.is_input()) return inputs[next++];
  auto it = m.ops.find(t.gen());
  if (it == m.ops.end()) {
    throw DomainError("model '" + m.name + "' does not interpret generator '" + t.gen() + "'");
  }
  std::vector<V> args;
  args.reserve(t.children().size());
  for (const auto& c : t.children()) args.push_back(eval_tree(c, m, inputs, next));
  return it->second(args);
}

}  // namespace detail

// Evaluates perm . tree on inputs: the tree sees y_i = inputs[perm^-1(i)].
template <class V>
V eval_in_model(const SymElement& e, const Model<V>& m, const std::vector<V>& inputs) {
  if (inputs.size() != e.degree()) {
    throw DomainError("eval_in_model: " + std::to_string(inputs.size()) +
                      " inputs for degree " + std::to_string(e.degree()));
  }
  const Perm inv = e.perm.inverse();
  std::vector<V> ys;
  ys.reserve(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) ys.push_back(inputs[inv(i)]);
  std::size_t next = 0;
  return detail::eval_tree(e.tree, m, ys, next);
}

using Word = std::vector<std::string>;

// Words over an alphabet of tokens. Generators of positive arity concatenate
// their arguments; nullary generators emit their own name unless listed as
// silent, in which case they emit the empty word.
Model<Word> free_sequence_model(const SymPresentation& p,
                                const std::set<std::string>& silent = {});

// As free_sequence_model, but the named generators concatenate in reverse.
Model<Word> reversed_sequence_model(const SymPresentation& p, const std::set<std::string>& silent,
                                    const std::set<std::string>& reversed);

// Multisets of tokens, stored sorted.
Model<Word> free_multiset_model(const SymPresentation& p,
                                const std::set<std::string>& silent = {});

// Finite model on {0,...,size-1}; tables are indexed in row-major order of
// the argument tuple.
Model<int> table_model(std::string name, int size,
                       const std::map<std::string, std::vector<int>>& tables);

// Natural numbers with a function per generator.
Model<long long> integer_model(std::string name,
                               std::map<std::string, std::function<long long(const std::vector<long long>&)>> ops);

}  // namespace opslicer

#endif  // OPSLICER_MODELS_HPP
