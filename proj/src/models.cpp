// SPDX-License-Identifier: Apache-2.0
#include "opslicer/models.hpp"

#include <algorithm>
#include <utility>

namespace opslicer {

namespace {

std::function<Word(std::mt19937_64&, std::size_t)> word_sampler() {
  return [](std::mt19937_64& rng, std::size_t index) {
    std::uniform_int_distribution<int> len(0, 2);
    std::uniform_int_distribution<int> letter(0, 2);
    Word w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(std::string(1, static_cast<char>('p' + letter(rng))));
    w.push_back("x" + std::to_string(index + 1));
    return w;
  };
}

Model<Word> sequence_model(const SymPresentation& p, const std::set<std::string>& silent,
                           const std::set<std::string>& reversed, bool sorted, std::string name) {
  Model<Word> m;
  m.name = std::move(name);
  for (const auto& g : p.generators) {
    if (g.arity == 0) {
      const bool quiet = silent.count(g.name) > 0;
      const std::string token = g.name;
      m.ops[g.name] = [quiet, token](const std::vector<Word>&) {
        return quiet ? Word{} : Word{token};
      };
      continue;
    }
    const bool rev = reversed.count(g.name) > 0;
    m.ops[g.name] = [rev, sorted](const std::vector<Word>& args) {
      Word out;
      if (rev) {
        for (auto it = args.rbegin(); it != args.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
      } else {
        for (const auto& a : args) out.insert(out.end(), a.begin(), a.end());
      }
      if (sorted) std::sort(out.begin(), out.end());
      return out;
    };
  }
  m.sample = word_sampler();
  return m;
}

}  // namespace

Model<Word> free_sequence_model(const SymPresentation& p, const std::set<std::string>& silent) {
  return sequence_model(p, silent, {}, false, "FreeSequence");
}

Model<Word> reversed_sequence_model(const SymPresentation& p, const std::set<std::string>& silent,
                                    const std::set<std::string>& reversed) {
  return sequence_model(p, silent, reversed, false, "ReversedSequence");
}

Model<Word> free_multiset_model(const SymPresentation& p, const std::set<std::string>& silent) {
  return sequence_model(p, silent, {}, true, "FreeMultiset");
}

Model<int> table_model(std::string name, int size,
                       const std::map<std::string, std::vector<int>>& tables) {
  Model<int> m;
  m.name = std::move(name);
  for (const auto& [gen, table] : tables) {
    m.ops[gen] = [table, size, gen](const std::vector<int>& args) {
      std::size_t index = 0;
      for (int a : args) index = index * static_cast<std::size_t>(size) + static_cast<std::size_t>(a);
      if (index >= table.size()) throw DomainError("table for '" + gen + "' is too short");
      return table[index];
    };
  }
  m.sample = [size](std::mt19937_64& rng, std::size_t) {
    return std::uniform_int_distribution<int>(0, size - 1)(rng);
  };
  return m;
}

Model<long long> integer_model(
    std::string name,
    std::map<std::string, std::function<long long(const std::vector<long long>&)>> ops) {
  Model<long long> m;
  m.name = std::move(name);
  m.ops = std::move(ops);
  m.sample = [](std::mt19937_64& rng, std::size_t) {
    return std::uniform_int_distribution<long long>(0, 50)(rng);
  };
  return m;
}

}  // namespace opslicer
