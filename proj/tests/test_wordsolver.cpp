// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <tuple>

#include "opslicer/catalog.hpp"
#include "opslicer/error.hpp"
#include "opslicer/models.hpp"
#include "opslicer/slice.hpp"
#include "opslicer/wordsolver.hpp"
#include "support.hpp"

using namespace opslicer;
using testing::elt;
using testing::glob;
using testing::sym;

namespace {

Budget nodes(std::size_t n) {
  Budget b;
  b.max_tree_nodes = n;
  return b;
}

// Planar trees over generator arities with exactly `k` nodes and `n` open
// inputs, counted by a recurrence over forests.
std::size_t count_trees(const std::vector<std::size_t>& arities, std::size_t max_nodes,
                        std::size_t n) {
  // forest[m][k][i]: ordered forests of m trees, k nodes in total, i inputs.
  const std::size_t cap = max_nodes + 1;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> memo;
  std::function<std::size_t(std::size_t, std::size_t, std::size_t)> trees;
  std::function<std::size_t(std::size_t, std::size_t, std::size_t)> forests;
  trees = [&](std::size_t, std::size_t k, std::size_t i) -> std::size_t {
    if (k == 0) return i == 1 ? 1 : 0;
    std::size_t total = 0;
    for (std::size_t a : arities) total += forests(a, k - 1, i);
    return total;
  };
  forests = [&](std::size_t m, std::size_t k, std::size_t i) -> std::size_t {
    if (m == 0) return k == 0 && i == 0 ? 1 : 0;
    const auto key = std::make_tuple(m, k, i);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::size_t total = 0;
    for (std::size_t k1 = 0; k1 <= k; ++k1) {
      for (std::size_t i1 = 0; i1 <= i; ++i1) {
        const std::size_t first = trees(0, k1, i1);
        if (first) total += first * forests(m - 1, k - k1, i - i1);
      }
    }
    memo[key] = total;
    return total;
  };
  std::size_t total = 0;
  for (std::size_t k = 0; k < cap; ++k) total += trees(0, k, n);
  return total;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::vector<std::size_t> arities_of(const SymPresentation& p) {
  std::vector<std::size_t> out;
  for (const auto& g : p.generators) out.push_back(g.arity);
  return out;
}

}  // namespace

TEST_CASE("enumeration of small free operads") {
  const auto magma = enumerate(sym("sym/magma"), 2, nodes(1));
  REQUIRE(magma.size() == 2);
  CHECK(magma[0].to_string() == "b");
  CHECK(magma[1].to_string() == "(1 2).b");
  const auto unit = enumerate(sym("sym/comm_monoid"), 1, nodes(0));
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].to_string() == "_");
  const auto points = enumerate(sym("sym/comm_monoid"), 0, nodes(1));
  REQUIRE(points.size() == 1);
  CHECK(points[0].to_string() == "i");
  CHECK_THROWS_AS(enumerate(sym("sym/magma"), 7, Budget{}), DomainError);
}

TEST_CASE("element counts match the tree-count oracle") {
  for (const char* key : {"sym/magma", "sym/monoid", "sym/comm_monoid_EH", "sym/double_monoid"}) {
    const auto& p = sym(key);
    for (std::size_t n = 0; n <= 3; ++n) {
      for (std::size_t k = 0; k <= 5; ++k) {
        INFO(std::string(key) << " arity " << n << " nodes " << k);
        CHECK(enumerate(p, n, nodes(k)).size() == count_trees(arities_of(p), k, n) * factorial(n));
      }
    }
  }
}

TEST_CASE("class counts") {
  CHECK(classes(sym("sym/comm_monoid"), 2, nodes(5)).classes == 1);
  CHECK(classes(sym("sym/monoid"), 2, nodes(5)).classes == 2);
  const ClassReport free = classes(sym("sym/magma"), 3, nodes(3));
  CHECK(free.classes == free.elements);
  CHECK(free.complete);
  CHECK_FALSE(classes(sym("sym/monoid"), 2, nodes(5)).complete);
  CHECK_THROWS_AS(classes(sym("sym/monoid"), 9, Budget{}), DomainError);
}

TEST_CASE("class representatives are minimal") {
  const ClassReport r = classes(sym("sym/monoid"), 2, nodes(5));
  REQUIRE(r.representatives.size() == 2);
  CHECK(r.representatives[0].to_string() == "b");
  CHECK(r.representatives[1].to_string() == "(1 2).b");
  const ClassReport c = classes(sym("sym/comm_monoid"), 0, nodes(5));
  REQUIRE(c.representatives.size() == 1);
  CHECK(c.representatives[0].to_string() == "i");
}

TEST_CASE("trivial proofs") {
  const auto& p = sym("sym/monoid");
  const ProofSearch r = prove_equal(p, elt("b(b,_)", p), elt("b(b,_)", p), Budget{});
  REQUIRE(r.proof);
  CHECK(r.proof->steps.empty());
  CHECK(check_proof(p, *r.proof).empty());
}

TEST_CASE("single relations are found and replayed") {
  const auto& p = sym("sym/comm_monoid");
  const ProofSearch r = prove_equal(p, elt("b(_,b)", p), elt("(1 2 3).b(b,_)", p), Budget{});
  REQUIRE(r.proof);
  CHECK(check_proof(p, *r.proof).empty());
  const Proof back = reverse_proof(p, *r.proof);
  CHECK(back.lhs == r.proof->rhs);
  CHECK(back.rhs == r.proof->lhs);
  CHECK(check_proof(p, back).empty());
}

TEST_CASE("tampered proofs are rejected") {
  const auto& p = sym("sym/monoid");
  ProofSearch r = prove_equal(p, elt("b(b(_,i),_)", p), elt("b", p), Budget{});
  REQUIRE(r.proof);
  REQUIRE_FALSE(r.proof->steps.empty());
  Proof bad = *r.proof;
  bad.steps.back().result = elt("(1 2).b", p);
  CHECK_FALSE(check_proof(p, bad).empty());
  bad = *r.proof;
  bad.steps.front().relation = "a";
  CHECK_FALSE(check_proof(p, bad).empty());
}

TEST_CASE("unprovable equations give up") {
  const auto& p = sym("sym/monoid");
  Budget b;
  b.max_rewrite_depth = 6;
  const ProofSearch r = prove_equal(p, elt("b", p), elt("(1 2).b", p), b);
  CHECK_FALSE(r.proof);
  CHECK(r.states > 0);
}

TEST_CASE("the Eckmann-Hilton argument") {
  const auto& p = sym("sym/comm_monoid_EH");
  std::vector<Lemma> lemmas;
  const std::vector<std::pair<const char*, const char*>> goals = {
      {"i", "i'"}, {"b", "b'"}, {"b", "(1 2).b"}, {"b(_,b)", "b(b,_)"}};
  for (const auto& [lhs, rhs] : goals) {
    INFO(lhs << " = " << rhs);
    const ProofSearch r = prove_equal(p, elt(lhs, p), elt(rhs, p), Budget{}, lemmas);
    REQUIRE(r.proof);
    CHECK(r.proof->steps.size() <= 16);
    CHECK(check_proof(p, *r.proof, lemmas).empty());
    const Proof full = expand_lemmas(p, *r.proof, lemmas);
    CHECK(check_proof(p, full).empty());
    lemmas.push_back({"lemma:" + std::to_string(lemmas.size() + 1), *r.proof});
  }
}

TEST_CASE("rewrites list single steps") {
  const auto& p = sym("sym/monoid");
  const auto steps = rewrites(p, elt("b(_,i)", p));
  bool unit = false;
  for (const auto& s : steps) {
    CHECK(check_proof(p, Proof{elt("b(_,i)", p), s.result, {s}}).empty());
    unit = unit || s.result == elt("_", p);
  }
  CHECK(unit);
}

TEST_CASE("lemma names must be fresh") {
  const auto& p = sym("sym/monoid");
  const Proof trivial{elt("b", p), elt("b", p), {}};
  CHECK_THROWS_AS(prove_equal(p, elt("b", p), elt("b", p), Budget{}, {{"a", trivial}}),
                  DomainError);
}

TEST_CASE("separation by models") {
  const SymPresentation t1 = slice(glob("T3"), 1);
  const auto seq = free_sequence_model(t1, {"i1"});
  const auto s = separate(t1, elt("h1", t1), elt("(1 2).h1", t1), seq, 50);
  CHECK(s.separated);
  CHECK(s.witness.size() == 2);
  CHECK_FALSE(separate(t1, elt("h1", t1), elt("h1", t1), seq, 50).separated);

  const SymPresentation e2 = slice(glob("E3"), 2);
  std::map<std::string, std::function<long long(const std::vector<long long>&)>> ops;
  const auto zero = [](const std::vector<long long>&) { return 0LL; };
  for (const auto& g : e2.generators) ops[g.name] = zero;
  ops["v2"] = [](const std::vector<long long>& v) { return v[0] + v[1]; };
  auto m = integer_model("sum", ops);
  m.sample = [](std::mt19937_64& rng, std::size_t) { return static_cast<long long>(rng() % 100); };
  CHECK(separate(e2, elt("h2", e2), elt("v2", e2), m, 50).separated);

  // A model that breaks associativity is refused.
  const auto& mon = sym("sym/monoid");
  auto bad = integer_model("minus", {{"i", zero},
                                     {"b", [](const std::vector<long long>& v) { return v[0] - v[1]; }}});
  bad.sample = m.sample;
  CHECK_THROWS_AS(separate(mon, elt("b", mon), elt("(1 2).b", mon), bad, 50), DomainError);
}

TEST_CASE("budget overrides") {
  const Budget b = parse_budget_override(Budget{}, "5,10,1000");
  CHECK(b.max_tree_nodes == 5);
  CHECK(b.max_rewrite_depth == 10);
  CHECK(b.max_frontier == 1000);
  CHECK(b.max_arity == Budget{}.max_arity);
  CHECK_THROWS_AS(parse_budget_override(Budget{}, "5,10"), DomainError);
  CHECK_THROWS_AS(parse_budget_override(Budget{}, "5,x,1"), DomainError);
  CHECK_THROWS_AS(parse_budget_override(Budget{}, ""), DomainError);
}
