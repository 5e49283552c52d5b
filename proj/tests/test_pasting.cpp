// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opslicer/error.hpp"
#include "opslicer/pasting.hpp"
#include "support.hpp"

using namespace opslicer;
using testing::pd;

namespace {

const char* const kTau = "[[.,.],[]]";
const char* const kPsi = "[[[.,.],[.,.,.]],[[.,.]],[[.,.],[.]]]";

}  // namespace

TEST_CASE("atoms") {
  CHECK(atom(0, 0).to_string() == ".");
  CHECK(atom(0, 0).node_count() == 1);
  CHECK(atom(2, 2).to_string() == "[[.]]");
  CHECK(cell_count(atom(2, 2)) == 1);
  CHECK(atom(1, 2).to_string() == "[[]]");
  CHECK_THROWS_AS(atom(3, 2), DomainError);
}

TEST_CASE("literals round-trip") {
  const std::vector<std::pair<const char*, std::size_t>> cases = {
      {".", 0}, {"[]", 1}, {"[.,.]", 1}, {kTau, 2}, {"[[],[.]]", 2}, {kPsi, 3}};
  for (const auto& [text, dim] : cases) CHECK(pd(text, dim).to_string() == text);
  CHECK_THROWS_AS(pd("[[.]", 2), ParseError);
  CHECK_THROWS_AS(pd("[[[.]]]", 2), ParseError);
}

TEST_CASE("cell counts") {
  CHECK(cell_count(pd(kTau, 2)) == 2);
  CHECK(cell_count(pd(kPsi, 3)) == 10);
  CHECK(cell_count(atom(1, 2)) == 0);
  CHECK(is_degenerate(atom(1, 2)));
  CHECK_FALSE(is_degenerate(pd(kTau, 2)));
}

TEST_CASE("boundaries") {
  CHECK(boundary(pd(kTau, 2)) == pd("[.,.]", 1));
  CHECK(boundary(atom(2, 2)) == atom(1, 1));
  CHECK(boundary(atom(3, 3)) == atom(2, 2));
  CHECK(boundary(pd("[]", 1)) == atom(0, 0));
  // The boundary of a diagram and of its degenerate boundary agree.
  CHECK(boundary(boundary(pd(kPsi, 3))) == pd("[.,.,.]", 1));
}

TEST_CASE("truncation and lifting") {
  CHECK(truncate_pd(pd(kPsi, 3), 2) == pd("[[.,.],[.],[.,.]]", 2));
  CHECK(lift(atom(1, 1), 2) == atom(1, 2));
  CHECK(truncate_pd(lift(pd(kTau, 2), 4), 2) == pd(kTau, 2));
}

TEST_CASE("composition along boundaries") {
  // Columns with 2 and 0 two-cells followed by a column with 1.
  CHECK(compose_along(pd(kTau, 2), pd("[[.]]", 2), 0) == pd("[[.,.],[],[.]]", 2));
  // Stacking two horizontal pairs.
  CHECK(compose_along(pd("[[.],[.]]", 2), pd("[[.],[.]]", 2), 1) == pd("[[.,.],[.,.]]", 2));
  CHECK_THROWS_AS(compose_along(pd("[[.,.]]", 2), pd("[[.],[.]]", 2), 1), BoundaryError);
}

TEST_CASE("standard order of leaf cells") {
  const auto tau = leaf_cells(pd(kTau, 2));
  REQUIRE(tau.size() == 3);
  CHECK(tau[0] == LeafCell{2, {0, 0}});
  CHECK(tau[1] == LeafCell{2, {0, 1}});
  CHECK(tau[2] == LeafCell{1, {1}});

  // The figure numbers the ten 3-cells of Psi column by column, top to bottom.
  const PastingDiagram psi = pd(kPsi, 3);
  const auto leaves = leaf_cells(psi);
  const auto top = top_leaf_indices(psi);
  REQUIRE(top.size() == 10);
  const std::vector<std::vector<std::size_t>> expected = {
      {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2},
      {1, 0, 0}, {1, 0, 1}, {2, 0, 0}, {2, 0, 1}, {2, 1, 0}};
  for (std::size_t i = 0; i < 10; ++i) CHECK(leaves[top[i]].path == expected[i]);

  const auto arrow = leaf_cells(atom(1, 2));
  REQUIRE(arrow.size() == 1);
  CHECK(arrow[0].depth == 1);
}

TEST_CASE("substitution") {
  // Two 2-cells replaced by a cell and a vertical pair; the arrow by three arrows.
  const PastingDiagram r = substitute(
      pd(kTau, 2), {pd("[[.]]", 2), pd("[[.,.]]", 2), pd("[.,.,.]", 1)});
  CHECK(r == pd("[[.,.,.],[],[],[]]", 2));
  CHECK(cell_count(r) == 3);

  // Identity substitution.
  const PastingDiagram psi = pd(kPsi, 3);
  std::vector<PastingDiagram> atoms;
  for (const auto& l : leaf_cells(psi)) atoms.push_back(atom(l.depth, l.depth));
  CHECK(substitute(psi, atoms) == psi);

  // Whiskered stacking.
  CHECK(substitute(pd("[[.,.]]", 2), {pd("[[.],[.]]", 2), pd("[[.],[.]]", 2)}) ==
        pd("[[.,.],[.,.]]", 2));

  CHECK_THROWS_AS(substitute(pd(kTau, 2), {atom(2, 2)}), DomainError);
  CHECK_THROWS_AS(substitute(pd("[[.,.]]", 2), {pd("[[.],[.]]", 2), atom(2, 2)}), BoundaryError);
}

TEST_CASE("substitution traces leaf origins") {
  const Substitution s = substitute_traced(
      pd("[[.,.]]", 2), {pd("[[.],[.]]", 2), pd("[[.],[.]]", 2)});
  CHECK(s.diagram == pd("[[.,.],[.,.]]", 2));
  const auto top = top_leaf_indices(s.diagram);
  REQUIRE(top.size() == 4);
  // Column-major standard order interleaves the two stacked arguments.
  CHECK(s.origins[top[0]] == std::vector<LeafOrigin>{{0, 0}});
  CHECK(s.origins[top[1]] == std::vector<LeafOrigin>{{1, 0}});
  CHECK(s.origins[top[2]] == std::vector<LeafOrigin>{{0, 1}});
  CHECK(s.origins[top[3]] == std::vector<LeafOrigin>{{1, 1}});
}

TEST_CASE("enumeration of small diagrams") {
  CHECK(enumerate_pds(1, 3).size() == 3);
  CHECK(enumerate_pds(0, 7).size() == 1);
  CHECK(enumerate_pds(2, 2).size() == 2);
  const auto all = enumerate_pds(2, 4);
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK(all[i - 1].node_count() <= all[i].node_count());
    CHECK(all[i].height() <= 2);
  }
}
