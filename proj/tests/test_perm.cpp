// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opslicer/error.hpp"
#include "opslicer/perm.hpp"

using namespace opslicer;

TEST_CASE("identity prints as 0 at every degree") {
  CHECK(Perm(0).to_string() == "0");
  CHECK(Perm(3).to_string() == "0");
  CHECK(Perm(3).is_identity());
}

TEST_CASE("cycle notation round-trips") {
  for (const char* s : {"(1 2)", "(2 3)", "(1 3 2)", "(1 2)(3 4)", "(1 4 2 3)"}) {
    CHECK(Perm::parse(s, 4).to_string() == s);
  }
  CHECK(Perm::parse("0", 5) == Perm(5));
}

TEST_CASE("malformed cycles are rejected") {
  CHECK_THROWS_AS(Perm::parse("(1 1)", 3), ParseError);
  CHECK_THROWS_AS(Perm::parse("(1 4)", 3), ParseError);
  CHECK_THROWS_AS(Perm::parse("(1 2", 3), ParseError);
  CHECK_THROWS_AS(Perm::parse("(1 2)(2 3)", 3), ParseError);
}

TEST_CASE("products compose left to right") {
  const Perm a = Perm::parse("(1 2)", 3);
  const Perm b = Perm::parse("(2 3)", 3);
  // (a*b)(i) = b(a(i)): 1 -> 2 -> 3, 3 -> 3 -> 2, 2 -> 1 -> 1.
  CHECK((a * b).to_string() == "(1 3 2)");
  CHECK((b * a).to_string() == "(1 2 3)");
  CHECK(a * a.inverse() == Perm(3));
}

TEST_CASE("one-line and image constructors agree") {
  const Perm p = Perm::from_one_line({2, 3, 1});
  CHECK(p == Perm::from_images({1, 2, 0}));
  CHECK(p == Perm::from_cycles(3, {{1, 2, 3}}));
  CHECK(p.one_line() == std::vector<std::size_t>{2, 3, 1});
}

TEST_CASE("all_perms lists n! permutations in lexicographic order") {
  const auto s3 = all_perms(3);
  REQUIRE(s3.size() == 6);
  CHECK(s3.front() == Perm(3));
  for (std::size_t i = 1; i < s3.size(); ++i) CHECK(s3[i - 1] < s3[i]);
  CHECK(all_perms(0).size() == 1);
  CHECK(all_perms(5).size() == 120);
}

TEST_CASE("direct sums shift later blocks") {
  CHECK(direct_sum({Perm::parse("(1 2)", 2), Perm(1)}).to_string() == "(1 2)");
  CHECK(direct_sum({Perm::parse("(1 2)", 2), Perm(1)}).degree() == 3);
  CHECK(direct_sum({Perm(2), Perm::parse("(1 2)", 2)}).to_string() == "(3 4)");
  CHECK(direct_sum({}).degree() == 0);
}

TEST_CASE("block permutations move whole blocks") {
  CHECK(block_perm(Perm::parse("(2 3)", 4), {2, 1, 1, 1}).to_string() == "(3 4)");
  CHECK(block_perm(Perm::parse("(2 3)", 4), {2, 1, 1, 1}).degree() == 5);
  CHECK(block_perm(Perm(3), {1, 2, 3}) == Perm(6));
  const Perm empty = block_perm(Perm::parse("(1 2)", 2), {0, 0});
  CHECK(empty.degree() == 0);
  CHECK(empty.to_string() == "0");
  // Swapping blocks of sizes 1 and 2: 1 -> 3, 2 -> 1, 3 -> 2.
  CHECK(block_perm(Perm::parse("(1 2)", 2), {1, 2}) == Perm::from_one_line({3, 1, 2}));
}

TEST_CASE("block permutations respect products") {
  const std::vector<std::size_t> sizes = {2, 0, 3, 1};
  for (const Perm& s : all_perms(4)) {
    for (const Perm& t : all_perms(4)) {
      std::vector<std::size_t> moved(4);
      for (std::size_t i = 0; i < 4; ++i) moved[s(i)] = sizes[i];
      CHECK(block_perm(s * t, sizes) == block_perm(s, sizes) * block_perm(t, moved));
    }
  }
}
