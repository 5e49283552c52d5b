// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opslicer/catalog.hpp"
#include "opslicer/error.hpp"
#include "opslicer/slice.hpp"

using namespace opslicer;

namespace {

std::size_t count_dim(const std::vector<GenDecl>& gens, std::size_t d) {
  std::size_t n = 0;
  for (const auto& g : gens) n += g.dim == d ? 1 : 0;
  return n;
}

std::size_t count_dim(const std::vector<GlobRelation>& rels, std::size_t d) {
  std::size_t n = 0;
  for (const auto& r : rels) n += r.dim == d ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("strict 3-categories") {
  const GlobPresentation t3 = catalog_get("T3").globular();
  CHECK(t3.max_dim == 3);
  CHECK(t3.contractible);
  CHECK(count_dim(t3.generators, 1) == 2);
  CHECK(count_dim(t3.relations, 1) == 3);
  CHECK(count_dim(t3.generators, 2) == 3);
  CHECK(count_dim(t3.relations, 2) == 8);
}

TEST_CASE("weak 3-categories") {
  const GlobPresentation w3 = catalog_get("W3").globular();
  CHECK(w3.relations.empty());
  CHECK(count_dim(w3.generators, 2) == 9);
}

TEST_CASE("commutative monoids") {
  const SymPresentation p = catalog_get("sym/comm_monoid").symmetric();
  CHECK(p.generators.size() == 2);
  REQUIRE(p.relations.size() == 4);
  bool twisted = false;
  for (const auto& r : p.relations) {
    twisted = twisted || r.rhs.to_string() == "(1 2).b";
  }
  CHECK(twisted);
}

TEST_CASE("every listed key resolves and validates") {
  const auto keys = catalog_list();
  CHECK(keys.size() >= 10);
  for (const auto& key : keys) {
    INFO(key);
    const CatalogEntry e = catalog_get(key);
    CHECK(e.key == key);
    CHECK_FALSE(e.provenance.empty());
    CHECK_FALSE(e.text().empty());
    if (e.is_symmetric()) {
      CHECK_NOTHROW(e.symmetric().check());
    } else {
      CHECK(validate(e.globular()).ok());
    }
  }
}

TEST_CASE("families reproduce the fixed entries") {
  // The family uses systematic names and lists unit, associativity and
  // interchange laws only, so it lacks the unit-composite law of T3.
  const GlobPresentation family = catalog_get("T(3)").globular();
  const GlobPresentation fixed = catalog_get("T3").globular();
  for (std::size_t d = 1; d <= 2; ++d) {
    CHECK(count_dim(family.generators, d) == count_dim(fixed.generators, d));
  }
  CHECK(count_dim(family.relations, 1) == count_dim(fixed.relations, 1));
  CHECK(count_dim(family.relations, 2) + 1 == count_dim(fixed.relations, 2));
  for (std::size_t n = 2; n <= 5; ++n) {
    INFO(n);
    CHECK(validate(strict_family(n)).ok());
    CHECK(validate(weak_interchange_family(n + 1)).ok());
    CHECK(validate(weak_units_family(n + 1)).ok());
    CHECK(validate(weak_family(n, 2)).ok());
    CHECK(strict_family(n).max_dim == n);
  }
}

TEST_CASE("unknown keys and bad parameters") {
  CHECK_THROWS_AS(catalog_get("T7x"), NotFoundError);
  CHECK_THROWS_AS(catalog_get("sym/nothing"), NotFoundError);
  CHECK_THROWS_AS(catalog_get("W(5)"), DomainError);
  CHECK_THROWS_AS(catalog_get("T(0)"), DomainError);
}
