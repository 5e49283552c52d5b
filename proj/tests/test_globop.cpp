// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opslicer/catalog.hpp"
#include "opslicer/error.hpp"
#include "opslicer/globop.hpp"
#include "support.hpp"

using namespace opslicer;
using testing::glob;
using testing::pd;

namespace {

PastingDiagram shape(const char* term, const GlobPresentation& p) {
  return shape_of(parse_gterm(term), p);
}

const char* const kSmall = R"(presentation small dim 2
contractible false
gen i1 : dim 1 shape []
gen h1 : dim 1 shape [.,.]
gen h2 : dim 2 shape [[.],[.]]
gen v2 : dim 2 shape [[.,.]]
)";

}  // namespace

TEST_CASE("term text round-trips") {
  for (const char* s : {"id2", "h2", "h2(v2,i2(i1))", "h2(v2,i2)(id2,id2,h1)(h2,h2,i1,i1)",
                        "v2(h2,h2)(v2,id2,id2,id2)"}) {
    CHECK(parse_gterm(s).to_string() == s);
  }
  CHECK(parse_gterm("id3").is_identity());
  CHECK(parse_gterm("id3").identity_dim() == 3);
  CHECK_THROWS_AS(parse_gterm("h2(v2"), ParseError);
}

TEST_CASE("shapes of terms") {
  const auto& t3 = glob("T3");
  CHECK(shape("h1(id1,h1)", t3) == pd("[.,.,.]", 1));
  CHECK(shape("id2", t3) == atom(2, 2));
  CHECK(shape("h2(v2,v2)", t3) == pd("[[.,.],[.,.]]", 2));
  CHECK(shape("v2(h2,h2)", t3) == pd("[[.,.],[.,.]]", 2));
  CHECK(shape("i2(i1)", t3) == pd("[]", 2));
  CHECK(term_dim(parse_gterm("h2(v2,i2(i1))"), t3) == 2);
  CHECK(max_generator_dim(parse_gterm("i2(h1)"), t3) == 2);
  CHECK_THROWS_AS(shape("q2", t3), DomainError);
  CHECK_THROWS_AS(shape("h2(v2)", t3), DomainError);
  CHECK_THROWS_AS(shape("h2(h1,v2)", t3), DomainError);
  // Whiskering a horizontal pair is fine; stacking it on a single cell is not.
  CHECK(shape("h2(v2,h2)", t3) == pd("[[.,.],[.],[.]]", 2));
  CHECK_THROWS_AS(shape("v2(h2,v2)", t3), BoundaryError);
}

TEST_CASE("validation of the catalog") {
  for (const char* key : {"T3", "W3", "H4", "E3"}) {
    INFO(std::string(key));
    CHECK(validate(glob(key)).ok());
  }
  const ValidationReport r = validate(glob("T3"));
  bool found = false;
  for (const auto& item : r.items) found = found || (item.name == "vii'" && item.ok);
  CHECK(found);
}

TEST_CASE("validation reports shape mismatches by name") {
  GlobPresentation p = parse_glob_presentation(kSmall);
  p.relations.push_back({"bad", 1, parse_gterm("h1"), parse_gterm("id1")});
  const ValidationReport r = validate(p);
  CHECK_FALSE(r.ok());
  CHECK(r.to_string().find("FAIL relation bad") != std::string::npos);
  CHECK(validate(parse_glob_presentation(kSmall)).ok());
}

TEST_CASE("validation checks generator boundaries") {
  GlobPresentation p = parse_glob_presentation(kSmall);
  p.generators.push_back({"l2", 2, pd("[[]]", 2), parse_gterm("h1"), parse_gterm("id1")});
  CHECK_FALSE(validate(p).ok());
}

TEST_CASE("truncation") {
  const auto& t3 = glob("T3");
  const GlobPresentation j2 = truncate(t3, 2);
  CHECK(j2.name == "T3/2");
  CHECK(j2.max_dim == 2);
  CHECK(j2.generators.size() == 5);
  // Only the dimension-1 relations survive.
  REQUIRE(j2.relations.size() == 3);
  for (const auto& r : j2.relations) CHECK(r.dim == 1);
  const GlobPresentation top = truncate(t3, 3);
  CHECK(top.relations.size() == t3.relations.size());
  const auto& w3 = glob("W3");
  CHECK(truncate(w3, 2).generators.size() == 11);
  CHECK(truncate(w3, 2).relations.empty());
}

TEST_CASE("layered forms") {
  const auto& t3 = glob("T3");
  CHECK(layered_form(parse_gterm("h2(v2,i2(i1))"), t3).to_string() == "h2(id2,i2)(v2,i1)");
  CHECK(layered_form(parse_gterm("h2"), t3).to_string() == "id2(h2)");
  CHECK(layered_form(parse_gterm("id2"), t3).to_string() == "id2");
  CHECK(layered_form(parse_gterm("v2(h2(v2,id2),h2)"), t3).to_string() ==
        "v2(h2,h2)(v2,id2,id2,id2)");
  CHECK(is_layered(parse_gterm("h2(v2,v2)")));
  CHECK_FALSE(is_layered(parse_gterm("h2(v2(h2,h2),v2)")));
  for (const char* s : {"h2(v2(h2,h2),i2)", "h2(v2,i2)(id2,id2,h1)(h2,h2,i1,i1)",
                        "v2(h2,h2)(v2,id2,id2,id2)", "v2(h2(v2,id2),h2)"}) {
    const GTerm t = parse_gterm(s);
    const GTerm l = layered_form(t, t3);
    CHECK(is_layered(l));
    CHECK(shape_of(l, t3) == shape_of(t, t3));
  }
}

TEST_CASE("presentation text round-trips") {
  for (const char* key : {"T3", "W3", "H4", "E3", "T(4)", "H(5)", "E(4)", "W(5,2)"}) {
    INFO(std::string(key));
    const GlobPresentation p = catalog_get(key).globular();
    const std::string text = print_glob_presentation(p);
    CHECK(parse_glob_presentation(text) == p);
    CHECK(print_glob_presentation(parse_glob_presentation(text)) == text);
  }
}

TEST_CASE("presentation parse errors") {
  try {
    parse_glob_presentation("presentation x dim 2\ngen a : dim 1 shape [.,\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_glob_presentation("presentation x dim 2\ngen id2 : dim 1 shape []\n"),
                  ParseError);
  const ValidationReport r =
      validate(parse_glob_presentation("presentation x dim 1\ngen a : dim 2 shape [[.]]\n"));
  CHECK_FALSE(r.ok());
  CHECK(r.to_string().find("generator a") != std::string::npos);
}
