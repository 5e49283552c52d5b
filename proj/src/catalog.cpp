// SPDX-License-Identifier: Apache-2.0
#include "opslicer/catalog.hpp"

#include <charconv>
#include <utility>

#include "opslicer/error.hpp"

namespace opslicer {

namespace {

constexpr std::string_view kT3 = R"(presentation T3 dim 3
contractible true
gen i1 : dim 1 shape []
gen h1 : dim 1 shape [.,.]
rel i : dim 1 : h1(id1,i1) = id1
rel ii : dim 1 : h1(i1,id1) = id1
rel iii : dim 1 : h1(id1,h1) = h1(h1,id1)
gen i2 : dim 2 shape [[]]
gen h2 : dim 2 shape [[.],[.]]
gen v2 : dim 2 shape [[.,.]]
rel i' : dim 2 : h2(id2,i2(i1)) = id2
rel ii' : dim 2 : h2(i2(i1),id2) = id2
rel iii' : dim 2 : v2(id2,i2) = id2
rel iv' : dim 2 : v2(i2,id2) = id2
rel v' : dim 2 : h2(id2,h2) = h2(h2,id2)
rel vi' : dim 2 : v2(id2,v2) = v2(v2,id2)
rel vii' : dim 2 : h2(v2,v2) = v2(h2,h2)
rel viii' : dim 2 : h2(i2,i2) = i2(h1)
)";

constexpr std::string_view kW3 = R"(presentation W3 dim 3
contractible true
gen i1 : dim 1 shape []
gen h1 : dim 1 shape [.,.]
gen i2 : dim 2 shape [[]]
gen h2 : dim 2 shape [[.],[.]]
gen v2 : dim 2 shape [[.,.]]
gen l2 : dim 2 shape [[]] src h1(id1,i1) tgt id1
gen l2' : dim 2 shape [[]] src id1 tgt h1(id1,i1)
gen r2 : dim 2 shape [[]] src h1(i1,id1) tgt id1
gen r2' : dim 2 shape [[]] src id1 tgt h1(i1,id1)
gen a2 : dim 2 shape [[],[],[]] src h1(id1,h1) tgt h1(h1,id1)
gen a2' : dim 2 shape [[],[],[]] src h1(h1,id1) tgt h1(id1,h1)
)";

constexpr std::string_view kH4 = R"(presentation H4 dim 4
contractible true
gen i1 : dim 1 shape []
gen h1 : dim 1 shape [.,.]
rel i : dim 1 : h1(id1,i1) = id1
rel ii : dim 1 : h1(i1,id1) = id1
rel iii : dim 1 : h1(id1,h1) = h1(h1,id1)
gen i2 : dim 2 shape [[]]
gen h2 : dim 2 shape [[.],[.]]
gen v2 : dim 2 shape [[.,.]]
rel i' : dim 2 : h2(id2,i2(i1)) = id2
rel ii' : dim 2 : h2(i2(i1),id2) = id2
rel iii' : dim 2 : v2(id2,i2) = id2
rel iv' : dim 2 : v2(i2,id2) = id2
rel v' : dim 2 : h2(id2,h2) = h2(h2,id2)
rel vi' : dim 2 : v2(id2,v2) = v2(v2,id2)
rel vii' : dim 2 : h2(i2,i2) = i2(h1)
gen i3 : dim 3 shape [[[]]]
gen h3 : dim 3 shape [[[.]],[[.]]]
gen v3 : dim 3 shape [[[.],[.]]]
gen c3 : dim 3 shape [[[.,.]]]
gen s3 : dim 3 shape [[[],[]],[[],[]]] src h2(v2,v2) tgt v2(h2,h2)
gen s3' : dim 3 shape [[[],[]],[[],[]]] src v2(h2,h2) tgt h2(v2,v2)
rel i'' : dim 3 : h3(id3,i3(i2(i1))) = id3
rel ii'' : dim 3 : h3(i3(i2(i1)),id3) = id3
rel iii'' : dim 3 : v3(id3,i3(i2)) = id3
rel iv'' : dim 3 : v3(i3(i2),id3) = id3
rel v'' : dim 3 : c3(id3,i3) = id3
rel vi'' : dim 3 : c3(i3,id3) = id3
rel vii'' : dim 3 : h3(id3,h3) = h3(h3,id3)
rel viii'' : dim 3 : v3(id3,v3) = v3(v3,id3)
rel ix'' : dim 3 : c3(id3,c3) = c3(c3,id3)
rel x'' : dim 3 : h3(i3,i3) = i3(h2)
rel xi'' : dim 3 : v3(i3,i3) = i3(v2)
)";

constexpr std::string_view kE3 = R"(presentation E3 dim 3
contractible true
gen i1 : dim 1 shape []
gen h1 : dim 1 shape [.,.]
rel i : dim 1 : h1(id1,h1) = h1(h1,id1)
gen i2 : dim 2 shape [[]]
gen h2 : dim 2 shape [[.],[.]]
gen v2 : dim 2 shape [[.,.]]
gen l2 : dim 2 shape [[]] src h1(id1,i1) tgt id1
gen l2' : dim 2 shape [[]] src id1 tgt h1(id1,i1)
gen r2 : dim 2 shape [[]] src h1(i1,id1) tgt id1
gen r2' : dim 2 shape [[]] src id1 tgt h1(i1,id1)
rel i' : dim 2 : v2(id2,i2) = id2
rel ii' : dim 2 : v2(i2,id2) = id2
rel iii' : dim 2 : h2(id2,h2) = h2(h2,id2)
rel iv' : dim 2 : v2(id2,v2) = v2(v2,id2)
rel v' : dim 2 : h2(v2,v2) = v2(h2,h2)
rel vi' : dim 2 : h2(i2,i2) = i2(h1)
)";

constexpr std::string_view kSets = R"(presentation sym/sets symmetric
)";

constexpr std::string_view kMagma = R"(presentation sym/magma symmetric
symgen b : arity 2
)";

constexpr std::string_view kMonoid = R"(presentation sym/monoid symmetric
symgen i : arity 0
symgen b : arity 2
symrel u : b(_,i) = _
symrel v : b(i,_) = _
symrel a : b(_,b) = b(b,_)
)";

constexpr std::string_view kCommMonoid = R"(presentation sym/comm_monoid symmetric
symgen i : arity 0
symgen b : arity 2
symrel u : b(_,i) = _
symrel v : b(i,_) = _
symrel a : b(_,b) = b(b,_)
symrel c : b = (1 2).b
)";

constexpr std::string_view kCommMonoidEH = R"(presentation sym/comm_monoid_EH symmetric
symgen i : arity 0
symgen i' : arity 0
symgen b : arity 2
symgen b' : arity 2
symrel i : b(_,i) = _
symrel ii : b(i,_) = _
symrel iii : b'(_,i') = _
symrel iv : b'(i',_) = _
symrel v : b(b',b') = (2 3).b'(b,b)
)";

constexpr std::string_view kDoubleMonoid = R"(presentation sym/double_monoid symmetric
symgen i : arity 0
symgen b : arity 2
symgen b' : arity 2
symrel i : b(_,i) = _
symrel ii : b(i,_) = _
symrel iii : b(_,b) = b(b,_)
symrel iv : b'(_,i) = _
symrel v : b'(i,_) = _
symrel vi : b'(_,b') = b'(b',_)
)";

struct Fixed {
  std::string_view key;
  std::string_view text;
  bool symmetric;
  std::string_view provenance;
};

constexpr Fixed kFixed[] = {
    {"T3", kT3, false, "strict 3-categories: units, associativity and interchange"},
    {"W3", kW3, false, "tricategories: free composites with unitor and associator points"},
    {"H4", kH4, false, "4-categories with weak interchange laws"},
    {"E3", kE3, false, "3-categories with weak units in low dimensions"},
    {"sym/sets", kSets, true, "sets: no generators and no relations"},
    {"sym/magma", kMagma, true, "magmas: one free binary operation"},
    {"sym/monoid", kMonoid, true, "monoids: unit and associativity"},
    {"sym/comm_monoid", kCommMonoid, true, "commutative monoids: unit, associativity, commutativity"},
    {"sym/comm_monoid_EH", kCommMonoidEH, true,
     "commutative monoids via two unital operations with interchange"},
    {"sym/double_monoid", kDoubleMonoid, true, "double monoids with shared unit"},
};

std::string idx(std::size_t k) { return std::to_string(k); }

std::string unit_name(std::size_t k) { return "i" + idx(k); }
std::string comp_name(std::size_t k, std::size_t l) { return "b" + idx(k) + "_" + idx(l); }

GTerm gen(const std::string& name) { return GTerm::generator(name); }

GTerm app(const std::string& head, std::vector<GTerm> args) {
  return GTerm::composite(gen(head), std::move(args));
}

// i_k(i_{k-1}(...(i_{l+1}))): the identity k-cell on an l-cell boundary.
GTerm iterated_unit(std::size_t k, std::size_t l) {
  GTerm t = gen(unit_name(l + 1));
  for (std::size_t d = l + 2; d <= k; ++d) t = app(unit_name(d), {t});
  return t;
}

PastingDiagram comp_shape(std::size_t k, std::size_t l) {
  return compose_along(atom(k, k), atom(k, k), l);
}

// Shared skeleton: identities and binary composites for each k < n.
GlobPresentation skeleton(std::string name, std::size_t n) {
  GlobPresentation p;
  p.name = std::move(name);
  p.max_dim = n;
  p.contractible = true;
  return p;
}

void add_basic_generators(GlobPresentation& p, std::size_t k) {
  p.generators.push_back({unit_name(k), k, atom(k - 1, k), std::nullopt, std::nullopt});
  for (std::size_t l = 0; l < k; ++l) {
    p.generators.push_back({comp_name(k, l), k, comp_shape(k, l), std::nullopt, std::nullopt});
  }
}

void add_rel(GlobPresentation& p, std::string name, std::size_t k, GTerm lhs, GTerm rhs) {
  p.relations.push_back({std::move(name), k, std::move(lhs), std::move(rhs)});
}

void add_units(GlobPresentation& p, std::size_t k, std::size_t l) {
  const GTerm id = GTerm::identity(k);
  const std::string b = comp_name(k, l);
  add_rel(p, "unit_r_" + idx(k) + "_" + idx(l), k, app(b, {id, iterated_unit(k, l)}), id);
  add_rel(p, "unit_l_" + idx(k) + "_" + idx(l), k, app(b, {iterated_unit(k, l), id}), id);
}

void add_assoc(GlobPresentation& p, std::size_t k, std::size_t l) {
  const GTerm id = GTerm::identity(k);
  const std::string b = comp_name(k, l);
  add_rel(p, "assoc_" + idx(k) + "_" + idx(l), k, app(b, {id, gen(b)}), app(b, {gen(b), id}));
}

void add_interchange(GlobPresentation& p, std::size_t k, std::size_t l, std::size_t i) {
  const std::string bl = comp_name(k, l);
  const std::string bi = comp_name(k, i);
  add_rel(p, "interchange_" + idx(k) + "_" + idx(l) + "_" + idx(i), k,
          app(bl, {gen(bi), gen(bi)}), app(bi, {gen(bl), gen(bl)}));
}

// b_kl(i_k, i_k) = i_k(b_{k-1,l}) for l <= k - 2.
void add_unit_composite(GlobPresentation& p, std::size_t k, std::size_t l) {
  const std::string u = unit_name(k);
  add_rel(p, "unit_comp_" + idx(k) + "_" + idx(l), k, app(comp_name(k, l), {gen(u), gen(u)}),
          app(u, {gen(comp_name(k - 1, l))}));
}

// Invertible point generators between two parallel (k-1)-terms.
void add_points(GlobPresentation& p, const std::string& name, std::size_t k, const GTerm& src,
                const GTerm& tgt) {
  const PastingDiagram shape = lift(shape_of(src, p), k);
  p.generators.push_back({name, k, shape, src, tgt});
  p.generators.push_back({name + "'", k, shape, tgt, src});
}

void add_unitors(GlobPresentation& p, std::size_t k, std::size_t l) {
  const GTerm id = GTerm::identity(k - 1);
  const std::string b = comp_name(k - 1, l);
  const std::string tag = idx(k) + "_" + idx(l);
  add_points(p, "l" + tag, k, app(b, {id, iterated_unit(k - 1, l)}), id);
  add_points(p, "r" + tag, k, app(b, {iterated_unit(k - 1, l), id}), id);
}

std::size_t parse_size(std::string_view text, std::string_view key) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw NotFoundError("unknown catalog key '" + std::string(key) + "'");
  }
  return v;
}

// Splits "F(a)" or "F(a,b)" into F and its numeric parameters.
bool parse_family(std::string_view key, std::string& family, std::vector<std::size_t>& params) {
  const auto open = key.find('(');
  if (open == std::string_view::npos || key.back() != ')') return false;
  family = std::string(key.substr(0, open));
  std::string_view inner = key.substr(open + 1, key.size() - open - 2);
  while (true) {
    const auto comma = inner.find(',');
    params.push_back(parse_size(inner.substr(0, comma), key));
    if (comma == std::string_view::npos) break;
    inner = inner.substr(comma + 1);
  }
  return true;
}

void require_min(std::size_t n, std::size_t min, std::string_view family) {
  if (n < min) {
    throw DomainError(std::string(family) + "(n) requires n >= " + std::to_string(min));
  }
}

}  // namespace

std::string CatalogEntry::text() const {
  return is_symmetric() ? print_sym_presentation(symmetric()) : print_glob_presentation(globular());
}

GlobPresentation strict_family(std::size_t n) {
  require_min(n, 1, "T");
  GlobPresentation p = skeleton("T(" + idx(n) + ")", n);
  for (std::size_t k = 1; k < n; ++k) {
    add_basic_generators(p, k);
    for (std::size_t l = 0; l < k; ++l) add_units(p, k, l);
    for (std::size_t l = 0; l < k; ++l) add_assoc(p, k, l);
    for (std::size_t l = 0; l < k; ++l) {
      for (std::size_t i = l + 1; i < k; ++i) add_interchange(p, k, l, i);
    }
  }
  return p;
}

GlobPresentation weak_interchange_family(std::size_t n) {
  require_min(n, 1, "H");
  GlobPresentation p = skeleton("H(" + idx(n) + ")", n);
  for (std::size_t k = 1; k < n; ++k) {
    add_basic_generators(p, k);
    for (std::size_t l = 0; k >= 2 && l + 2 <= k; ++l) {
      for (std::size_t i = l + 1; i + 2 <= k; ++i) {
        const std::string bl = comp_name(k - 1, l);
        const std::string bi = comp_name(k - 1, i);
        add_points(p, "s" + idx(k) + "_" + idx(l) + "_" + idx(i), k, app(bl, {gen(bi), gen(bi)}),
                   app(bi, {gen(bl), gen(bl)}));
      }
    }
    for (std::size_t l = 0; l < k; ++l) add_units(p, k, l);
    for (std::size_t l = 0; l < k; ++l) add_assoc(p, k, l);
    for (std::size_t l = 0; l + 2 <= k; ++l) add_unit_composite(p, k, l);
  }
  return p;
}

GlobPresentation weak_units_family(std::size_t n) {
  require_min(n, 2, "E");
  GlobPresentation p = skeleton("E(" + idx(n) + ")", n);
  for (std::size_t k = 1; k < n; ++k) {
    add_basic_generators(p, k);
    for (std::size_t l = 0; l + 2 <= k; ++l) add_unitors(p, k, l);
    if (k == n - 1) add_units(p, k, k - 1);
    for (std::size_t l = 0; l < k; ++l) add_assoc(p, k, l);
    for (std::size_t l = 0; l < k; ++l) {
      for (std::size_t i = l + 1; i < k; ++i) add_interchange(p, k, l, i);
    }
    for (std::size_t l = 0; l + 2 <= k; ++l) add_unit_composite(p, k, l);
  }
  return p;
}

GlobPresentation weak_family(std::size_t n, std::size_t points) {
  require_min(n, 1, "W");
  GlobPresentation p = skeleton("W(" + idx(n) + "," + idx(points) + ")", n);
  for (std::size_t k = 1; k < n; ++k) {
    add_basic_generators(p, k);
    for (std::size_t j = 1; j <= points; ++j) {
      p.generators.push_back(
          {"p" + idx(k) + "_" + idx(j), k, atom(k - 1, k), std::nullopt, std::nullopt});
    }
  }
  return p;
}

namespace {

// Exact weak presentation through dimension 3.
GlobPresentation weak_exact(std::size_t n) {
  require_min(n, 1, "W");
  if (n > 3) {
    throw DomainError("W(n) is only known for n <= 3; use W(n,p) for a presentation with p "
                      "coherence points per dimension");
  }
  GlobPresentation p = skeleton("W(" + idx(n) + ")", n);
  for (std::size_t k = 1; k < n; ++k) {
    add_basic_generators(p, k);
    for (std::size_t l = 0; l + 2 <= k; ++l) {
      add_unitors(p, k, l);
      const GTerm id = GTerm::identity(k - 1);
      const std::string b = comp_name(k - 1, l);
      add_points(p, "a" + idx(k) + "_" + idx(l), k, app(b, {id, gen(b)}), app(b, {gen(b), id}));
    }
  }
  return p;
}

}  // namespace

CatalogEntry catalog_get(std::string_view key) {
  for (const auto& f : kFixed) {
    if (f.key != key) continue;
    CatalogEntry e;
    e.key = std::string(key);
    e.provenance = std::string(f.provenance);
    if (f.symmetric) {
      e.presentation = parse_sym_presentation(f.text);
    } else {
      e.presentation = parse_glob_presentation(f.text);
    }
    return e;
  }
  std::string family;
  std::vector<std::size_t> params;
  if (!parse_family(key, family, params)) {
    throw NotFoundError("unknown catalog key '" + std::string(key) + "'");
  }
  CatalogEntry e;
  e.key = std::string(key);
  if (family == "T" && params.size() == 1) {
    e.presentation = strict_family(params[0]);
    e.provenance = "strict n-categories: units, associativity and interchange in each dimension";
  } else if (family == "H" && params.size() == 1) {
    e.presentation = weak_interchange_family(params[0]);
    e.provenance = "n-categories with weak interchange laws";
  } else if (family == "E" && params.size() == 1) {
    e.presentation = weak_units_family(params[0]);
    e.provenance = "n-categories with weak units in low dimensions";
  } else if (family == "W" && params.size() == 1) {
    e.presentation = weak_exact(params[0]);
    e.provenance = "fully weak n-categories, free composites with coherence points";
  } else if (family == "W" && params.size() == 2) {
    e.presentation = weak_family(params[0], params[1]);
    e.provenance = "fully weak n-categories with a chosen number of coherence points";
  } else {
    throw NotFoundError("unknown catalog key '" + std::string(key) + "'");
  }
  return e;
}

std::vector<std::string> catalog_list() {
  std::vector<std::string> out;
  for (const auto& f : kFixed) out.emplace_back(f.key);
  for (const char* k : {"T(4)", "H(5)", "E(4)", "W(3)", "W(5,2)"}) out.emplace_back(k);
  return out;
}

}  // namespace opslicer
