// SPDX-License-Identifier: Apache-2.0
#include "opslicer/globop.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "cursor.hpp"
#include "opslicer/error.hpp"

namespace opslicer {

namespace {

// Matches "id" followed by digits; returns the digits' value.
std::optional<std::size_t> identity_index(std::string_view name) {
  if (name.size() < 3 || name.substr(0, 2) != "id") return std::nullopt;
  std::size_t v = 0;
  for (char c : name.substr(2)) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

bool reserved_name(std::string_view name) {
  return name == "_" || name == "id" || identity_index(name).has_value();
}

void print_term(const GTerm& t, std::string& out) {
  switch (t.kind()) {
    case GTerm::Kind::kIdentity:
      out += "id" + std::to_string(t.identity_dim());
      return;
    case GTerm::Kind::kGenerator:
      out += t.name();
      return;
    case GTerm::Kind::kComposite:
      print_term(t.head(), out);
      out += '(';
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ',';
        print_term(t.args()[i], out);
      }
      out += ')';
      return;
  }
}

GTerm parse_term(detail::Cursor& c) {
  const std::string word = c.ident();
  GTerm t;
  if (auto d = identity_index(word)) {
    t = GTerm::identity(*d);
  } else if (word == "_") {
    c.fail("'_' is not a globular term");
  } else {
    t = GTerm::generator(word);
  }
  while (c.peek_raw() == '(') {
    c.expect('(');
    std::vector<GTerm> args;
    if (!c.consume(')')) {
      while (true) {
        args.push_back(parse_term(c));
        if (c.consume(',')) continue;
        c.expect(')');
        break;
      }
    }
    t = GTerm::composite(std::move(t), std::move(args));
  }
  return t;
}

// Reads a pasting-diagram literal: a '.' or a balanced bracket expression.
std::string read_pd_literal(detail::Cursor& c) {
  c.skip_ws();
  std::string out;
  const std::string_view rest = c.rest();
  if (rest.empty()) c.fail("expected a pasting diagram literal");
  if (rest[0] == '.') {
    c.advance(1);
    return ".";
  }
  if (rest[0] != '[') c.fail("expected a pasting diagram literal");
  int depth = 0;
  std::size_t i = 0;
  for (; i < rest.size(); ++i) {
    const char ch = rest[i];
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (!detail::is_space(ch)) out += ch;
    if (depth == 0) break;
  }
  if (depth != 0) c.fail("unbalanced brackets in pasting diagram literal");
  c.advance(i + 1);
  return out;
}

// Throws DomainError unless t is a well-formed term; returns its shape.
PastingDiagram shape_checked(const GTerm& t, const GlobPresentation& p) {
  switch (t.kind()) {
    case GTerm::Kind::kIdentity:
      return atom(t.identity_dim(), t.identity_dim());
    case GTerm::Kind::kGenerator: {
      const GenDecl* g = p.find(t.name());
      if (!g) throw DomainError("undeclared generator '" + t.name() + "'");
      return g->shape;
    }
    case GTerm::Kind::kComposite:
      break;
  }
  const PastingDiagram head = shape_checked(t.head(), p);
  const auto leaves = leaf_cells(head);
  if (leaves.size() != t.args().size()) {
    throw DomainError("'" + t.head().to_string() + "' has " + std::to_string(leaves.size()) +
                      " cells but is applied to " + std::to_string(t.args().size()) +
                      " arguments");
  }
  std::vector<PastingDiagram> shapes;
  shapes.reserve(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    PastingDiagram s = shape_checked(t.args()[i], p);
    if (s.dim() != leaves[i].depth) {
      throw DomainError("argument " + std::to_string(i + 1) + " of '" + t.to_string() +
                        "' has dimension " + std::to_string(s.dim()) + " but its cell has dimension " +
                        std::to_string(leaves[i].depth));
    }
    shapes.push_back(std::move(s));
  }
  return substitute(head, shapes);
}

void check_generator(const GenDecl& g, const GlobPresentation& p, std::set<std::string>& seen,
                     ValidationItem& item) {
  auto fail = [&](const std::string& msg) {
    if (item.ok) {
      item.ok = false;
      item.message = msg;
    }
  };
  if (reserved_name(g.name)) fail("reserved name");
  if (!seen.insert(g.name).second) fail("duplicate generator name");
  if (g.dim < 1 || g.dim > p.max_dim) {
    fail("dimension " + std::to_string(g.dim) + " outside 1.." + std::to_string(p.max_dim));
  }
  if (g.shape.dim() != g.dim) fail("shape has dimension " + std::to_string(g.shape.dim()));
  if (g.src.has_value() != g.tgt.has_value()) fail("src and tgt must be given together");
  if (!item.ok || !g.src || g.dim == 0) return;
  const PastingDiagram expected = boundary(g.shape);
  for (const auto* side : {&*g.src, &*g.tgt}) {
    const char* label = side == &*g.src ? "src" : "tgt";
    try {
      const PastingDiagram s = shape_checked(*side, p);
      if (s.dim() != g.dim - 1) {
        fail(std::string(label) + " has dimension " + std::to_string(s.dim()));
      } else if (s != expected) {
        fail(std::string(label) + " shape " + s.to_string() + " differs from boundary " +
             expected.to_string());
      } else if (max_generator_dim(*side, p) >= g.dim) {
        fail(std::string(label) + " uses a generator of dimension >= " + std::to_string(g.dim));
      }
    } catch (const Error& e) {
      fail(std::string(label) + ": " + e.what());
    }
  }
}

void check_relation(const GlobRelation& r, const GlobPresentation& p, std::set<std::string>& seen,
                    ValidationItem& item) {
  auto fail = [&](const std::string& msg) {
    if (item.ok) {
      item.ok = false;
      item.message = msg;
    }
  };
  if (!seen.insert(r.name).second) fail("duplicate relation name");
  if (r.dim < 1 || r.dim > p.max_dim) {
    fail("dimension " + std::to_string(r.dim) + " outside 1.." + std::to_string(p.max_dim));
  }
  if (!item.ok) return;
  PastingDiagram shapes[2];
  const GTerm* sides[2] = {&r.lhs, &r.rhs};
  for (int i = 0; i < 2; ++i) {
    const char* label = i == 0 ? "lhs" : "rhs";
    try {
      shapes[i] = shape_checked(*sides[i], p);
      if (shapes[i].dim() != r.dim) {
        fail(std::string(label) + " has dimension " + std::to_string(shapes[i].dim()));
      } else if (max_generator_dim(*sides[i], p) > r.dim) {
        fail(std::string(label) + " uses a generator above dimension " + std::to_string(r.dim));
      }
    } catch (const Error& e) {
      fail(std::string(label) + ": " + e.what());
    }
  }
  if (item.ok && shapes[0] != shapes[1]) {
    fail("shape mismatch " + shapes[0].to_string() + " vs " + shapes[1].to_string());
  }
}

struct Layered {
  GTerm q;
  std::vector<GTerm> atoms;
};

GTerm layer(const GTerm& t, const GlobPresentation& p);

// Splits an argument into its outer part and its atoms.
Layered split_arg(const GTerm& arg, const GlobPresentation& p) {
  if (arg.is_atom()) {
    const std::size_t d = term_dim(arg, p);
    const GTerm id = GTerm::identity(d);
    const PastingDiagram s = shape_of(arg, p);
    if (d == 0 || boundary(s) == boundary(shape_of(id, p))) return {id, {arg}};
    // An atom whose boundary is not a single cell moves into the head.
    std::vector<GTerm> ids;
    for (const auto& leaf : leaf_cells(s)) ids.push_back(GTerm::identity(leaf.depth));
    return {arg, std::move(ids)};
  }
  GTerm l = layer(arg, p);
  if (l.is_atom()) return split_arg(l, p);
  if (l.head().is_identity() && l.args().size() == 1) return split_arg(l.args()[0], p);
  return {l.head(), l.args()};
}

// An argument left in the head, with identities for its atoms.
Layered keep_whole(const GTerm& arg, const GlobPresentation& p) {
  std::vector<GTerm> ids;
  for (const auto& leaf : leaf_cells(shape_of(arg, p))) ids.push_back(GTerm::identity(leaf.depth));
  return {arg, std::move(ids)};
}

GTerm layer(const GTerm& t, const GlobPresentation& p) {
  if (t.is_identity()) return t;
  if (t.is_generator()) return GTerm::composite(GTerm::identity(term_dim(t, p)), {t});
  const auto& args = t.args();
  if (t.head().is_identity() && args.size() == 1) return layer(args[0], p);
  const bool all_identity =
      std::all_of(args.begin(), args.end(), [](const GTerm& a) { return a.is_identity(); });
  if (all_identity) return layer(t.head(), p);
  const bool all_atoms =
      std::all_of(args.begin(), args.end(), [](const GTerm& a) { return a.is_atom(); });
  if (all_atoms) return t;
  std::vector<Layered> parts;
  parts.reserve(args.size());
  for (const auto& a : args) parts.push_back(split_arg(a, p));
  auto outer = [&] {
    std::vector<PastingDiagram> shapes;
    for (const auto& part : parts) shapes.push_back(shape_of(part.q, p));
    return substitute_traced(shape_of(t.head(), p), shapes);
  };
  Substitution sub;
  try {
    sub = outer();
  } catch (const BoundaryError&) {
    // Heads whose boundary differs from their argument's may not glue; keep those whole.
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (boundary(shape_of(parts[i].q, p)) != boundary(shape_of(args[i], p))) {
        parts[i] = keep_whole(args[i], p);
      }
    }
    sub = outer();
  }
  std::vector<GTerm> qs;
  for (const auto& part : parts) qs.push_back(part.q);
  std::vector<GTerm> atoms;
  atoms.reserve(sub.origins.size());
  for (const auto& origin : sub.origins) {
    const LeafOrigin& o = origin.front();
    atoms.push_back(parts[o.arg].atoms[o.leaf]);
  }
  return GTerm::composite(GTerm::composite(t.head(), std::move(qs)), std::move(atoms));
}

}  // namespace

GTerm GTerm::identity(std::size_t dim) {
  GTerm t;
  t.kind_ = Kind::kIdentity;
  t.dim_ = dim;
  return t;
}

GTerm GTerm::generator(std::string name) {
  GTerm t;
  t.kind_ = Kind::kGenerator;
  t.name_ = std::move(name);
  return t;
}

GTerm GTerm::composite(GTerm head, std::vector<GTerm> args) {
  GTerm t;
  t.kind_ = Kind::kComposite;
  t.head_ = std::make_shared<const GTerm>(std::move(head));
  t.args_ = std::move(args);
  return t;
}

std::string GTerm::to_string() const {
  std::string out;
  print_term(*this, out);
  return out;
}

bool operator==(const GTerm& a, const GTerm& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case GTerm::Kind::kIdentity:
      return a.dim_ == b.dim_;
    case GTerm::Kind::kGenerator:
      return a.name_ == b.name_;
    case GTerm::Kind::kComposite:
      return *a.head_ == *b.head_ && a.args_ == b.args_;
  }
  return false;
}

const GenDecl* GlobPresentation::find(std::string_view gen) const {
  for (const auto& g : generators) {
    if (g.name == gen) return &g;
  }
  return nullptr;
}

bool ValidationReport::ok() const {
  return std::all_of(items.begin(), items.end(), [](const ValidationItem& i) { return i.ok; });
}

std::string ValidationReport::to_string() const {
  std::string out;
  for (const auto& i : items) {
    out += (i.ok ? "ok " : "FAIL ") + i.kind + " " + i.name;
    if (!i.ok) out += ": " + i.message;
    out += "\n";
  }
  return out;
}

std::size_t term_dim(const GTerm& t, const GlobPresentation& p) {
  switch (t.kind()) {
    case GTerm::Kind::kIdentity:
      return t.identity_dim();
    case GTerm::Kind::kGenerator: {
      const GenDecl* g = p.find(t.name());
      if (!g) throw DomainError("undeclared generator '" + t.name() + "'");
      return g->dim;
    }
    case GTerm::Kind::kComposite:
      return term_dim(t.head(), p);
  }
  return 0;
}

PastingDiagram shape_of(const GTerm& t, const GlobPresentation& p) { return shape_checked(t, p); }

std::size_t max_generator_dim(const GTerm& t, const GlobPresentation& p) {
  switch (t.kind()) {
    case GTerm::Kind::kIdentity:
      return 0;
    case GTerm::Kind::kGenerator:
      return term_dim(t, p);
    case GTerm::Kind::kComposite: {
      std::size_t m = max_generator_dim(t.head(), p);
      for (const auto& a : t.args()) m = std::max(m, max_generator_dim(a, p));
      return m;
    }
  }
  return 0;
}

ValidationReport validate(const GlobPresentation& p) {
  ValidationReport report;
  std::set<std::string> gen_names;
  for (const auto& g : p.generators) {
    ValidationItem item{"generator", g.name, true, ""};
    check_generator(g, p, gen_names, item);
    report.items.push_back(std::move(item));
  }
  std::set<std::string> rel_names;
  for (const auto& r : p.relations) {
    ValidationItem item{"relation", r.name, true, ""};
    check_relation(r, p, rel_names, item);
    report.items.push_back(std::move(item));
  }
  return report;
}

GlobPresentation truncate(const GlobPresentation& p, std::size_t k) {
  if (k > p.max_dim) {
    throw DomainError("truncate: dimension " + std::to_string(k) + " exceeds " +
                      std::to_string(p.max_dim));
  }
  GlobPresentation out;
  out.name = p.name + "/" + std::to_string(k);
  out.max_dim = k;
  out.contractible = false;
  for (const auto& g : p.generators) {
    if (g.dim <= k) out.generators.push_back(g);
  }
  for (const auto& r : p.relations) {
    if (r.dim + 1 <= k) out.relations.push_back(r);
  }
  return out;
}

GTerm layered_form(const GTerm& t, const GlobPresentation& p) {
  shape_checked(t, p);
  return layer(t, p);
}

bool is_layered(const GTerm& t) {
  if (t.is_atom()) return true;
  return std::all_of(t.args().begin(), t.args().end(),
                     [](const GTerm& a) { return a.is_atom(); });
}

GTerm parse_gterm(std::string_view text) {
  detail::Cursor c(text, 1);
  GTerm t = parse_term(c);
  c.expect_end();
  return t;
}

GlobPresentation parse_glob_presentation(std::string_view text) {
  GlobPresentation p;
  bool have_header = false;
  detail::for_each_line(text, [&](std::string_view raw, std::size_t line) {
    detail::Cursor c(detail::strip_comment(raw), line);
    if (c.at_end()) return;
    const std::string word = c.ident();
    if (!have_header) {
      if (word != "presentation") c.fail("expected 'presentation NAME dim N' header");
      p.name = c.raw_token();
      c.keyword("dim");
      p.max_dim = c.number();
      c.expect_end();
      have_header = true;
      return;
    }
    if (word == "contractible") {
      const std::string value = c.ident();
      if (value != "true" && value != "false") c.fail("expected 'true' or 'false'");
      p.contractible = value == "true";
      c.expect_end();
    } else if (word == "gen") {
      GenDecl g;
      c.skip_ws();
      const std::size_t name_pos = c.pos();
      g.name = c.ident();
      if (reserved_name(g.name)) {
        throw ParseError("generator name '" + g.name + "' is reserved", line, name_pos + 1);
      }
      if (p.find(g.name)) {
        throw ParseError("duplicate generator '" + g.name + "'", line, name_pos + 1);
      }
      c.expect(':');
      c.keyword("dim");
      g.dim = c.number();
      c.keyword("shape");
      c.skip_ws();
      const std::size_t shape_pos = c.pos();
      const std::string lit = read_pd_literal(c);
      try {
        g.shape = PastingDiagram::parse(lit, g.dim);
      } catch (const ParseError& e) {
        throw ParseError("generator '" + g.name + "': " + e.detail(), line,
                         shape_pos + e.column());
      } catch (const DomainError& e) {
        throw ParseError("generator '" + g.name + "': " + e.what(), line, shape_pos + 1);
      }
      if (!c.at_end()) {
        c.keyword("src");
        g.src = parse_term(c);
        c.keyword("tgt");
        g.tgt = parse_term(c);
      }
      c.expect_end();
      p.generators.push_back(std::move(g));
    } else if (word == "rel") {
      GlobRelation r;
      r.name = c.raw_token();
      c.expect(':');
      c.keyword("dim");
      r.dim = c.number();
      c.expect(':');
      r.lhs = parse_term(c);
      c.expect('=');
      r.rhs = parse_term(c);
      c.expect_end();
      for (const auto& other : p.relations) {
        if (other.name == r.name) throw ParseError("duplicate relation '" + r.name + "'", line, 1);
      }
      p.relations.push_back(std::move(r));
    } else {
      throw ParseError("unknown declaration '" + word + "'", line, 1);
    }
  });
  if (!have_header) throw ParseError("missing 'presentation NAME dim N' header", 1, 1);
  return p;
}

std::string print_glob_presentation(const GlobPresentation& p) {
  std::string out = "presentation " + p.name + " dim " + std::to_string(p.max_dim) + "\n";
  out += std::string("contractible ") + (p.contractible ? "true" : "false") + "\n";
  std::size_t top = p.max_dim;
  for (const auto& g : p.generators) top = std::max(top, g.dim);
  for (const auto& r : p.relations) top = std::max(top, r.dim);
  for (std::size_t k = 0; k <= top; ++k) {
    for (const auto& g : p.generators) {
      if (g.dim != k) continue;
      out += "gen " + g.name + " : dim " + std::to_string(g.dim) + " shape " + g.shape.to_string();
      if (g.src) out += " src " + g.src->to_string() + " tgt " + g.tgt->to_string();
      out += "\n";
    }
    for (const auto& r : p.relations) {
      if (r.dim != k) continue;
      out += "rel " + r.name + " : dim " + std::to_string(r.dim) + " : " + r.lhs.to_string() +
             " = " + r.rhs.to_string() + "\n";
    }
  }
  return out;
}

}  // namespace opslicer
