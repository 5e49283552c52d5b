// SPDX-License-Identifier: Apache-2.0
#include "opslicer/symop.hpp"

#include <set>
#include <utility>

#include "cursor.hpp"
#include "opslicer/error.hpp"

namespace opslicer {

namespace {

void graft(const PlainTerm& rho, const std::vector<PlainTerm>& args, std::size_t& next,
           PlainTerm& out) {
  if (rho.is_input()) {
    out = args[next++];
    return;
  }
  std::vector<PlainTerm> kids;
  kids.reserve(rho.children().size());
  for (const auto& c : rho.children()) {
    PlainTerm k;
    graft(c, args, next, k);
    kids.push_back(std::move(k));
  }
  out = PlainTerm::apply(rho.gen(), std::move(kids));
}

void print_term(const PlainTerm& t, std::string& out) {
  if (t.is_input()) {
    out += '_';
    return;
  }
  out += t.gen();
  bool bare = true;
  for (const auto& c : t.children()) bare = bare && c.is_input();
  if (bare) return;
  out += '(';
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i) out += ',';
    print_term(t.children()[i], out);
  }
  out += ')';
}

PlainTerm parse_term(detail::Cursor& c, const SymPresentation& p) {
  c.skip_ws();
  const std::size_t at = c.pos();
  const std::string name = c.ident();
  if (name == "_") return PlainTerm::input();
  const auto arity = p.arity_of(name);
  if (!arity) throw ParseError("unknown generator '" + name + "'", c.line(), at + 1);
  if (c.peek_raw() != '(') return PlainTerm::generator(name, *arity);
  c.expect('(');
  std::vector<PlainTerm> kids;
  if (!c.consume(')')) {
    while (true) {
      kids.push_back(parse_term(c, p));
      if (c.consume(',')) continue;
      c.expect(')');
      break;
    }
  }
  if (kids.size() != *arity) {
    c.fail("generator '" + name + "' has arity " + std::to_string(*arity) + " but " +
           std::to_string(kids.size()) + " arguments were given");
  }
  return PlainTerm::apply(name, std::move(kids));
}

SymElement parse_element(detail::Cursor& c, const SymPresentation& p) {
  std::optional<std::string> perm_text;
  std::size_t perm_pos = 0;
  const char first = c.peek();
  if (first == '(') {
    perm_pos = c.pos();
    const std::string_view rest = c.rest();
    const auto dot = rest.find('.');
    if (dot == std::string_view::npos) c.fail("expected '.' after the permutation");
    perm_text = std::string(rest.substr(0, dot));
    c.advance(dot + 1);
  } else if (first == '0') {
    perm_pos = c.pos();
    c.number();
    c.expect('.');
    perm_text = "0";
  }
  PlainTerm tree = parse_term(c, p);
  const std::size_t n = tree.arity();
  if (!perm_text) return SymElement::plain(std::move(tree));
  try {
    return SymElement(Perm::parse(*perm_text, n), std::move(tree));
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), c.line(), perm_pos + e.column());
  }
}

}  // namespace

PlainTerm PlainTerm::input() { return PlainTerm(); }

PlainTerm PlainTerm::apply(std::string gen, std::vector<PlainTerm> children) {
  PlainTerm t;
  t.input_ = false;
  t.gen_ = std::move(gen);
  t.children_ = std::move(children);
  return t;
}

PlainTerm PlainTerm::generator(std::string gen, std::size_t arity) {
  return apply(std::move(gen), std::vector<PlainTerm>(arity, input()));
}

std::size_t PlainTerm::arity() const {
  if (input_) return 1;
  std::size_t n = 0;
  for (const auto& c : children_) n += c.arity();
  return n;
}

std::size_t PlainTerm::node_count() const {
  if (input_) return 0;
  std::size_t n = 1;
  for (const auto& c : children_) n += c.node_count();
  return n;
}

std::string PlainTerm::to_string() const {
  std::string out;
  print_term(*this, out);
  return out;
}

SymElement::SymElement(Perm p, PlainTerm t) : perm(std::move(p)), tree(std::move(t)) {
  if (perm.degree() != tree.arity()) {
    throw DomainError("permutation of degree " + std::to_string(perm.degree()) +
                      " on a tree of arity " + std::to_string(tree.arity()));
  }
}

SymElement SymElement::plain(PlainTerm t) {
  const std::size_t n = t.arity();
  return SymElement(Perm(n), std::move(t));
}

std::string SymElement::to_string() const {
  if (perm.is_identity()) return tree.to_string();
  return perm.to_string() + "." + tree.to_string();
}

std::optional<std::size_t> SymPresentation::arity_of(std::string_view gen) const {
  for (const auto& g : generators) {
    if (g.name == gen) return g.arity;
  }
  return std::nullopt;
}

namespace {

void check_tree(const PlainTerm& t, const SymPresentation& p) {
  if (t.is_input()) return;
  const auto arity = p.arity_of(t.gen());
  if (!arity) throw DomainError("unknown generator '" + t.gen() + "'");
  if (*arity != t.children().size()) {
    throw DomainError("generator '" + t.gen() + "' applied to " +
                      std::to_string(t.children().size()) + " arguments, arity is " +
                      std::to_string(*arity));
  }
  for (const auto& c : t.children()) check_tree(c, p);
}

}  // namespace

void SymPresentation::check_element(const SymElement& e) const {
  check_tree(e.tree, *this);
  if (e.perm.degree() != e.tree.arity()) throw DomainError("element degree mismatch");
}

void SymPresentation::check() const {
  std::set<std::string> names;
  for (const auto& g : generators) {
    if (!names.insert(g.name).second) throw DomainError("duplicate generator '" + g.name + "'");
  }
  std::set<std::string> rel_names;
  for (const auto& r : relations) {
    if (!rel_names.insert(r.name).second) throw DomainError("duplicate relation '" + r.name + "'");
    try {
      check_element(r.lhs);
      check_element(r.rhs);
    } catch (const DomainError& e) {
      throw DomainError("relation '" + r.name + "': " + e.what());
    }
    if (r.lhs.degree() != r.rhs.degree()) {
      throw DomainError("relation '" + r.name + "': sides have degrees " +
                        std::to_string(r.lhs.degree()) + " and " +
                        std::to_string(r.rhs.degree()));
    }
  }
}

PlainTerm plain_compose(const PlainTerm& rho, const std::vector<PlainTerm>& args) {
  if (args.size() != rho.arity()) {
    throw DomainError("plain_compose: " + std::to_string(args.size()) + " arguments for arity " +
                      std::to_string(rho.arity()));
  }
  std::size_t next = 0;
  PlainTerm out;
  graft(rho, args, next, out);
  return out;
}

SymElement sym_compose(const SymElement& e, const std::vector<SymElement>& args) {
  const std::size_t m = e.tree.arity();
  if (args.size() != m) {
    throw DomainError("sym_compose: " + std::to_string(args.size()) + " arguments for arity " +
                      std::to_string(m));
  }
  const Perm inv = e.perm.inverse();
  std::vector<PlainTerm> trees;
  std::vector<Perm> twists;
  std::vector<std::size_t> sizes;
  trees.reserve(m);
  twists.reserve(m);
  sizes.reserve(m);
  for (std::size_t i = 0; i < m; ++i) sizes.push_back(args[i].degree());
  for (std::size_t j = 0; j < m; ++j) {
    const auto& a = args[inv(j)];
    trees.push_back(a.tree);
    twists.push_back(a.perm);
  }
  Perm perm = block_perm(e.perm, sizes) * direct_sum(twists);
  return SymElement(std::move(perm), plain_compose(e.tree, trees));
}

SymElement act(const Perm& t, const SymElement& e) {
  if (t.degree() != e.degree()) throw DomainError("act: degree mismatch");
  return SymElement(t * e.perm, e.tree);
}

bool check_plain(const SymPresentation& p) {
  for (const auto& r : p.relations) {
    if (!r.lhs.perm.is_identity() || !r.rhs.perm.is_identity()) return false;
  }
  return true;
}

PlainTerm parse_plain_term(std::string_view text, const SymPresentation& p) {
  detail::Cursor c(text, 1);
  PlainTerm t = parse_term(c, p);
  c.expect_end();
  return t;
}

SymElement parse_sym_element(std::string_view text, const SymPresentation& p) {
  detail::Cursor c(text, 1);
  SymElement e = parse_element(c, p);
  c.expect_end();
  return e;
}

SymPresentation parse_sym_presentation(std::string_view text) {
  SymPresentation p;
  bool have_header = false;
  detail::for_each_line(text, [&](std::string_view raw, std::size_t line) {
    detail::Cursor c(detail::strip_comment(raw), line);
    if (c.at_end()) return;
    const std::string word = c.ident();
    if (!have_header) {
      if (word != "presentation") c.fail("expected 'presentation NAME symmetric' header");
      p.name = c.raw_token();
      c.keyword("symmetric");
      c.expect_end();
      have_header = true;
      return;
    }
    if (word == "symgen") {
      SymGenerator g;
      g.name = c.ident();
      if (g.name == "_") c.fail("'_' is reserved for inputs");
      c.expect(':');
      c.keyword("arity");
      g.arity = c.number();
      c.expect_end();
      if (p.arity_of(g.name)) c.fail("duplicate generator '" + g.name + "'");
      p.generators.push_back(std::move(g));
    } else if (word == "symrel") {
      SymRelation r;
      r.name = c.raw_token();
      c.expect(':');
      r.lhs = parse_element(c, p);
      c.expect('=');
      r.rhs = parse_element(c, p);
      c.expect_end();
      if (r.lhs.degree() != r.rhs.degree()) {
        throw ParseError("relation '" + r.name + "': sides have different degrees", line, 1);
      }
      for (const auto& other : p.relations) {
        if (other.name == r.name) throw ParseError("duplicate relation '" + r.name + "'", line, 1);
      }
      p.relations.push_back(std::move(r));
    } else {
      throw ParseError("unknown declaration '" + word + "'", line, 1);
    }
  });
  if (!have_header) throw ParseError("missing 'presentation NAME symmetric' header", 1, 1);
  return p;
}

std::string print_sym_presentation(const SymPresentation& p) {
  std::string out = "presentation " + p.name + " symmetric\n";
  for (const auto& g : p.generators) {
    out += "symgen " + g.name + " : arity " + std::to_string(g.arity) + "\n";
  }
  for (const auto& r : p.relations) {
    out += "symrel " + r.name + " : " + r.lhs.to_string() + " = " + r.rhs.to_string() + "\n";
  }
  return out;
}

}  // namespace opslicer
