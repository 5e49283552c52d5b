// SPDX-License-Identifier: Apache-2.0
#ifndef OPSLICER_SYMOP_HPP
#define OPSLICER_SYMOP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opslicer/perm.hpp"

namespace opslicer {

// Element of a free plain operad: a planar tree of generators whose open
// leaves are inputs, numbered left to right.
class PlainTerm {
 public:
  static PlainTerm input();
  static PlainTerm apply(std::string gen, std::vector<PlainTerm> children);
  // gen applied to `arity` inputs.
  static PlainTerm generator(std::string gen, std::size_t arity);

  bool is_input() const { return input_; }
  const std::string& gen() const { return gen_; }
  const std::vector<PlainTerm>& children() const { return children_; }

  // Number of input leaves.
  std::size_t arity() const;
  // Number of generator nodes.
  std::size_t node_count() const;
  // Canonical text: "_" for an input, a bare name when every child is an input.
  std::string to_string() const;

  friend bool operator==(const PlainTerm& a, const PlainTerm& b) {
    return a.input_ == b.input_ && a.gen_ == b.gen_ && a.children_ == b.children_;
  }
  friend bool operator!=(const PlainTerm& a, const PlainTerm& b) { return !(a == b); }

 private:
  bool input_ = true;
  std::string gen_;
  std::vector<PlainTerm> children_;
};

// perm . tree in a free symmetric operad, with every twist pushed to the root.
struct SymElement {
  Perm perm;
  PlainTerm tree;

  SymElement() : perm(1), tree(PlainTerm::input()) {}
  // Throws DomainError when the degrees differ.
  SymElement(Perm p, PlainTerm t);
  // (0, t).
  static SymElement plain(PlainTerm t);

  std::size_t degree() const { return perm.degree(); }
  // "[cycles].term", with the prefix omitted for the identity.
  std::string to_string() const;

  friend bool operator==(const SymElement& a, const SymElement& b) {
    return a.perm == b.perm && a.tree == b.tree;
  }
  friend bool operator!=(const SymElement& a, const SymElement& b) { return !(a == b); }
};

struct SymGenerator {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const SymGenerator& a, const SymGenerator& b) {
    return a.name == b.name && a.arity == b.arity;
  }
};

struct SymRelation {
  std::string name;
  SymElement lhs;
  SymElement rhs;

  friend bool operator==(const SymRelation& a, const SymRelation& b) {
    return a.name == b.name && a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

struct SymPresentation {
  std::string name;
  std::vector<SymGenerator> generators;
  std::vector<SymRelation> relations;

  std::optional<std::size_t> arity_of(std::string_view gen) const;
  // Throws DomainError on unknown generators, arity errors or degree mismatches.
  void check() const;
  void check_element(const SymElement& e) const;

  friend bool operator==(const SymPresentation& a, const SymPresentation& b) {
    return a.name == b.name && a.generators == b.generators && a.relations == b.relations;
  }
};

// Grafts args[i] onto the i-th input of rho.
PlainTerm plain_compose(const PlainTerm& rho, const std::vector<PlainTerm>& args);

// Operadic composition in the free symmetric operad, returned in canonical form.
SymElement sym_compose(const SymElement& e, const std::vector<SymElement>& args);

// Left action: act(t, (p, rho)) = (t * p, rho).
SymElement act(const Perm& t, const SymElement& e);

// True when every relation has identity permutations on both sides. This is
// sufficient for plainness, not necessary.
bool check_plain(const SymPresentation& p);

// Parses a term such as "b(i,_)" against the generator arities of p.
PlainTerm parse_plain_term(std::string_view text, const SymPresentation& p);
// Parses "[cycles].term" or a bare term.
SymElement parse_sym_element(std::string_view text, const SymPresentation& p);

// Text format: "presentation NAME symmetric", "symgen NAME : arity M" and
// "symrel NAME : ELT = ELT" lines; '#' starts a comment.
SymPresentation parse_sym_presentation(std::string_view text);
std::string print_sym_presentation(const SymPresentation& p);

}  // namespace opslicer

#endif  // OPSLICER_SYMOP_HPP
