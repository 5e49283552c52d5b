// SPDX-License-Identifier: Apache-2.0
#ifndef OPSLICER_GLOBOP_HPP
#define OPSLICER_GLOBOP_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opslicer/pasting.hpp"

namespace opslicer {

// A formal expression for a cell of a presented globular operad.
class GTerm {
 public:
  enum class Kind { kIdentity, kGenerator, kComposite };

  static GTerm identity(std::size_t dim);
  static GTerm generator(std::string name);
  // Arguments are matched to the leaf cells of the head's shape in standard order.
  static GTerm composite(GTerm head, std::vector<GTerm> args);

  Kind kind() const { return kind_; }
  bool is_identity() const { return kind_ == Kind::kIdentity; }
  bool is_generator() const { return kind_ == Kind::kGenerator; }
  bool is_composite() const { return kind_ == Kind::kComposite; }
  // True for identities and generators.
  bool is_atom() const { return kind_ != Kind::kComposite; }

  std::size_t identity_dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const GTerm& head() const { return *head_; }
  const std::vector<GTerm>& args() const { return args_; }

  // Canonical text, e.g. "h2(v2,i2(i1))" or "h2(v2,i2)(id2,id2,h1)".
  std::string to_string() const;

  friend bool operator==(const GTerm& a, const GTerm& b);
  friend bool operator!=(const GTerm& a, const GTerm& b) { return !(a == b); }

 private:
  Kind kind_ = Kind::kIdentity;
  std::size_t dim_ = 0;
  std::string name_;
  std::shared_ptr<const GTerm> head_;
  std::vector<GTerm> args_;
};

struct GenDecl {
  std::string name;
  std::size_t dim = 0;
  PastingDiagram shape;
  std::optional<GTerm> src;
  std::optional<GTerm> tgt;

  friend bool operator==(const GenDecl& a, const GenDecl& b) {
    return a.name == b.name && a.dim == b.dim && a.shape == b.shape && a.src == b.src &&
           a.tgt == b.tgt;
  }
};

struct GlobRelation {
  std::string name;
  std::size_t dim = 0;
  GTerm lhs;
  GTerm rhs;

  friend bool operator==(const GlobRelation& a, const GlobRelation& b) {
    return a.name == b.name && a.dim == b.dim && a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

struct GlobPresentation {
  std::string name;
  std::size_t max_dim = 0;
  // Recorded, never verified.
  bool contractible = false;
  std::vector<GenDecl> generators;
  std::vector<GlobRelation> relations;

  const GenDecl* find(std::string_view gen) const;

  friend bool operator==(const GlobPresentation& a, const GlobPresentation& b) {
    return a.name == b.name && a.max_dim == b.max_dim && a.contractible == b.contractible &&
           a.generators == b.generators && a.relations == b.relations;
  }
};

struct ValidationItem {
  std::string kind;  // "presentation", "generator" or "relation"
  std::string name;
  bool ok = true;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationItem> items;
  bool ok() const;
  // One "ok KIND NAME" or "FAIL KIND NAME: MESSAGE" line per item.
  std::string to_string() const;
};

// Dimension of a term; throws DomainError for undeclared generators.
std::size_t term_dim(const GTerm& t, const GlobPresentation& p);

// Pasting-diagram shape of a well-formed term. Throws DomainError or
// BoundaryError for ill-formed terms.
PastingDiagram shape_of(const GTerm& t, const GlobPresentation& p);

// Largest generator dimension used by a term.
std::size_t max_generator_dim(const GTerm& t, const GlobPresentation& p);

ValidationReport validate(const GlobPresentation& p);

// Generators of dim <= k and relations of dim <= k - 1, viewed at dimension k.
GlobPresentation truncate(const GlobPresentation& p, std::size_t k);

// An equal term Q(L1,...,Lm) whose arguments are identities or generators,
// obtained with the operad unit and associativity laws only.
GTerm layered_form(const GTerm& t, const GlobPresentation& p);

// True for identities, bare generators and composites whose arguments are atoms.
bool is_layered(const GTerm& t);

// Parses a term such as "h2(v2,i2(i1))". Identifiers id0, id1, ... denote identities.
GTerm parse_gterm(std::string_view text);

// DSL with "presentation NAME dim N", "contractible true|false",
// "gen NAME : dim K shape PD [src TERM tgt TERM]" and
// "rel NAME : dim K : TERM = TERM" lines; '#' starts a comment.
GlobPresentation parse_glob_presentation(std::string_view text);
// Canonical text: header, contractible flag, then per dimension the
// generators followed by the relations.
std::string print_glob_presentation(const GlobPresentation& p);

}  // namespace opslicer

#endif  // OPSLICER_GLOBOP_HPP
