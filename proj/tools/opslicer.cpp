// SPDX-License-Identifier: Apache-2.0
// Command-line front end over the C API.
#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "opslicer/opslicer.h"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct StringDeleter {
  void operator()(char* s) const { os_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct PresentationDeleter {
  void operator()(os_presentation* p) const { os_presentation_free(p); }
};
using Handle = std::unique_ptr<os_presentation, PresentationDeleter>;

struct Failure {
  int code;
};

void check(os_status s) {
  if (s == OS_OK) return;
  std::fprintf(stderr, "error: %s\n", os_last_error());
  throw Failure{kInputError};
}

void emit(char* text) {
  OwnedString owned(text);
  std::fputs(owned.get(), stdout);
}

Handle load(const std::string& source) {
  os_presentation* p = nullptr;
  check(os_presentation_load(source.c_str(), &p));
  return Handle(p);
}

// Loads a presentation and slices it when a dimension is given.
Handle load_sliced(const std::string& source, const std::optional<std::size_t>& dim) {
  Handle p = load(source);
  if (!dim) return p;
  os_presentation* s = nullptr;
  check(os_slice(p.get(), *dim, &s));
  return Handle(s);
}

os_budget budget(const std::optional<std::size_t>& nodes, const std::optional<std::size_t>& depth) {
  os_budget b{};
  check(os_default_budget(&b));
  if (nodes) b.max_tree_nodes = *nodes;
  if (depth) b.max_rewrite_depth = *depth;
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slices of globular operad presentations and their word problems", "opslicer"};
  app.require_subcommand(1);
  bool json = false;

  std::string file;
  std::optional<std::size_t> dim;
  std::optional<std::size_t> nodes;
  std::optional<std::size_t> depth;
  std::size_t arity = 0;
  std::string lhs;
  std::string rhs;
  std::string term;
  std::vector<std::string> lemmas;
  std::string key;

  auto with_json = [&](CLI::App* cmd) { cmd->add_flag("--json", json, "Machine-readable output"); };
  auto with_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "DSL file or catalog:KEY")->required();
    with_json(cmd);
  };

  auto* validate = app.add_subcommand("validate", "Check every declaration");
  with_file(validate);

  auto* slice = app.add_subcommand("slice", "Print the k-th slice");
  with_file(slice);
  slice->add_option("--dim", dim, "Slice dimension")->required();

  auto* classes = app.add_subcommand("classes", "Bounded equivalence classes at one arity");
  with_file(classes);
  classes->add_option("--arity", arity, "Arity")->required();
  classes->add_option("--max-nodes", nodes, "Tree node bound");
  classes->add_option("--dim", dim, "Slice a globular input first");

  auto* prove = app.add_subcommand("prove", "Search for a rewrite proof of LHS = RHS");
  with_file(prove);
  prove->add_option("--lhs", lhs, "Left term")->required();
  prove->add_option("--rhs", rhs, "Right term")->required();
  prove->add_option("--depth", depth, "Rewrite depth bound per search");
  prove->add_option("--max-nodes", nodes, "Tree node bound");
  prove->add_option("--lemma", lemmas, "LHS=RHS proved first and then reused");
  prove->add_option("--dim", dim, "Slice a globular input first");

  auto* enumerate = app.add_subcommand("enumerate", "List bounded elements at one arity");
  with_file(enumerate);
  enumerate->add_option("--arity", arity, "Arity")->required();
  enumerate->add_option("--max-nodes", nodes, "Tree node bound");
  enumerate->add_option("--dim", dim, "Slice a globular input first");

  auto* plain = app.add_subcommand("check-plain", "Check that no relation carries a twist");
  with_file(plain);
  plain->add_option("--dim", dim, "Slice a globular input first");

  auto* catalog = app.add_subcommand("catalog", "Built-in presentations");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List keys");
  with_json(list);
  auto* show = catalog->add_subcommand("show", "Show an entry with its provenance");
  show->add_option("key", key, "Catalog key")->required();
  with_json(show);
  auto* exp = catalog->add_subcommand("export", "Print the DSL text of an entry");
  exp->add_option("key", key, "Catalog key")->required();
  with_json(exp);

  auto* shape = app.add_subcommand("shape", "Pasting-diagram shape of a term");
  with_file(shape);
  shape->add_option("--term", term, "Term")->required();

  auto* twist = app.add_subcommand("twist", "Twist permutation of a term");
  with_file(twist);
  twist->add_option("--dim", dim, "Dimension k")->required();
  twist->add_option("--term", term, "Term")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  const int j = json ? 1 : 0;
  try {
    char* out = nullptr;
    if (validate->parsed()) {
      Handle p = load(file);
      int ok = 0;
      check(os_validate(p.get(), j, &ok, &out));
      emit(out);
      return ok ? kOk : kNegative;
    }
    if (slice->parsed()) {
      Handle p = load_sliced(file, dim);
      check(os_presentation_print(p.get(), j, &out));
      emit(out);
      return kOk;
    }
    if (classes->parsed()) {
      Handle p = load_sliced(file, dim);
      const os_budget b = budget(nodes, std::nullopt);
      check(os_classes(p.get(), arity, &b, j, &out));
      emit(out);
      return kOk;
    }
    if (enumerate->parsed()) {
      Handle p = load_sliced(file, dim);
      const os_budget b = budget(nodes, std::nullopt);
      check(os_enumerate(p.get(), arity, &b, j, &out));
      emit(out);
      return kOk;
    }
    if (prove->parsed()) {
      Handle p = load_sliced(file, dim);
      const os_budget b = budget(nodes, depth);
      std::vector<std::string> ls;
      std::vector<std::string> rs;
      for (const auto& l : lemmas) {
        const auto eq = l.find('=');
        if (eq == std::string::npos) {
          std::fprintf(stderr, "error: lemma '%s' is not of the form LHS=RHS\n", l.c_str());
          return kInputError;
        }
        ls.push_back(l.substr(0, eq));
        rs.push_back(l.substr(eq + 1));
      }
      std::vector<const char*> lp;
      std::vector<const char*> rp;
      for (std::size_t i = 0; i < ls.size(); ++i) {
        lp.push_back(ls[i].c_str());
        rp.push_back(rs[i].c_str());
      }
      int found = 0;
      check(os_prove(p.get(), lhs.c_str(), rhs.c_str(), lp.data(), rp.data(), lp.size(), &b, j,
                     &found, &out));
      emit(out);
      return found ? kOk : kNegative;
    }
    if (plain->parsed()) {
      Handle p = load_sliced(file, dim);
      int is_plain = 0;
      check(os_check_plain(p.get(), &is_plain));
      if (json) {
        std::printf("{\n  \"plain\": %s\n}\n", is_plain ? "true" : "false");
      } else {
        std::printf("%s\n", is_plain ? "plain" : "not plain");
      }
      return is_plain ? kOk : kNegative;
    }
    if (list->parsed()) {
      check(os_catalog_list(j, &out));
      emit(out);
      return kOk;
    }
    if (show->parsed()) {
      check(os_catalog_show(key.c_str(), j, &out));
      emit(out);
      return kOk;
    }
    if (exp->parsed()) {
      if (json) {
        Handle p = load("catalog:" + key);
        check(os_presentation_print(p.get(), 1, &out));
      } else {
        check(os_catalog_export(key.c_str(), &out));
      }
      emit(out);
      return kOk;
    }
    if (shape->parsed()) {
      Handle p = load(file);
      check(os_shape(p.get(), term.c_str(), j, &out));
      emit(out);
      return kOk;
    }
    if (twist->parsed()) {
      Handle p = load(file);
      check(os_twist(p.get(), *dim, term.c_str(), j, &out));
      emit(out);
      return kOk;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kInputError;
}
