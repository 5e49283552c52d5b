// SPDX-License-Identifier: Apache-2.0
#include "opslicer/opslicer.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <set>
#include <sstream>
#include <string>
#include <variant>

#include "cursor.hpp"
#include "json_io.hpp"
#include "opslicer/catalog.hpp"
#include "opslicer/error.hpp"
#include "opslicer/globop.hpp"
#include "opslicer/slice.hpp"
#include "opslicer/symop.hpp"
#include "opslicer/wordsolver.hpp"

struct os_presentation {
  std::variant<opslicer::GlobPresentation, opslicer::SymPresentation> value;
};

namespace {

using namespace opslicer;
using json::ordered_json;

thread_local std::string last_error;

// Thrown for null arguments and kind mismatches.
struct ArgumentError : Error {
  using Error::Error;
};

// Parse error inside a named file, reported as path:line:column: detail.
class SourceParseError : public ParseError {
 public:
  SourceParseError(const std::string& source, const ParseError& e)
      : ParseError(e.detail(), e.line(), e.column()),
        message_(source + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                 ": " + e.detail()) {}
  const char* what() const noexcept override { return message_.c_str(); }

 private:
  std::string message_;
};

template <class F>
os_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return OS_OK;
  } catch (const ParseError& e) {
    last_error = e.what();
    return OS_ERR_PARSE;
  } catch (const BoundaryError& e) {
    last_error = e.what();
    return OS_ERR_BOUNDARY;
  } catch (const NotFoundError& e) {
    last_error = e.what();
    return OS_ERR_NOT_FOUND;
  } catch (const ArgumentError& e) {
    last_error = e.what();
    return OS_ERR_ARGUMENT;
  } catch (const DomainError& e) {
    last_error = e.what();
    return OS_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return OS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return OS_ERR_INTERNAL;
  }
}

template <class T>
void need(const T* ptr, const char* what) {
  if (!ptr) throw ArgumentError(std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

const GlobPresentation& globular(const os_presentation* p) {
  need(p, "presentation");
  if (!std::holds_alternative<GlobPresentation>(p->value)) {
    throw ArgumentError("'" + std::get<SymPresentation>(p->value).name +
                        "' is symmetric; a globular presentation is required");
  }
  return std::get<GlobPresentation>(p->value);
}

const SymPresentation& symmetric(const os_presentation* p) {
  need(p, "presentation");
  if (!std::holds_alternative<SymPresentation>(p->value)) {
    throw ArgumentError("'" + std::get<GlobPresentation>(p->value).name +
                        "' is globular; slice it first");
  }
  return std::get<SymPresentation>(p->value);
}

Budget to_budget(const os_budget* b) {
  if (!b) return default_budget();
  return {b->max_arity, b->max_tree_nodes, b->max_rewrite_depth, b->max_frontier,
          b->closure_slack};
}

bool symmetric_header(std::string_view text) {
  bool found = false;
  bool symmetric = false;
  detail::for_each_line(text, [&](std::string_view raw, std::size_t) {
    if (found) return;
    std::string_view line = detail::strip_comment(raw);
    while (!line.empty() && detail::is_space(line.back())) line.remove_suffix(1);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) return;
    found = true;
    const auto last = line.find_last_of(" \t");
    symmetric = line.substr(last == std::string_view::npos ? 0 : last + 1) == "symmetric";
  });
  return symmetric;
}

os_presentation* parse_any(std::string_view text) {
  auto* out = new os_presentation;
  try {
    if (symmetric_header(text)) {
      out->value = parse_sym_presentation(text);
    } else {
      out->value = parse_glob_presentation(text);
    }
  } catch (...) {
    delete out;
    throw;
  }
  return out;
}

ValidationReport validate_sym(const SymPresentation& p) {
  ValidationReport r;
  std::set<std::string> names;
  for (const auto& g : p.generators) {
    ValidationItem item{"generator", g.name, true, ""};
    if (!names.insert(g.name).second) {
      item.ok = false;
      item.message = "duplicate generator name";
    }
    r.items.push_back(std::move(item));
  }
  std::set<std::string> rel_names;
  for (const auto& rel : p.relations) {
    ValidationItem item{"relation", rel.name, true, ""};
    try {
      if (!rel_names.insert(rel.name).second) throw DomainError("duplicate relation name");
      p.check_element(rel.lhs);
      p.check_element(rel.rhs);
      if (rel.lhs.degree() != rel.rhs.degree()) throw DomainError("sides have different degrees");
    } catch (const Error& e) {
      item.ok = false;
      item.message = e.what();
    }
    r.items.push_back(std::move(item));
  }
  return r;
}

std::string step_line(std::size_t i, const ProofStep& s) {
  std::string path = "[";
  for (std::size_t k = 0; k < s.path.size(); ++k) {
    if (k) path += ",";
    path += std::to_string(s.path[k]);
  }
  path += "]";
  return std::to_string(i + 1) + ". " + s.relation + " " + (s.forward ? "lr" : "rl") + " at " +
         path + " twist " + s.perm.to_string() + " -> " + s.result.to_string() + "\n";
}

}  // namespace

extern "C" {

const char* os_last_error(void) { return last_error.c_str(); }

void os_string_free(char* s) { std::free(s); }

os_status os_presentation_load(const char* source, os_presentation** out) {
  return guard([&] {
    need(source, "source");
    need(out, "out");
    const std::string src = source;
    if (src.rfind("catalog:", 0) == 0) {
      const CatalogEntry e = catalog_get(src.substr(8));
      *out = new os_presentation{e.presentation};
      return;
    }
    std::ifstream in(src, std::ios::binary);
    if (!in) throw NotFoundError("cannot open '" + src + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      *out = parse_any(buf.str());
    } catch (const ParseError& e) {
      throw SourceParseError(src, e);
    }
  });
}

os_status os_presentation_parse(const char* text, os_presentation** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = parse_any(text);
  });
}

void os_presentation_free(os_presentation* p) { delete p; }

int os_presentation_is_symmetric(const os_presentation* p) {
  return p && std::holds_alternative<SymPresentation>(p->value) ? 1 : 0;
}

os_status os_presentation_print(const os_presentation* p, int json, char** out) {
  return guard([&] {
    need(p, "presentation");
    need(out, "out");
    std::string s;
    if (const auto* g = std::get_if<GlobPresentation>(&p->value)) {
      s = json ? dump(json::presentation(*g)) : print_glob_presentation(*g);
    } else {
      const auto& sp = std::get<SymPresentation>(p->value);
      s = json ? dump(json::presentation(sp)) : print_sym_presentation(sp);
    }
    *out = dup(s);
  });
}

os_status os_validate(const os_presentation* p, int json, int* ok, char** report) {
  return guard([&] {
    need(p, "presentation");
    need(ok, "ok");
    std::string name;
    ValidationReport r;
    if (const auto* g = std::get_if<GlobPresentation>(&p->value)) {
      name = g->name;
      r = validate(*g);
    } else {
      const auto& sp = std::get<SymPresentation>(p->value);
      name = sp.name;
      r = validate_sym(sp);
    }
    *ok = r.ok() ? 1 : 0;
    if (report) {
      *report = dup(json ? dump(json::validation(name, r))
                         : r.to_string() + (r.ok() ? "valid " : "invalid ") + name + "\n");
    }
  });
}

os_status os_slice(const os_presentation* p, size_t k, os_presentation** out) {
  return guard([&] {
    need(out, "out");
    *out = new os_presentation{slice(globular(p), k)};
  });
}

os_status os_check_plain(const os_presentation* p, int* plain) {
  return guard([&] {
    need(plain, "plain");
    *plain = check_plain(symmetric(p)) ? 1 : 0;
  });
}

os_status os_default_budget(os_budget* out) {
  return guard([&] {
    need(out, "out");
    const Budget b = default_budget();
    *out = {b.max_arity, b.max_tree_nodes, b.max_rewrite_depth, b.max_frontier, b.closure_slack};
  });
}

os_status os_enumerate(const os_presentation* p, size_t arity, const os_budget* b, int json,
                       char** out) {
  return guard([&] {
    need(out, "out");
    const auto& sp = symmetric(p);
    const Budget budget = to_budget(b);
    const auto elems = enumerate(sp, arity, budget);
    if (json) {
      ordered_json list = ordered_json::array();
      for (const auto& e : elems) list.push_back(e.to_string());
      *out = dup(dump({{"presentation", sp.name},
                       {"arity", arity},
                       {"count", elems.size()},
                       {"elements", list},
                       {"budget", json::budget(budget)}}));
      return;
    }
    std::string s;
    for (const auto& e : elems) s += e.to_string() + "\n";
    *out = dup(s);
  });
}

os_status os_classes(const os_presentation* p, size_t arity, const os_budget* b, int json,
                     char** out) {
  return guard([&] {
    need(out, "out");
    const auto& sp = symmetric(p);
    const Budget budget = to_budget(b);
    const ClassReport r = classes(sp, arity, budget);
    if (json) {
      *out = dup(dump(json::class_report(sp.name, r, budget)));
      return;
    }
    std::string s = "presentation " + sp.name + " arity " + std::to_string(arity) + "\n";
    s += "elements " + std::to_string(r.elements) + "\n";
    s += "classes " + std::to_string(r.classes) + "\n";
    s += std::string("complete ") + (r.complete ? "true" : "false") + "\n";
    for (std::size_t i = 0; i < r.representatives.size(); ++i) {
      s += "class " + std::to_string(i + 1) + ": " + r.representatives[i].to_string() + "\n";
    }
    *out = dup(s);
  });
}

os_status os_prove(const os_presentation* p, const char* lhs, const char* rhs,
                   const char* const* lemma_lhs, const char* const* lemma_rhs,
                   size_t lemma_count, const os_budget* b, int json, int* found, char** out) {
  return guard([&] {
    need(lhs, "lhs");
    need(rhs, "rhs");
    need(found, "found");
    if (lemma_count > 0) {
      need(lemma_lhs, "lemma_lhs");
      need(lemma_rhs, "lemma_rhs");
    }
    const auto& sp = symmetric(p);
    const Budget budget = to_budget(b);
    std::vector<Lemma> lemmas;
    ordered_json lemma_json = ordered_json::array();
    std::string text;
    std::size_t states = 0;
    auto report_failure = [&](const std::string& what) {
      *found = 0;
      if (!out) return;
      if (json) {
        *out = dup(dump({{"presentation", sp.name},
                         {"lhs", lhs},
                         {"rhs", rhs},
                         {"found", false},
                         {"failed", what},
                         {"states", states},
                         {"lemmas", lemma_json},
                         {"steps", ordered_json::array()},
                         {"budget", json::budget(budget)}}));
      } else {
        *out = dup(text + "unknown: no proof of " + what + " within the budget (" +
                   std::to_string(states) + " states)\n");
      }
    };
    for (std::size_t i = 0; i < lemma_count; ++i) {
      need(lemma_lhs[i], "lemma lhs");
      need(lemma_rhs[i], "lemma rhs");
      const SymElement a = parse_sym_element(lemma_lhs[i], sp);
      const SymElement c = parse_sym_element(lemma_rhs[i], sp);
      const ProofSearch r = prove_equal(sp, a, c, budget, lemmas);
      states += r.states;
      const std::string name = "lemma:" + std::to_string(i + 1);
      if (!r.proof) {
        report_failure(name + " " + a.to_string() + " = " + c.to_string());
        return;
      }
      lemma_json.push_back({{"name", name},
                            {"lhs", a.to_string()},
                            {"rhs", c.to_string()},
                            {"steps", json::steps(r.proof->steps)}});
      text += name + ": " + a.to_string() + " = " + c.to_string() + " (" +
              std::to_string(r.proof->steps.size()) + " steps)\n";
      lemmas.push_back({name, *r.proof});
    }
    const SymElement a = parse_sym_element(lhs, sp);
    const SymElement c = parse_sym_element(rhs, sp);
    const ProofSearch r = prove_equal(sp, a, c, budget, lemmas);
    states += r.states;
    if (!r.proof) {
      report_failure(a.to_string() + " = " + c.to_string());
      return;
    }
    const Proof full = expand_lemmas(sp, *r.proof, lemmas);
    const std::string problem = check_proof(sp, full);
    if (!problem.empty()) throw Error("proof failed verification: " + problem);
    *found = 1;
    if (!out) return;
    if (json) {
      *out = dup(dump({{"presentation", sp.name},
                       {"lhs", a.to_string()},
                       {"rhs", c.to_string()},
                       {"found", true},
                       {"states", states},
                       {"search_steps", r.proof->steps.size()},
                       {"lemmas", lemma_json},
                       {"steps", json::steps(full.steps)},
                       {"budget", json::budget(budget)}}));
      return;
    }
    text += "proved " + a.to_string() + " = " + c.to_string() + " in " +
            std::to_string(full.steps.size()) + " steps\n";
    for (std::size_t i = 0; i < full.steps.size(); ++i) text += step_line(i, full.steps[i]);
    *out = dup(text);
  });
}

os_status os_shape(const os_presentation* p, const char* term, int json, char** out) {
  return guard([&] {
    need(term, "term");
    need(out, "out");
    const auto& g = globular(p);
    const GTerm t = parse_gterm(term);
    const PastingDiagram s = shape_of(t, g);
    if (json) {
      *out = dup(dump({{"term", t.to_string()},
                       {"dim", s.dim()},
                       {"shape", s.to_string()},
                       {"top_cells", cell_count(s)},
                       {"layered", layered_form(t, g).to_string()}}));
      return;
    }
    *out = dup(s.to_string() + "\n");
  });
}

os_status os_twist(const os_presentation* p, size_t k, const char* term, int json, char** out) {
  return guard([&] {
    need(term, "term");
    need(out, "out");
    const auto& g = globular(p);
    const GTerm t = parse_gterm(term);
    const SymElement f = f_map(t, g, k);
    if (json) {
      *out = dup(dump({{"term", t.to_string()},
                       {"dim", k},
                       {"twist", f.perm.to_string()},
                       {"f", json::element(f)}}));
      return;
    }
    *out = dup(f.perm.to_string() + "\n");
  });
}

os_status os_catalog_list(int json, char** out) {
  return guard([&] {
    need(out, "out");
    const auto keys = catalog_list();
    if (json) {
      *out = dup(dump({{"keys", keys}}));
      return;
    }
    std::string s;
    for (const auto& k : keys) s += k + "\n";
    *out = dup(s);
  });
}

os_status os_catalog_show(const char* key, int json, char** out) {
  return guard([&] {
    need(key, "key");
    need(out, "out");
    const CatalogEntry e = catalog_get(key);
    if (json) {
      *out = dup(dump({{"key", e.key},
                       {"provenance", e.provenance},
                       {"kind", e.is_symmetric() ? "symmetric" : "globular"},
                       {"text", e.text()}}));
      return;
    }
    *out = dup("# " + e.key + ": " + e.provenance + "\n" + e.text());
  });
}

os_status os_catalog_export(const char* key, char** out) {
  return guard([&] {
    need(key, "key");
    need(out, "out");
    *out = dup(catalog_get(key).text());
  });
}

}  // extern "C"
