// SPDX-License-Identifier: Apache-2.0
#include "json_io.hpp"

namespace opslicer::json {

ordered_json element(const SymElement& e) {
  return {{"perm", e.perm.to_string()}, {"tree", e.tree.to_string()}, {"text", e.to_string()}};
}

ordered_json presentation(const SymPresentation& p) {
  ordered_json gens = ordered_json::array();
  for (const auto& g : p.generators) gens.push_back({{"name", g.name}, {"arity", g.arity}});
  ordered_json rels = ordered_json::array();
  for (const auto& r : p.relations) {
    rels.push_back({{"name", r.name}, {"lhs", element(r.lhs)}, {"rhs", element(r.rhs)}});
  }
  return {{"kind", "symmetric"},
          {"name", p.name},
          {"generators", gens},
          {"relations", rels},
          {"plain", check_plain(p)}};
}

ordered_json presentation(const GlobPresentation& p) {
  ordered_json gens = ordered_json::array();
  for (const auto& g : p.generators) {
    ordered_json j = {{"name", g.name}, {"dim", g.dim}, {"shape", g.shape.to_string()}};
    if (g.src) {
      j["src"] = g.src->to_string();
      j["tgt"] = g.tgt->to_string();
    }
    gens.push_back(std::move(j));
  }
  ordered_json rels = ordered_json::array();
  for (const auto& r : p.relations) {
    rels.push_back({{"name", r.name},
                    {"dim", r.dim},
                    {"lhs", r.lhs.to_string()},
                    {"rhs", r.rhs.to_string()}});
  }
  return {{"kind", "globular"},   {"name", p.name},     {"max_dim", p.max_dim},
          {"contractible", p.contractible}, {"generators", gens}, {"relations", rels}};
}

ordered_json validation(const std::string& name, const ValidationReport& r) {
  ordered_json items = ordered_json::array();
  for (const auto& i : r.items) {
    items.push_back({{"kind", i.kind}, {"name", i.name}, {"ok", i.ok}, {"message", i.message}});
  }
  return {{"presentation", name}, {"ok", r.ok()}, {"items", items}};
}

ordered_json budget(const Budget& b) {
  return {{"max_arity", b.max_arity},
          {"max_tree_nodes", b.max_tree_nodes},
          {"max_rewrite_depth", b.max_rewrite_depth},
          {"max_frontier", b.max_frontier},
          {"closure_slack", b.closure_slack}};
}

ordered_json class_report(const std::string& name, const ClassReport& r, const Budget& b) {
  ordered_json reps = ordered_json::array();
  for (const auto& e : r.representatives) reps.push_back(e.to_string());
  return {{"presentation", name},   {"arity", r.arity},       {"elements", r.elements},
          {"classes", r.classes},   {"complete", r.complete}, {"representatives", reps},
          {"budget", budget(b)}};
}

ordered_json steps(const std::vector<ProofStep>& steps) {
  ordered_json out = ordered_json::array();
  for (const auto& s : steps) {
    out.push_back({{"relation", s.relation},
                   {"orientation", s.forward ? "lr" : "rl"},
                   {"path", s.path},
                   {"perm", s.perm.to_string()},
                   {"result", s.result.to_string()}});
  }
  return out;
}

}  // namespace opslicer::json
