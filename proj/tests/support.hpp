// SPDX-License-Identifier: Apache-2.0
// Shared helpers for the test binaries.
#ifndef OPSLICER_TESTS_SUPPORT_HPP
#define OPSLICER_TESTS_SUPPORT_HPP

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "opslicer/catalog.hpp"
#include "opslicer/pasting.hpp"
#include "opslicer/symop.hpp"

namespace testing {

inline opslicer::PastingDiagram pd(std::string_view literal, std::size_t dim) {
  return opslicer::PastingDiagram::parse(literal, dim);
}

inline opslicer::SymElement elt(std::string_view text, const opslicer::SymPresentation& p) {
  return opslicer::parse_sym_element(text, p);
}

inline const opslicer::GlobPresentation& glob(const char* key) {
  static std::map<std::string, opslicer::GlobPresentation> cache;
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, opslicer::catalog_get(key).globular()).first;
  return it->second;
}

inline const opslicer::SymPresentation& sym(const char* key) {
  static std::map<std::string, opslicer::SymPresentation> cache;
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, opslicer::catalog_get(key).symmetric()).first;
  return it->second;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace testing

#endif  // OPSLICER_TESTS_SUPPORT_HPP
