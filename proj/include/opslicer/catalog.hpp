// SPDX-License-Identifier: Apache-2.0
#ifndef OPSLICER_CATALOG_HPP
#define OPSLICER_CATALOG_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "opslicer/globop.hpp"
#include "opslicer/symop.hpp"

namespace opslicer {

struct CatalogEntry {
  std::string key;
  std::variant<GlobPresentation, SymPresentation> presentation;
  std::string provenance;

  bool is_symmetric() const { return std::holds_alternative<SymPresentation>(presentation); }
  const GlobPresentation& globular() const { return std::get<GlobPresentation>(presentation); }
  const SymPresentation& symmetric() const { return std::get<SymPresentation>(presentation); }
  // Canonical DSL text of the presentation.
  std::string text() const;
};

// Fixed keys: T3, W3, H4, E3 and sym/sets, sym/magma, sym/monoid,
// sym/comm_monoid, sym/comm_monoid_EH, sym/double_monoid. Family keys:
// T(n), H(n), E(n), W(n) for n <= 3 and W(n,p). Throws NotFoundError for
// unknown keys and DomainError for parameters out of range.
CatalogEntry catalog_get(std::string_view key);

// Fixed keys followed by one sample key per family.
std::vector<std::string> catalog_list();

// Strict n-categories: identities and binary composites in each dimension
// below n, with unit, associativity and interchange relations.
GlobPresentation strict_family(std::size_t n);
// Weak interchange: interchange holds only up to invertible point cells.
GlobPresentation weak_interchange_family(std::size_t n);
// Weak units below dimension n - 1.
GlobPresentation weak_units_family(std::size_t n);
// Fully weak presentation with `points` coherence cells per dimension and no
// relations. Only an approximation beyond dimension 3.
GlobPresentation weak_family(std::size_t n, std::size_t points);

}  // namespace opslicer

#endif  // OPSLICER_CATALOG_HPP
