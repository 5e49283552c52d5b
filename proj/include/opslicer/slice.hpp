// SPDX-License-Identifier: Apache-2.0
#ifndef OPSLICER_SLICE_HPP
#define OPSLICER_SLICE_HPP

#include <cstddef>
#include <vector>

#include "opslicer/globop.hpp"
#include "opslicer/pasting.hpp"
#include "opslicer/perm.hpp"
#include "opslicer/symop.hpp"

namespace opslicer {

// Number of k-cells in the shape of a k-dimensional generator or term.
std::size_t k_arity(const GenDecl& g, std::size_t k);
std::size_t k_arity(const GTerm& t, const GlobPresentation& p, std::size_t k);

// Depth-k cells of shape_of(t), listed atom by atom in argument order, each
// atom's cells in their own standard order. t must be layered.
std::vector<LeafCell> induced_order_layered(const GTerm& t, const GlobPresentation& p,
                                            std::size_t k);

// Permutation sending the standard label of each depth-k cell of pd to its
// position in `order`.
Perm twist_from_order(const PastingDiagram& pd, const std::vector<LeafCell>& order);

// The erasure map into the free symmetric operad on the k-generators,
// evaluated compositionally.
SymElement f_map(const GTerm& t, const GlobPresentation& p, std::size_t k);

// Direct reading on one layered decomposition Q(L1,...,Lm): the twist of the
// induced order together with the plain tree of Q grafted with the k-atoms.
// Kept for comparison; it disagrees with f_map when Q itself is twisted.
SymElement f_map_literal(const GTerm& t, const GlobPresentation& p, std::size_t k);

// Permutation part of f_map.
Perm twist(const GTerm& t, const GlobPresentation& p, std::size_t k);

// Symmetric presentation with the dimension-k generators and the f-images of
// the dimension-k relations, named "NAME:k".
SymPresentation slice(const GlobPresentation& p, std::size_t k);

}  // namespace opslicer

#endif  // OPSLICER_SLICE_HPP
