#pragma once

#include <cstddef>

#include "abelian_group.hpp"
#include "cone.hpp"
#include "int_matrix.hpp"

namespace toric {

struct ChowReport {
  std::size_t codim = 0;
  AbelianGroup group;
  std::size_t generators_count = 0;  // faces of dimension codim
  std::size_t relations_rank = 0;
};

/// Row i is generator i; column j is the character e_j.
IntMatrix divisor_map(const SimplicialCone& cone);

/// Cokernel of the divisor map.
AbelianGroup class_group(const SimplicialCone& cone);

/// Presentation matrix of the codimension-k Chow group.
///
/// Rows are indexed by the k-dimensional faces (orbit closures of codimension
/// k), in the order of faces(cone, k). Columns are indexed by pairs (tau, m)
/// where tau runs over the (k-1)-dimensional faces and m over a lattice basis
/// of tau-perp; the column holds the divisor of the character m on V(tau).
/// The group is therefore cokernel() of this matrix, and for k = 1 the matrix
/// equals divisor_map().
IntMatrix chow_relation_matrix(const SimplicialCone& cone, std::size_t k);

ChowReport chow_group(const SimplicialCone& cone, std::size_t k);

}  // namespace toric
