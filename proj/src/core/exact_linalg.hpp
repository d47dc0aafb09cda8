#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "int_matrix.hpp"

namespace toric {

struct GcdResult {
  Integer g;
  Integer x;
  Integer y;
};

/// g = gcd(a, b) >= 0 and g = a*x + b*y.
///
/// Among all Bezout pairs the one with the smallest |x| is returned, ties going
/// to x >= 0; y is then determined (and is 0 when b = 0). For a = 0 the pair is
/// (0, sign(b)).
GcdResult extended_gcd(const Integer& a, const Integer& b);

/// gcd of all entries; 0 for the zero vector.
Integer content(std::span<const Integer> v);

/// v divided by its content. Throws kInvalidArgument on the zero vector.
IntVector primitive(std::span<const Integer> v);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

struct SmithDecomposition {
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix d;  // rows x cols, diagonal
  IntMatrix v;  // cols x cols, unimodular
  std::vector<Integer> invariant_factors;  // diagonal of d, min(rows, cols) entries

  std::size_t rank() const;
};

/// U*A*V = D with d_1 | d_2 | ... and zeros last, all d_i >= 0.
SmithDecomposition smith_normal_form(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Columns form a lattice basis of {x in Z^cols : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

/// Square matrix with first column v and determinant +-1. v must be primitive.
IntMatrix complete_to_unimodular(std::span<const Integer> v);

bool is_unimodular(const IntMatrix& a);

/// Exact inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& a);

}  // namespace toric
