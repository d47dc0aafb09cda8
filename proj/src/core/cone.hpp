#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "int_matrix.hpp"

namespace toric {

/// Full-dimensional simplicial cone in R^n given by n primitive, linearly
/// independent integer generators, kept in input order.
class SimplicialCone {
 public:
  /// Validates and primitivizes. Errors: kWrongCount (not n vectors of length
  /// n), kZeroGenerator, kDependentGenerators.
  static SimplicialCone make(std::vector<IntVector> raw_generators);

  std::size_t dim() const noexcept { return generators_.size(); }
  const std::vector<IntVector>& generators() const noexcept { return generators_; }
  const IntVector& generator(std::size_t i) const { return generators_.at(i); }

  /// Generators as columns.
  IntMatrix generator_matrix() const;

  friend bool operator==(const SimplicialCone&, const SimplicialCone&) = default;

 private:
  explicit SimplicialCone(std::vector<IntVector> generators)
      : generators_(std::move(generators)) {}

  std::vector<IntVector> generators_;
};

/// Matrix with |det| = 1.
class UnimodularTransform {
 public:
  /// Throws kNotUnimodular otherwise.
  explicit UnimodularTransform(IntMatrix matrix);

  static UnimodularTransform identity(std::size_t n);

  const IntMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }

  IntVector apply(std::span<const Integer> v) const { return matrix_ * v; }
  UnimodularTransform inverse() const;

  friend UnimodularTransform operator*(const UnimodularTransform& a,
                                       const UnimodularTransform& b);
  friend bool operator==(const UnimodularTransform&, const UnimodularTransform&) = default;

 private:
  IntMatrix matrix_;
};

/// Generator subset, 0-based indices in ascending order.
struct Face {
  std::vector<std::size_t> indices;

  std::size_t dim() const noexcept { return indices.size(); }
  bool contains(std::size_t i) const;
  friend bool operator==(const Face&, const Face&) = default;
};

/// Determinant of the generator matrix (generators as columns). Never zero.
Integer delta(const SimplicialCone& cone);

/// All size-d generator subsets in lexicographic order.
std::vector<Face> faces(const SimplicialCone& cone, std::size_t d);

/// Primitive generators of the dual cone. Entry i vanishes on every generator
/// except generator i, where it is positive.
std::vector<IntVector> dual_cone(const SimplicialCone& cone);

/// Exact membership: point = sum lambda_i u_i with all lambda_i >= 0.
bool contains(const SimplicialCone& cone, std::span<const Integer> point);

/// Image of the cone under a unimodular map (generators mapped in order).
SimplicialCone transform(const SimplicialCone& cone, const UnimodularTransform& t);

struct NormalForm {
  UnimodularTransform transform;
  SimplicialCone image;
};

/// Planar normal form: image generators e1 and a*e1 + b*e2 with a, b > 0
/// coprime, b = |delta|, and a the least positive value reachable by a shear.
NormalForm normalize_2d(const SimplicialCone& cone);

/// Triangular normal form in dimension 3: image generators e1, a*e1 + b*e2,
/// c*e1 + d*e2 + e*e3 with b > 0, e != 0 and |b*e| = |delta|.
NormalForm normalize_3d(const SimplicialCone& cone);

/// Inverse-transpose; maps the dual of a cone to the dual of its image.
UnimodularTransform dual_transform(const UnimodularTransform& a);

}  // namespace toric
