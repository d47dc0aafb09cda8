#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "int_matrix.hpp"

namespace toric {

/// Finitely generated abelian group Z^r + Z/t_1 + ... + Z/t_k with
/// 2 <= t_1 | t_2 | ... | t_k. Two groups compare equal iff they are isomorphic.
class AbelianGroup {
 public:
  AbelianGroup() = default;  // trivial group

  /// Accepts any list of cyclic orders; 0 contributes a free summand and 1 is
  /// dropped. The list is normalized to invariant factors.
  AbelianGroup(std::size_t free_rank, std::span<const Integer> cyclic_orders);

  static AbelianGroup trivial() { return {}; }
  static AbelianGroup free(std::size_t rank);
  static AbelianGroup cyclic(const Integer& order);
  static AbelianGroup from_orders(std::initializer_list<long> cyclic_orders);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }

  bool is_finite() const noexcept { return free_rank_ == 0; }
  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  bool is_cyclic() const noexcept { return free_rank_ + torsion_.size() <= 1; }

  /// Group order, or nullopt when the group is infinite.
  std::optional<Integer> order() const;

  /// Table notation: "0", "C21", "C2×C4", "Z", "Z^2×C3".
  std::string render() const;

  /// Elementary divisors grouped by prime: (p, exponents in ascending order).
  std::vector<std::pair<Integer, std::vector<unsigned long>>> primary_decomposition() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// Z^rows / (column span of a).
AbelianGroup cokernel(const IntMatrix& a);

/// Prime factorization by trial division; intended for desk-scale orders.
std::vector<std::pair<Integer, unsigned long>> factorize(Integer n);

}  // namespace toric
