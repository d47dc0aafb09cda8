#pragma once

// Random generators and brute-force oracles shared by the test suites. The
// oracles here deliberately avoid the library's elimination code paths.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "int_matrix.hpp"

namespace toric::testing {

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                               long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

// Product of random elementary operations; determinant +-1 by construction.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  IntMatrix m = IntMatrix::identity(n);
  if (n == 0) return m;
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  std::uniform_int_distribution<long> factor(-3, 3);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = index(rng), j = index(rng);
    switch (kind(rng)) {
      case 0:
        if (i != j) m.add_row_multiple(i, j, factor(rng));
        break;
      case 1:
        m.swap_rows(i, j);
        break;
      default:
        m.negate_row(i);
    }
  }
  return m;
}

// Leibniz expansion over all permutations.
inline Integer leibniz_determinant(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Determinantal divisor: gcd of all k x k minors.
inline Integer minor_gcd(const IntMatrix& a, std::size_t k) {
  std::vector<std::vector<std::size_t>> rows, cols;
  std::vector<std::size_t> cur;
  subsets(a.rows(), k, 0, cur, rows);
  subsets(a.cols(), k, 0, cur, cols);
  Integer g = 0;
  for (const auto& rs : rows)
    for (const auto& cs : cols) {
      IntMatrix minor(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = a(rs[i], cs[j]);
      Integer d = leibniz_determinant(minor);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}.
inline std::vector<Integer> invariant_factors_by_minors(const IntMatrix& a) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    Integer dk = minor_gcd(a, k);
    if (dk == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

inline std::vector<IntVector> random_generators(std::mt19937_64& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  std::vector<IntVector> gens(n, IntVector(n));
  for (auto& g : gens)
    for (auto& x : g) x = entry(rng);
  return gens;
}

}  // namespace toric::testing
