#include "abelian_group.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"
#include "exact_linalg.hpp"

namespace toric {

AbelianGroup::AbelianGroup(std::size_t free_rank, std::span<const Integer> cyclic_orders)
    : free_rank_(free_rank) {
  const std::size_t k = cyclic_orders.size();
  IntMatrix diag(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (cyclic_orders[i] < 0) fail(ErrorCode::kInvalidArgument, "negative cyclic order");
    diag(i, i) = cyclic_orders[i];
  }
  for (const auto& d : smith_normal_form(diag).invariant_factors) {
    if (d == 0)
      ++free_rank_;
    else if (d != 1)
      torsion_.push_back(d);
  }
}

AbelianGroup AbelianGroup::free(std::size_t rank) { return AbelianGroup(rank, {}); }

AbelianGroup AbelianGroup::cyclic(const Integer& order) {
  const Integer orders[] = {abs(order)};
  return AbelianGroup(0, orders);
}

AbelianGroup AbelianGroup::from_orders(std::initializer_list<long> cyclic_orders) {
  IntVector v;
  for (long x : cyclic_orders) v.emplace_back(x);
  return AbelianGroup(0, v);
}

std::optional<Integer> AbelianGroup::order() const {
  if (free_rank_ != 0) return std::nullopt;
  Integer n = 1;
  for (const auto& t : torsion_) n *= t;
  return n;
}

std::string AbelianGroup::render() const {
  if (is_trivial()) return "0";
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += "×";
    out += part;
  };
  if (free_rank_ == 1) append("Z");
  if (free_rank_ > 1) append("Z^" + std::to_string(free_rank_));
  for (const auto& t : torsion_) append("C" + t.get_str());
  return out;
}

std::vector<std::pair<Integer, unsigned long>> factorize(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, unsigned long>> out;
  if (n < 2) return out;
  for (Integer p = 2; p * p <= n; ++p) {
    unsigned long e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::pair<Integer, std::vector<unsigned long>>> AbelianGroup::primary_decomposition()
    const {
  std::map<Integer, std::vector<unsigned long>> by_prime;
  for (const auto& t : torsion_)
    for (const auto& [p, e] : factorize(t)) by_prime[p].push_back(e);
  std::vector<std::pair<Integer, std::vector<unsigned long>>> out;
  for (auto& [p, exps] : by_prime) {
    std::sort(exps.begin(), exps.end());
    out.emplace_back(p, std::move(exps));
  }
  return out;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  IntVector orders = a.torsion();
  orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  return AbelianGroup(a.free_rank() + b.free_rank(), orders);
}

AbelianGroup cokernel(const IntMatrix& a) {
  SmithDecomposition snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  IntVector torsion;
  for (const auto& d : snf.invariant_factors)
    if (d > 1) torsion.push_back(d);
  return AbelianGroup(a.rows() - r, torsion);
}

}  // namespace toric
