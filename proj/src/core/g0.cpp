#include "g0.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "chow.hpp"
#include "error.hpp"
#include "exact_linalg.hpp"

namespace toric {

const char* to_string(G0Source source) {
  switch (source) {
    case G0Source::kSurfaceCyclic:
      return "surface-cyclic";
    case G0Source::kThreefoldExtension:
      return "threefold-extension";
  }
  return "unknown";
}

G0Report g0_dim2(const SimplicialCone& cone) {
  if (cone.dim() != 2) fail(ErrorCode::kWrongDimension, "g0_dim2 needs a 2-dimensional cone");
  G0Report report;
  report.dim = 2;
  report.delta = delta(cone);
  report.a1 = class_group(cone);
  const AbelianGroup f1 = AbelianGroup::cyclic(report.delta);
  ensure(f1 == report.a1, "class group of a surface is not cyclic of order |delta|");
  report.f1_order = abs(report.delta);
  report.f1_exact = f1;
  report.extension_candidates = std::vector<AbelianGroup>{f1};
  report.source = G0Source::kSurfaceCyclic;
  return report;
}

G0Report g0_dim3(const SimplicialCone& cone) {
  if (cone.dim() != 3) fail(ErrorCode::kWrongDimension, "g0_dim3 needs a 3-dimensional cone");
  G0Report report;
  report.dim = 3;
  report.delta = delta(cone);
  report.a1 = class_group(cone);
  report.a2 = chow_group(cone, 2).group;
  const Integer a1_order = *report.a1.order();
  const Integer a2_order = *report.a2->order();
  ensure(a1_order == abs(report.delta), "|A^1| differs from |delta| in dimension 3");
  report.f1_order = a1_order * a2_order;
  if (a2_order == 1)
    report.f1_exact = report.a1;
  else if (a1_order == 1)
    report.f1_exact = report.a2;
  try {
    report.extension_candidates = extension_candidates(*report.a2, report.a1);
  } catch (const ToricError& e) {
    if (e.code() != ErrorCode::kTooLarge) throw;
  }
  report.source = G0Source::kThreefoldExtension;
  return report;
}

namespace {

// Integer partitions of k with parts in non-increasing order.
void partitions(unsigned long k, unsigned long max_part, std::vector<unsigned long>& prefix,
                std::vector<std::vector<unsigned long>>& out) {
  if (k == 0) {
    out.push_back(prefix);
    return;
  }
  for (unsigned long part = std::min(k, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions(k - part, part, prefix, out);
    prefix.pop_back();
  }
}

std::vector<unsigned long> p_exponents(const std::vector<Integer>& invariant_factors,
                                       const Integer& p) {
  std::vector<unsigned long> out;
  for (const auto& t : invariant_factors) {
    unsigned long e = mpz_remove(Integer().get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    if (e) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Decides whether an abelian p-group of type lambda has a subgroup of type mu
// with quotient of type nu. By the Green-Klein theorem this happens exactly when
// the Littlewood-Richardson coefficient c^lambda_{mu,nu} is nonzero, which is
// witnessed by an LR tableau of shape lambda/mu and content nu. Cells are
// filled in reverse reading order (rows top to bottom, right to left), so the
// lattice-word condition can be checked on every prefix.
class LrTableauSearch {
 public:
  LrTableauSearch(std::vector<unsigned long> lambda, std::vector<unsigned long> mu,
                  std::vector<unsigned long> nu)
      : lambda_(std::move(lambda)), mu_(std::move(mu)), nu_(std::move(nu)) {
    if (mu_.size() > lambda_.size()) return;
    mu_.resize(lambda_.size(), 0);
    for (std::size_t i = 0; i < lambda_.size(); ++i) {
      if (mu_[i] > lambda_[i]) return;
      for (auto j = lambda_[i]; j-- > mu_[i];) order_.emplace_back(i, j);
    }
    shape_ok_ = true;
  }

  bool run() {
    if (!shape_ok_) return false;
    std::size_t total = 0;
    for (auto v : nu_) total += v;
    if (total != order_.size()) return false;
    filling_.assign(lambda_.size(), std::vector<unsigned long>());
    for (std::size_t i = 0; i < lambda_.size(); ++i) filling_[i].assign(lambda_[i], 0);
    used_.assign(nu_.size(), 0);
    return place(0);
  }

 private:
  bool place(std::size_t k) {
    if (k == order_.size()) return true;
    const auto [row, col] = order_[k];
    unsigned long hi = nu_.size();
    if (col + 1 < lambda_[row]) hi = std::min(hi, filling_[row][col + 1]);
    unsigned long lo = 1;
    if (row > 0 && col >= mu_[row - 1] && col < lambda_[row - 1]) lo = filling_[row - 1][col] + 1;
    for (unsigned long v = lo; v <= hi; ++v) {
      if (used_[v - 1] == nu_[v - 1]) continue;
      if (v > 1 && used_[v - 1] + 1 > used_[v - 2]) continue;
      ++used_[v - 1];
      filling_[row][col] = v;
      if (place(k + 1)) return true;
      --used_[v - 1];
    }
    filling_[row][col] = 0;
    return false;
  }

  std::vector<unsigned long> lambda_, mu_, nu_;
  std::vector<std::pair<std::size_t, unsigned long>> order_;
  std::vector<std::vector<unsigned long>> filling_;
  std::vector<unsigned long> used_;
  bool shape_ok_ = false;
};

bool torsion_less(const AbelianGroup& a, const AbelianGroup& b) {
  if (a.torsion().size() != b.torsion().size()) return a.torsion().size() < b.torsion().size();
  return a.torsion() < b.torsion();
}

}  // namespace

std::vector<AbelianGroup> extension_candidates(const AbelianGroup& sub, const AbelianGroup& quot) {
  if (!sub.is_finite() || !quot.is_finite())
    fail(ErrorCode::kInfiniteGroup, "extension candidates need finite groups");
  const Integer total = *sub.order() * *quot.order();
  if (total > kMaxExtensionOrder)
    fail(ErrorCode::kTooLarge, "extension order " + total.get_str() + " exceeds the limit " +
                                   std::to_string(kMaxExtensionOrder));

  // Extensions of finite abelian groups split into p-primary parts, so the
  // search runs one prime at a time and the results are combined.
  std::vector<std::vector<IntVector>> per_prime;  // per prime: list of cyclic-order lists
  for (const auto& [p, exponent] : factorize(total)) {
    auto sub_p = p_exponents(sub.torsion(), p);
    auto quot_p = p_exponents(quot.torsion(), p);
    std::reverse(sub_p.begin(), sub_p.end());
    std::reverse(quot_p.begin(), quot_p.end());
    std::vector<std::vector<unsigned long>> shapes;
    std::vector<unsigned long> prefix;
    partitions(exponent, exponent, prefix, shapes);

    std::vector<IntVector> found;
    for (auto& lambda : shapes) {
      if (!LrTableauSearch(lambda, sub_p, quot_p).run()) continue;
      IntVector orders;
      for (auto e : lambda) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        orders.push_back(pe);
      }
      found.push_back(std::move(orders));
    }
    ensure(!found.empty(), "no extension found for a prime; the direct sum always qualifies");
    per_prime.push_back(std::move(found));
  }

  std::vector<AbelianGroup> out;
  std::vector<std::size_t> choice(per_prime.size(), 0);
  for (;;) {
    IntVector orders;
    for (std::size_t i = 0; i < per_prime.size(); ++i)
      orders.insert(orders.end(), per_prime[i][choice[i]].begin(), per_prime[i][choice[i]].end());
    out.emplace_back(0, orders);
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == per_prime[i].size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  std::sort(out.begin(), out.end(), torsion_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over a Weyl-sequence offset.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SimplicialCone random_simplicial_cone(std::size_t n, long bound, std::uint64_t seed) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "dimension must be positive");
  if (bound < 1) fail(ErrorCode::kInvalidArgument, "entry bound must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-bound, bound);
  for (;;) {
    std::vector<IntVector> gens(n, IntVector(n));
    bool has_zero = false;
    for (auto& g : gens) {
      for (auto& x : g) x = entry(rng);
      has_zero = has_zero || content(g) == 0;
    }
    if (has_zero) continue;
    if (determinant(IntMatrix::from_columns(gens, n)) == 0) continue;
    return SimplicialCone::make(std::move(gens));
  }
}

namespace {

ConjectureTrial evaluate_trial(std::size_t index, SimplicialCone cone) {
  ConjectureTrial t{index, std::move(cone), 0, {}, {}, false, false};
  t.delta = delta(t.cone);
  t.a1 = class_group(t.cone);
  t.a2 = chow_group(t.cone, 2).group;
  const Integer abs_delta = abs(t.delta);
  t.a1_matches_delta = t.a1.order() == abs_delta;
  const auto a2_order = t.a2.order();
  t.a2_divides_delta =
      a2_order && mpz_divisible_p(abs_delta.get_mpz_t(), a2_order->get_mpz_t()) != 0;
  return t;
}

ConjectureReport assemble(std::size_t dim, std::vector<ConjectureTrial>& trials) {
  ConjectureReport report;
  report.dim = dim;
  report.trials = trials.size();
  for (auto& t : trials) {
    if (t.a1_matches_delta) ++report.a1_matches_delta;
    if (t.a2_divides_delta) ++report.a2_divides_delta;
    if (!t.a1_matches_delta || !t.a2_divides_delta) report.counterexamples.push_back(std::move(t));
  }
  return report;
}

}  // namespace

bool ConjectureReport::implementation_bug() const {
  return (dim == 2 || dim == 3) && a1_matches_delta != trials;
}

ConjectureReport conjecture_check(std::size_t n, std::size_t trials, long bound,
                                  std::uint64_t seed, unsigned threads) {
  if (n < 2) fail(ErrorCode::kInvalidArgument, "conjecture harness needs dimension >= 2");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(trials, 1)));

  std::vector<std::optional<ConjectureTrial>> slots(trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < trials;) {
      try {
        slots[i] = evaluate_trial(i, random_simplicial_cone(n, bound, trial_seed(seed, i)));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);

  std::vector<ConjectureTrial> done;
  done.reserve(trials);
  for (auto& s : slots) done.push_back(std::move(*s));
  ConjectureReport report = assemble(n, done);
  report.seed = seed;
  report.bound = bound;
  return report;
}

ConjectureReport conjecture_check(std::span<const SimplicialCone> cones) {
  std::vector<ConjectureTrial> done;
  std::size_t dim = cones.empty() ? 0 : cones.front().dim();
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (cones[i].dim() != dim) fail(ErrorCode::kWrongDimension, "cones differ in dimension");
    done.push_back(evaluate_trial(i, cones[i]));
  }
  return assemble(dim, done);
}

const std::vector<ReferenceRow>& reference_table() {
  static const std::vector<ReferenceRow> rows = [] {
    auto row = [](std::initializer_list<std::initializer_list<long>> gens, long d,
                  std::string a1, std::string a2) {
      ReferenceRow r;
      for (const auto& g : gens) r.generators.push_back(make_vector(g));
      r.delta = d;
      r.a1 = std::move(a1);
      r.a2 = std::move(a2);
      return r;
    };
    return std::vector<ReferenceRow>{
        row({{1, 0, 0}, {1, 2, 0}, {1, 2, 4}}, 8, "C2×C4", "0"),
        row({{1, 0, 0}, {1, 3, 0}, {1, 3, 9}}, 27, "C3×C9", "0"),
        row({{1, 0, 0}, {2, 3, 0}, {3, 5, 7}}, 21, "C21", "C7"),
        row({{1, 0, 0}, {2, 5, 0}, {3, 7, 9}}, 45, "C45", "C9"),
        row({{1, 0, 0}, {5, 7, 11}, {7, 8, 19}}, 45, "C45", "C5"),
        row({{1, 0, 0}, {3, 5, 0}, {7, 9, 13}}, 65, "C65", "C13"),
        row({{1, 0, 0}, {3, 7, 0}, {5, 8, 11}}, 77, "C77", "0"),
        row({{1, 0, 0}, {5, 7, 0}, {7, 8, 19}}, 133, "C133", "C19"),
    };
  }();
  return rows;
}

std::vector<TableRow> recompute_reference_table() {
  std::vector<TableRow> out;
  for (const auto& ref : reference_table()) {
    const SimplicialCone cone = SimplicialCone::make(ref.generators);
    out.push_back(TableRow{ref, delta(cone), class_group(cone), chow_group(cone, 2).group});
  }
  return out;
}

}  // namespace toric
